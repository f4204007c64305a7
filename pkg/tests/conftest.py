"""Shared fixtures: a hand-checkable three-member instance plus random helpers."""

from __future__ import annotations

import numpy as np
import pytest

from fairteams import AttributeClass, Candidate, Project, Team

_SKILLS = [f"s{i}" for i in range(10)]


def random_team_instance(rng: np.random.Generator) -> tuple[Team, Project]:
    """A random (team, project) pair with at least one matched requirement.

    Team sizes 1..8, requirement counts 1..6, per-skill costs independent, so
    the instances exercise the objective functions beyond the flat-cost model
    the file loaders produce.
    """
    while True:
        req_count = int(rng.integers(1, 7))
        picked = rng.choice(len(_SKILLS), size=req_count, replace=False)
        project = Project("p", frozenset(_SKILLS[i] for i in picked))
        members = []
        for k in range(int(rng.integers(1, 9))):
            owned = rng.choice(len(_SKILLS), size=int(rng.integers(1, 6)), replace=False)
            profile = {_SKILLS[i]: float(rng.uniform(0.01, 2.0)) for i in owned}
            members.append(Candidate(f"m{k}", AttributeClass(int(rng.integers(2))), profile))
        team = Team(members)
        if any(skill in m.cost_profile for m in members for skill in project.requirements):
            return team, project


@pytest.fixture
def demo_members() -> list[Candidate]:
    return [
        Candidate("member-1", AttributeClass.ZERO, {"req-2": 0.035}),
        Candidate("member-2", AttributeClass.ONE, {"req-1": 0.100, "req-4": 0.022}),
        Candidate("member-3", AttributeClass.ONE, {"req-3": 0.090, "req-4": 0.081}),
    ]


@pytest.fixture
def demo_team(demo_members) -> Team:
    return Team(demo_members)


@pytest.fixture
def demo_project() -> Project:
    return Project("demo", frozenset({"req-1", "req-2", "req-3", "req-4"}))
