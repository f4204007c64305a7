"""Pool and project corpus files, plus synthetic pool/project generation.

Two interchangeable on-disk formats, picked by extension:

* delimiter-separated values (any extension but ``.json``): UTF-8, one record
  per line, header row required, skills semicolon-joined inside one field.
  Pool columns are ``id,cost,attribute,skills``; project columns ``id,skills``.
  Attribute tokens are ``0``/``1``; decimal costs use ``.``.
* JSON (``.json``): an array of objects carrying the same fields, with
  ``skills`` as a list of tokens.

A candidate record declares one cost; the loaded cost profile maps every
listed skill to that declared cost.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .model import AttributeClass, Candidate, Project

_ATTRIBUTE_TOKENS = {"0": AttributeClass.ZERO, "1": AttributeClass.ONE}


class DataFormatError(ValueError):
    """A pool or project file failed to parse or validate."""


def _fail(path: str | Path, where: str, message: str) -> None:
    raise DataFormatError(f"{path}: {where}: {message}")


def _is_json(path: str | Path) -> bool:
    return Path(path).suffix.lower() == ".json"


def _split_skills(field: str) -> list[str]:
    return [token.strip() for token in field.split(";") if token.strip()]


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def _pool_records(path: str | Path) -> list[tuple[str, str, float, str, list[str]]]:
    """Yield (location, id, cost, attribute token, skills) per record."""
    records = []
    if _is_json(path):
        with open(path, encoding="utf-8") as handle:
            try:
                data = json.load(handle)
            except json.JSONDecodeError as exc:
                _fail(path, "file", f"invalid JSON: {exc}")
        if not isinstance(data, list):
            _fail(path, "file", "expected a JSON array of candidate records")
        for index, record in enumerate(data, start=1):
            where = f"record {index}"
            if not isinstance(record, dict):
                _fail(path, where, "expected an object")
            missing = {"id", "cost", "attribute", "skills"} - record.keys()
            if missing:
                _fail(path, where, f"missing fields: {', '.join(sorted(missing))}")
            skills = record["skills"]
            if not isinstance(skills, list):
                _fail(path, where, "skills must be a list of tokens")
            records.append(
                (
                    where,
                    str(record["id"]),
                    record["cost"],
                    str(record["attribute"]),
                    [str(s).strip() for s in skills if str(s).strip()],
                )
            )
    else:
        with open(path, encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if header is None:
                _fail(path, "file", "empty file, expected a header row")
            expected = ["id", "cost", "attribute", "skills"]
            if [column.strip() for column in header] != expected:
                _fail(path, "line 1", f"expected header {','.join(expected)}")
            for line, row in enumerate(reader, start=2):
                if not row or (len(row) == 1 and not row[0].strip()):
                    continue
                where = f"line {line}"
                if len(row) != 4:
                    _fail(path, where, f"expected 4 fields, got {len(row)}")
                records.append((where, row[0].strip(), row[1], row[2].strip(), _split_skills(row[3])))
    return records


def load_pool(
    path: str | Path,
    class_zero_share: float | None = None,
    seed: int = 0,
) -> list[Candidate]:
    """Load candidates; optionally reassign attribute classes to a target share.

    With `class_zero_share` set, the file's attribute column is ignored and
    exactly round(share * n) candidates, picked by seeded shuffle, get class
    zero.
    """
    candidates: list[Candidate] = []
    seen: set[str] = set()
    for where, cid, raw_cost, attr_token, skills in _pool_records(path):
        if not cid:
            _fail(path, where, "candidate id must be non-empty")
        if cid in seen:
            _fail(path, where, f"duplicate candidate id {cid!r}")
        try:
            cost = float(raw_cost)
        except (TypeError, ValueError):
            _fail(path, where, f"cost {raw_cost!r} is not a number")
        if not math.isfinite(cost) or cost <= 0.0:
            _fail(path, where, f"cost must be a finite positive number, got {cost!r}")
        if attr_token not in _ATTRIBUTE_TOKENS:
            _fail(path, where, f"unknown attribute token {attr_token!r}, expected 0 or 1")
        if not skills:
            _fail(path, where, "skill list must be non-empty")
        seen.add(cid)
        candidates.append(
            Candidate(cid, _ATTRIBUTE_TOKENS[attr_token], {skill: cost for skill in skills})
        )
    if not candidates:
        _fail(path, "file", "no candidate records")
    if class_zero_share is not None:
        candidates = reassign_attributes(candidates, class_zero_share, seed)
    return candidates


def reassign_attributes(
    candidates: Sequence[Candidate], class_zero_share: float, seed: int
) -> list[Candidate]:
    """Return a copy with exactly round(share * n) class-zero members, seeded."""
    if not 0.0 < class_zero_share < 1.0:
        raise ValueError(f"class_zero_share must lie strictly between 0 and 1, got {class_zero_share}")
    zero_count = _round_half_up(class_zero_share * len(candidates))
    order = np.random.default_rng(seed).permutation(len(candidates))
    zero_positions = set(int(i) for i in order[:zero_count])
    return [
        Candidate(
            c.id,
            AttributeClass.ZERO if i in zero_positions else AttributeClass.ONE,
            c.cost_profile,
        )
        for i, c in enumerate(candidates)
    ]


def load_projects(path: str | Path) -> list[Project]:
    """Load projects in file order; duplicate skills within a record collapse."""
    projects: list[Project] = []
    seen: set[str] = set()
    if _is_json(path):
        with open(path, encoding="utf-8") as handle:
            try:
                data = json.load(handle)
            except json.JSONDecodeError as exc:
                _fail(path, "file", f"invalid JSON: {exc}")
        if not isinstance(data, list):
            _fail(path, "file", "expected a JSON array of project records")
        rows = []
        for index, record in enumerate(data, start=1):
            where = f"record {index}"
            if not isinstance(record, dict) or {"id", "skills"} - record.keys():
                _fail(path, where, "expected an object with id and skills")
            if not isinstance(record["skills"], list):
                _fail(path, where, "skills must be a list of tokens")
            rows.append((where, str(record["id"]), [str(s).strip() for s in record["skills"] if str(s).strip()]))
    else:
        with open(path, encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if header is None:
                _fail(path, "file", "empty file, expected a header row")
            if [column.strip() for column in header] != ["id", "skills"]:
                _fail(path, "line 1", "expected header id,skills")
            rows = []
            for line, row in enumerate(reader, start=2):
                if not row or (len(row) == 1 and not row[0].strip()):
                    continue
                where = f"line {line}"
                if len(row) != 2:
                    _fail(path, where, f"expected 2 fields, got {len(row)}")
                rows.append((where, row[0].strip(), _split_skills(row[1])))
    for where, pid, skills in rows:
        if not pid:
            _fail(path, where, "project id must be non-empty")
        if pid in seen:
            _fail(path, where, f"duplicate project id {pid!r}")
        if not skills:
            _fail(path, where, "requirement list must be non-empty")
        seen.add(pid)
        projects.append(Project(pid, frozenset(skills)))
    if not projects:
        _fail(path, "file", "no project records")
    return projects


def save_pool(candidates: Sequence[Candidate], path: str | Path) -> None:
    """Write candidates in the format matching the path's extension.

    Assumes the flat-cost model (one declared cost replicated across skills);
    the declared cost written out is the profile's first cost.
    """
    rows = []
    for c in candidates:
        cost = next(iter(c.cost_profile.values()))
        rows.append((c.id, cost, c.attribute.value, sorted(c.cost_profile)))
    if _is_json(path):
        payload = [
            {"id": cid, "cost": cost, "attribute": attr, "skills": list(skills)}
            for cid, cost, attr, skills in rows
        ]
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["id", "cost", "attribute", "skills"])
        for cid, cost, attr, skills in rows:
            writer.writerow([cid, repr(cost), attr, ";".join(skills)])


def save_projects(projects: Sequence[Project], path: str | Path) -> None:
    if _is_json(path):
        payload = [{"id": p.id, "skills": list(p.sorted_requirements)} for p in projects]
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["id", "skills"])
        for p in projects:
            writer.writerow([p.id, ";".join(p.sorted_requirements)])


def skill_universe(size: int) -> list[str]:
    """Skill tokens s000..s(size-1), zero-padded so lexical order is numeric."""
    if size < 1:
        raise ValueError("skill universe size must be at least 1")
    width = max(3, len(str(size - 1)))
    return [f"s{i:0{width}d}" for i in range(size)]


@dataclass(frozen=True)
class SynthesisSpec:
    """Parameters of a synthetic candidate pool.

    Costs are log-uniform over [cost_low, cost_high]; skill counts are uniform
    over [min_skills, max_skills]. These distributions are test fixtures, not
    claims about any real marketplace.
    """

    pool_size: int
    skill_universe_size: int
    min_skills: int = 1
    max_skills: int = 5
    cost_low: float = 0.01
    cost_high: float = 1.0
    class_zero_share: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if self.pool_size < 1:
            raise ValueError("pool_size must be at least 1")
        if not 1 <= self.min_skills <= self.max_skills:
            raise ValueError("need 1 <= min_skills <= max_skills")
        if self.max_skills > self.skill_universe_size:
            raise ValueError(
                f"max_skills {self.max_skills} exceeds the skill universe ({self.skill_universe_size})"
            )
        if not 0.0 < self.cost_low <= self.cost_high:
            raise ValueError("need 0 < cost_low <= cost_high")
        if not 0.0 < self.class_zero_share < 1.0:
            raise ValueError("class_zero_share must lie strictly between 0 and 1")


def synthesize_pool(spec: SynthesisSpec) -> list[Candidate]:
    """Deterministic synthetic pool; attribute share exact to rounding."""
    rng = np.random.default_rng(spec.seed)
    skills = skill_universe(spec.skill_universe_size)
    width = max(4, len(str(spec.pool_size - 1)))
    log_low, log_high = math.log(spec.cost_low), math.log(spec.cost_high)

    drafts = []
    for i in range(spec.pool_size):
        count = int(rng.integers(spec.min_skills, spec.max_skills + 1))
        picked = rng.choice(spec.skill_universe_size, size=count, replace=False)
        cost = float(np.exp(rng.uniform(log_low, log_high)))
        drafts.append((f"c{i:0{width}d}", cost, [skills[j] for j in sorted(picked)]))

    zero_count = _round_half_up(spec.class_zero_share * spec.pool_size)
    zero_positions = set(int(i) for i in rng.permutation(spec.pool_size)[:zero_count])
    return [
        Candidate(
            cid,
            AttributeClass.ZERO if i in zero_positions else AttributeClass.ONE,
            {skill: cost for skill in chosen},
        )
        for i, (cid, cost, chosen) in enumerate(drafts)
    ]


def synthesize_projects(
    num_projects: int,
    skill_universe_size: int,
    min_requirements: int = 2,
    max_requirements: int = 5,
    seed: int = 0,
) -> list[Project]:
    """Deterministic synthetic project corpus over the same skill tokens."""
    if num_projects < 1:
        raise ValueError("num_projects must be at least 1")
    if not 1 <= min_requirements <= max_requirements:
        raise ValueError("need 1 <= min_requirements <= max_requirements")
    if max_requirements > skill_universe_size:
        raise ValueError(
            f"max_requirements {max_requirements} exceeds the skill universe ({skill_universe_size})"
        )
    rng = np.random.default_rng(seed)
    skills = skill_universe(skill_universe_size)
    width = max(3, len(str(num_projects - 1)))
    projects = []
    for i in range(num_projects):
        count = int(rng.integers(min_requirements, max_requirements + 1))
        picked = rng.choice(skill_universe_size, size=count, replace=False)
        projects.append(Project(f"p{i:0{width}d}", frozenset(skills[j] for j in picked)))
    return projects
