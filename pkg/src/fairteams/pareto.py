"""Minimization-sense Pareto dominance and exact non-dominated filtering.

Score vectors are plain float sequences; +inf is a legal sentinel meaning
"worst possible" (for example, a skill the candidate does not offer). NaN is
rejected. The front filter is a straightforward all-pairs scan, which at the
scales this package targets (a few hundred candidates, a few thousand teams)
finishes well under a second.
"""

from __future__ import annotations

from typing import Iterable, Sequence, TypeVar

Key = TypeVar("Key")


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff `a` is no worse than `b` everywhere and strictly better somewhere."""
    if len(a) != len(b):
        raise ValueError(f"score vectors differ in length: {len(a)} vs {len(b)}")
    strictly_better = False
    for x, y in zip(a, b):
        if x > y:
            return False
        if x < y:
            strictly_better = True
    return strictly_better


def pareto_front(items: Iterable[tuple[Key, Sequence[float]]]) -> list[Key]:
    """Keys of the non-dominated items, in input order.

    Items carrying identical vectors never dominate each other, so duplicates
    are all retained.
    """
    entries = list(items)
    if not entries:
        raise ValueError("cannot take the Pareto front of an empty population")
    length = len(entries[0][1])
    for key, vector in entries:
        if len(vector) != length:
            raise ValueError(f"score vector for {key!r} has length {len(vector)}, expected {length}")
        if any(value != value for value in vector):
            raise ValueError(f"score vector for {key!r} contains NaN")

    vectors = [vector for _, vector in entries]
    front: list[Key] = []
    for i, (key, mine) in enumerate(entries):
        dominated = False
        for j, other in enumerate(vectors):
            if j != i and dominates(other, mine):
                dominated = True
                break
        if not dominated:
            front.append(key)
    return front
