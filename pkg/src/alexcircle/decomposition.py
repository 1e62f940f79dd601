"""Splitting an action into its manifold part and suspension summands.

A space with tuple ``(b; (eps, g, f, t); pairs; (r_1..r_s))`` is the connected
sum of the manifold ``M`` with tuple ``(b; (eps, g, f + s, t); pairs)`` and
``r = (r_1 + ... + r_s) / 2`` copies of Susp(RP^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .equivalence import DEFAULT_MOVES, MoveSystem, canonical_form
from .invariants import InvariantTuple, parse_tuple, require_valid, singular_point_count, tuple_to_json


@dataclass(frozen=True)
class Decomposition:
    manifold_tuple: InvariantTuple
    suspension_count: int

    def to_json(self, name: "SpaceName | None" = None) -> dict:
        return {
            "manifold": tuple_to_json(self.manifold_tuple),
            "r": self.suspension_count,
            "name": name.name if name else None,
        }


class NameSource(Enum):
    PAPER_EXAMPLE = "PaperExample"
    CURATED_TABLE = "CuratedTable"


@dataclass(frozen=True)
class SpaceName:
    name: str
    source: NameSource

    def __post_init__(self):
        if not self.name:
            raise ValueError("empty space name")


def decompose(t: InvariantTuple) -> Decomposition:
    require_valid(t)
    if not t.singular:
        return Decomposition(t, 0)
    manifold = t.replace(f=t.f + t.s, singular=())
    return Decomposition(manifold, singular_point_count(t) // 2)


def asphericity_obstructed(t: InvariantTuple) -> bool:
    """True when the suspension summands rule out asphericity.

    False only means this criterion is silent; it is no proof of asphericity.
    """
    require_valid(t)
    return singular_point_count(t) > 0


# Manifold tuples whose names were checked against the homology models
# ("s3", "s2xs1") in the test suite. Keys are canonical forms.
_CURATED = {
    "(0;(o,0,0,0);[];[])": ("S^2 × S^1", NameSource.CURATED_TABLE),
    "(0;(o,0,2,0);[];[])": ("S^2 × S^1", NameSource.PAPER_EXAMPLE),
    "(0;(o,0,1,0);[];[])": ("S^3", NameSource.CURATED_TABLE),
    "(1;(o,0,0,0);[];[])": ("S^3", NameSource.CURATED_TABLE),
    "(-1;(o,0,0,0);[];[])": ("S^3", NameSource.CURATED_TABLE),
}

CURATED_NAMES: dict[InvariantTuple, tuple[str, NameSource]] = {
    parse_tuple(k): v for k, v in _CURATED.items()
}


def name_lookup(d: Decomposition, moves: MoveSystem = DEFAULT_MOVES) -> SpaceName | None:
    for key, (label, source) in CURATED_NAMES.items():
        if canonical_form(key, moves) == canonical_form(d.manifold_tuple, moves):
            break
    else:
        return None
    if d.suspension_count:
        label = f"{label} # {d.suspension_count}·Susp(RP^2)"
    return SpaceName(label, source)
