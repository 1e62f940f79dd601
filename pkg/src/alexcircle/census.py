"""Counting and enumeration of inequivalent actions."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, gcd
from typing import Iterator

from .equivalence import DEFAULT_MOVES, CanonicalTuple, MoveSystem, canonical_form
from .invariants import EPSILONS, NONORIENTABLE, InvariantTuple, SeifertPair


def _check_domain(r: int, s: int) -> None:
    if s < 1 or s > r:
        raise ValueError(f"need r >= s >= 1, got r={r}, s={s}")


def count_actions_paper(r: int, s: int) -> int:
    """The binomial count ``C(r, s)`` stated for the number of actions."""
    _check_domain(r, s)
    return comb(r, s)


def singular_multisets(r: int, s: int) -> Iterator[tuple[int, ...]]:
    """Sorted multisets of ``s`` even integers >= 2 with sum ``2r``."""
    if s == 0:
        if r == 0:
            yield ()
        return
    for parts in combinations_with_replacement(range(2, 2 * r + 1, 2), s):
        if sum(parts) == 2 * r:
            yield parts


def count_actions_enumerated(r: int, s: int) -> int:
    """Count the possible singular tuples directly by exhaustive listing."""
    _check_domain(r, s)
    return sum(1 for _ in singular_multisets(r, s))


@lru_cache(maxsize=None)
def partitions_exact(r: int, s: int) -> int:
    """Partitions of ``r`` into exactly ``s`` positive parts, by recurrence."""
    if r == 0 and s == 0:
        return 1
    if r <= 0 or s <= 0 or s > r:
        return 0
    return partitions_exact(r - 1, s - 1) + partitions_exact(r - s, s)


@dataclass(frozen=True)
class CountReport:
    r: int
    s: int
    paper_count: int
    enumerated_count: int

    @property
    def agree(self) -> bool:
        return self.paper_count == self.enumerated_count

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "paper_count": self.paper_count,
            "enumerated_count": self.enumerated_count,
            "agree": self.agree,
        }


def compare_counts(r: int, s: int) -> CountReport:
    # both sides are reported; neither is treated as authoritative
    return CountReport(r, s, count_actions_paper(r, s), count_actions_enumerated(r, s))


# -- census ------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexityBound:
    max_genus: int = 0
    max_f: int = 0
    max_t: int = 0
    max_s: int = 0
    max_alpha: int = 0
    max_pairs: int = 0
    max_b_abs: int = 0
    max_r: int = 0  # bounds r = (sum of singular) / 2

    def __post_init__(self):
        for name, value in vars(self).items():
            if value < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.max_pairs > 0 and self.max_alpha < 2:
            raise ValueError("max_alpha must be >= 2 when max_pairs > 0")

    def admits(self, t: InvariantTuple) -> bool:
        return (
            t.g <= self.max_genus
            and t.f <= self.max_f
            and t.t <= self.max_t
            and t.s <= self.max_s
            and t.n <= self.max_pairs
            and all(p.alpha <= self.max_alpha for p in t.pairs)
            and abs(t.b) <= self.max_b_abs
            and sum(t.singular) <= 2 * self.max_r
        )


def seifert_pairs(max_alpha: int) -> list[SeifertPair]:
    return [
        SeifertPair(a, b)
        for a in range(2, max_alpha + 1)
        for b in range(1, a)
        if gcd(a, b) == 1
    ]


def _cells(bound: ComplexityBound):
    """(eps, g, f, t, singular) cells in ascending sort order."""
    for eps in EPSILONS:
        genus_min = 1 if eps == NONORIENTABLE else 0
        for g in range(genus_min, bound.max_genus + 1):
            for f in range(bound.max_f + 1):
                for t in range(bound.max_t + 1):
                    for s in range(bound.max_s + 1):
                        singular = sorted(
                            m for r in range(s, bound.max_r + 1)
                            for m in singular_multisets(r, s)
                        )
                        for sing in singular:
                            yield eps, g, f, t, sing


def bounded_tuples(bound: ComplexityBound) -> Iterator[InvariantTuple]:
    """Every valid tuple admitted by ``bound`` (multisets taken sorted)."""
    for cell in _cells(bound):
        yield from _cell_tuples(bound, cell)


def _cell_tuples(bound: ComplexityBound, cell) -> Iterator[InvariantTuple]:
    eps, g, f, t, sing = cell
    closed = f + t + len(sing) == 0
    bs = range(-bound.max_b_abs, bound.max_b_abs + 1) if closed else (0,)
    pool = seifert_pairs(bound.max_alpha)
    for n in range(bound.max_pairs + 1):
        for pairs in combinations_with_replacement(pool, n):
            for b in bs:
                yield InvariantTuple(b, eps, g, f, t, pairs, sing)


def _cell_census(args) -> list[InvariantTuple]:
    bound, cell, moves = args
    out = []
    for t in _cell_tuples(bound, cell):
        c = canonical_form(t, moves).inner
        # a class whose least member lies outside the bound is reported once,
        # from the unique member that is inside it
        if c == t or not bound.admits(c):
            out.append(c)
    out.sort(key=InvariantTuple.sort_key)
    return out


def enumerate_census(
    bound: ComplexityBound, moves: MoveSystem = DEFAULT_MOVES, jobs: int = 1
) -> Iterator[CanonicalTuple]:
    """Stream one canonical tuple per equivalence class meeting ``bound``.

    Output is in ascending canonical order regardless of ``jobs``.
    """
    tasks = ((bound, cell, moves) for cell in _cells(bound))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_cell_census, tasks):
                for t in chunk:
                    yield CanonicalTuple(t)
    else:
        for chunk in map(_cell_census, tasks):
            for t in chunk:
                yield CanonicalTuple(t)
