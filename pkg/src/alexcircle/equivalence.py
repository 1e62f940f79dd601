"""Weak-equivariant equivalence of invariant tuples.

Equivalence is generated by a small move system acting on valid tuples:

* multiset reordering (implicit, storage is sorted)
* orientation reversal, for orientable orbit spaces
* reflection ``beta -> alpha - beta`` of a single Seifert pair, available
  when the orbit space has boundary or is nonorientable

``canonical_form`` picks the least element of a move class in closed form.
``closure_oracle_equivalent`` is a plain breadth-first search over the moves
and is kept independent of ``canonical_form`` so each can check the other.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .invariants import (
    NONORIENTABLE,
    ORIENTABLE,
    InvariantTuple,
    SeifertPair,
    require_valid,
    tuple_to_json,
)


class MoveNotEnabledError(ValueError):
    """The requested move does not apply to this tuple."""


@dataclass(frozen=True)
class MoveSystem:
    """Which moves generate equivalence.

    ``oriented`` disables orientation reversal. ``closed_nonorientable_reflection``
    controls whether beta-reflection is allowed on a nonorientable orbit space
    without boundary.
    """

    oriented: bool = False
    closed_nonorientable_reflection: bool = True

    def reversal_enabled(self, t: InvariantTuple) -> bool:
        return t.eps == ORIENTABLE and not self.oriented

    def reflection_enabled(self, t: InvariantTuple) -> bool:
        if t.has_boundary:
            return True
        return t.eps == NONORIENTABLE and self.closed_nonorientable_reflection


DEFAULT_MOVES = MoveSystem()


@dataclass(frozen=True)
class CanonicalTuple:
    inner: InvariantTuple

    def __str__(self) -> str:
        return str(self.inner)


@dataclass(frozen=True)
class MoveStep:
    move: str
    before: InvariantTuple
    after: InvariantTuple


@dataclass(frozen=True)
class MoveTrace:
    steps: tuple[MoveStep, ...] = ()

    def to_json(self) -> str:
        return json.dumps(
            [
                {"move": s.move, "before": tuple_to_json(s.before), "after": tuple_to_json(s.after)}
                for s in self.steps
            ],
            separators=(",", ":"),
        )


# -- moves -------------------------------------------------------------------

def apply_orientation_reversal(
    t: InvariantTuple, moves: MoveSystem = DEFAULT_MOVES
) -> InvariantTuple:
    """Reverse the orientation: ``b -> -b - n`` and every ``beta -> alpha - beta``.

    With boundary present ``b`` is pinned to 0 and only the pairs change.
    """
    if not moves.reversal_enabled(t):
        raise MoveNotEnabledError(
            "orientation reversal needs an orientable orbit space in unoriented mode"
        )
    pairs = [SeifertPair(p.alpha, p.alpha - p.beta) for p in t.pairs]
    b = 0 if t.has_boundary else -t.b - t.n
    return t.replace(b=b, pairs=pairs)


def apply_beta_reflection(
    t: InvariantTuple, index: int, moves: MoveSystem = DEFAULT_MOVES
) -> InvariantTuple:
    """Replace pair ``index`` (in sorted order) by ``(alpha, alpha - beta)``."""
    if not moves.reflection_enabled(t):
        raise MoveNotEnabledError(
            "beta-reflection needs boundary (f + t + s > 0) or a nonorientable orbit space"
        )
    if not 0 <= index < t.n:
        raise IndexError(f"pair index {index} out of range for {t.n} pairs")
    pairs = list(t.pairs)
    a, b = pairs[index]
    pairs[index] = SeifertPair(a, a - b)
    return t.replace(pairs=pairs)


def neighbours(t: InvariantTuple, moves: MoveSystem = DEFAULT_MOVES):
    """Yield ``(move_name, tuple)`` for every single move out of ``t``."""
    if moves.reversal_enabled(t):
        yield "orientation_reversal", apply_orientation_reversal(t, moves)
    if moves.reflection_enabled(t):
        for i in range(t.n):
            yield f"beta_reflection[{i}]", apply_beta_reflection(t, i, moves)


# -- canonical forms ---------------------------------------------------------

def canonical_form(t: InvariantTuple, moves: MoveSystem = DEFAULT_MOVES) -> CanonicalTuple:
    require_valid(t)
    if moves.reflection_enabled(t):
        # independent reflections: the least multiset takes min(beta, alpha - beta)
        # pairwise, and orientation reversal adds nothing beyond that
        pairs = [SeifertPair(p.alpha, min(p.beta, p.alpha - p.beta)) for p in t.pairs]
        return CanonicalTuple(t.replace(pairs=pairs))
    if moves.reversal_enabled(t):
        other = apply_orientation_reversal(t, moves)
        return CanonicalTuple(min(t, other, key=InvariantTuple.sort_key))
    return CanonicalTuple(t)


def are_equivalent(
    a: InvariantTuple, b: InvariantTuple, moves: MoveSystem = DEFAULT_MOVES
) -> bool:
    return canonical_form(a, moves) == canonical_form(b, moves)


# -- breadth-first oracle ----------------------------------------------------

def move_closure(
    t: InvariantTuple, depth: int, moves: MoveSystem = DEFAULT_MOVES
) -> set[InvariantTuple]:
    """All tuples reachable from ``t`` in at most ``depth`` moves."""
    seen = {t}
    frontier = [t]
    for _ in range(depth):
        nxt = []
        for u in frontier:
            for _, v in neighbours(u, moves):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if not nxt:
            break
        frontier = nxt
    return seen


def closure_oracle_equivalent(
    a: InvariantTuple, b: InvariantTuple, depth: int, moves: MoveSystem = DEFAULT_MOVES
) -> bool:
    return b in move_closure(a, depth, moves)


def find_move_trace(
    a: InvariantTuple, b: InvariantTuple, depth: int, moves: MoveSystem = DEFAULT_MOVES
) -> MoveTrace | None:
    """Shortest sequence of moves from ``a`` to ``b``, or None within ``depth``."""
    parent: dict[InvariantTuple, tuple[str, InvariantTuple] | None] = {a: None}
    queue = deque([(a, 0)])
    while queue:
        u, d = queue.popleft()
        if u == b:
            steps = []
            while parent[u] is not None:
                name, prev = parent[u]
                steps.append(MoveStep(name, prev, u))
                u = prev
            return MoveTrace(tuple(reversed(steps)))
        if d == depth:
            continue
        for name, v in neighbours(u, moves):
            if v not in parent:
                parent[v] = (name, u)
                queue.append((v, d + 1))
    return None
