"""Simplicial complexes and their integral homology."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .snf import Matrix, smith_normal_form


class NoRegularFacetError(ValueError):
    """No facet is available for a connected-sum gluing."""


class MalformedLinkError(ValueError):
    """A vertex link is neither a 2-sphere nor a projective plane."""


@dataclass(frozen=True)
class SimplicialComplex:
    """Pure complex given by its facets (sorted vertex tuples)."""

    facets: frozenset[tuple[int, ...]]

    def __init__(self, facets: Iterable[Iterable[int]]):
        cleaned = set()
        for facet in map(tuple, facets):
            simplex = tuple(sorted(set(facet)))
            if len(simplex) != len(facet):
                raise ValueError(f"facet {tuple(facet)} repeats a vertex")
            cleaned.add(simplex)
        if not cleaned:
            raise ValueError("complex needs at least one facet")
        if len({len(s) for s in cleaned}) != 1:
            raise ValueError("complex must be pure")
        object.__setattr__(self, "facets", frozenset(cleaned))

    @property
    def dimension(self) -> int:
        return len(next(iter(self.facets))) - 1

    @cached_property
    def vertices(self) -> list[int]:
        return sorted({v for s in self.facets for v in s})

    @cached_property
    def faces(self) -> list[list[tuple[int, ...]]]:
        """``faces[k]`` lists the k-simplices in lexicographic order."""
        out = [set() for _ in range(self.dimension + 1)]
        for facet in self.facets:
            for k in range(len(facet)):
                out[k].update(combinations(facet, k + 1))
        return [sorted(level) for level in out]

    def f_vector(self) -> list[int]:
        return [len(level) for level in self.faces]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted(self.facets)

    def link(self, v: int) -> "SimplicialComplex":
        return SimplicialComplex(tuple(u for u in s if u != v) for s in self.facets if v in s)


@dataclass(frozen=True)
class ChainComplex:
    """``boundary[n]`` maps n-chains to (n-1)-chains; ``boundary[0]`` is empty.

    ``sizes[n]`` is the number of n-simplices, kept so that shapes survive
    matrices with no entries.
    """

    sizes: tuple[int, ...]
    boundary: tuple[Matrix, ...]


@dataclass(frozen=True)
class AbelianGroupDecomp:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


Z = AbelianGroupDecomp(1)
TRIVIAL = AbelianGroupDecomp(0)


def chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Simplicial chain complex with the alternating-sign boundary."""
    faces = K.faces
    index = [{s: i for i, s in enumerate(level)} for level in faces]
    boundary: list[Matrix] = [[]]
    for n in range(1, K.dimension + 1):
        M = [[0] * len(faces[n]) for _ in faces[n - 1]]
        for j, s in enumerate(faces[n]):
            for i in range(len(s)):
                M[index[n - 1][s[:i] + s[i + 1:]]][j] = (-1) ** i
        boundary.append(M)
    return ChainComplex(tuple(len(level) for level in faces), tuple(boundary))


def homology_groups(C: ChainComplex) -> list[AbelianGroupDecomp]:
    """``H_0 .. H_d`` over the integers."""
    top = len(C.sizes) - 1
    factors = [[] for _ in range(top + 2)]
    for n in range(1, top + 1):
        factors[n] = smith_normal_form(C.boundary[n], cols=C.sizes[n], transforms=False).invariant_factors()
    groups = []
    for n in range(top + 1):
        kernel = C.sizes[n] - len(factors[n])
        image = factors[n + 1]
        groups.append(AbelianGroupDecomp(kernel - len(image), tuple(d for d in image if d > 1)))
    return groups


def homology(K: SimplicialComplex) -> list[AbelianGroupDecomp]:
    return homology_groups(chain_complex(K))


def suspend(K: SimplicialComplex) -> SimplicialComplex:
    """Join with two new apex vertices placed after the existing ones."""
    top = max(K.vertices)
    north, south = top + 1, top + 2
    return SimplicialComplex(
        [s + (north,) for s in K.facets] + [s + (south,) for s in K.facets]
    )


# -- vertex links and singular points ----------------------------------------

SPHERE_SIGNATURE = (Z, TRIVIAL, Z)
RP2_SIGNATURE = (Z, AbelianGroupDecomp(0, (2,)), TRIVIAL)


def vertex_kinds(K: SimplicialComplex) -> dict[int, str]:
    """Classify each vertex of a pure 3-complex by the homology of its link."""
    if K.dimension != 3:
        raise ValueError("vertex classification needs a pure 3-complex")
    kinds = {}
    for v in K.vertices:
        signature = tuple(homology(K.link(v)))
        if signature == SPHERE_SIGNATURE:
            kinds[v] = "regular"
        elif signature == RP2_SIGNATURE:
            kinds[v] = "singular"
        else:
            raise MalformedLinkError(
                f"link of vertex {v} has homology {[str(h) for h in signature]}"
            )
    return kinds


def singular_vertex_count(K: SimplicialComplex) -> int:
    return sum(kind == "singular" for kind in vertex_kinds(K).values())


# -- connected sum -----------------------------------------------------------

def stellar_subdivide(K: SimplicialComplex, facet: tuple[int, ...]) -> SimplicialComplex:
    """Cone the boundary of ``facet`` from a new vertex placed after the others."""
    if facet not in K.facets:
        raise ValueError(f"{facet} is not a facet")
    w = max(K.vertices) + 1
    cone = [tuple(u for u in facet if u != v) + (w,) for v in facet]
    return SimplicialComplex([s for s in K.facets if s != facet] + cone)


def _gluing_facet(K: SimplicialComplex) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """A facet with only regular vertices, subdividing once if none exists.

    Subdividing a facet with exactly one singular vertex yields a new facet
    avoiding it, so a summand like Susp(RP^2) remains usable.
    """
    kinds = vertex_kinds(K)
    facets = K.sorted_facets()
    for s in facets:
        if all(kinds[v] == "regular" for v in s):
            return K, s
    for s in facets:
        bad = [v for v in s if kinds[v] != "regular"]
        if len(bad) == 1:
            K = stellar_subdivide(K, s)
            w = max(K.vertices)
            return K, tuple(sorted(tuple(u for u in s if u != bad[0]) + (w,)))
    raise NoRegularFacetError("every facet meets at least two singular vertices")


def connected_sum(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Remove a regular facet from each summand and glue along the boundaries.

    The removed facets are identified vertex-by-vertex in ascending order.
    Vertices of ``K2`` not on the glued facet are shifted past those of ``K1``.
    """
    if K1.dimension != 3 or K2.dimension != 3:
        raise ValueError("connected sum is implemented for pure 3-complexes")
    K1, tau1 = _gluing_facet(K1)
    K2, tau2 = _gluing_facet(K2)
    offset = max(K1.vertices) + 1
    relabel = {v: offset + i for i, v in enumerate(u for u in K2.vertices if u not in tau2)}
    relabel.update(zip(tau2, tau1))
    facets = [s for s in K1.facets if s != tau1]
    facets += [tuple(relabel[v] for v in s) for s in K2.facets if s != tau2]
    return SimplicialComplex(facets)
