"""Curated simplicial models and the ``--model`` expression language.

Expressions are ``#``-separated summands, each one of ``s3``, ``s2xs1``,
``sus_rp2`` or ``sus_rp2^k``; ``rp2`` is accepted on its own.
"""

from __future__ import annotations

import re
from functools import reduce
from itertools import combinations

from .complexes import SimplicialComplex, connected_sum, suspend

# antipodal quotient of the icosahedron
_RP2_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
]


def rp2_minimal() -> SimplicialComplex:
    """The 6-vertex, 10-triangle projective plane."""
    return SimplicialComplex(_RP2_FACETS)


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, an (n-1)-sphere on ``n + 1`` vertices."""
    return SimplicialComplex(combinations(range(n + 1), n))


def s3() -> SimplicialComplex:
    return simplex_boundary(4)


def product_with_circle(K: SimplicialComplex, m: int = 3) -> SimplicialComplex:
    """Staircase triangulation of ``K x C_m``; vertex ``(v, c)`` becomes ``v*m + c``."""
    if m < 3:
        raise ValueError("a simplicial circle needs at least 3 vertices")
    facets = []
    for sigma in K.facets:
        for a in range(m):
            b = (a + 1) % m
            for j in range(len(sigma)):
                facets.append(
                    tuple(v * m + a for v in sigma[: j + 1]) + tuple(v * m + b for v in sigma[j:])
                )
    return SimplicialComplex(facets)


def s2xs1() -> SimplicialComplex:
    return product_with_circle(simplex_boundary(3))


def suspension_rp2() -> SimplicialComplex:
    return suspend(rp2_minimal())


def realize_suspension_sum(r: int) -> SimplicialComplex:
    """Connected sum of ``r`` copies of Susp(RP^2)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return reduce(connected_sum, [suspension_rp2() for _ in range(r)])


_SUMMAND = re.compile(r"^(s3|s2xs1|sus_rp2)(?:\^(\d+))?$")
_BUILDERS = {"s3": s3, "s2xs1": s2xs1, "sus_rp2": suspension_rp2}


def build_model(expr: str) -> SimplicialComplex:
    """Build the complex named by a model expression, e.g. ``s2xs1#sus_rp2^2``."""
    expr = expr.replace(" ", "")
    if expr == "rp2":
        return rp2_minimal()
    pieces = []
    for term in expr.split("#"):
        m = _SUMMAND.match(term)
        if m is None:
            raise ValueError(f"unknown model {term!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        if power < 1:
            raise ValueError(f"exponent must be >= 1 in {term!r}")
        if name == "sus_rp2":
            pieces.append(realize_suspension_sum(power))
        else:
            pieces.extend(_BUILDERS[name]() for _ in range(power))
    return reduce(connected_sum, pieces)
