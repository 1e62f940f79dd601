"""Exact integral homology of small simplicial models."""

from .complexes import (
    AbelianGroupDecomp,
    ChainComplex,
    MalformedLinkError,
    NoRegularFacetError,
    SimplicialComplex,
    chain_complex,
    connected_sum,
    homology,
    homology_groups,
    singular_vertex_count,
    stellar_subdivide,
    suspend,
    vertex_kinds,
)
from .models import (
    build_model,
    product_with_circle,
    realize_suspension_sum,
    rp2_minimal,
    s2xs1,
    s3,
    simplex_boundary,
    suspension_rp2,
)
from .snf import SNFResult, determinant, matmul, smith_normal_form

__all__ = [
    "AbelianGroupDecomp", "ChainComplex", "MalformedLinkError", "NoRegularFacetError",
    "SNFResult", "SimplicialComplex", "build_model", "chain_complex", "connected_sum",
    "determinant", "homology", "homology_groups", "matmul", "product_with_circle",
    "realize_suspension_sum", "rp2_minimal", "s2xs1", "s3", "simplex_boundary",
    "singular_vertex_count", "smith_normal_form", "stellar_subdivide", "suspend",
    "suspension_rp2", "vertex_kinds",
]
