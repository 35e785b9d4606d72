"""Exact construction and certification of regular nut graphs.

A nut graph has adjacency nullity one with a kernel eigenvector free of
zero entries. This package builds the relevant graph families
(circulants, cartesian products, explicit Cayley constructions), decides
the nut property in exact integer arithmetic, and returns
machine-checkable kernel certificates.
"""

from nutforge._core import (
    Graph,
    build_main_lemma,
    cartesian_product,
    caux_scan,
    cayley_family,
    charpoly,
    circulant,
    circulant_charpoly,
    circulant_is_nut,
    compute_ell,
    conjecture_check,
    connection_poly,
    cyclotomic,
    cyclotomic_factors,
    d_family,
    euler_phi,
    feasible,
    graph6_decode,
    graph6_encode,
    is_nut,
    is_prime,
    laurent_substitute,
    named_graph,
    named_graph_names,
    nullity_kernel,
    poly_gcd,
    product_is_nut,
)

__version__ = "1.0.0"

__all__ = [
    "Graph",
    "build_main_lemma",
    "cartesian_product",
    "caux_scan",
    "cayley_family",
    "charpoly",
    "circulant",
    "circulant_charpoly",
    "circulant_is_nut",
    "compute_ell",
    "conjecture_check",
    "connection_poly",
    "cyclotomic",
    "cyclotomic_factors",
    "d_family",
    "euler_phi",
    "feasible",
    "graph6_decode",
    "graph6_encode",
    "is_nut",
    "is_prime",
    "laurent_substitute",
    "named_graph",
    "named_graph_names",
    "nullity_kernel",
    "poly_gcd",
    "product_is_nut",
]
