"""Exact computations on the twelve variants of monoclinic-I martensite.

Strains, compatibility and distance tables, the cube symmetry groups, the
facets of the convex hull of the variants, and T3 configurations, all in
exact rational or real-algebraic arithmetic.
"""

from .errors import MonoclinicError
from .kernels import BACKEND
from .plane_cone import classify_plane
from .polytope import edge_facet_counts, enumerate_facets, lamination_equals_convex, smallest_face, verify_facet
from .strain import SymStrain, cof, det, inner, is_compatible, norm_sq
from .symmetry import Permutation, generate_group, is_symmetry, is_tuple_symmetry, orbit, rotation_action, s4, s4xc2
from .t3 import (
    continuum_t3,
    dual_pair_identities,
    enumerate_incompatible_triples,
    five_dim_witness,
    is_t3,
    level2_t3,
    solve_t3,
    solve_variant_t3,
    t3_nodes_checks,
    t3_skeleton,
)
from .variants import (
    LatticeParams,
    VariantSet,
    build_variants,
    compatibility_table,
    distance_table,
    functional_extremisers,
    material,
    material_names,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LatticeParams",
    "MonoclinicError",
    "Permutation",
    "SymStrain",
    "VariantSet",
    "build_variants",
    "classify_plane",
    "cof",
    "compatibility_table",
    "continuum_t3",
    "det",
    "distance_table",
    "dual_pair_identities",
    "edge_facet_counts",
    "enumerate_facets",
    "enumerate_incompatible_triples",
    "five_dim_witness",
    "functional_extremisers",
    "generate_group",
    "inner",
    "is_compatible",
    "is_symmetry",
    "is_t3",
    "is_tuple_symmetry",
    "lamination_equals_convex",
    "level2_t3",
    "material",
    "material_names",
    "norm_sq",
    "orbit",
    "rotation_action",
    "s4",
    "s4xc2",
    "smallest_face",
    "solve_t3",
    "solve_variant_t3",
    "t3_nodes_checks",
    "t3_skeleton",
    "verify_facet",
]
