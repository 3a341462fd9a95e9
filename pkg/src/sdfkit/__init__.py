"""Exact toolkit for square-difference absorption in finite commutative rings.

Rings are dense index tables (zero pinned at index 0), so every predicate
here is decided by finite enumeration, and every classifier ships with an
oracle that rechecks it the slow way.
"""

from .backend import BACKEND, available_backends
from .errors import SdfkitError
from .ideals import (
    Ideal,
    MultSet,
    all_ideals,
    colon,
    ideal_from_generators,
    ideal_sum,
    intersect,
    is_comaximal,
    is_s_saturated,
    mult_closure,
    principal_ideal,
    product_ideal,
    proper_ideals,
    radical,
    saturate,
    unit_ideal,
    zero_ideal,
)
from .predicates import (
    Verdict,
    is_maximal,
    is_primary,
    is_prime,
    is_quasi_primary,
    is_quasi_sdf_absorbing,
    is_sdf_absorbing,
    is_sdf_absorbing_primary,
    remark_rr_agree,
    satisfies_condition_star,
    two_unit_equivalence,
)
from .ring_core import (
    Ring,
    RingHom,
    identity_hom,
    make_hom,
    make_product,
    make_quotient,
    make_zn,
    preimage_ideal,
    product_projections,
    reduction_hom,
)
from .constructions import (
    ModuleSpec,
    amalgamate,
    amalgamation_ideal,
    idealization_ideal,
    idealize,
    lift_IX,
    localize,
    localize_ideal,
    trunc_poly,
)
from .ringspec import parse_ring

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Ideal",
    "ModuleSpec",
    "MultSet",
    "Ring",
    "RingHom",
    "SdfkitError",
    "Verdict",
    "__version__",
    "all_ideals",
    "amalgamate",
    "amalgamation_ideal",
    "available_backends",
    "colon",
    "ideal_from_generators",
    "ideal_sum",
    "idealization_ideal",
    "idealize",
    "identity_hom",
    "intersect",
    "is_comaximal",
    "is_maximal",
    "is_primary",
    "is_prime",
    "is_quasi_primary",
    "is_quasi_sdf_absorbing",
    "is_s_saturated",
    "is_sdf_absorbing",
    "is_sdf_absorbing_primary",
    "lift_IX",
    "localize",
    "localize_ideal",
    "make_hom",
    "make_product",
    "make_quotient",
    "make_zn",
    "mult_closure",
    "parse_ring",
    "preimage_ideal",
    "principal_ideal",
    "product_ideal",
    "product_projections",
    "proper_ideals",
    "radical",
    "reduction_hom",
    "remark_rr_agree",
    "satisfies_condition_star",
    "saturate",
    "trunc_poly",
    "two_unit_equivalence",
    "unit_ideal",
    "zero_ideal",
]
