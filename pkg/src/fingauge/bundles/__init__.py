"""Bundles over finite groupoids, twisted Cech bundles and bibranes."""

from .bibranes import (
    Bibrane,
    FootMismatchError,
    InternalCategory,
    algebra_product,
    bibrane_fuse,
    bibrane_monoid_product,
    constant_bibrane,
    fiber_sizes,
    graded_convolution,
    graded_convolution_via_bibranes,
    graded_span,
    internal_category,
    monoid_unit,
    push_forward,
    unit_bibrane,
)
from .category import (
    CategoryAlgebra,
    CategoryError,
    FiniteCategory,
    category_algebra,
    category_from_group,
    category_from_monoid,
    disjoint_union,
    enumerate_monoids,
    interval_category,
    path_category,
    poset_category,
    random_category,
)
from .principal import (
    GroupRep,
    RepresentationError,
    VectorBundle,
    associated_bundle,
    character_rep,
    conjugate_cocycle,
    fiber_audit,
    identity_cocycle,
    invariant_dimension,
    principal_bundle,
    random_cocycle,
    refine,
    regular_rep,
    sections,
    sign_rep,
    trivial_cocycle,
    trivial_rep,
)
from .twisted import (
    CechGerbe,
    MonomialMatrix,
    TwistedBundle,
    TwistedBundleError,
    check_cech_cocycle,
    check_twisted_bundle,
    full_nerve,
    gauge,
    rank_one_candidates,
    twisted_bundle_from_json,
)
