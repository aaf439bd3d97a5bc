from .group import (
    BUILTIN_GROUPS,
    FiniteGroup,
    GroupError,
    abelianization_order,
    builtin_group,
    conjugacy_data,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_from_permutations,
    group_from_table,
    quaternion_group,
    symmetric_group,
)
from .groupoid import (
    FiniteGroupoid,
    GroupoidError,
    GroupoidFunctor,
    Pullback,
    action_groupoid,
    codiscrete_groupoid,
    delooping,
    discrete_groupoid,
    fiber,
    groupoid_cardinality,
    homotopy_pullback,
    identity_functor,
    loop_groupoid,
    point_groupoid,
    point_inclusion,
    product_groupoid,
    pullback,
    same_groupoid,
    universal_bundle,
)
from .iso import are_isomorphic, find_isomorphism
from .mapping import DEFAULT_CAP, FreeShape, SizeGuardError, enumerate_functors, loop_shape, mapping_groupoid
