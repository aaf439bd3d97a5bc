from .transgression import transgress, transgress_coboundary
from .algebra import (
    NonAssociativeError,
    TwistedLoopAlgebra,
    build_twisted_algebra,
    center_dimension,
    check_associativity,
    commuting_pair_orbits,
)
from .reps import (
    LoopRep,
    RepShapeError,
    TwistedFusionError,
    character_rho,
    characters_equal,
    convolve_characters,
    convolve_dimensions,
    direct_sum,
    fuse,
    induced_rep,
    is_twisted_rep,
    one_dimensional_reps,
    random_untwisted_rep,
    regular_isotypic_dimension,
    regular_rho,
    rep_character,
    subgroup_characters,
    unit_rep,
)
