"""State sums, homomorphism counts, propagation and mapping-space transgression."""

from .mapping import (
    MappingCochain,
    as_group_cochain,
    as_loop_cochain,
    loop_values_agree,
    transgress_to_mapping_space,
)
from .presentation import (
    GroupPresentation,
    PresentationError,
    count_homs,
    dw_untwisted,
    evaluate_word,
    presentation_from_triangulation,
    torus3_presentation,
    trivial_presentation,
)
from .propagate import (
    Connection,
    Edge,
    cycle_graph,
    delta,
    matrix_power,
    propagate,
    propagate_by_matrix,
)
from .statesum import (
    NORMALIZATION,
    coloring_phase,
    count_flat_colorings,
    dw_state_sum,
    flat_colorings,
)
from .triangulation import (
    Triangulation3,
    TriangulationError,
    boundary_4simplex,
    pachner_1_4,
    torus3_kuhn,
)
