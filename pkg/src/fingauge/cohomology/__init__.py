from .cochains import (
    CocycleError,
    GroupCochain,
    cyclic_three_cocycle,
    differential,
    is_cocycle,
    is_three_cocycle,
    three_cocycle_defect,
)
from .bar import (
    BAR_GUARD,
    CocycleSolution,
    coboundary_matrix,
    cochain_basis,
    cohomology_order,
    group_homology,
    is_coboundary,
    normalize_cocycle,
    solve_cocycles,
)
