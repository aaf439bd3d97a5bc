from .phase import Phase, ZERO, phase_add, phase_sum, common_order
from .cyclotomic import Cyclotomic, cyclotomic_polynomial, euler_phi, phase_to_cyclotomic, phase_weight_sum
from .linalg import CycMatrix, block_diagonal, nullspace, rank, row_reduce
from .snf import (
    ModSolution,
    SNFResult,
    invariant_factors,
    smith_normal_form,
    solve_inhomogeneous_mod,
    solve_linear_mod,
)
