"""Quandle-coloring invariants of closed braids and bounds for torus-covering knots."""

from .bounds import BoundsReport, QuadraticForm, bounds_report, nu_vector, p_prime
from .braid import (
    BraidWord,
    Permutation,
    PowerBlockWord,
    closure_components,
    exponent_sums,
    full_twist,
    parse_blocks,
    parse_braid_word,
    permutation,
)
from .cocycle import f_p, shadow_invariant, shadow_multiset, theta, two_cocycle_invariant
from .errors import BraidSyntaxError, BudgetExceeded, HypothesisNotMet, PreconditionError
from .modp import MatrixModP, is_quadratic_residue, kernel_basis, pow_mod
from .multiset import InvariantMultiset, a0
from .quandle import ColoringSpace, DihedralQuandle, action_matrix, coloring_space, delta_order_check, fold
from .toruscover import TorusCoveringKnot, phi_direct, phi_power_block, phi_simplified

__version__ = "0.1.0"
