"""Bound states of the Manning-Rosen potential plus a ring-shaped term.

Closed-form energy levels and normalized eigenfunctions for both the radial
and the polar sector, bound-state existence checks, and an independent
Numerov shooting oracle that re-derives every energy numerically.
"""

from .angular import AngularSolution, RingParams, angular_wavefunction, solve_angular
from .constraints import (
    FeasibilityReport,
    check_bound_state,
    check_reality,
    feasible_region,
)
from .errors import ConstraintError, GoldenDataError
from .oracle import (
    NumerovConfig,
    OracleResult,
    approximation_error_table,
    norm_quadrature,
    numerov_solve,
)
from .radial import (
    PotentialParams,
    RadialSolution,
    centrifugal_approx,
    centrifugal_exact,
    energy_level,
    normalization_constant,
    radial_wavefunction,
)
from .specfun import JacobiParams, hyp2f1_terminating, jacobi_eval, log_gamma

__version__ = "0.1.0"

__all__ = [
    "AngularSolution",
    "ConstraintError",
    "FeasibilityReport",
    "GoldenDataError",
    "JacobiParams",
    "NumerovConfig",
    "OracleResult",
    "PotentialParams",
    "RadialSolution",
    "RingParams",
    "angular_wavefunction",
    "approximation_error_table",
    "centrifugal_approx",
    "centrifugal_exact",
    "check_bound_state",
    "check_reality",
    "energy_level",
    "feasible_region",
    "hyp2f1_terminating",
    "jacobi_eval",
    "log_gamma",
    "norm_quadrature",
    "normalization_constant",
    "numerov_solve",
    "radial_wavefunction",
    "solve_angular",
]
