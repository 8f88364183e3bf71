"""Angular sector of the ring-shaped problem.

After substituting x = cos(theta), the polar equation reads

    Theta'' - 2x/(1-x^2) Theta'
        + [lam (1-x^2) - m^2 - (beta' + beta x)] / (1-x^2)^2 Theta = 0,

with ring strengths beta, beta' >= 0 and magnetic quantum number m.  The
quantization produces

    u    = sqrt((m^2 + beta')^2 - beta^2)
    zeta = sqrt((m^2 + beta' + u) / 2)
    lam  = (N + zeta)(N + zeta + 1),    l_eff = N + zeta,

so the effective orbital quantum number handed to the radial solver is in
general non-integer.  At beta = beta' = 0 everything collapses to the
associated-Legendre case: u = m^2, zeta = |m|, l_eff = N + |m|, and those
values come out exact in floating point (squares and halves of integers).

The eigenfunction is a weighted Jacobi polynomial,

    Theta_N(x) = C_N (1-x)^{(B+C)/2} (1+x)^{(B-C)/2} P_N^{(B+C, B-C)}(x),

with B = zeta, C = sqrt((m^2 + beta' - u)/2).  B and zeta are the same
quantity stored once, which keeps the two occurrences from drifting apart.
"""

import math
from dataclasses import dataclass

from .errors import ConstraintError
from .specfun import JacobiParams, jacobi_eval, log_gamma

__all__ = ["RingParams", "AngularSolution", "solve_angular", "angular_wavefunction"]


@dataclass(frozen=True)
class RingParams:
    """Inputs of the angular problem.

    beta and beta_prime are the dimensionless ring strengths (non-negative,
    following the sign convention of the bound-state analysis), m the
    magnetic quantum number, and N the number of polar nodes.  The reality
    condition (m^2 + beta')^2 >= beta^2 is *not* enforced here so that the
    feasibility checks can classify violating parameter sets; solve_angular
    raises on it.
    """

    beta: float
    beta_prime: float
    m: int
    N: int

    def __post_init__(self) -> None:
        if self.beta < 0.0 or self.beta_prime < 0.0:
            raise ValueError("ring strengths beta, beta_prime must be >= 0")
        if self.N < 0:
            raise ValueError(f"polar node count N must be >= 0, got {self.N}")


@dataclass(frozen=True)
class AngularSolution:
    """Derived angular quantities for one (beta, beta_prime, m, N)."""

    u: float
    zeta: float
    big_b: float
    big_c: float
    lam: float
    l_eff: float
    norm: float
    N: int


def solve_angular(rp: RingParams) -> AngularSolution:
    """Solve the polar eigenvalue problem for the given ring parameters.

    Raises ConstraintError when (m^2 + beta')^2 < beta^2, in which case u
    would be imaginary and no real angular spectrum exists.
    """
    msq = float(rp.m * rp.m) + rp.beta_prime
    disc = msq * msq - rp.beta * rp.beta
    if disc < 0.0:
        raise ConstraintError(
            "no real angular spectrum: requires (m^2 + beta')^2 >= beta^2, "
            f"got ({msq})^2 < ({rp.beta})^2"
        )
    u = math.sqrt(disc)
    zeta = math.sqrt((msq + u) / 2.0)
    big_c = math.sqrt(max((msq - u) / 2.0, 0.0))
    l_eff = rp.N + zeta
    lam = l_eff * (l_eff + 1.0)
    norm = _angular_norm(rp.N, zeta, big_c)
    return AngularSolution(
        u=u, zeta=zeta, big_b=zeta, big_c=big_c,
        lam=lam, l_eff=l_eff, norm=norm, N=rp.N,
    )


def _angular_norm(n: int, big_b: float, big_c: float) -> float:
    """Normalization constant from the Jacobi orthogonality relation:

        C_N = sqrt( (2N + 2B + 1) N! Gamma(N + 2B + 1)
                    / [2^(2B+1) Gamma(N + B + C + 1) Gamma(N + B - C + 1)] ).

    Assembled in log space; the Gamma arguments are all >= 1 here since
    B >= C >= 0.
    """
    ln = (
        math.log(2.0 * n + 2.0 * big_b + 1.0)
        + log_gamma(n + 1.0)
        + log_gamma(n + 2.0 * big_b + 1.0)
        - (2.0 * big_b + 1.0) * math.log(2.0)
        - log_gamma(n + big_b + big_c + 1.0)
        - log_gamma(n + big_b - big_c + 1.0)
    )
    return math.exp(0.5 * ln)


def angular_wavefunction(sol: AngularSolution, x):
    """Normalized polar eigenfunction Theta_N(x) for x in (-1, 1).

    Endpoints are excluded even though the exponents (B +/- C)/2 are
    non-negative; the open interval keeps the domain uniform with the
    quadrature and residual checks.  Accepts a scalar or an ndarray.
    """
    import numpy as np

    xv = np.asarray(x, dtype=float)
    if np.any(np.abs(xv) >= 1.0):
        raise ValueError("angular_wavefunction argument must lie in (-1, 1)")
    a = sol.big_b + sol.big_c
    b = sol.big_b - sol.big_c
    poly = jacobi_eval(JacobiParams(a=a, b=b, n=sol.N), xv)
    val = sol.norm * (1.0 - xv) ** (a / 2.0) * (1.0 + xv) ** (b / 2.0) * poly
    return float(val) if np.ndim(x) == 0 else val
