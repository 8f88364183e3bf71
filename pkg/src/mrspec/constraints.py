"""Bound-state existence checks and the feasible quantum-number region.

A triple (potential, lam, n_r) supports a bound state exactly when

    sqrt_c(n_r) > 0      (potential deep enough at this n_r; for n_r = 0
                          this is A > 1/2 + lam + Lam), and
    eps^2(n_r)  > 0      (energy still negative once the lam * c0 term of
                          the improved centrifugal scheme is subtracted).

Both quantities strictly decrease with n_r, so the feasible n_r values form
a contiguous block 0..n_r_max.  Setting c0 = 0 removes the second
restriction entirely.  Boundary equalities count as infeasible: the
normalizable states need strict inequalities.
"""

from dataclasses import dataclass, field

from .angular import RingParams
from .radial import PotentialParams

__all__ = ["FeasibilityReport", "check_reality", "check_bound_state", "feasible_region"]


@dataclass(frozen=True)
class FeasibilityReport:
    """Outcome of the bound-state checks for one (params, lam, n_r).

    reality_ok refers to the angular sector; it is True whenever lam is
    supplied directly as a real number.  n_r_max is the largest radial node
    count passing every check at this lam (None when even n_r = 0 fails).
    """

    reality_ok: bool
    depth_ok: bool
    negativity_ok: bool
    n_r_max: int | None
    messages: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.reality_ok and self.depth_ok and self.negativity_ok


def check_reality(rp: RingParams) -> bool:
    """True iff the angular eigenvalue is real: (m^2 + beta')^2 >= beta^2.

    This is the exact pre-simplification condition.  The printed shortcut
    m^2 >= beta - beta' is weaker when beta + beta' + m^2 < 1, so it is not
    used here.
    """
    msq = float(rp.m * rp.m) + rp.beta_prime
    return msq * msq >= rp.beta * rp.beta


def _passes(pp: PotentialParams, lam: float, big_lambda: float, n_r: int):
    """(depth_ok, negativity_ok, sqrt_c, eps_sq) at one n_r, no exceptions."""
    denom = 2.0 * big_lambda + 1.0 + 2.0 * n_r
    sqrt_c = (
        pp.a_strength - lam - 0.5 - big_lambda * (1.0 + 2.0 * n_r) - n_r * (n_r + 1.0)
    ) / denom
    depth_ok = sqrt_c > 0.0
    eps_sq = sqrt_c * sqrt_c - lam * pp.c0
    negativity_ok = depth_ok and eps_sq > 0.0
    return depth_ok, negativity_ok, sqrt_c, eps_sq


def check_bound_state(pp: PotentialParams, lam: float, n_r: int) -> FeasibilityReport:
    """Report whether (pp, lam, n_r) yields a bound state; never raises.

    The three booleans are all True exactly when energy_level succeeds with
    E < 0 for the same inputs.
    """
    messages: list[str] = []
    shape = 0.25 + pp.alpha * (pp.alpha - 1.0) + lam
    if shape < 0.0:
        messages.append(
            f"shape parameter imaginary: 1/4 + alpha(alpha-1) + lam = {shape:.6g} < 0"
        )
        return FeasibilityReport(
            reality_ok=True, depth_ok=False, negativity_ok=False,
            n_r_max=None, messages=messages,
        )
    big_lambda = shape**0.5
    depth_ok, negativity_ok, sqrt_c, eps_sq = _passes(pp, lam, big_lambda, n_r)
    if not depth_ok:
        messages.append(
            f"well too shallow at n_r = {n_r}: requires "
            "A > lam + 1/2 + Lam (1 + 2 n_r) + n_r (n_r + 1), "
            f"got sqrt_c = {sqrt_c:.6g}"
        )
    elif not negativity_ok:
        messages.append(
            f"energy non-negative at n_r = {n_r}: "
            f"lam * c0 = {lam * pp.c0:.6g} >= sqrt_c^2 = {sqrt_c * sqrt_c:.6g}"
        )
    n_r_max: int | None = None
    k = 0
    while True:
        d_ok, n_ok, _, _ = _passes(pp, lam, big_lambda, k)
        if not (d_ok and n_ok):
            break
        n_r_max = k
        k += 1
    return FeasibilityReport(
        reality_ok=True,
        depth_ok=depth_ok,
        negativity_ok=negativity_ok,
        n_r_max=n_r_max,
        messages=messages,
    )


def feasible_region(
    pp: PotentialParams, l_max: float, n_r_max_scan: int
) -> list[tuple[int, int]]:
    """All feasible integer pairs (n_r, l) with l <= l_max, n_r <= n_r_max_scan.

    Integer l only, matching the quantum-number region plots; non-integer
    effective l is served by check_bound_state directly.
    """
    region: list[tuple[int, int]] = []
    for l in range(int(l_max) + 1):
        lam = float(l * (l + 1))
        for n_r in range(n_r_max_scan + 1):
            report = check_bound_state(pp, lam, n_r)
            if report.ok:
                region.append((n_r, l))
    return region
