"""Special functions used by the eigenfunction formulas.

Everything here is real-valued and limited to what the solvers need: Jacobi
polynomials P_n^(a,b) on [-1, 1], the terminating Gauss hypergeometric series
2F1(-n, b; c; s), and ln Gamma.  Degrees stay small (tens at most), so the
three-term recurrence in the degree is the right evaluation scheme; closed
forms with factorials would overflow long before the recurrence loses
accuracy.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["JacobiParams", "log_gamma", "jacobi_eval", "hyp2f1_terminating"]


@dataclass(frozen=True)
class JacobiParams:
    """Exponents and degree of a Jacobi polynomial P_n^(a,b).

    Both exponents must exceed -1 so the orthogonality weight
    (1-x)^a (1+x)^b is integrable on [-1, 1].
    """

    a: float
    b: float
    n: int

    def __post_init__(self) -> None:
        if not self.a > -1.0:
            raise ValueError(f"Jacobi exponent a must be > -1, got {self.a}")
        if not self.b > -1.0:
            raise ValueError(f"Jacobi exponent b must be > -1, got {self.b}")
        if self.n < 0:
            raise ValueError(f"Jacobi degree n must be >= 0, got {self.n}")


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0.

    All Gamma-function ratios in the normalization constants are assembled in
    log space and exponentiated once; the arguments reach a few hundred for
    deep wells, where Gamma itself overflows.
    """
    if x <= 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def jacobi_eval(p: JacobiParams, x):
    """Evaluate P_n^(a,b)(x) on [-1, 1] via the three-term recurrence in n.

    Accepts a scalar or an ndarray for ``x``.  Arguments outside [-1, 1] are
    rejected: the polynomials continue analytically, but nothing in this
    package evaluates them off the orthogonality interval, and extrapolation
    there is a usage error.
    """
    xv = np.asarray(x, dtype=float)
    if np.any(np.abs(xv) > 1.0):
        raise ValueError("jacobi_eval argument must lie in [-1, 1]")
    a, b, n = p.a, p.b, p.n
    pk_minus = np.ones_like(xv)
    if n == 0:
        return float(pk_minus) if np.ndim(x) == 0 else pk_minus
    pk = (a + 1.0) + (a + b + 2.0) * (xv - 1.0) / 2.0
    for k in range(2, n + 1):
        # denominators never vanish for a, b > -1
        s = 2.0 * k + a + b
        c1 = 2.0 * k * (k + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (s * (s - 2.0) * xv + a * a - b * b)
        c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s
        pk_minus, pk = pk, (c2 * pk - c3 * pk_minus) / c1
    return float(pk) if np.ndim(x) == 0 else pk


def hyp2f1_terminating(n: int, b: float, c: float, s):
    """Terminating Gauss series 2F1(-n, b; c; s) for s in [0, 1).

    The first parameter -n truncates the series after n + 1 terms:

        sum_{k=0}^{n} (-n)_k (b)_k / ((c)_k k!) s^k.

    Each term is built from the previous one, so the Pochhammer products are
    never formed as separate large factors.  Accepts scalar or ndarray ``s``.
    """
    if n < 0:
        raise ValueError(f"series order n must be >= 0, got {n}")
    if c <= 0.0:
        if c == int(c) and c >= -n + 1:
            raise ValueError(
                f"2F1 pole: c = {c} is a non-positive integer hit by the series"
            )
        raise ValueError(f"hyp2f1_terminating requires c > 0, got {c}")
    sv = np.asarray(s, dtype=float)
    if np.any((sv < 0.0) | (sv >= 1.0)):
        raise ValueError("series argument s must lie in [0, 1)")
    total = np.ones_like(sv)
    term = np.ones_like(sv)
    for k in range(1, n + 1):
        term = term * sv * (-(n - k + 1.0)) * (b + k - 1.0) / ((c + k - 1.0) * k)
        total = total + term
    return float(total) if np.ndim(s) == 0 else total
