"""Solvers for max R(alpha) on [0, 1]: closed form, bisection, grid oracle.

R is concave with a strictly decreasing derivative whenever the harvest
coefficient d is positive, so the box-constrained maximization reduces to
clamping the unique stationary point.  The iterative route bisects the
derivative sign change instead; the grid oracle brute-forces the
objective and is kept deliberately independent of both.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DegenerateObjective
from .objective import LN2, downlink_log_term, rate_derivative, total_rate

DEFAULT_EPS = 1e-9
DEFAULT_MAX_ITER = 200


@dataclass(frozen=True)
class KktPoint:
    """Primal-dual certificate: dR/dalpha - lam + mu = 0, lam, mu >= 0.

    lam multiplies (alpha - 1) <= 0, mu multiplies -alpha <= 0.
    """

    alpha: float
    lam: float
    mu: float


@dataclass(frozen=True)
class OptResult:
    kkt: KktPoint
    rate: float                # R(alpha*) [bits/s]
    breakdown: object          # ObjectiveEval at alpha*
    trace: tuple = ()          # (iteration, alpha, bracket_width) per iterate

    @property
    def iterations(self):
        return len(self.trace)


def _derivative_free(coeffs, alpha):
    # same expression as rate_derivative but without the [0,1] domain check,
    # for analytic continuation slightly outside the box
    denom = coeffs.g + coeffs.d * (1.0 - alpha) + coeffs.e
    return downlink_log_term(coeffs) - (coeffs.b2 * coeffs.d / LN2) / denom


def stationary_alpha(coeffs):
    """Unconstrained root of dR/dalpha; may fall outside [0, 1].

    Raises DegenerateObjective when the objective is affine in alpha
    (d = 0) or the downlink term vanishes (a = 0), in which case the
    optimum sits on a boundary.
    """
    big_a = downlink_log_term(coeffs)
    if coeffs.d == 0.0 or big_a == 0.0:
        raise DegenerateObjective("no interior stationary point")
    return 1.0 + (coeffs.g + coeffs.e) / coeffs.d - coeffs.b2 / (big_a * LN2)


def _with_multipliers(coeffs, alpha):
    if alpha >= 1.0:
        return KktPoint(alpha=1.0, lam=max(0.0, rate_derivative(coeffs, 1.0)),
                        mu=0.0)
    if alpha <= 0.0:
        return KktPoint(alpha=0.0, lam=0.0,
                        mu=max(0.0, -rate_derivative(coeffs, 0.0)))
    return KktPoint(alpha=alpha, lam=0.0, mu=0.0)


def _finish(coeffs, kkt, trace=()):
    ev = total_rate(coeffs, kkt.alpha)
    return OptResult(kkt=kkt, rate=ev.total, breakdown=ev, trace=tuple(trace))


def solve_closed_form(coeffs):
    """Clamp of the stationary point, multipliers recovered at the bindings."""
    try:
        alpha = min(1.0, max(0.0, stationary_alpha(coeffs)))
    except DegenerateObjective:
        # affine objective: boundary chosen by the derivative sign;
        # a constant objective resolves to full decoding
        alpha = 1.0 if downlink_log_term(coeffs) > 0.0 or coeffs.d == 0.0 else 0.0
    return _finish(coeffs, _with_multipliers(coeffs, alpha))


def solve_iterative(coeffs, eps=DEFAULT_EPS, max_iter=DEFAULT_MAX_ITER):
    """Bisection on the strictly decreasing derivative over [0, 1].

    The trace records (iteration, midpoint, bracket width) per bisection
    step; boundary-binding instances return immediately with an empty
    trace.  A final Newton polish drives the stationarity residual of
    interior solutions to machine precision without touching the trace.
    """
    if eps <= 0:
        raise ValueError("eps must be > 0")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    deriv_at_zero = rate_derivative(coeffs, 0.0)
    if deriv_at_zero <= 0.0:
        # constant objective (d = 0, zero derivative) ties toward full decoding,
        # matching the closed-form tie rule
        alpha = 1.0 if deriv_at_zero == 0.0 and coeffs.d == 0.0 else 0.0
        return _finish(coeffs, _with_multipliers(coeffs, alpha))
    if rate_derivative(coeffs, 1.0) >= 0.0:
        return _finish(coeffs, _with_multipliers(coeffs, 1.0))

    lo, hi = 0.0, 1.0
    trace = []
    prev = None
    for iteration in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        if rate_derivative(coeffs, mid) > 0.0:
            lo = mid
        else:
            hi = mid
        trace.append((iteration, mid, hi - lo))
        if prev is not None and abs(mid - prev) <= eps:
            alpha = _newton_polish(coeffs, mid)
            return _finish(coeffs, _with_multipliers(coeffs, alpha), trace)
        prev = mid
    raise ConvergenceError(f"bisection did not converge in {max_iter} iterations")


def _newton_polish(coeffs, alpha, steps=2):
    # dR/dalpha is smooth and strictly decreasing here; a couple of Newton
    # steps from the bisection estimate land on the root to machine precision
    for _ in range(steps):
        denom = coeffs.g + coeffs.d * (1.0 - alpha) + coeffs.e
        slope = -(coeffs.b2 * coeffs.d * coeffs.d / LN2) / (denom * denom)
        if slope == 0.0:
            break
        step = _derivative_free(coeffs, alpha) / slope
        candidate = alpha - step
        if not 0.0 < candidate < 1.0:
            break
        alpha = candidate
    return alpha


def grid_oracle(coeffs, n_points):
    """Brute-force argmax of R over a uniform alpha grid (ties to smallest)."""
    if n_points < 2:
        raise ValueError("n_points must be >= 2")
    alphas = np.linspace(0.0, 1.0, n_points)
    values = total_rate(coeffs, alphas).total
    idx = int(np.argmax(values))
    return float(alphas[idx]), float(values[idx])
