"""Reduced scalar rate objective in the time-splitting factor alpha.

The joint rate collapses to

    R(alpha) = alpha*b1*log2(1 + a/(b+c)) + b2*log2(1 + ((1-alpha)*d + e)/g)

with eight nonnegative coefficients computed once per (scenario, terminal,
fading draw).  The first and second derivatives below are the exact
derivatives of that expression; the second is never positive, so R is
concave on [0, 1].
"""

import math
from dataclasses import dataclass

import numpy as np

from .harvest_uplink import harvest_constants
from .vlc_channel import channel_gain

LN2 = math.log(2.0)


@dataclass(frozen=True)
class ReducedCoefficients:
    a: float    # serving-AP received power P_T*G
    b: float    # integrated noise N0*B_v
    c: float    # power-weighted interference sum
    d: float    # serving harvest coefficient times |h|^2
    e: float    # interferer harvest coefficient times |h|^2
    g: float    # uplink noise-and-pathloss product T_u*N0*d^n
    b1: float   # VLC bandwidth
    b2: float   # RF bandwidth


@dataclass(frozen=True)
class ObjectiveEval:
    alpha: float
    total: float           # R(alpha) [bits/s]
    downlink_term: float   # alpha-weighted downlink contribution [bits/s]
    uplink_term: float     # uplink contribution at this alpha [bits/s]


def reduce_coefficients(scn, mt_index, serving_index, h_sq):
    """Collapse a scenario and one fading draw into the eight coefficients."""
    mt = scn.mts[mt_index]
    params = scn.params
    serving = scn.aps[serving_index]
    a = serving.power * channel_gain(serving, mt).value
    c = sum(ap.power * channel_gain(ap, mt).value
            for k, ap in enumerate(scn.aps) if k != serving_index)
    consts = harvest_constants(scn, mt_index, serving_index)
    return ReducedCoefficients(
        a=a,
        b=params.n0 * params.b_v,
        c=c,
        d=consts.k1 * h_sq,
        e=consts.k2 * h_sq,
        g=params.t_u * params.n0 * mt.rf_distance ** mt.pathloss_exp,
        b1=params.b_v,
        b2=params.b_r,
    )


def downlink_log_term(coeffs):
    """The alpha-independent downlink factor b1*log2(1 + a/(b+c))."""
    return coeffs.b1 * math.log2(1.0 + coeffs.a / (coeffs.b + coeffs.c))


def total_rate(coeffs, alpha):
    """Evaluate R(alpha); alpha may be a scalar or a numpy array."""
    _check_alpha(alpha)
    down = np.multiply(alpha, downlink_log_term(coeffs))
    up = coeffs.b2 * np.log2(
        1.0 + ((1.0 - np.asarray(alpha)) * coeffs.d + coeffs.e) / coeffs.g)
    if np.ndim(alpha) == 0:
        return ObjectiveEval(alpha=float(alpha), total=float(down + up),
                             downlink_term=float(down), uplink_term=float(up))
    return ObjectiveEval(alpha=np.asarray(alpha, dtype=float),
                         total=down + up, downlink_term=down, uplink_term=up)


def rate_derivative(coeffs, alpha):
    """dR/dalpha, exact."""
    _check_alpha(alpha)
    denom = coeffs.g + coeffs.d * (1.0 - alpha) + coeffs.e
    return downlink_log_term(coeffs) - (coeffs.b2 * coeffs.d / LN2) / denom


def rate_second_derivative(coeffs, alpha):
    """d2R/dalpha2, exact; never positive."""
    _check_alpha(alpha)
    denom = coeffs.g + coeffs.d * (1.0 - alpha) + coeffs.e
    return -(coeffs.b2 * coeffs.d * coeffs.d / LN2) / (denom * denom)


def _check_alpha(alpha):
    arr = np.asarray(alpha)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("alpha must be in [0, 1]")
