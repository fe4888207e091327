"""Lambertian LOS channel gain, downlink SINR and downlink rate."""

import math
from dataclasses import dataclass

from .scenario import link_geometry


@dataclass(frozen=True)
class ChannelGain:
    value: float
    in_fov: bool


@dataclass(frozen=True)
class DownlinkRate:
    sinr: float
    rate: float   # bits/s


def lambertian_order(half_angle):
    """Lambertian emission order m = -1/log2(cos(half_angle))."""
    if not 0 < half_angle < math.pi / 2:
        raise ValueError("half_angle must be in (0, pi/2)")
    return -1.0 / math.log2(math.cos(half_angle))


def concentrator_gain(n_c, fov):
    """Optical concentrator gain n_c^2 / sin^2(fov)."""
    if n_c < 1:
        raise ValueError("refractive index must be >= 1")
    if not 0 < fov <= math.pi / 2:
        raise ValueError("fov must be in (0, pi/2]")
    return n_c * n_c / math.sin(fov) ** 2


def channel_gain(ap, mt):
    """LOS Lambertian gain of an AP-to-MT link; zero outside the FOV."""
    d, cos_phi, cos_psi = link_geometry(ap, mt)
    if cos_psi < math.cos(mt.fov):
        return ChannelGain(0.0, False)
    m = lambertian_order(ap.half_angle)
    g = concentrator_gain(mt.refractive_index, mt.fov)
    value = ((m + 1.0) * mt.area * mt.responsivity * cos_phi ** m * cos_psi
             * mt.filter_gain * g) / (2.0 * math.pi * d * d)
    return ChannelGain(value, True)


def downlink_rate(scn, mt_index, serving_index):
    """Downlink SINR and rate for one MT served by one AP.

    Interference sums transmit-power-weighted gains of the other in-FOV
    APs; the noise floor is the PSD integrated over the VLC bandwidth.
    """
    mt = scn.mts[mt_index]
    params = scn.params
    serving = scn.aps[serving_index]
    signal = serving.power * channel_gain(serving, mt).value
    interference = 0.0
    for k, ap in enumerate(scn.aps):
        if k == serving_index:
            continue
        interference += ap.power * channel_gain(ap, mt).value
    sinr = signal / (params.n0 * params.b_v + interference)
    return DownlinkRate(sinr=sinr, rate=params.b_v * math.log2(1.0 + sinr))
