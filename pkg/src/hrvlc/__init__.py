"""Joint uplink-downlink rate optimization for an indoor hybrid RF/VLC link."""

from .harvest_uplink import (
    HarvestConstants,
    UplinkRate,
    harvest_constants,
    harvested_energy,
    rician_pdf,
    sample_rician,
    uplink_budget,
    uplink_rate,
    uplink_snr,
)
from .objective import (
    ObjectiveEval,
    ReducedCoefficients,
    rate_derivative,
    rate_second_derivative,
    reduce_coefficients,
    total_rate,
)
from .optimizer import (
    KktPoint,
    OptResult,
    grid_oracle,
    solve_closed_form,
    solve_iterative,
    stationary_alpha,
)
from .scenario import (
    MobileTerminal,
    Point3,
    Scenario,
    SystemParams,
    VlcAp,
    associate,
    link_geometry,
    load_scenario,
)
from .vlc_channel import (
    ChannelGain,
    DownlinkRate,
    channel_gain,
    concentrator_gain,
    downlink_rate,
    lambertian_order,
)

__version__ = "0.1.0"
