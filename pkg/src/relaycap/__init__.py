# relaycap/__init__.py

"""Achievable rates and degrees of freedom for half- vs full-duplex MIMO relaying.

A two-hop decode-and-forward relay link is described by a
:class:`~relaycap.scenario.Scenario`; ergodic rates over Rayleigh fading
are estimated by Monte Carlo on cached channel draws, the time split
(half-duplex) or antenna split and relay power (full-duplex) are optimized
by rate equalization, and the high-SNR degrees of freedom are computed in
exact rational arithmetic.
"""

from .dof import (
    DofResult,
    dof_fd_closed_ac,
    dof_fd_closed_rc,
    dof_fd_generic,
    dof_hd_closed,
    dof_hd_generic,
)
from .full_duplex import (
    DuplexKind,
    FdOperatingPoint,
    fd_link_rates,
    optimize_fd,
    optimize_relay_power,
    transmit_antennas,
)
from .half_duplex import HdOperatingPoint, hd_link_rates, optimize_tau
from .mimo_rate import (
    EigenCacheBank,
    EigenSampleCache,
    RateEstimate,
    build_eigen_cache,
    ergodic_rate,
    logdet_rate,
    sample_channel,
    siso_rayleigh_capacity_oracle,
)
from .optimize import ConvergenceError
from .scenario import (
    ConfigError,
    MonteCarloConfig,
    Scenario,
    SelfInterferenceModel,
    db_to_linear,
    linear_to_db,
    load_scenario,
    pathloss_db,
    residual_self_interference,
    sinr_relay,
    snr_dest,
    snr_relay,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "ConvergenceError",
    "DofResult",
    "DuplexKind",
    "EigenCacheBank",
    "EigenSampleCache",
    "FdOperatingPoint",
    "HdOperatingPoint",
    "MonteCarloConfig",
    "RateEstimate",
    "Scenario",
    "SelfInterferenceModel",
    "build_eigen_cache",
    "db_to_linear",
    "dof_fd_closed_ac",
    "dof_fd_closed_rc",
    "dof_fd_generic",
    "dof_hd_closed",
    "dof_hd_generic",
    "ergodic_rate",
    "fd_link_rates",
    "hd_link_rates",
    "linear_to_db",
    "load_scenario",
    "logdet_rate",
    "optimize_fd",
    "optimize_relay_power",
    "optimize_tau",
    "pathloss_db",
    "residual_self_interference",
    "sample_channel",
    "sinr_relay",
    "siso_rayleigh_capacity_oracle",
    "snr_dest",
    "snr_relay",
    "transmit_antennas",
]
