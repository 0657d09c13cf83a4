# relaycap/half_duplex.py

"""Half-duplex decode-and-forward: rates over a time split and its optimum.

The relay listens for a fraction ``tau`` of the time and transmits for the
rest.  Bursty operation lets each hop concentrate its average power into
its own slot, which is where the 1/tau and 1/(1-tau) factors inside the
log-det come from:

    R_SR(tau) = tau     * E[log2 det(I + SNR_R / (tau * n_s)     * H H*)]
    R_RD(tau) = (1-tau) * E[log2 det(I + SNR_D / ((1-tau) * n_r) * G G*)]

R_SR grows with tau from 0 and R_RD falls to 0 at tau = 1, so the max-min
over tau sits at their unique crossing, found by bisection on fixed fading
draws.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mimo_rate import EigenCacheBank, RateEstimate, ergodic_rate
from .optimize import DEFAULT_RATE_TOL, bisect_crossing
from .scenario import Scenario, snr_dest, snr_relay

__all__ = ["HdOperatingPoint", "TAU_MARGIN", "hd_link_rates", "optimize_tau"]

#: The search interval is clipped to [TAU_MARGIN, 1 - TAU_MARGIN]; both
#: end-to-end rates vanish at the endpoints so the optimum is interior.
TAU_MARGIN = 1e-4


@dataclass(frozen=True)
class HdOperatingPoint:
    """Optimized time split with the rates achieved there."""

    tau: float
    rate: RateEstimate
    r_sr: RateEstimate
    r_rd: RateEstimate


def hd_link_rates(
    s: Scenario, tau: float, caches: EigenCacheBank
) -> tuple[RateEstimate, RateEstimate]:
    """Both hop rates at time split ``tau``, on the bank's fading draws."""
    if not (0.0 < tau < 1.0):
        raise ValueError(f"tau must lie strictly inside (0, 1), got {tau!r}")
    cache_sr = caches.get(s.n_r, s.n_s)
    cache_rd = caches.get(s.n_d, s.n_r)
    r_sr = ergodic_rate(cache_sr, snr_relay(s) / (tau * s.n_s)).scaled(tau)
    r_rd = ergodic_rate(cache_rd, snr_dest(s, s.p_r_w) / ((1.0 - tau) * s.n_r)).scaled(1.0 - tau)
    return r_sr, r_rd


def optimize_tau(
    s: Scenario, caches: EigenCacheBank, tol: float = DEFAULT_RATE_TOL
) -> HdOperatingPoint:
    """Maximize min(R_SR, R_RD) over the time split.

    Bisects on R_SR(tau) - R_RD(tau), which is strictly increasing on fixed
    draws, until the two rates agree within ``tol`` bits.
    """

    def diff(tau: float) -> float:
        r_sr, r_rd = hd_link_rates(s, tau, caches)
        return r_sr.mean_bits - r_rd.mean_bits

    tau = bisect_crossing(diff, TAU_MARGIN, 1.0 - TAU_MARGIN, tol=tol)
    r_sr, r_rd = hd_link_rates(s, tau, caches)
    rate = r_sr if r_sr.mean_bits <= r_rd.mean_bits else r_rd
    return HdOperatingPoint(tau=tau, rate=rate, r_sr=r_sr, r_rd=r_rd)
