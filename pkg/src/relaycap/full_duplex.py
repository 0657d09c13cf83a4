# relaycap/full_duplex.py

"""Full-duplex decode-and-forward under residual self-interference.

The relay splits its hardware between simultaneous reception (r antennas)
and transmission (t antennas).  Two accounting rules tie t to r:

* antenna conserved:  the relay keeps its half-duplex antenna total, so
  t = n_r - r;
* RF-chain conserved: the relay keeps its 2*n_r up/down-converting chains.
  Each receive antenna consumes two of them (one down-conversion plus one
  up-conversion driving the analog canceller), leaving t = 2*(n_r - r)
  transmit antennas.

Both hops run all the time, but the first hop sees an SINR that degrades
with the relay transmit power, so besides the antenna split there is a
power-control knob: transmitting below budget protects the first hop.  On
fixed fading draws R_SR is nonincreasing and R_RD strictly increasing in
the power, so the max-min over power is the budget endpoint or the unique
crossing, and the antenna split is a small exhaustive enumeration.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .mimo_rate import EigenCacheBank, RateEstimate, ergodic_rate
from .optimize import DEFAULT_RATE_TOL, bisect_crossing
from .scenario import Scenario, sinr_relay, snr_dest

__all__ = [
    "DuplexKind",
    "FdOperatingPoint",
    "POWER_BRACKET_FLOOR",
    "fd_link_rates",
    "optimize_fd",
    "optimize_relay_power",
    "transmit_antennas",
]

#: Lower end of the power bisection bracket, as a fraction of the budget.
POWER_BRACKET_FLOOR = 1e-4


class DuplexKind(enum.Enum):
    """Resource accounting rule for the full-duplex antenna split."""

    ANTENNA_CONSERVED = "ac"
    RF_CHAIN_CONSERVED = "rc"


@dataclass(frozen=True)
class FdOperatingPoint:
    """Optimized antenna split and relay power with the rates achieved there."""

    kind: DuplexKind
    r: int
    t: int
    p_tilde_w: float
    rate: RateEstimate
    r_sr: RateEstimate
    r_rd: RateEstimate


def transmit_antennas(kind: DuplexKind, n_r: int, r: int) -> int:
    """Transmit antenna count left after assigning ``r`` antennas to receive."""
    if not (1 <= r <= n_r - 1):
        raise ValueError(
            f"receive antennas must satisfy 1 <= r <= n_r - 1, got r={r} with n_r={n_r}"
        )
    spare = n_r - r
    return spare if kind is DuplexKind.ANTENNA_CONSERVED else 2 * spare


def fd_link_rates(
    s: Scenario,
    kind: DuplexKind,
    r: int,
    p_tilde_w: float,
    caches: EigenCacheBank,
) -> tuple[RateEstimate, RateEstimate]:
    """Both hop rates with ``r`` receive antennas and relay power ``p_tilde_w``.

    Full-time operation: the first hop averages over an r x n_s channel at
    SINR_R / n_s per transmit antenna, the second over an n_d x t channel
    at SNR_D / t.
    """
    t = transmit_antennas(kind, s.n_r, r)
    r_sr = ergodic_rate(caches.get(r, s.n_s), sinr_relay(s, p_tilde_w) / s.n_s)
    r_rd = ergodic_rate(caches.get(s.n_d, t), snr_dest(s, p_tilde_w) / t)
    return r_sr, r_rd


def optimize_relay_power(
    s: Scenario,
    kind: DuplexKind,
    r: int,
    caches: EigenCacheBank,
    tol: float = DEFAULT_RATE_TOL,
) -> tuple[float, RateEstimate, RateEstimate]:
    """Maximize min(R_SR, R_RD) over the relay transmit power for fixed ``r``.

    Returns (power, r_sr, r_rd).  Full budget wins outright when the first
    hop is the bottleneck there, or when the residual self-interference is
    power-independent (lambda = 1) and backing off could never help it;
    otherwise the rates are equalized by bisection over
    [POWER_BRACKET_FLOOR * budget, budget].
    """
    budget = s.p_r_w

    def rates(p: float) -> tuple[RateEstimate, RateEstimate]:
        return fd_link_rates(s, kind, r, p, caches)

    if s.si.lambda_ == 1.0:
        p_star = budget
    else:
        r_sr_full, r_rd_full = rates(budget)
        if r_sr_full.mean_bits >= r_rd_full.mean_bits - tol:
            p_star = budget
        else:
            def diff(p: float) -> float:
                r_sr, r_rd = rates(p)
                return r_rd.mean_bits - r_sr.mean_bits  # nondecreasing in p

            p_star = bisect_crossing(diff, POWER_BRACKET_FLOOR * budget, budget, tol=tol)

    r_sr, r_rd = rates(p_star)
    return p_star, r_sr, r_rd


def optimize_fd(
    s: Scenario,
    kind: DuplexKind,
    caches: EigenCacheBank,
    tol: float = DEFAULT_RATE_TOL,
) -> FdOperatingPoint:
    """Maximize min(R_SR, R_RD) over the antenna split and relay power.

    Every feasible receive count r in [1, n_r - 1] is tried with its own
    power optimization; ties go to the smallest r.
    """
    if s.n_r < 2:
        raise ValueError(
            f"full-duplex operation needs n_r >= 2 so that 0 < r < n_r is feasible, got n_r={s.n_r}"
        )
    best: FdOperatingPoint | None = None
    for r in range(1, s.n_r):
        p_star, r_sr, r_rd = optimize_relay_power(s, kind, r, caches, tol=tol)
        rate = r_sr if r_sr.mean_bits <= r_rd.mean_bits else r_rd
        if best is None or rate.mean_bits > best.rate.mean_bits:
            best = FdOperatingPoint(
                kind=kind,
                r=r,
                t=transmit_antennas(kind, s.n_r, r),
                p_tilde_w=p_star,
                rate=rate,
                r_sr=r_sr,
                r_rd=r_rd,
            )
    assert best is not None
    return best
