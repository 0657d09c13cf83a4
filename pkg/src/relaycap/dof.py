# relaycap/dof.py

"""Degrees of freedom: high-SNR rate slopes of the two relaying modes.

With the relay power tied to the source power through an exponent c in
(0, 1] (relay SNR grows like the source SNR raised to c), each hop's rate
slope is its spatial multiplexing gain times its power exponent, and the
end-to-end slope is the min of the two.  Everything here is small exact
max-min algebra, done in rationals:

* half-duplex:   max over tau of min(tau * A, (1-tau) * B) with
  A = min(n_s, n_r), B = min(n_r, n_d); c = 1 is always optimal.
* full-duplex:   max over the antenna split r and the exponent c of
  min((1 - c*(1-lambda)) * A, c * B) with A = min(n_s, r), B = min(t, n_d).
  The first hop loses (1 - lambda) * c of its slope to residual
  self-interference, which is why c < 1 can win.

Closed forms exist for the symmetric n_s = n_d = N case, both built on the
balanced antenna split.  They are always achievable, but the generic
solver can strictly exceed either one when the relay array is the
bottleneck: receive antennas pay the interference exponent while transmit
antennas pay the power exponent, so for intermediate lambda an asymmetric
split can balance the hops better.  Callers comparing closed and generic
values should surface both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .full_duplex import DuplexKind, transmit_antennas

__all__ = [
    "DofResult",
    "dof_fd_closed_ac",
    "dof_fd_closed_rc",
    "dof_fd_generic",
    "dof_hd_closed",
    "dof_hd_generic",
]


@dataclass(frozen=True)
class DofResult:
    """A degrees-of-freedom value with the decision variables achieving it."""

    value: Fraction
    source: str  # "closed_form" or "generic"
    tau: Fraction | None = None  # half-duplex time split
    r: int | None = None  # full-duplex receive antennas
    c: Fraction | None = None  # full-duplex relay power exponent

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"DoF value must be non-negative, got {self.value!r}")
        if self.source not in ("closed_form", "generic"):
            raise ValueError(f"unknown source {self.source!r}")


def _check_antennas(**counts: int) -> None:
    for name, value in counts.items():
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value!r}")


def _as_lambda_fraction(lam) -> Fraction:
    """Exact rational view of the cancellation exponent.

    Floats convert exactly (every float is rational), strings like "1/4"
    or "0.25" parse as exact decimals/ratios.
    """
    value = Fraction(lam)
    if not (0 <= value <= 1):
        raise ValueError(f"lambda must be within [0, 1], got {lam!r}")
    return value


def dof_hd_closed(n_s: int, n_r: int, n_d: int) -> DofResult:
    """Half-duplex DoF by antenna-regime table lookup."""
    _check_antennas(n_s=n_s, n_r=n_r, n_d=n_d)
    if n_r <= min(n_s, n_d):
        tau = Fraction(1, 2)
        value = Fraction(n_r, 2)
    elif n_r >= max(n_s, n_d):
        tau = Fraction(n_d, n_d + n_s)
        value = Fraction(n_s * n_d, n_d + n_s)
    elif n_s <= n_r <= n_d:
        tau = Fraction(n_r, n_r + n_s)
        value = Fraction(n_r * n_s, n_r + n_s)
    else:  # n_d <= n_r <= n_s
        tau = Fraction(n_d, n_d + n_r)
        value = Fraction(n_r * n_d, n_r + n_d)
    return DofResult(value=value, source="closed_form", tau=tau)


def dof_hd_generic(n_s: int, n_r: int, n_d: int) -> DofResult:
    """Half-duplex DoF by direct max-min equalization.

    min(tau * A, (1 - tau) * B) with A = min(n_s, n_r), B = min(n_r, n_d)
    is maximized where the two slopes meet: tau = B / (A + B).  The power
    exponent c = 1 is always optimal in half-duplex, so it never appears.
    """
    _check_antennas(n_s=n_s, n_r=n_r, n_d=n_d)
    a = min(n_s, n_r)
    b = min(n_r, n_d)
    tau = Fraction(b, a + b)
    return DofResult(value=tau * a, source="generic", tau=tau)


def _fd_inner_optimum(a: int, b: int, lam: Fraction) -> tuple[Fraction, Fraction]:
    """Best (value, c) of min((1 - c*(1-lam)) * a, c * b) over c in (0, 1].

    The first term falls with c, the second rises, so equalizing them gives
    c = a / (b + a*(1-lam)); when that exceeds 1 the second term never
    catches up and c = 1 is optimal with value min(lam * a, b).
    """
    c = Fraction(a, b + a * (1 - lam))
    if c <= 1:
        return c * b, c
    return min(lam * a, Fraction(b)), Fraction(1)


def dof_fd_generic(n_s: int, n_r: int, n_d: int, lam, kind: DuplexKind) -> DofResult:
    """Full-duplex DoF by enumerating the antenna split.

    For each feasible r the inner optimum over the power exponent c is
    closed-form; ties over r go to the smallest r.  All arithmetic is
    exact in rationals.
    """
    _check_antennas(n_s=n_s, n_r=n_r, n_d=n_d)
    if n_r < 2:
        raise ValueError(
            f"full-duplex DoF needs n_r >= 2 so that 0 < r < n_r is feasible, got n_r={n_r}"
        )
    lam = _as_lambda_fraction(lam)
    best: DofResult | None = None
    for r in range(1, n_r):
        t = transmit_antennas(kind, n_r, r)
        a = min(n_s, r)
        b = min(t, n_d)
        value, c = _fd_inner_optimum(a, b, lam)
        if best is None or value > best.value:
            best = DofResult(value=value, source="generic", r=r, c=c)
    assert best is not None
    return best


def dof_fd_closed_ac(n: int, n_r: int, lam) -> Fraction:
    """Antenna-conserved closed form min(N, N_R/2) / (2 - lambda).

    Built on the balanced split r = n_r / 2 for the symmetric n_s = n_d = N
    case, so it needs an even relay array; odd n_r is rejected rather than
    extrapolated.  Exact whenever N <= n_r / 2 (and at lambda 0 or 1);
    otherwise a lower bound that the generic solver can strictly exceed
    with an asymmetric split.
    """
    _check_antennas(n=n, n_r=n_r)
    if n_r < 2 or n_r % 2 != 0:
        raise ValueError(f"the antenna-conserved closed form needs even n_r >= 2, got {n_r}")
    lam = _as_lambda_fraction(lam)
    return min(Fraction(n), Fraction(n_r, 2)) / (2 - lam)


def dof_fd_closed_rc(n: int, n_r: int, lam) -> Fraction:
    """RF-chain-conserved closed form min(N, floor(2*N_R/3)) / (2 - lambda).

    A lower bound: the generic solver can strictly exceed it for some
    antenna counts, so report both when comparing.
    """
    _check_antennas(n=n, n_r=n_r)
    if n_r < 2:
        raise ValueError(f"full-duplex DoF needs n_r >= 2, got {n_r}")
    lam = _as_lambda_fraction(lam)
    return min(Fraction(n), Fraction((2 * n_r) // 3)) / (2 - lam)
