# relaycap/optimize.py

"""Bisection on the difference of two monotone rate curves.

Both relaying modes reduce their max-min problem to finding where a
nondecreasing curve crosses a nonincreasing one; at the crossing the two
rates are equal and the min is maximized.  On fixed fading draws the
difference is monotone, so plain bisection is exact and deterministic.
"""

from __future__ import annotations

from typing import Callable

__all__ = ["ConvergenceError", "bisect_crossing", "DEFAULT_RATE_TOL", "MAX_BISECT_ITER"]

DEFAULT_RATE_TOL = 1e-6
MAX_BISECT_ITER = 200


class ConvergenceError(RuntimeError):
    """An equalization search failed to reach its tolerance within the cap."""


def bisect_crossing(
    diff: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = DEFAULT_RATE_TOL,
    max_iter: int = MAX_BISECT_ITER,
) -> float:
    """Locate the zero of a nondecreasing difference ``diff`` on [lo, hi].

    Returns a point where |diff| <= tol.  If the difference never changes
    sign inside the bracket the matching endpoint is returned (the crossing
    lies outside, so the max-min optimum sits on the boundary).
    """
    if not (tol > 0.0):
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    if not (lo < hi):
        raise ValueError(f"invalid bracket [{lo!r}, {hi!r}]")
    if diff(lo) >= 0.0:
        return lo
    if diff(hi) <= 0.0:
        return hi
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        d = diff(mid)
        if abs(d) <= tol:
            return mid
        if d > 0.0:
            hi = mid
        else:
            lo = mid
    raise ConvergenceError(
        f"rate equalization did not reach |diff| <= {tol} within {max_iter} bisection steps"
    )
