# relaycap/mimo_rate.py

"""Rayleigh MIMO channel sampling and Monte Carlo ergodic rates.

The quantity everything below feeds on is E[log2 det(I + coef * H H*)] for
an i.i.d. circularly-symmetric complex Gaussian matrix H, evaluated by
sample averaging.  The instantaneous log-det depends on H only through the
eigenvalues of its Gram matrix, so fading draws are stored once per matrix
shape as an :class:`EigenSampleCache` and reused for every coefficient an
optimizer wants to try.  Reusing the same draws (common random numbers)
makes the rate a smooth, monotone function of the decision variable, which
is what lets the bisection optimizers work on noisy Monte Carlo estimates.

Reproducibility: fading draw ``i`` of a cache comes from its own Philox
stream keyed by (seed, rows, cols, i), so a cache's content depends only on
its key tuple, never on evaluation order or thread count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1

__all__ = [
    "EigenCacheBank",
    "EigenSampleCache",
    "RateEstimate",
    "build_eigen_cache",
    "ergodic_rate",
    "logdet_rate",
    "sample_channel",
    "siso_rayleigh_capacity_oracle",
]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_INV_LOG2 = 1.0 / math.log(2.0)
_LOG2_E = math.log2(math.e)


@dataclass(frozen=True)
class RateEstimate:
    """Sample mean of a rate in bits per channel use, with its standard error."""

    mean_bits: float
    std_err: float
    n_samples: int

    def scaled(self, factor: float) -> "RateEstimate":
        """Rate of the same samples scaled by a non-negative prefactor."""
        if factor < 0.0:
            raise ValueError(f"scale factor must be non-negative, got {factor!r}")
        return RateEstimate(self.mean_bits * factor, self.std_err * factor, self.n_samples)


@dataclass(frozen=True, eq=False)
class EigenSampleCache:
    """Frozen Gram-matrix eigenvalue draws for one channel shape.

    ``eigenvalues`` has shape (n_samples, min(rows, cols)); row ``i`` holds
    the eigenvalues of H_i H_i* (equivalently H_i* H_i) for fading draw i.
    Identical (rows, cols, seed, n_samples) keys always hold identical
    samples.
    """

    rows: int
    cols: int
    seed: int
    n_samples: int
    eigenvalues: np.ndarray

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.rows, self.cols, self.seed, self.n_samples)


def _draw_channel(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    # Real and imaginary parts each N(0, 1/2), so E|h_ij|^2 = 1.
    z = rng.standard_normal((2, rows, cols))
    return (z[0] + 1j * z[1]) * _INV_SQRT2


def sample_channel(rows: int, cols: int, rng_state) -> np.ndarray:
    """Draw one rows x cols Rayleigh-fading channel matrix.

    ``rng_state`` is anything accepted by :func:`numpy.random.default_rng`
    (a seed or an existing Generator); the same state always reproduces the
    same matrix.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"channel dimensions must be >= 1, got {rows}x{cols}")
    rng = np.random.default_rng(rng_state)
    return _draw_channel(rng, rows, cols)


def _gram_eigenvalues(mats: np.ndarray, rows: int, cols: int) -> np.ndarray:
    # Work on the smaller Gram matrix so rank deficiency costs nothing.
    if rows <= cols:
        gram = mats @ mats.conj().transpose(0, 2, 1)
    else:
        gram = mats.conj().transpose(0, 2, 1) @ mats
    ev = np.linalg.eigvalsh(gram)
    np.clip(ev, 0.0, None, out=ev)  # eigvalsh round-off can dip barely below 0
    return ev


def build_eigen_cache(rows: int, cols: int, seed: int, n_samples: int) -> EigenSampleCache:
    """Sample ``n_samples`` channels of one shape and cache their Gram eigenvalues.

    Draw ``i`` uses a Philox stream keyed by (seed, rows, cols, i), so the
    result is independent of iteration order and safe to rebuild anywhere.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"channel dimensions must be >= 1, got {rows}x{cols}")
    if n_samples < 1:
        raise ValueError(f"sample count must be >= 1, got {n_samples}")
    if not (0 <= seed < 2**64):
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")

    base = np.random.SeedSequence((seed, rows, cols)).generate_state(1, dtype=np.uint64)[0]
    key = np.empty(2, dtype=np.uint64)
    key[0] = base
    mats = np.empty((n_samples, rows, cols), dtype=np.complex128)
    for i in range(n_samples):
        key[1] = i
        rng = np.random.Generator(np.random.Philox(key=key))
        mats[i] = _draw_channel(rng, rows, cols)

    ev = _gram_eigenvalues(mats, rows, cols)
    ev.setflags(write=False)
    return EigenSampleCache(rows=rows, cols=cols, seed=seed, n_samples=n_samples, eigenvalues=ev)


def logdet_rate(h: np.ndarray, coef: float) -> float:
    """Instantaneous rate log2 det(I + coef * H H*) of one channel matrix."""
    h = np.asarray(h, dtype=np.complex128)
    if h.ndim != 2 or h.size == 0:
        raise ValueError(f"channel matrix must be 2-D and non-empty, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("channel matrix entries must be finite")
    if not (coef >= 0.0) or not math.isfinite(coef):
        raise ValueError(f"coefficient must be finite and >= 0, got {coef!r}")
    rows, cols = h.shape
    ev = _gram_eigenvalues(h[np.newaxis], rows, cols)[0]
    return float(np.log1p(coef * ev).sum() * _INV_LOG2)


def ergodic_rate(cache: EigenSampleCache, coef: float) -> RateEstimate:
    """Monte Carlo estimate of E[log2 det(I + coef * H H*)] over a cache."""
    if not (coef >= 0.0) or not math.isfinite(coef):
        raise ValueError(f"coefficient must be finite and >= 0, got {coef!r}")
    ev = cache.eigenvalues
    if ev.shape[0] < 1:
        raise ValueError("eigenvalue cache is empty")
    per_sample = np.log1p(coef * ev).sum(axis=1) * _INV_LOG2
    n = per_sample.shape[0]
    mean = float(per_sample.mean())
    std_err = float(per_sample.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return RateEstimate(mean_bits=mean, std_err=std_err, n_samples=n)


def siso_rayleigh_capacity_oracle(rho: float) -> float:
    """Exact E[log2(1 + rho*|h|^2)] for unit-mean exponential |h|^2.

    Closed form log2(e) * exp(1/rho) * E1(1/rho); for very small rho the
    exp overflows, so the asymptotic expansion of exp(x) E1(x) is used
    instead (relative error below 1e-10 at the switch point).
    """
    if not (rho > 0.0) or not math.isfinite(rho):
        raise ValueError(f"rho must be positive and finite, got {rho!r}")
    x = 1.0 / rho
    if x > 700.0:
        return _LOG2_E * (1.0 - (1.0 - (2.0 - 6.0 / x) / x) / x) / x
    return _LOG2_E * math.exp(x) * float(exp1(x))


class EigenCacheBank:
    """Lazily built, memoized eigenvalue caches sharing one seed and sample count.

    One bank per scenario keeps every optimizer and sweep point on common
    random numbers: asking twice for the same matrix shape returns the same
    immutable cache.
    """

    def __init__(self, seed: int, n_samples: int):
        self.seed = seed
        self.n_samples = n_samples
        self._caches: dict[tuple[int, int], EigenSampleCache] = {}

    @classmethod
    def for_scenario(cls, scenario) -> "EigenCacheBank":
        return cls(seed=scenario.mc.seed, n_samples=scenario.mc.n_samples)

    def get(self, rows: int, cols: int) -> EigenSampleCache:
        cache = self._caches.get((rows, cols))
        if cache is None:
            cache = build_eigen_cache(rows, cols, self.seed, self.n_samples)
            self._caches[(rows, cols)] = cache
        return cache
