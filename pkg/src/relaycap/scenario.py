# relaycap/scenario.py

"""Physical description of the two-hop relay link and its budgets.

A :class:`Scenario` collects everything needed to evaluate either relaying
mode: antenna counts at source / relay / destination, transmit powers, noise
powers, the composite path losses of the two hops, the residual
self-interference model of the relay's full-duplex receiver, and Monte Carlo
settings.

All configuration enters in dB (powers relative to 1 W); every computation
here converts to linear watts first.  The residual self-interference left
after passive suppression (beta) and active cancellation (mu, lambda) grows
sublinearly with the relay transmit power:

    I(p) = p**(1 - lambda) / (beta * mu**lambda)

so at the relay the first hop sees an SINR that degrades as the relay
transmits harder (for lambda < 1), which is what makes relay power control
worthwhile in full-duplex operation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "ConfigError",
    "MonteCarloConfig",
    "Scenario",
    "SelfInterferenceModel",
    "db_to_linear",
    "linear_to_db",
    "load_scenario",
    "parse_scenario_text",
    "pathloss_db",
    "residual_self_interference",
    "sinr_relay",
    "snr_dest",
    "snr_relay",
]

#: Relative slack allowed when checking the relay power budget.
POWER_BUDGET_RTOL = 1e-9


class ConfigError(ValueError):
    """A scenario configuration file is malformed or out of range."""


def db_to_linear(x_db: float) -> float:
    """Convert a dB quantity to linear scale (power ratio)."""
    if not math.isfinite(x_db):
        raise ValueError(f"dB value must be finite, got {x_db!r}")
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    """Convert a strictly positive linear power ratio to dB."""
    if not (x > 0.0) or not math.isfinite(x):
        raise ValueError(f"linear value must be positive and finite, got {x!r}")
    return 10.0 * math.log10(x)


def pathloss_db(k_db: float, d: float, gamma: float) -> float:
    """Composite path loss K*d**gamma in dB for a hop of distance ``d``.

    ``k_db`` summarizes medium / frequency / antenna constants, ``gamma`` is
    the path-loss exponent.  Scenarios store only the composite value, so
    this helper is the one place the individual factors appear.
    """
    if not (d > 0.0):
        raise ValueError(f"distance must be positive, got {d!r}")
    return k_db + 10.0 * gamma * math.log10(d)


@dataclass(frozen=True)
class SelfInterferenceModel:
    """Residual self-interference after passive and active cancellation.

    ``lambda_`` in [0, 1] governs how the residual scales with transmit
    power (1 = fully power-independent residual), ``beta_db`` is the passive
    suppression, and ``mu_db`` scales the active-cancellation benefit.
    """

    lambda_: float
    beta_db: float
    mu_db: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.lambda_ <= 1.0):
            raise ValueError(f"si_lambda must be within [0, 1], got {self.lambda_!r}")
        if not math.isfinite(self.beta_db):
            raise ValueError(f"si_beta_db must be finite, got {self.beta_db!r}")
        if not math.isfinite(self.mu_db):
            raise ValueError(f"si_mu_db must be finite, got {self.mu_db!r}")

    @property
    def beta(self) -> float:
        return db_to_linear(self.beta_db)

    @property
    def mu(self) -> float:
        return db_to_linear(self.mu_db)


@dataclass(frozen=True)
class MonteCarloConfig:
    """Sample count and seed for the fading averages."""

    n_samples: int = 10_000
    seed: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.n_samples, int) or self.n_samples < 1:
            raise ValueError(f"mc_samples must be a positive integer, got {self.n_samples!r}")
        if not isinstance(self.seed, int) or not (0 <= self.seed < 2**64):
            raise ValueError(f"mc_seed must be an unsigned 64-bit integer, got {self.seed!r}")


@dataclass(frozen=True)
class Scenario:
    """Full experiment description for one relay link.

    ``n_r`` is the relay antenna count in half-duplex operation, which also
    fixes the relay's RF-chain budget at 2*n_r for the full-duplex resource
    accounting.
    """

    n_s: int
    n_r: int
    n_d: int
    p_s_db: float
    p_r_db: float
    noise_r_db: float
    noise_d_db: float
    pathloss_sr_db: float
    pathloss_rd_db: float
    si: SelfInterferenceModel
    mc: MonteCarloConfig = field(default_factory=MonteCarloConfig)

    def __post_init__(self) -> None:
        for name in ("n_s", "n_r", "n_d"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        for name in ("p_s_db", "p_r_db", "noise_r_db", "noise_d_db",
                     "pathloss_sr_db", "pathloss_rd_db"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")

    # Linear-unit views used by every rate computation.
    @property
    def p_s_w(self) -> float:
        return db_to_linear(self.p_s_db)

    @property
    def p_r_w(self) -> float:
        return db_to_linear(self.p_r_db)

    @property
    def noise_r_w(self) -> float:
        return db_to_linear(self.noise_r_db)

    @property
    def noise_d_w(self) -> float:
        return db_to_linear(self.noise_d_db)

    @property
    def pathloss_sr(self) -> float:
        return db_to_linear(self.pathloss_sr_db)

    @property
    def pathloss_rd(self) -> float:
        return db_to_linear(self.pathloss_rd_db)


def snr_relay(s: Scenario) -> float:
    """Average per-link SNR at the relay: P_S over path loss and noise."""
    return s.p_s_w / (s.pathloss_sr * s.noise_r_w)


def snr_dest(s: Scenario, p_tilde_w: float) -> float:
    """Average SNR at the destination when the relay transmits ``p_tilde_w`` watts.

    The relay may transmit below its budget (power control); anything above
    the budget is rejected.
    """
    budget = s.p_r_w
    if p_tilde_w < 0.0:
        raise ValueError(f"relay transmit power must be non-negative, got {p_tilde_w!r}")
    if p_tilde_w > budget * (1.0 + POWER_BUDGET_RTOL):
        raise ValueError(
            f"relay transmit power {p_tilde_w!r} W exceeds the budget {budget!r} W"
        )
    return p_tilde_w / (s.pathloss_rd * s.noise_d_w)


def residual_self_interference(model: SelfInterferenceModel, p_tilde_w: float) -> float:
    """Residual self-interference power per receive antenna, in watts.

    Evaluates p**(1-lambda) / (beta * mu**lambda) for transmit power ``p``.
    Strictly positive power is required; callers handle the p -> 0 limit.
    """
    if not (p_tilde_w > 0.0):
        raise ValueError(f"relay transmit power must be positive, got {p_tilde_w!r}")
    return p_tilde_w ** (1.0 - model.lambda_) / (model.beta * model.mu ** model.lambda_)


def sinr_relay(s: Scenario, p_tilde_w: float) -> float:
    """Average SINR at the relay while it transmits ``p_tilde_w`` watts.

    The residual self-interference is treated as additional Gaussian noise
    of power I(p) on each receive antenna, so it simply adds to the thermal
    noise in the denominator.  Always at most :func:`snr_relay`.
    """
    interference = residual_self_interference(s.si, p_tilde_w)
    return s.p_s_w / (s.pathloss_sr * (interference + s.noise_r_w))


# --------------------------------------------------------------------------
# Plain-text configuration files
# --------------------------------------------------------------------------

_INT_KEYS = ("n_s", "n_r", "n_d", "mc_samples", "mc_seed")
_FLOAT_KEYS = (
    "p_s_db", "p_r_db", "noise_r_db", "noise_d_db",
    "pathloss_sr_db", "pathloss_rd_db",
    "si_lambda", "si_beta_db", "si_mu_db",
)
_REQUIRED_KEYS = frozenset(_INT_KEYS[:3] + _FLOAT_KEYS)
_OPTIONAL_KEYS = frozenset(("mc_samples", "mc_seed"))
_ALL_KEYS = _REQUIRED_KEYS | _OPTIONAL_KEYS


def parse_scenario_text(text: str, source: str = "<config>") -> Scenario:
    """Parse ``key = value`` lines into a :class:`Scenario`.

    One setting per line; ``#`` starts a comment.  Unknown keys are errors,
    the ``mc_*`` keys are optional and default to 10000 samples / seed 0.
    Every error message names the offending key and line.
    """
    values: dict[str, int | float] = {}
    lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value_str = (part.strip() for part in line.partition("="))
        if not sep or not key or not value_str:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        if key not in _ALL_KEYS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in lines:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r} (first set on line {lines[key]})")
        try:
            values[key] = int(value_str) if key in _INT_KEYS else float(value_str)
        except ValueError:
            kind = "an integer" if key in _INT_KEYS else "a number"
            raise ConfigError(f"{source}:{lineno}: {key} must be {kind}, got {value_str!r}") from None
        lines[key] = lineno

    missing = sorted(_REQUIRED_KEYS - values.keys())
    if missing:
        raise ConfigError(f"{source}: missing required keys: {', '.join(missing)}")

    mc_kwargs = {}
    if "mc_samples" in values:
        mc_kwargs["n_samples"] = values["mc_samples"]
    if "mc_seed" in values:
        mc_kwargs["seed"] = values["mc_seed"]

    try:
        return Scenario(
            n_s=values["n_s"],
            n_r=values["n_r"],
            n_d=values["n_d"],
            p_s_db=values["p_s_db"],
            p_r_db=values["p_r_db"],
            noise_r_db=values["noise_r_db"],
            noise_d_db=values["noise_d_db"],
            pathloss_sr_db=values["pathloss_sr_db"],
            pathloss_rd_db=values["pathloss_rd_db"],
            si=SelfInterferenceModel(
                lambda_=values["si_lambda"],
                beta_db=values["si_beta_db"],
                mu_db=values["si_mu_db"],
            ),
            mc=MonteCarloConfig(**mc_kwargs),
        )
    except ValueError as err:
        # Invariant messages start with the config key; attach its line.
        key = str(err).split(" ", 1)[0]
        where = f"{source}:{lines[key]}" if key in lines else source
        raise ConfigError(f"{where}: {err}") from err


def load_scenario(path: str | Path) -> Scenario:
    """Read a scenario from a plain-text configuration file."""
    path = Path(path)
    return parse_scenario_text(path.read_text(encoding="utf-8"), source=str(path))
