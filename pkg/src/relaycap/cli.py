# relaycap/cli.py

"""Command-line front end: single-point rates, sweeps, DoF queries, figure presets.

Subcommands:

* ``rate``    optimize one scenario in one mode and print the operating point;
* ``sweep``   sweep one axis (source power, relay power, lambda, or relay
  antennas) and write a CSV with one row per point, all points sharing the
  same fading draws so curves are comparable;
* ``dof``     print degrees of freedom (closed form, generic solver, or both);
* ``figure``  canned sweeps producing CSV datasets for the standard
  comparison plots (2: full-duplex power control; 3/4: duplexing modes over
  source/relay power for a grid of lambdas; 5: DoF over relay antennas).

Exit codes: 0 success, 2 configuration/usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path

from .dof import (
    DofResult,
    dof_fd_closed_ac,
    dof_fd_closed_rc,
    dof_fd_generic,
    dof_hd_closed,
    dof_hd_generic,
)
from .full_duplex import DuplexKind, fd_link_rates, optimize_fd
from .half_duplex import optimize_tau
from .mimo_rate import EigenCacheBank
from .optimize import ConvergenceError
from .scenario import ConfigError, MonteCarloConfig, Scenario, SelfInterferenceModel, load_scenario

__all__ = [
    "CsvDataset",
    "SweepSpec",
    "dof_query_lines",
    "main",
    "parse_config",
    "reproduce_figure",
    "run_sweep",
]

SWEEP_AXES = ("p_s_db", "p_r_db", "lambda", "n_r")
SWEEP_MODES = ("hd", "fd_ac", "fd_rc")
_KIND_BY_MODE = {"fd_ac": DuplexKind.ANTENNA_CONSERVED, "fd_rc": DuplexKind.RF_CHAIN_CONSERVED}

#: Lambda grid used by the figure 3 / figure 4 presets.
FIGURE_LAMBDA_GRID = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)


def parse_config(path: str | Path) -> Scenario:
    """Load a scenario configuration file (see :mod:`relaycap.scenario`)."""
    return load_scenario(path)


def _fmt(value) -> str:
    """Serialize one CSV cell; floats carry 12 significant digits."""
    if isinstance(value, bool):
        raise TypeError("boolean cells are not supported")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    return f"{float(value):.12g}"


@dataclass
class CsvDataset:
    """A rectangular table written as UTF-8, comma-separated, LF-terminated CSV."""

    header: list[str]
    rows: list[list]

    def append(self, row: list) -> None:
        if len(row) != len(self.header):
            raise ValueError(f"row arity {len(row)} does not match header arity {len(self.header)}")
        self.rows.append(row)

    def column(self, name: str) -> list:
        idx = self.header.index(name)
        return [row[idx] for row in self.rows]

    def to_csv(self) -> str:
        lines = [",".join(self.header)]
        lines.extend(",".join(_fmt(cell) for cell in row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def write(self, path: str | Path) -> Path:
        path = Path(path)
        path.write_bytes(self.to_csv().encode("utf-8"))
        return path


@dataclass(frozen=True)
class SweepSpec:
    """One swept axis plus the relaying modes to evaluate at each point."""

    axis: str
    start: float
    stop: float
    step: float
    modes: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.axis not in SWEEP_AXES:
            raise ValueError(f"unknown sweep axis {self.axis!r}; expected one of {SWEEP_AXES}")
        if not (self.start <= self.stop):
            raise ValueError(f"sweep range must satisfy start <= stop, got [{self.start}, {self.stop}]")
        if not (self.step > 0):
            raise ValueError(f"sweep step must be positive, got {self.step!r}")
        if not self.modes:
            raise ValueError("at least one mode is required")
        for mode in self.modes:
            if mode not in SWEEP_MODES:
                raise ValueError(f"unknown mode {mode!r}; expected a subset of {SWEEP_MODES}")
        if self.axis == "n_r":
            for v in (self.start, self.stop, self.step):
                if float(v) != int(v):
                    raise ValueError(f"n_r sweeps need integer bounds and step, got {v!r}")

    def values(self) -> list:
        count = int((self.stop - self.start) / self.step + 1e-9) + 1
        if self.axis == "n_r":
            return [int(self.start) + k * int(self.step) for k in range(count)]
        return [self.start + k * self.step for k in range(count)]


def _scenario_at(s: Scenario, axis: str, value) -> Scenario:
    if axis == "lambda":
        return replace(s, si=replace(s.si, lambda_=value))
    if axis == "n_r":
        return replace(s, n_r=int(value))
    return replace(s, **{axis: value})


def _mode_columns(mode: str) -> list[str]:
    if mode == "hd":
        return ["hd_rate_bits", "hd_std_err", "hd_tau"]
    return [f"{mode}_rate_bits", f"{mode}_std_err", f"{mode}_r", f"{mode}_p_tilde_w"]


def run_sweep(s: Scenario, spec: SweepSpec, caches: EigenCacheBank | None = None) -> CsvDataset:
    """Evaluate the requested modes along the axis, one CSV row per point.

    All points share one cache bank (common random numbers), so every
    column is a paired comparison across the sweep.  Failures are re-raised
    with the axis value attached.
    """
    if caches is None:
        caches = EigenCacheBank.for_scenario(s)
    header = [spec.axis]
    for mode in spec.modes:
        header.extend(_mode_columns(mode))
    dataset = CsvDataset(header=header, rows=[])

    for value in spec.values():
        try:
            point = _scenario_at(s, spec.axis, value)
            row: list = [value]
            for mode in spec.modes:
                if mode == "hd":
                    hd = optimize_tau(point, caches)
                    row.extend([hd.rate.mean_bits, hd.rate.std_err, hd.tau])
                else:
                    fd = optimize_fd(point, _KIND_BY_MODE[mode], caches)
                    row.extend([fd.rate.mean_bits, fd.rate.std_err, fd.r, fd.p_tilde_w])
        except (ValueError, ConvergenceError) as err:
            raise type(err)(f"sweep point {spec.axis}={_fmt(value)}: {err}") from err
        dataset.append(row)
    return dataset


# --------------------------------------------------------------------------
# Figure presets
# --------------------------------------------------------------------------

_POWER_SWEEP = (-10.0, 30.0, 1.0)
_FIG5_NR_RANGE = range(2, 17)
_FIG5_N = 4
_FIG5_LAMBDA = Fraction(1, 5)


def _figure_scenario(mc: MonteCarloConfig, lambda_: float = 0.2, p_s_db: float = 10.0,
                     p_r_db: float = 10.0) -> Scenario:
    return Scenario(
        n_s=1, n_r=2, n_d=1,
        p_s_db=p_s_db, p_r_db=p_r_db,
        noise_r_db=-50.0, noise_d_db=-50.0,
        pathloss_sr_db=50.0, pathloss_rd_db=50.0,
        si=SelfInterferenceModel(lambda_=lambda_, beta_db=38.0, mu_db=13.0),
        mc=mc,
    )


def _figure2(mc: MonteCarloConfig) -> CsvDataset:
    """Full-duplex link rates and end-to-end rate vs relay power budget.

    The no-power-control curve forces the relay to its full budget; the
    power-controlled curve optimizes the transmit power per point.
    """
    header = [
        "p_r_db",
        "r_sr_fd", "r_sr_fd_std_err",
        "r_rd_fd", "r_rd_fd_std_err",
        "r_fd_pc", "r_fd_pc_std_err", "r_fd_pc_r", "r_fd_pc_p_tilde_w",
        "r_fd_nopc", "r_fd_nopc_std_err",
    ]
    dataset = CsvDataset(header=header, rows=[])
    base = _figure_scenario(mc)
    caches = EigenCacheBank.for_scenario(base)
    start, stop, step = _POWER_SWEEP
    for k in range(int((stop - start) / step) + 1):
        p_r_db = start + k * step
        s = replace(base, p_r_db=p_r_db)
        r_sr, r_rd = fd_link_rates(s, DuplexKind.ANTENNA_CONSERVED, 1, s.p_r_w, caches)
        nopc = r_sr if r_sr.mean_bits <= r_rd.mean_bits else r_rd
        pc = optimize_fd(s, DuplexKind.ANTENNA_CONSERVED, caches)
        dataset.append([
            p_r_db,
            r_sr.mean_bits, r_sr.std_err,
            r_rd.mean_bits, r_rd.std_err,
            pc.rate.mean_bits, pc.rate.std_err, pc.r, pc.p_tilde_w,
            nopc.mean_bits, nopc.std_err,
        ])
    return dataset


def _figure_rate_comparison(mc: MonteCarloConfig, axis: str) -> dict[str, CsvDataset]:
    """Figures 3 / 4: all three modes over a power axis, one dataset per lambda."""
    start, stop, step = _POWER_SWEEP
    spec = SweepSpec(axis=axis, start=start, stop=stop, step=step, modes=("hd", "fd_ac", "fd_rc"))
    datasets: dict[str, CsvDataset] = {}
    caches: EigenCacheBank | None = None
    for lam in FIGURE_LAMBDA_GRID:
        s = _figure_scenario(mc, lambda_=lam)
        if caches is None:
            caches = EigenCacheBank.for_scenario(s)
        datasets[f"lambda_{lam:g}"] = run_sweep(s, spec, caches)
    return datasets


def _figure5() -> dict[str, CsvDataset]:
    """DoF of every mode vs relay antenna count for n_s = n_d = 4, lambda = 1/5."""
    hd = CsvDataset(header=["n_r", "dof", "tau"], rows=[])
    ac_closed = CsvDataset(header=["n_r", "dof"], rows=[])
    rc_closed = CsvDataset(header=["n_r", "dof"], rows=[])
    ac_generic = CsvDataset(header=["n_r", "dof", "r", "c"], rows=[])
    rc_generic = CsvDataset(header=["n_r", "dof", "r", "c"], rows=[])
    for n_r in _FIG5_NR_RANGE:
        hd_res = dof_hd_closed(_FIG5_N, n_r, _FIG5_N)
        hd.append([n_r, hd_res.value, hd_res.tau])
        if n_r % 2 == 0:
            ac_closed.append([n_r, dof_fd_closed_ac(_FIG5_N, n_r, _FIG5_LAMBDA)])
        rc_closed.append([n_r, dof_fd_closed_rc(_FIG5_N, n_r, _FIG5_LAMBDA)])
        for dataset, kind in ((ac_generic, DuplexKind.ANTENNA_CONSERVED),
                              (rc_generic, DuplexKind.RF_CHAIN_CONSERVED)):
            res = dof_fd_generic(_FIG5_N, n_r, _FIG5_N, _FIG5_LAMBDA, kind)
            dataset.append([n_r, res.value, res.r, res.c])
    return {
        "dof_hd": hd,
        "dof_fd_ac_closed": ac_closed,
        "dof_fd_rc_closed": rc_closed,
        "dof_fd_ac_generic": ac_generic,
        "dof_fd_rc_generic": rc_generic,
    }


def reproduce_figure(
    fig_id: int,
    out_dir: str | Path,
    n_samples: int | None = None,
    seed: int | None = None,
) -> list[Path]:
    """Write the CSV dataset(s) behind one comparison figure; returns the paths."""
    if fig_id not in (2, 3, 4, 5):
        raise ValueError(f"unknown figure id {fig_id!r}; expected 2, 3, 4, or 5")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    mc = MonteCarloConfig(
        n_samples=10_000 if n_samples is None else n_samples,
        seed=0 if seed is None else seed,
    )

    if fig_id == 2:
        named = {"fd_power_control": _figure2(mc)}
    elif fig_id == 3:
        named = _figure_rate_comparison(mc, axis="p_s_db")
    elif fig_id == 4:
        named = _figure_rate_comparison(mc, axis="p_r_db")
    else:
        named = _figure5()

    return [dataset.write(out_dir / f"fig{fig_id}_{name}.csv") for name, dataset in named.items()]


# --------------------------------------------------------------------------
# DoF queries
# --------------------------------------------------------------------------

def _fraction_text(value: Fraction) -> str:
    return f"{value} (= {float(value):.10g})" if value.denominator != 1 else str(value)


def dof_query_lines(n_s: int, n_r: int, n_d: int, lam, scenario: str, solver: str) -> list[str]:
    """Human and machine lines for one DoF query; flags closed/generic mismatches."""
    results: list[tuple[str, str, Fraction, DofResult | None]] = []
    if scenario == "hd":
        if solver in ("closed", "both"):
            res = dof_hd_closed(n_s, n_r, n_d)
            results.append(("closed", f"half-duplex closed-form: {res.value} (tau={res.tau})", res.value, res))
        if solver in ("generic", "both"):
            res = dof_hd_generic(n_s, n_r, n_d)
            results.append(("generic", f"half-duplex generic: {res.value} (tau={res.tau})", res.value, res))
    else:
        if lam is None:
            raise ValueError("full-duplex DoF needs --lambda")
        kind = DuplexKind.ANTENNA_CONSERVED if scenario == "ac" else DuplexKind.RF_CHAIN_CONSERVED
        label = "antenna-conserved" if scenario == "ac" else "RF-chain-conserved"
        if solver in ("closed", "both"):
            if n_s != n_d:
                raise ValueError(f"the {label} closed form needs n_s = n_d, got {n_s} and {n_d}")
            closed_fn = dof_fd_closed_ac if scenario == "ac" else dof_fd_closed_rc
            value = closed_fn(n_s, n_r, lam)
            results.append(("closed", f"full-duplex {label} closed-form: {_fraction_text(value)}", value, None))
        if solver in ("generic", "both"):
            res = dof_fd_generic(n_s, n_r, n_d, lam, kind)
            results.append((
                "generic",
                f"full-duplex {label} generic: {_fraction_text(res.value)} at r={res.r}, c={res.c}",
                res.value,
                res,
            ))

    lines = [text for _, text, _, _ in results]
    for which, _, value, res in results:
        machine = f"DOF scenario={scenario} solver={which} value={value} value_float={float(value):.12g}"
        if res is not None and res.tau is not None:
            machine += f" tau={res.tau}"
        if res is not None and res.r is not None:
            machine += f" r={res.r} c={res.c}"
        lines.append(machine)
    if len(results) == 2 and results[0][2] != results[1][2]:
        lines.append(
            f"DISCREPANCY: generic solver value {results[1][2]} differs from closed-form {results[0][2]}"
        )
    return lines


# --------------------------------------------------------------------------
# Argument parsing and dispatch
# --------------------------------------------------------------------------

def _cmd_rate(args: argparse.Namespace) -> int:
    s = parse_config(args.config)
    caches = EigenCacheBank.for_scenario(s)
    mode = args.mode.replace("-", "_")
    if mode == "hd":
        hd = optimize_tau(s, caches)
        print(
            f"mode=hd rate_bits={_fmt(hd.rate.mean_bits)} std_err={_fmt(hd.rate.std_err)}"
            f" n_samples={hd.rate.n_samples} tau={_fmt(hd.tau)}"
        )
    else:
        fd = optimize_fd(s, _KIND_BY_MODE[mode], caches)
        print(
            f"mode={args.mode} rate_bits={_fmt(fd.rate.mean_bits)} std_err={_fmt(fd.rate.std_err)}"
            f" n_samples={fd.rate.n_samples} r={fd.r} t={fd.t} p_tilde_w={_fmt(fd.p_tilde_w)}"
        )
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    s = parse_config(args.config)
    modes = tuple(m.strip().replace("-", "_") for m in args.modes.split(",") if m.strip())
    spec = SweepSpec(axis=args.axis, start=args.start, stop=args.stop, step=args.step, modes=modes)
    dataset = run_sweep(s, spec)
    path = dataset.write(args.out)
    if args.plot_stub:
        _write_plot_stub(path, dataset.header)
    print(f"wrote {len(dataset.rows)} rows to {path}")
    return 0


def _cmd_dof(args: argparse.Namespace) -> int:
    lam = Fraction(args.lam) if args.lam is not None else None
    for line in dof_query_lines(args.ns, args.nr, args.nd, lam, args.scenario, args.solver):
        print(line)
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    paths = reproduce_figure(args.id, args.out, n_samples=args.samples, seed=args.seed)
    for path in paths:
        if args.plot_stub:
            _write_plot_stub(path, CsvDataset(header=path.read_text().splitlines()[0].split(","), rows=[]).header)
        print(f"wrote {path}")
    return 0


def _write_plot_stub(csv_path: Path, header: list[str]) -> Path:
    """Drop a minimal matplotlib script next to a CSV for quick inspection."""
    stub = csv_path.with_suffix(".plot.py")
    y_cols = [c for c in header[1:] if not c.endswith("_std_err")]
    lines = [
        "import csv",
        "import matplotlib.pyplot as plt",
        "",
        f"with open({csv_path.name!r}) as fh:",
        "    rows = list(csv.DictReader(fh))",
        f"x = [float(row[{header[0]!r}]) for row in rows]",
        f"for column in {y_cols!r}:",
        "    plt.plot(x, [float(row[column]) for row in rows], label=column)",
        f"plt.xlabel({header[0]!r})",
        "plt.legend()",
        "plt.show()",
    ]
    stub.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return stub


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relaycap",
        description="Achievable rates and degrees of freedom for half- vs full-duplex MIMO relaying.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rate = sub.add_parser("rate", help="optimize one scenario in one mode")
    p_rate.add_argument("--config", required=True)
    p_rate.add_argument("--mode", required=True, choices=("hd", "fd-ac", "fd-rc"))
    p_rate.set_defaults(func=_cmd_rate)

    p_sweep = sub.add_parser("sweep", help="sweep one axis and write a CSV")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--axis", required=True, choices=SWEEP_AXES)
    p_sweep.add_argument("--from", dest="start", type=float, required=True)
    p_sweep.add_argument("--to", dest="stop", type=float, required=True)
    p_sweep.add_argument("--step", type=float, required=True)
    p_sweep.add_argument("--modes", required=True, help="comma-separated subset of hd,fd-ac,fd-rc")
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--plot-stub", action="store_true", help="also write a plotting script stub")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_dof = sub.add_parser("dof", help="degrees of freedom for one antenna configuration")
    p_dof.add_argument("--ns", type=int, required=True)
    p_dof.add_argument("--nr", type=int, required=True)
    p_dof.add_argument("--nd", type=int, required=True)
    p_dof.add_argument("--lambda", dest="lam", default=None,
                       help="cancellation exponent; accepts decimals or ratios like 1/4")
    p_dof.add_argument("--scenario", required=True, choices=("hd", "ac", "rc"))
    p_dof.add_argument("--solver", required=True, choices=("closed", "generic", "both"))
    p_dof.set_defaults(func=_cmd_dof)

    p_fig = sub.add_parser("figure", help="write the CSV datasets behind one comparison figure")
    p_fig.add_argument("--id", type=int, required=True, choices=(2, 3, 4, 5))
    p_fig.add_argument("--out", required=True)
    p_fig.add_argument("--samples", type=int, default=None)
    p_fig.add_argument("--seed", type=int, default=None)
    p_fig.add_argument("--plot-stub", action="store_true", help="also write plotting script stubs")
    p_fig.set_defaults(func=_cmd_figure)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConvergenceError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except (ConfigError, ValueError, OSError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
