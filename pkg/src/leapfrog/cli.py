"""Command-line front end.

Subcommands: simulate, fixed-points, bifurcation, classify, stability.

Configuration comes from a flat ``key = value`` file (``--config``) with
command-line flags taking precedence. Output is CSV (default) or a JSON array
of records with the same columns. Exit codes: 0 success, 2 configuration
error, 3 orbit divergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import Diverged, LeapfrogError, ParameterError
from .fixed_points import fixed_point_sweep, sweep_table
from .model import DiffSumState, ModelParams, from_diffsum, transform_params
from .orbits import OrbitConfig, bifurcation_sweep, iterate_orbit, parameter_grid, regime_grid
from .stability import classify_fixed_point, critical_elasticity, lyapunov_largest

SIG_DIGITS = 12

PARAM_KEYS = ("a", "b", "alpha", "beta", "c")
INT_KEYS = ("transient", "samples", "n_c")
FLOAT_KEYS = ("seed_x", "seed_y", "divergence_bound", "c_min", "c_max", "deadband")
STR_KEYS = ("format", "out")
KNOWN_KEYS = PARAM_KEYS + INT_KEYS + FLOAT_KEYS + STR_KEYS

SIMULATE_HEADER = ["n", "z", "w", "x", "y"]
FIXED_POINT_HEADER = ["c", "z0", "w0", "residual7a", "residual7b", "converged"]
BIFURCATION_HEADER = ["c", "sample_index", "z", "w", "period"]
REGIME_HEADER = ["a", "b", "alpha", "beta", "c", "label", "period", "min_w", "lyapunov"]
STABILITY_HEADER = [
    "c", "z0", "w0", "eig1_re", "eig1_im", "eig2_re", "eig2_im", "spectral_radius",
    "classification", "trace", "determinant", "c_c", "c_c_applicable", "lyapunov",
]


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    params: dict[str, list[float]]
    orbit: OrbitConfig
    c_range: tuple[float, float, int] | None = None
    deadband: float = 1e-9
    fmt: str = "csv"
    out: str | None = None

    def single(self, key: str) -> float:
        vals = self.params.get(key)
        if not vals:
            raise ConfigError(f"missing required parameter '{key}'")
        if len(vals) != 1:
            raise ConfigError(f"parameter '{key}' must be a single value for this command")
        return vals[0]

    def model(self, c: float | None = None) -> ModelParams:
        try:
            return ModelParams(
                self.single("a"), self.single("b"), self.single("alpha"), self.single("beta"),
                self.single("c") if c is None else c,
            )
        except ParameterError as exc:
            raise ConfigError(str(exc)) from None

    def c_values(self) -> list[float]:
        if self.c_range is not None:
            lo, hi, n = self.c_range
            return [float(v) for v in np.linspace(lo, hi, n)]
        vals = self.params.get("c")
        if not vals:
            raise ConfigError("need either c or c_min/c_max/n_c")
        return vals


def _read_config_file(path: str) -> dict[str, tuple[str, str]]:
    """Flat key/value file -> {key: (raw value, location)}; rejects unknown keys."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped or stripped.startswith("["):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line.strip()!r}")
        key, value = (s.strip() for s in stripped.split("=", 1))
        if key not in KNOWN_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key '{key}'")
        out[key] = (value, f"{path}:{lineno}")
    return out


def _parse_float(raw: str, where: str) -> float:
    try:
        v = float(raw)
    except ValueError:
        raise ConfigError(f"{where}: '{raw}' is not a number") from None
    if not math.isfinite(v):
        raise ConfigError(f"{where}: value must be finite")
    return v


def _parse_int(raw: str, where: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{where}: '{raw}' is not an integer") from None


def build_run_config(args: argparse.Namespace) -> RunConfig:
    raw: dict[str, tuple[str, str]] = {}
    if args.config:
        raw.update(_read_config_file(args.config))
    for key in KNOWN_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            raw[key] = (str(v), f"--{key.replace('_', '-')}")

    params = {}
    for key in PARAM_KEYS:
        if key in raw:
            value, where = raw[key]
            params[key] = [_parse_float(s.strip(), f"{where} ({key})") for s in value.split(",") if s.strip()]
    ints = {k: _parse_int(*raw[k]) for k in INT_KEYS if k in raw}
    floats = {k: _parse_float(raw[k][0], f"{raw[k][1]} ({k})") for k in FLOAT_KEYS if k in raw}

    c_keys = [k for k in ("c_min", "c_max", "n_c") if k in floats or k in ints]
    c_range = None
    if c_keys:
        if len(c_keys) != 3:
            raise ConfigError("c_min, c_max and n_c must be given together")
        c_range = (floats["c_min"], floats["c_max"], ints["n_c"])
        if not (c_range[0] < c_range[1] and c_range[2] >= 2):
            raise ConfigError("c range needs c_min < c_max and n_c >= 2")

    x0 = floats.get("seed_x", 0.1)
    y0 = floats.get("seed_y", 0.2)
    try:
        orbit = OrbitConfig(
            initial=DiffSumState(x0 - y0, x0 + y0),
            n_transient=ints.get("transient", 1000),
            n_sample=ints.get("samples", 500),
            divergence_bound=floats.get("divergence_bound", 1e12),
        )
    except ParameterError as exc:
        raise ConfigError(str(exc)) from None

    fmt = raw.get("format", ("csv", ""))[0]
    if fmt not in ("csv", "json"):
        raise ConfigError(f"format must be csv or json, got '{fmt}'")
    deadband = floats.get("deadband", 1e-9)
    if deadband <= 0:
        raise ConfigError("deadband must be positive")
    return RunConfig(params, orbit, c_range, deadband, fmt,
                     raw["out"][0] if "out" in raw else None)


def _fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), f".{SIG_DIGITS}g")
    return str(v)


def _json_cell(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return None if not math.isfinite(v) else float(format(v, f".{SIG_DIGITS}g"))
    return v


def render(header: list[str], records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{k: _json_cell(r[k]) for k in header} for r in records], indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for r in records:
        writer.writerow([_fmt_cell(r[k]) for k in header])
    return buf.getvalue()


def _period_cell(p) -> int | str:
    return "aperiodic" if p is None else p


def cmd_simulate(cfg: RunConfig, include_transient: bool = False) -> list[dict]:
    p = cfg.model()
    z, w = iterate_orbit(cfg.orbit, transform_params(p), include_transient=include_transient)
    first = 1 if include_transient else cfg.orbit.n_transient + 1
    records = []
    for i, (zi, wi) in enumerate(zip(z, w)):
        s = from_diffsum(DiffSumState(float(zi), float(wi)))
        records.append(dict(n=first + i, z=float(zi), w=float(wi), x=s.x, y=s.y))
    return records


def cmd_fixed_points(cfg: RunConfig) -> list[dict]:
    tp = transform_params(cfg.model(c=0.0))
    return sweep_table(fixed_point_sweep(tp, cfg.c_values()))


def cmd_bifurcation(cfg: RunConfig) -> list[dict]:
    if cfg.c_range is None:
        raise ConfigError("bifurcation needs c_min, c_max and n_c")
    tp = transform_params(cfg.model(c=0.0))
    records = []
    for row in bifurcation_sweep(tp, *cfg.c_range, cfg=cfg.orbit):
        if row.error is not None:
            records.append(dict(c=row.c, sample_index=None, z=None, w=None, period="diverged"))
            continue
        period = _period_cell(row.detected_period)
        for i, (zi, wi) in enumerate(zip(row.samples_z, row.samples_w)):
            records.append(dict(c=row.c, sample_index=i, z=float(zi), w=float(wi), period=period))
    return records


def cmd_classify(cfg: RunConfig) -> list[dict]:
    vals = {}
    for key in PARAM_KEYS:
        if key == "c" and cfg.c_range is not None:
            vals[key] = cfg.c_values()
        elif not cfg.params.get(key):
            raise ConfigError(f"missing required parameter '{key}'")
        else:
            vals[key] = cfg.params[key]
    cells = regime_grid(parameter_grid(**vals), cfg.orbit, deadband=cfg.deadband)
    records = []
    for cell in cells:
        rec = dict(cell.params)
        if cell.report is None:
            rec.update(label=f"error: {cell.error}", period=None, min_w=None, lyapunov=None)
        else:
            r = cell.report
            rec.update(label=r.label, period=_period_cell(r.period), min_w=r.min_w, lyapunov=r.lyapunov)
        records.append(rec)
    return records


def cmd_stability(cfg: RunConfig) -> list[dict]:
    tp0 = transform_params(cfg.model(c=0.0))
    try:
        c_c = critical_elasticity(tp0)
    except LeapfrogError:
        c_c = float("nan")
    records = []
    for row in fixed_point_sweep(tp0, cfg.c_values()):
        tp = tp0.with_c(row.c)
        try:
            lyap = lyapunov_largest(cfg.orbit.initial, tp, cfg.orbit.n_transient, 10000,
                                    cfg.orbit.divergence_bound)
        except Diverged:
            lyap = float("nan")
        base = dict(c=row.c, c_c=c_c, c_c_applicable=bool(c_c > 0), lyapunov=lyap)
        if row.error is not None:
            nan = float("nan")
            records.append(dict(base, z0=nan, w0=nan, eig1_re=nan, eig1_im=nan, eig2_re=nan,
                                eig2_im=nan, spectral_radius=nan, classification=row.error,
                                trace=nan, determinant=nan))
            continue
        for fp in row.points:
            try:
                rep = classify_fixed_point(fp, tp)
            except LeapfrogError:
                nan = float("nan")
                records.append(dict(base, z0=fp.z0, w0=fp.w0, eig1_re=nan, eig1_im=nan,
                                    eig2_re=nan, eig2_im=nan, spectral_radius=nan,
                                    classification="not-converged", trace=nan, determinant=nan))
                continue
            e1, e2 = rep.eigenvalues
            records.append(dict(base, z0=fp.z0, w0=fp.w0, eig1_re=e1.real, eig1_im=e1.imag,
                                eig2_re=e2.real, eig2_im=e2.imag,
                                spectral_radius=rep.spectral_radius,
                                classification=rep.classification, trace=rep.trace,
                                determinant=rep.determinant))
    return records


COMMANDS = {
    "simulate": (cmd_simulate, SIMULATE_HEADER),
    "fixed-points": (cmd_fixed_points, FIXED_POINT_HEADER),
    "bifurcation": (cmd_bifurcation, BIFURCATION_HEADER),
    "classify": (cmd_classify, REGIME_HEADER),
    "stability": (cmd_stability, STABILITY_HEADER),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--format", choices=("csv", "json"))
    for key in PARAM_KEYS:
        common.add_argument(f"--{key}", metavar="VALUE[,VALUE...]")
    common.add_argument("--transient", type=int)
    common.add_argument("--samples", type=int)
    common.add_argument("--seed-x", dest="seed_x", type=float)
    common.add_argument("--seed-y", dest="seed_y", type=float)
    common.add_argument("--c-min", dest="c_min", type=float)
    common.add_argument("--c-max", dest="c_max", type=float)
    common.add_argument("--n-c", dest="n_c", type=int)
    common.add_argument("--divergence-bound", dest="divergence_bound", type=float)
    common.add_argument("--deadband", type=float)

    parser = argparse.ArgumentParser(prog="leapfrog", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "simulate":
            sp.add_argument("--include-transient", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func, header = COMMANDS[args.command]
    try:
        cfg = build_run_config(args)
        if args.command == "simulate":
            records = func(cfg, include_transient=args.include_transient)
        else:
            records = func(cfg)
        text = render(header, records, cfg.fmt)
    except ConfigError as exc:
        print(f"leapfrog {args.command}: config error: {exc}", file=sys.stderr)
        return 2
    except Diverged as exc:
        print(f"leapfrog {args.command}: {exc}", file=sys.stderr)
        return 3

    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
