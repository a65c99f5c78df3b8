"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
Values are resolved as command-line flag, then ``--config`` file, then default.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import duality, fields, kinematics, pulse, report, verification, wavecheck
from .errors import PhotonFrameError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "beta": 0.0,
    "betas": "0,0.2,0.4,0.6,0.8",
    "amplitude": 1.0e4,
    "frequency": 1.0,
    "periods": 8,
    "phase0": 0.0,
    "points_per_wavelength": 256,
    "rule": "simpson",
    "h0": 1.0,
    "format": "csv",
    "output": None,
    "tolerance": 1e-6,
}
CASTS = {
    "beta": float,
    "betas": str,
    "amplitude": float,
    "frequency": float,
    "periods": int,
    "phase0": float,
    "points_per_wavelength": int,
    "rule": str,
    "h0": float,
    "format": str,
    "output": str,
    "tolerance": float,
}


class UsageError(Exception):
    pass


def read_config(path: str | Path) -> dict:
    """Parse a flat ``key = value`` file; ``#`` starts a comment.

    Keys are the long flag names with dashes or underscores.
    """
    values = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in CASTS:
            raise UsageError(f"{path}:{lineno}: unrecognised config line {raw!r}")
        try:
            values[key] = CASTS[key](value.strip())
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return values


def _resolve(args: argparse.Namespace) -> dict:
    settings = dict(DEFAULTS)
    if args.config:
        settings.update(read_config(args.config))
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def _parse_betas(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise UsageError(f"bad --betas list {text!r}") from exc


def _cli_boost(beta: float) -> kinematics.Boost:
    if not abs(beta) <= report.MAX_CLI_BETA:
        raise UsageError(f"--beta must satisfy |beta| <= {report.MAX_CLI_BETA}, got {beta!r}")
    return kinematics.make_boost(beta)


def _pulse_and_plan(s: dict) -> tuple[pulse.MonochromaticPulse, pulse.QuadraturePlan]:
    p = pulse.MonochromaticPulse(s["amplitude"], s["frequency"], s["periods"], s["phase0"])
    q = pulse.QuadraturePlan(s["points_per_wavelength"], s["rule"])
    return p, q


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return "" if value is None else str(value)


def render_record(record: dict, fmt: str) -> str:
    """One flat record as a csv header/value pair, a JSON object or a table."""
    if fmt == "json":
        return json.dumps(record, indent=2, allow_nan=False) + "\n"
    if fmt == "table":
        lines = []
        for key, value in record.items():
            shown = f"{value:.6g}" if isinstance(value, float) else _fmt(value)
            lines.append(f"{key:<24}{shown}")
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(record.keys())
    writer.writerow(_fmt(v) for v in record.values())
    return buf.getvalue()


def _emit(text: str, output: str | None) -> None:
    if output:
        try:
            Path(output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {output}: {exc}") from exc
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------

def cmd_doppler(s: dict) -> int:
    b = _cli_boost(s["beta"])
    d = kinematics.doppler_factor(b)
    record = {"beta": b.beta, "nu_ratio": d, "lam_ratio": d, "W_ratio": fields.energy_density_ratio(b)}
    _emit(render_record(record, s["format"]), s["output"])
    return EXIT_OK


def cmd_boost_field(s: dict, e_field, h_field) -> int:
    b = _cli_boost(s["beta"])
    if e_field is None and h_field is None:
        f = fields.plane_wave(s["amplitude"])
    else:
        f = fields.FieldState(e_field or (0.0, 0.0, 0.0), h_field or (0.0, 0.0, 0.0))
    g = fields.boost_fields(b, f)
    flux = fields.poynting(g)
    record = {"beta": b.beta}
    record.update({f"e_{c}": v for c, v in zip("xyz", g.e_field)})
    record.update({f"h_{c}": v for c, v in zip("xyz", g.h_field)})
    record.update({f"s_{c}": float(v) for c, v in zip("xyz", flux)})
    record["W"] = fields.energy_density(g)
    w_in = fields.energy_density(f)
    record["W_over_W_input"] = record["W"] / w_in if w_in else None
    _emit(render_record(record, s["format"]), s["output"])
    return EXIT_OK


def cmd_pulse_energy(s: dict, with_beta: bool) -> int:
    p, q = _pulse_and_plan(s)
    numeric = pulse.integrate_energy(p, q)
    closed = pulse.closed_form_energy(p)
    record = {
        "amplitude": p.amplitude,
        "nu": p.nu,
        "n_periods": p.n_periods,
        "energy_numeric": numeric,
        "energy_closed": closed,
        "rel_error": abs(numeric / closed - 1.0),
    }
    status = EXIT_OK
    if with_beta:
        rep = pulse.verify_energy_ratio(_cli_boost(s["beta"]), p, q)
        record.update(
            beta=s["beta"],
            energy_ratio_numeric=rep.numeric,
            energy_ratio_closed=rep.closed_form,
            ratio_rel_error=rep.rel_error,
            status="PASS" if rep.rel_error <= s["tolerance"] else "FAIL",
        )
        status = EXIT_OK if record["status"] == "PASS" else EXIT_FAIL
    _emit(render_record(record, s["format"]), s["output"])
    return status


def _sweep_config(s: dict) -> report.SweepConfig:
    p, q = _pulse_and_plan(s)
    return report.SweepConfig(
        betas=_parse_betas(s["betas"]), pulse=p, plan=q, h0=s["h0"],
        output_format=s["format"], tolerance=s["tolerance"],
    )


def cmd_sweep(s: dict) -> int:
    cfg = _sweep_config(s)
    rep = report.run_sweep(cfg)
    render = {"csv": report.to_csv, "json": report.to_json, "table": report.to_table}
    _emit(render[cfg.output_format](rep), s["output"])
    return EXIT_OK if rep.passed else EXIT_FAIL


def _read_samples(path: str) -> list[duality.FrequencyEnergySample]:
    """``nu`` and ``photon_energy`` columns from a CSV (e.g. a sweep report)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read samples {path}: {exc}") from exc
    block = text.partition("\n\n")[0]
    try:
        return [
            duality.FrequencyEnergySample(
                float(rec["nu"]), float(rec["photon_energy"]), float(rec.get("beta") or 0.0)
            )
            for rec in csv.DictReader(io.StringIO(block))
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: expected nu and photon_energy columns ({exc})") from exc


def cmd_fit(s: dict, samples_path: str | None) -> int:
    if samples_path:
        samples = _read_samples(samples_path)
    else:
        rep = report.run_sweep(_sweep_config(s))
        samples = [duality.FrequencyEnergySample(r.nu, r.photon_energy, r.beta) for r in rep.rows]
    fit = duality.fit_planck_constant(samples)
    ok = fit.max_rel_residual <= s["tolerance"]
    record = {
        "h_est": fit.h_est,
        "max_rel_residual": fit.max_rel_residual,
        "n_samples": fit.n_samples,
        "status": "PASS" if ok else "FAIL",
    }
    _emit(render_record(record, s["format"]), s["output"])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_wavecheck(args: argparse.Namespace, s: dict) -> int:
    prof = wavecheck.PROFILES[args.profile]
    omega = args.k if args.omega is None else args.omega
    g = wavecheck.Grid1D(0.0, 2 * math.pi, args.nx, 0.0, math.pi, args.nt)
    rep = wavecheck.convergence_order(prof, args.k, omega, g, args.levels)
    record = {"profile": prof.descriptor, "k": args.k, "omega": omega}
    record.update({f"residual_{i}": e for i, e in enumerate(rep.errors)})
    record["order"] = rep.order
    record["saturated"] = rep.saturated
    _emit(render_record(record, s["format"]), s["output"])
    return EXIT_OK


def cmd_verify(s: dict, seed: int) -> int:
    results = verification.run_verification(seed)
    lines = [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", s["output"])
    return EXIT_FAIL if failed else EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value file")
    common.add_argument("--format", choices=("csv", "json", "table"))
    common.add_argument("--output", help="write to this path instead of stdout")
    common.add_argument("--tolerance", type=float)

    pulse_opts = argparse.ArgumentParser(add_help=False)
    pulse_opts.add_argument("--amplitude", type=float)
    pulse_opts.add_argument("--frequency", type=float)
    pulse_opts.add_argument("--periods", type=int)
    pulse_opts.add_argument("--phase0", type=float)
    pulse_opts.add_argument("--points-per-wavelength", dest="points_per_wavelength", type=int)
    pulse_opts.add_argument("--rule", choices=("midpoint", "simpson"))

    sweep_opts = argparse.ArgumentParser(add_help=False)
    sweep_opts.add_argument("--betas", help="comma-separated frame velocities")
    sweep_opts.add_argument("--h0", type=float, help="constant used to seed the photon count")

    parser = argparse.ArgumentParser(
        prog="photonframe",
        description="Transform light pulses between inertial frames and check E proportional to nu.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("doppler", parents=[common], help="nu/nu', lam'/lam and W/W' for one beta")
    p.add_argument("--beta", type=float)

    p = sub.add_parser("boost-field", parents=[common, pulse_opts], help="transform E and H")
    p.add_argument("--beta", type=float)
    p.add_argument("--e-field", nargs=3, type=float, metavar=("EX", "EY", "EZ"))
    p.add_argument("--h-field", nargs=3, type=float, metavar=("HX", "HY", "HZ"))

    p = sub.add_parser("pulse-energy", parents=[common, pulse_opts], help="integrate a pulse's energy")
    p.add_argument("--beta", type=float, help="also compare E/E' with nu/nu'")

    sub.add_parser("sweep", parents=[common, pulse_opts, sweep_opts], help="full frame sweep report")

    p = sub.add_parser("fit", parents=[common, pulse_opts, sweep_opts], help="fit E = h nu")
    p.add_argument("--samples", help="CSV with nu and photon_energy columns")

    p = sub.add_parser("wavecheck", parents=[common], help="finite-difference wave equation check")
    p.add_argument("--profile", choices=sorted(wavecheck.PROFILES), default="sin")
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--omega", type=float, help="defaults to k")
    p.add_argument("--nx", type=int, default=128)
    p.add_argument("--nt", type=int, default=128)
    p.add_argument("--levels", type=int, default=4)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        s = _resolve(args)
        if args.command == "doppler":
            return cmd_doppler(s)
        if args.command == "boost-field":
            return cmd_boost_field(s, args.e_field, args.h_field)
        if args.command == "pulse-energy":
            return cmd_pulse_energy(s, args.beta is not None)
        if args.command == "sweep":
            return cmd_sweep(s)
        if args.command == "fit":
            return cmd_fit(s, args.samples)
        if args.command == "wavecheck":
            return cmd_wavecheck(args, s)
        return cmd_verify(s, args.seed)
    except (UsageError, PhotonFrameError) as exc:
        print(f"photonframe {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
