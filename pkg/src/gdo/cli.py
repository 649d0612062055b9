"""Command-line front end: JSON configs in, JSON/CSV artifacts out.

Exit codes: 0 every requested check passed, 1 a verification or range check
failed, 2 the input could not be understood.  GDO_LOG in {quiet, info, debug}
controls diagnostics on stderr; artifact bytes are deterministic for a given
configuration.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import os
import sys

from .config import dumps_canonical, load_config
from .errors import ConfigError, GdoError, LevelOutOfRangeError
from .interactions import check_pseudo_hermiticity_condition, default_condition_grid, metric_theta
from .models import ModelSpec, ground_state_structure, oscillator_preset, spin_flip
from .spectra import analytic_spinor, dirac_spectrum
from .verify import real_line_probe, spectrum_rows, verify_all

log = logging.getLogger("gdo")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2


def _setup_logging():
    level_name = os.environ.get("GDO_LOG", "quiet").lower()
    levels = {"quiet": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}
    if level_name not in levels:
        print(f"gdo: ignoring unknown GDO_LOG value {level_name!r}", file=sys.stderr)
        level_name = "quiet"
    logging.basicConfig(level=levels[level_name], format="%(levelname)s %(name)s: %(message)s")


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def cmd_check(config: RunConfig, args) -> int:
    theta = config.theta_override
    if theta is None:
        theta = metric_theta(config.interaction, config.constants)
    report = check_pseudo_hermiticity_condition(
        config.interaction,
        theta,
        default_condition_grid(config.interaction),
        config.constants,
        tol=config.tolerances.condition,
    )
    payload = {
        "theta_used": report.theta_used,
        "max_deviation": report.max_deviation,
        "tolerance": report.tolerance,
        "passed": report.passed,
        "worst_point": report.worst_point,
    }
    _emit(dumps_canonical(payload) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_spectrum(config: RunConfig, args) -> int:
    rows = spectrum_rows(config, numeric=args.numeric)
    _emit(dumps_canonical(rows) + "\n", args.out)
    if args.numeric:
        worst = max(
            row["deviation"] / max(1.0, abs(row["epsilon"])) for row in rows
        )
        if worst > config.tolerances.eigen_rel:
            log.warning("numeric spectrum deviates by %.3e (relative)", worst)
            return EXIT_FAILED
    return EXIT_OK


def cmd_wavefunction(config: RunConfig, args) -> int:
    layout = {"gdo": "GDO", "gajc": "GDO", "gjc": "GJC"}[args.model]
    sample = analytic_spinor(
        config.interaction, args.level, config.grid, config.constants, model=layout
    )
    lines = ["x,re_psi1,im_psi1,re_psi2,im_psi2"]
    x = config.grid.points
    for j in range(config.grid.n_points):
        lines.append(
            ",".join(
                (
                    _fmt(x[j]),
                    _fmt(sample.psi1[j].real),
                    _fmt(sample.psi1[j].imag),
                    _fmt(sample.psi2[j].real),
                    _fmt(sample.psi2[j].imag),
                )
            )
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(config: RunConfig, args) -> int:
    report = verify_all(config)
    payload = {
        "checks": [
            {
                "name": c.name,
                "measured": float(c.measured),
                "threshold": float(c.threshold),
                "passed": bool(c.passed),
            }
            for c in report.checks
        ],
        "overall": report.overall,
        "runtime_ms": report.runtime_ms,
    }
    if config.mode == "real_line" and config.interaction.kind == "cot":
        seeds = [row["epsilon"] for row in spectrum_rows(config)]
        payload["real_line_probes"] = real_line_probe(
            config.interaction, config.grid, config.constants, seeds, tol=config.tolerances.residual
        )
    _emit(dumps_canonical(payload) + "\n", args.out)
    for check in report.checks:
        log.info("%-24s measured=%.3e threshold=%.3e %s",
                 check.name, check.measured, check.threshold, "ok" if check.passed else "FAILED")
    return EXIT_OK if report.overall else EXIT_FAILED


def cmd_models(config: RunConfig, args) -> int:
    preset = oscillator_preset(config.interaction, config.constants)
    gjc = ModelSpec("gjc", preset.omega_coupling, preset.delta, config.interaction)
    payload = {"models": []}
    ok = True
    for ms in (preset, gjc):
        report = ground_state_structure(ms, config.grid, config.constants)
        flip = spin_flip(ms)
        payload["models"].append(
            {
                "kind": ms.kind,
                "dual_kind": flip.kind,
                "ground_energy": report.ground_energy,
                "singlet_spin": report.singlet_spin,
                "occupied_component": report.occupied_component,
                "rayleigh_quotient_re": float(report.rayleigh_quotient.real),
                "rayleigh_quotient_im": float(report.rayleigh_quotient.imag),
                "residual": report.residual,
            }
        )
        ok = ok and abs(abs(report.rayleigh_quotient) - ms.delta) <= config.tolerances.eigen_rel
    payload["passed"] = ok
    _emit(dumps_canonical(payload) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gdo",
        description="Generalized Dirac oscillator with complex couplings: checks, spectra, wavefunctions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("check", "conjugation-shift condition report"),
        ("spectrum", "analytic level table, optionally with the numeric column"),
        ("wavefunction", "two-component bound state as CSV"),
        ("verify", "full verification suite"),
        ("models", "two-level model ground-state reports"),
    ):
        cmd = sub.add_parser(name, help=helptext)
        cmd.add_argument("--config", required=True, help="path to a JSON run configuration")
        cmd.add_argument("--out", default=None, help="write the artifact here instead of stdout")
        if name == "spectrum":
            cmd.add_argument("--numeric", action="store_true", help="add the eigensolver column")
        if name == "wavefunction":
            cmd.add_argument("--level", type=int, default=-1, help="-1 for the singlet, k >= 1 for pairs")
            cmd.add_argument("--model", choices=("gdo", "gajc", "gjc"), default="gdo")
        if name == "verify":
            cmd.add_argument(
                "--mode",
                choices=("contour", "real_line"),
                default=None,
                help="override the configured numeric route for the cot family",
            )
    return parser


_HANDLERS = {
    "check": cmd_check,
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
    "models": cmd_models,
}


def main(argv=None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        if getattr(args, "mode", None):
            config = dataclasses.replace(config, mode=args.mode)
    except ConfigError as exc:
        print(f"gdo: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return _HANDLERS[args.command](config, args)
    except LevelOutOfRangeError as exc:
        print(f"gdo: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except ConfigError as exc:
        print(f"gdo: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except GdoError as exc:
        print(f"gdo: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
