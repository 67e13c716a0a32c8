"""Command-line surface: ``python -m app.cli <command> --config <path> [options]``.

Commands: equilibria, classify, simulate, sweep, hopf. Exit codes: 0 success,
2 config error, 3 domain / degenerate / infeasible parameters, 4 integrator
failure, 5 Hopf bracket without sign change.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

import structlog
from pydantic import ValidationError

from app.config import settings
from app.errors import ConfigError, ModelError
from app.logging_setup import configure_logging
from app.schemas.common import OutputFormat, SweepParameter
from app.schemas.parameters import StateVector
from app.schemas.run import ConfigFile, RunConfig, RunOptions
from app.services import export
from app.services.bifurcation import find_hopf, sweep
from app.services.dynamics import (
    DIMENSIONAL_HEADER,
    TRAJECTORY_HEADER,
    classify_asymptotics,
    default_initial_state,
    integrate,
    simulation_report,
    trajectory_rows,
)
from app.services.equilibria import equilibria_report
from app.services.model import resolve_parameters
from app.services.stability import classify
from app.storage import local as storage

logger = structlog.get_logger(__name__)

JSON_ONLY = {"equilibria", "classify", "hopf"}
DEFAULT_FORMAT = {
    "equilibria": OutputFormat.JSON,
    "classify": OutputFormat.JSON,
    "hopf": OutputFormat.JSON,
    "simulate": OutputFormat.CSV,
    "sweep": OutputFormat.CSV,
}


# ---------------------------------------------------------------------------
# Config resolution
# ---------------------------------------------------------------------------

def _option_overrides(args: argparse.Namespace) -> dict:
    overrides = {}
    for name in ("A", "t_end", "rel_tol", "abs_tol", "param", "lo", "hi", "n"):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    if getattr(args, "u0", None) is not None:
        overrides["u0"] = tuple(args.u0)
    if getattr(args, "dimensional", False):
        overrides["dimensional"] = True
    return overrides


def load_run_config(args: argparse.Namespace) -> RunConfig:
    """Merge the config file with command-line flags (flags win).

    Raises:
        ConfigError: Unreadable file, invalid blocks or options, unsupported format.
    """
    data = storage.read_json(Path(args.config))
    try:
        config = ConfigFile.model_validate(data)
        options = RunOptions.model_validate(
            {**config.options.model_dump(exclude_none=True), **_option_overrides(args)}
        )
    except ValidationError as exc:
        raise ConfigError(f"Invalid config {args.config}: {exc}") from exc

    fmt = OutputFormat(args.format) if args.format else DEFAULT_FORMAT[args.command]
    if args.command in JSON_ONLY and fmt is not OutputFormat.JSON:
        raise ConfigError(f"'{args.command}' only writes JSON")

    return RunConfig(
        command=args.command,
        parameters=config,
        options=options,
        out=Path(args.out) if args.out else None,
        format=fmt,
    )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_equilibria(cfg: RunConfig) -> None:
    p = resolve_parameters(cfg.parameters, cfg.options.A)
    storage.write_text(cfg.out, export.report_json(equilibria_report(p)))


def cmd_classify(cfg: RunConfig) -> None:
    p = resolve_parameters(cfg.parameters, cfg.options.A)
    storage.write_text(cfg.out, export.report_json(classify(p)))


def cmd_simulate(cfg: RunConfig) -> None:
    """Trajectory CSV at ``--out`` plus ``<stem>.verdict.json``; verdict only on stdout."""
    opts = cfg.options
    if opts.dimensional and cfg.parameters.raw is None:
        raise ConfigError("--dimensional needs a 'raw' parameter block")

    p = resolve_parameters(cfg.parameters, opts.A)
    u0 = StateVector(X=opts.u0[0], Y=opts.u0[1], Z=opts.u0[2]) if opts.u0 else default_initial_state(p)
    tr = integrate(
        p,
        u0,
        t_end=opts.t_end or settings.t_end,
        rel_tol=opts.rel_tol,
        abs_tol=opts.abs_tol,
    )
    verdict = classify_asymptotics(tr)

    if cfg.format is OutputFormat.JSON:
        report = simulation_report(tr, verdict, samples=tr.times.size)
        storage.write_text(cfg.out, export.report_json(report))
        return

    report = simulation_report(tr, verdict)
    if cfg.out is None:
        storage.write_text(None, export.report_json(report))
        return
    header = DIMENSIONAL_HEADER if opts.dimensional else TRAJECTORY_HEADER
    rows = trajectory_rows(tr, dimensional=opts.dimensional, raw=cfg.parameters.raw)
    storage.write_text(cfg.out, export.trajectory_csv(header, rows))
    storage.write_text(storage.verdict_path(cfg.out), export.report_json(report))


def cmd_sweep(cfg: RunConfig) -> None:
    opts = cfg.options
    if opts.lo is None or opts.hi is None or opts.n is None:
        raise ConfigError("sweep needs --lo, --hi and --n")
    p = resolve_parameters(cfg.parameters, opts.A)
    points = sweep(p, opts.param or SweepParameter.A, opts.lo, opts.hi, opts.n)
    if cfg.format is OutputFormat.JSON:
        storage.write_text(cfg.out, export.report_json(points))
    else:
        storage.write_text(cfg.out, export.sweep_csv(points))


def cmd_hopf(cfg: RunConfig) -> None:
    p = resolve_parameters(cfg.parameters, cfg.options.A)
    point = find_hopf(p, cfg.options.lo, cfg.options.hi)
    storage.write_text(cfg.out, export.report_json(point))


COMMANDS: dict[str, Callable[[RunConfig], None]] = {
    "equilibria": cmd_equilibria,
    "classify": cmd_classify,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "hopf": cmd_hopf,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="Parameter file (JSON)")
    common.add_argument("--out", help="Output path; stdout when omitted")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], help="Output format")
    common.add_argument("--A", type=float, help="Override the scaled half-saturation constant")
    common.add_argument("--log-level", default=None, help="Log level (default from settings)")

    parser = argparse.ArgumentParser(
        prog="python -m app.cli",
        description="Equilibria, stability classification, simulation and bifurcations "
        "of the two-genotype predator-prey model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("equilibria", parents=[common], help="F0, F1, F2 with feasibility and thresholds")
    sub.add_parser("classify", parents=[common], help="Routh-Hurwitz case classification along A")

    sim = sub.add_parser("simulate", parents=[common], help="Integrate and classify long-run behavior")
    sim.add_argument("--t-end", dest="t_end", type=float)
    sim.add_argument("--rel-tol", dest="rel_tol", type=float)
    sim.add_argument("--abs-tol", dest="abs_tol", type=float)
    sim.add_argument("--u0", nargs=3, type=float, metavar=("X", "Y", "Z"))
    sim.add_argument("--dimensional", action="store_true", help="Write tau,x,y,z instead of t,X,Y,Z")

    sw = sub.add_parser("sweep", parents=[common], help="Sweep A or B")
    sw.add_argument("--param", choices=[p.value for p in SweepParameter])
    sw.add_argument("--lo", type=float)
    sw.add_argument("--hi", type=float)
    sw.add_argument("--n", type=int)

    hp = sub.add_parser("hopf", parents=[common], help="Bisect for the Hopf value of A")
    hp.add_argument("--lo", type=float)
    hp.add_argument("--hi", type=float)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.log_level or settings.log_level, stream=sys.stderr)
    try:
        cfg = load_run_config(args)
        COMMANDS[cfg.command](cfg)
    except ModelError as exc:
        logger.error("command_failed", command=args.command, error=type(exc).__name__, detail=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        logger.error("command_failed", command=args.command, error="ValidationError", detail=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return ConfigError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
