"""
Command-line entry point: ``pyqglass <subcommand> [flags]``.

Exit codes: 0 success, 1 usage or configuration error, 2 runtime or I/O error,
3 certification or provenance failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv

from pyqglass import __version__
from pyqglass.common import ConfigError, QglassError
from pyqglass.config import CUTS, FORMATS, RunConfig
from pyqglass.experiments import default_registry
from pyqglass.session import RunSession, verify_provenance

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2
EXIT_CERTIFICATION = 3

# argparse dest -> RunConfig field
_FLAG_FIELDS = {
    "geometry": "geometry",
    "j_mean": "j_mean",
    "j_var": "j_var",
    "t_min": "t_min",
    "t_max": "t_max",
    "steps": "steps",
    "samples": "n_samples",
    "seed": "seed",
    "n": "n_spins",
    "p": "patterns",
    "radius": "radius",
    "d": "d",
    "measured": "measured",
    "threshold": "threshold",
    "window": "window",
    "cut": "cut",
    "optimize": "optimize",
    "out": "output",
    "format": "format",
    "workers": "workers",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, help="Master seed of the sample streams.")
    parent.add_argument("--samples", type=int, help="Number of disorder realisations.")
    parent.add_argument("--t-min", type=float, help="First time of the grid.")
    parent.add_argument("--t-max", type=float, help="Last time of the grid.")
    parent.add_argument("--steps", type=int, help="Number of grid points.")
    parent.add_argument("--out", help="Data file; its manifest is written next to it. Omit for stdout.")
    parent.add_argument("--format", choices=FORMATS, help="Data file format.")
    parent.add_argument("--workers", type=int, help="Worker processes (default: $PYQGLASS_WORKERS or 1).")
    parent.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug.")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pyqglass", description="Entanglement dynamics of disordered Ising spin systems.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _common_flags()

    coupling = argparse.ArgumentParser(add_help=False)
    coupling.add_argument("--j-mean", type=float, help="Mean coupling J.")
    coupling.add_argument("--j-var", type=float, help="Coupling variance sigma^2.")

    ea = sub.add_parser("ea", parents=[common, coupling], help="Quenched pair log negativity (Edwards-Anderson).")
    ea.add_argument("--geometry", help="chain, honeycomb, square or cube.")
    ea_mean = sub.add_parser("ea-mean", parents=[common, coupling], help="PPT test of the disorder-averaged state.")
    ea_mean.add_argument("--geometry", help="chain, honeycomb, square or cube.")

    gate = sub.add_parser("gate", parents=[common, coupling], help="Measurement-based Hadamard gate fidelity.")
    gate.add_argument("--optimize", action="store_true", default=None, help="Grid-search the hold time.")

    collapse = argparse.ArgumentParser(add_help=False)
    collapse.add_argument("--n", type=int, help="Number of spins N.")
    collapse.add_argument("--threshold", type=float, help="LN level defining collapse.")
    collapse.add_argument("--window", type=int, help="Grid points LN must stay below the threshold.")
    lro = sub.add_parser("lro", parents=[common, collapse], help="Ordered long-range model collapse/revival.")
    lro.add_argument("--cut", choices=CUTS, help="Pair or triple reduced state.")
    hop = sub.add_parser("hopfield", parents=[common, collapse], help="Hopfield model quenched collapse/revival.")
    hop.add_argument("--p", type=int, help="Number of patterns.")
    avg = sub.add_parser("self-avg", parents=[common], help="Self-averaging of the overlap cosine product.")
    avg.add_argument("--n", type=int, help="Number of spins N.")
    avg.add_argument("--p", type=int, help="Number of patterns.")

    ball = sub.add_parser("ball", parents=[common], help="Separable-ball estimate of the long-time LN.")
    ball.add_argument("--d", type=int, help="Number of exterior neighbours.")
    ball.add_argument("--radius", type=float, help="Separable-ball radius R.")
    ball.add_argument("--measured", type=float, help="Measured long-time LN to compare against.")

    sub.add_parser("oracle-check", parents=[common], help="Certify closed forms against brute force.")

    verify = sub.add_parser("verify", help="Check a data file against its manifest.")
    verify.add_argument("path", help="Data file to verify.")
    verify.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {"command": args.command}
    for dest, field_name in _FLAG_FIELDS.items():
        value = getattr(args, dest, None)
        if value is not None:
            values[field_name] = value
    return RunConfig(**values).validate()


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _verify(path: str) -> int:
    problems = verify_provenance(path)
    for problem in problems:
        print(f"provenance: {problem}", file=sys.stderr)
    if not problems:
        print(f"{path}: manifest consistent")
    return EXIT_CERTIFICATION if problems else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        print(parser.format_usage(), file=sys.stderr, end="")
        return EXIT_USAGE

    _configure_logging(args.verbose)
    if args.command == "verify":
        return _verify(args.path)

    try:
        config = config_from_args(args)
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"config: {problem}", file=sys.stderr)
        return EXIT_USAGE

    session = RunSession(config, __version__)
    try:
        result = default_registry().run(config)
        if config.output.data:
            session.save(result, config.output.data)
        else:
            sys.stdout.write(session.render(result))
    except (QglassError, ValueError) as exc:
        logger.error("%s failed: %s", config.command.data, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
