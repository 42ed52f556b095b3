"""
Command-line entrypoint: argument parsing, run configuration and exit codes.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 resource error.
"""
import argparse
import sys
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import ValidationError

from supernorm import __version__
from supernorm.cli.bounds import check_bounds_limit, run_bounds
from supernorm.cli.figures import FIGURES, run_figure
from supernorm.cli.primes import run_primes
from supernorm.cli.stat import run_stat
from supernorm.cli.verify import run_verify
from supernorm.core.config import settings
from supernorm.core.errors import SupernormError
from supernorm.core.logging import configure_logging, get_logger
from supernorm.partitions.model import Ensemble, Restriction
from supernorm.primes.sieve import PrimeTable, cached_prime_table
from supernorm.schemas import Command, RunBackend, RunConfig

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

ENSEMBLE_FLAGS: Dict[str, Ensemble] = {
    "size": Ensemble.SIZE,
    "perimeter": Ensemble.PERIMETER,
    "max": Ensemble.MAX_PART,
}

RESTRICTION_FLAGS: Dict[str, Restriction] = {
    "none": Restriction.ALL,
    "no-ones": Restriction.NO_ONES,
    "distinct": Restriction.DISTINCT,
}


@lru_cache(maxsize=4)
def load_table(limit: int) -> PrimeTable:
    """Sieve once per limit; reuse SIEVE_CACHE_DIR when it holds a matching table."""
    return cached_prime_table(limit, store=False)


def create_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default=None, help="Log level (default from LOG_LEVEL)")
    common.add_argument("--out", type=Path, default=None, help="Output file (default stdout)")
    common.add_argument(
        "--precision", type=int, default=12, help="Significant digits in text summaries"
    )
    common.add_argument("--sieve-limit", type=int, default=None, help="Prime sieve limit")

    parser = argparse.ArgumentParser(
        prog="supernorm",
        description="Reciprocal norm and supernorm statistics of integer partitions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    stat = sub.add_parser("stat", parents=[common], help="Emit one statistic as n,value CSV")
    stat.add_argument("--ensemble", choices=list(ENSEMBLE_FLAGS), default="size")
    stat.add_argument("--weight", choices=["norm", "supernorm"], default="supernorm")
    stat.add_argument("--mode", choices=["individual", "cumulative"], default="individual")
    stat.add_argument("--restrict", choices=list(RESTRICTION_FLAGS), default="none")
    stat.add_argument("--beta", type=float, default=1.0, help="Exponent of the reciprocal weight")
    stat.add_argument("--nmax", type=int, default=None, help="Largest n (default 20)")
    stat.add_argument("--backend", choices=[b.value for b in RunBackend], default="exact")
    stat.add_argument(
        "--allow-large", action="store_true", help="Lift the exact and oracle nmax caps"
    )

    figure = sub.add_parser("figure", parents=[common], help="Emit the data behind one figure")
    figure.add_argument("figure_id", choices=list(FIGURES))

    verify = sub.add_parser("verify", parents=[common], help="Run the verification suites")
    verify.add_argument("--nmax", type=int, default=None, help="Reduce every suite range to n <= NMAX")

    sub.add_parser("bounds", parents=[common], help="Scan the explicit prime estimates")

    primes = sub.add_parser("primes", parents=[common], help="Emit p_n and Mertens sums")
    primes.add_argument("--nmax", type=int, default=None, help="Largest n (default 100)")
    primes.add_argument(
        "--write-cache", action="store_true", help="Store the sieve in SIEVE_CACHE_DIR"
    )
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {
        "command": args.command,
        "nmax": getattr(args, "nmax", None),
        "sieve_limit": args.sieve_limit,
        "precision": args.precision,
        "out": args.out,
        "figure": getattr(args, "figure_id", None),
        "write_cache": getattr(args, "write_cache", False),
    }
    if args.command == Command.STAT.value:
        fields.update(
            ensemble=ENSEMBLE_FLAGS[args.ensemble],
            weight=args.weight,
            mode=args.mode,
            restriction=RESTRICTION_FLAGS[args.restrict],
            beta=args.beta,
            backend=args.backend,
            allow_large=args.allow_large,
        )
    return RunConfig(**fields)


def dispatch(config: RunConfig) -> int:
    if config.command is Command.STAT:
        return run_stat(config, load_table)
    if config.command is Command.BOUNDS:
        check_bounds_limit(config.resolved_sieve_limit)
        return run_bounds(load_table(config.resolved_sieve_limit), config.out)

    table = load_table(config.resolved_sieve_limit)
    if config.command is Command.FIGURE:
        return run_figure(config.figure, table, config.out)
    if config.command is Command.VERIFY:
        return run_verify(config, table)
    return run_primes(table, config.resolved_nmax, config.out, store=config.write_cache)


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.log_level)
    logger.info("Command started", command=args.command, env=settings.ENV)

    try:
        config = config_from_args(args)
        status = dispatch(config)
    except ValidationError as e:
        print(f"supernorm: invalid arguments: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SupernormError as e:
        print(f"supernorm: {e}", file=sys.stderr)
        return e.exit_code
    except MemoryError:
        print("supernorm: out of memory; lower --sieve-limit or nmax", file=sys.stderr)
        return EXIT_RESOURCE

    logger.info("Command finished", command=args.command, status=status)
    return status


if __name__ == "__main__":
    sys.exit(main())
