#!/usr/bin/env python3
"""
Kronecker Coefficient Command Line

One subcommand per library operation. Every invocation prints exactly one
JSON document on standard output; logs go to standard error.

Exit codes:
    0  success
    1  internal assertion failure, or a verification suite with violations
    2  usage error or violated precondition (the document names the error)

Author: System Architect
Date: 2026-02-12
"""

import argparse
import sys
import uuid
from collections.abc import Callable, Sequence
from typing import Any

import orjson

from src.application.services import CoefficientService, TableService
from src.core.config.constants import (
    SUITE_DEFAULT_DAGGER_N,
    SUITE_DEFAULT_MAX_SIZE,
    SUITE_DEFAULT_N_MAX,
    SUITE_DEFAULT_N_WINDOW,
    ExitCode,
    Stage,
)
from src.core.exceptions import (
    CacheError,
    ConfigurationError,
    InternalError,
    KroneckerError,
    NotMinimalError,
    OracleLimitError,
    PartitionError,
    UsageError,
)
from src.core.logging import get_logger, log_stage, setup_logging
from src.core.observability import get_tracker
from src.infrastructure.cache import CoefficientCache
from src.kronecker.models.partition import Partition
from src.kronecker.services.coefficients import stabilization_sequence, tensor_decomposition
from src.kronecker.services.deligne import (
    class_chain,
    dimension_polynomial,
    lift,
    object_status,
)
from src.kronecker.services.identities import SUITES, run_suite
from src.kronecker.services.partitions import parse_partition

logger = get_logger(__name__)

Document = dict[str, Any]

PRECONDITION_ERRORS = (
    UsageError,
    PartitionError,
    NotMinimalError,
    OracleLimitError,
    CacheError,
    ConfigurationError,
    ConfigurationError,
)


class JsonArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of printing and exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message, operation="cli", details={"prog": self.prog})


def _partition(text: str) -> Partition:
    # Parse errors surface as PartitionError documents, not argparse messages
    return parse_partition(text)


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def create_parser() -> argparse.ArgumentParser:
    """Create command-line argument parser."""
    parser = JsonArgumentParser(
        prog="kron",
        description="Kronecker, reduced Kronecker and Littlewood-Richardson coefficients",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Partitions are comma-separated parts; "-" is the empty partition.

Examples:
  %(prog)s g 2,1 2,1 2,1                  # Kronecker coefficient
  %(prog)s reduced 1 1 1                  # reduced Kronecker coefficient
  %(prog)s lr 3,2,1 2,1 2,1               # Littlewood-Richardson coefficient
  %(prog)s mult 1 1 - --n 2               # multiplicity at an integer parameter
  %(prog)s class 2,1 --n 5 --depth 3      # equivalence class chain
  %(prog)s lift 2 --n 3                   # lift to the generic category
  %(prog)s status 2 --n 3                 # projectivity and simplicity
  %(prog)s dimpoly 2                      # dimension polynomial
  %(prog)s stabilize 1 1 1 --from 2 --to 5
  %(prog)s tensor 1 1                     # generic tensor product decomposition
  %(prog)s verify alternating --max-size 2
  %(prog)s --cache gbar.jsonl table --max-size 2 --out gbar.csv
        """,
    )
    parser.add_argument(
        "--cache",
        metavar="PATH",
        default=None,
        help="JSON-lines coefficient cache (overrides KRON_CACHE)",
    )

    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=JsonArgumentParser)
    sub.required = True

    for name, help_text in (
        ("g", "Kronecker coefficient g^L_{M,T} (|L| = |M| = |T|)"),
        ("reduced", "reduced Kronecker coefficient"),
        ("lr", "Littlewood-Richardson coefficient c^L_{M,T}"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("lam", type=_partition, metavar="L")
        cmd.add_argument("mu", type=_partition, metavar="M")
        cmd.add_argument("tau", type=_partition, metavar="T")

    mult = sub.add_parser("mult", help="multiplicity of X_L in X_M (x) X_T at parameter n")
    mult.add_argument("mu", type=_partition, metavar="M")
    mult.add_argument("tau", type=_partition, metavar="T")
    mult.add_argument("lam", type=_partition, metavar="L")
    mult.add_argument("--n", type=_non_negative, required=True)

    chain = sub.add_parser("class", help="chain of the class with minimal element L")
    chain.add_argument("lam", type=_partition, metavar="L")
    chain.add_argument("--n", type=_non_negative, required=True)
    chain.add_argument("--depth", type=_non_negative, default=3)

    for name, help_text in (
        ("lift", "lift of X_L to the generic category"),
        ("status", "projective / simple status of X_L"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("lam", type=_partition, metavar="L")
        cmd.add_argument("--n", type=_non_negative, required=True)

    dimpoly = sub.add_parser("dimpoly", help="dimension polynomial of X_L")
    dimpoly.add_argument("lam", type=_partition, metavar="L")

    stabilize = sub.add_parser("stabilize", help="g along stretched diagrams")
    stabilize.add_argument("lam", type=_partition, metavar="L")
    stabilize.add_argument("mu", type=_partition, metavar="M")
    stabilize.add_argument("tau", type=_partition, metavar="T")
    stabilize.add_argument("--from", dest="n_from", type=_non_negative, required=True)
    stabilize.add_argument("--to", dest="n_to", type=_non_negative, required=True)

    tensor = sub.add_parser("tensor", help="X_M (x) X_T at generic parameter")
    tensor.add_argument("mu", type=_partition, metavar="M")
    tensor.add_argument("tau", type=_partition, metavar="T")

    verify = sub.add_parser("verify", help="run an identity verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--max-size", type=_non_negative, default=SUITE_DEFAULT_MAX_SIZE)
    verify.add_argument("--n-max", type=_non_negative, default=SUITE_DEFAULT_N_MAX)
    verify.add_argument(
        "--window",
        type=_non_negative,
        nargs=2,
        metavar=("LO", "HI"),
        default=list(SUITE_DEFAULT_N_WINDOW),
        help="n offsets from N (default: %(default)s)",
    )
    verify.add_argument("--dagger-n", type=_positive, default=SUITE_DEFAULT_DAGGER_N)
    verify.add_argument("--workers", type=_positive, default=None)

    table = sub.add_parser("table", help="CSV table of reduced coefficients")
    table.add_argument("--max-size", type=_non_negative, required=True)
    table.add_argument("--out", required=True, metavar="PATH")

    return parser


def _emit(document: Document) -> None:
    sys.stdout.buffer.write(orjson.dumps(document, option=orjson.OPT_SORT_KEYS) + b"\n")
    sys.stdout.flush()


def _encode_all(partitions: Sequence[Partition]) -> list[str]:
    return [p.encode() for p in partitions]


def _error_document(exc: KroneckerError) -> Document:
    payload = exc.to_dict()
    return {"error": payload["error"], "message": payload["message"], "details": payload["details"]}


def _verify(args: argparse.Namespace) -> tuple[Document, bool]:
    lo, hi = args.window
    if hi < lo:
        raise UsageError(
            "--window HI must be >= LO", operation="verify", details={"window": [lo, hi]}
        )
    report = run_suite(
        args.suite,
        max_size=args.max_size,
        n_max=args.n_max,
        n_window=(lo, hi),
        dagger_n=args.dagger_n,
        workers=args.workers,
    )
    return report.to_document(), report.passed


def _commands(
    args: argparse.Namespace, cache: CoefficientCache
) -> dict[str, Callable[[], tuple[Document, bool]]]:
    coefficients = CoefficientService(cache)

    def ok(document: Document) -> tuple[Document, bool]:
        return document, True

    def chain_elements() -> list[Partition]:
        return class_chain(args.lam, args.n, args.depth).extend_to(args.depth)

    return {
        "g": lambda: ok(coefficients.kronecker(args.lam, args.mu, args.tau).to_document()),
        "reduced": lambda: ok(coefficients.reduced(args.lam, args.mu, args.tau).to_document()),
        "lr": lambda: ok(
            coefficients.littlewood_richardson(args.lam, args.mu, args.tau).to_document()
        ),
        "mult": lambda: ok(
            coefficients.multiplicity(args.mu, args.tau, args.lam, args.n).to_document()
        ),
        "class": lambda: ok({"chain": _encode_all(chain_elements())}),
        "lift": lambda: ok(
            {"lam": args.lam.encode(), "n": args.n, "lift": _encode_all(lift(args.lam, args.n))}
        ),
        "status": lambda: ok(
            {"lam": args.lam.encode(), "n": args.n, "status": object_status(args.lam, args.n).value}
        ),
        "dimpoly": lambda: ok(dimension_polynomial(args.lam).to_document()),
        "stabilize": lambda: ok(
            stabilization_sequence(args.lam, args.mu, args.tau, args.n_from, args.n_to).model_dump()
        ),
        "tensor": lambda: ok(
            {
                "mu": args.mu.encode(),
                "tau": args.tau.encode(),
                "decomposition": [
                    [lam.encode(), str(value)]
                    for lam, value in tensor_decomposition(args.mu, args.tau).items()
                ],
            }
        ),
        "verify": lambda: _verify(args),
        "table": lambda: ok(TableService(cache).write_table(args.max_size, args.out)),
    }


def main(argv: Sequence[str] | None = None) -> int:
    """Application entry point."""
    try:
        setup_logging()
    except ConfigurationError as exc:
        _emit(_error_document(exc))
        return ExitCode.USAGE.value

    with get_tracker().run_scope(uuid.uuid4().hex):
        try:
            args = create_parser().parse_args(argv)
            cache = CoefficientCache.from_settings(path=args.cache)
            log_stage(logger, Stage.ARGUMENT_PARSING, "Arguments parsed", command=args.command)
            document, passed = _commands(args, cache)[args.command]()
        except PRECONDITION_ERRORS as exc:
            log_stage(logger, Stage.CLEANUP, "Rejected", level="warning", error=type(exc).__name__)
            _emit(_error_document(exc))
            return ExitCode.USAGE.value
        except InternalError as exc:
            log_stage(
                logger, Stage.CLEANUP, "Internal failure", level="error", error=type(exc).__name__
            )
            _emit(_error_document(exc))
            return ExitCode.FAILURE.value
        except KroneckerError as exc:
            log_stage(logger, Stage.CLEANUP, "Failed", level="error", error=type(exc).__name__)
            _emit(_error_document(exc))
            return ExitCode.FAILURE.value

        _emit(document)
        return ExitCode.SUCCESS.value if passed else ExitCode.FAILURE.value


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
