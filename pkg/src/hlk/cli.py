"""Command-line front end.

Subcommands: ``invariant`` and ``groups`` accept a diagram or matrix file
(told apart by the first significant token), ``matrix`` turns a diagram
into its linking matrix, ``snf`` prints the full reduction, ``selftest``
runs the randomized property suite.  Exit codes: 0 success, 1 usage or
flag error, 2 parse error, 3 invalid diagram, 4 self-test failure.
"""

import argparse
import sys
from dataclasses import dataclass

from .diagram import (
    DiagramParseError,
    InvalidDiagramError,
    linking_matrix,
    parse_diagram,
)
from .exactla import (
    IntMatrix,
    MatrixParseError,
    format_matrix,
    parse_matrix,
    smith_normal_form,
)
from .invariant import handlebody_linking, quotient_group
from .selftest import run_selftest

__all__ = [
    "CliConfig",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_PARSE",
    "EXIT_INVALID",
    "EXIT_SELFTEST",
    "detect_format",
    "run",
    "main",
]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_SELFTEST = 4


@dataclass(frozen=True)
class CliConfig:
    """One parsed invocation."""

    subcommand: str
    input_path: str | None = None
    trials: int = 100
    seed: int = 0
    verbose: bool = False


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; this tool reserves 2 for
    # parse errors, so remap usage problems to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hlk",
        description="Linking invariants of two-component handlebody-links.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")
    for name, text in (
        ("invariant", "print the linking invariant of a diagram or matrix file"),
        ("matrix", "print the linking matrix of a diagram file"),
        ("groups", "print the two quotient groups and the chain length"),
        ("snf", "print the Smith normal form D with its transforms U and V"),
    ):
        cmd = sub.add_parser(name, help=text, description=text)
        cmd.add_argument(
            "path",
            nargs="?",
            default="-",
            help="input file, or - for standard input (default)",
        )
    cmd = sub.add_parser(
        "selftest",
        help="run the randomized property suite",
        description="Run the randomized property suite over the reduction and invariant code.",
    )
    cmd.add_argument("--trials", type=int, default=100, help="number of trials (default 100)")
    cmd.add_argument("--seed", type=int, default=0, help="seed for the trial stream (default 0)")
    cmd.add_argument("--verbose", action="store_true", help="report every trial, not only failures")
    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        subcommand=args.subcommand,
        input_path=getattr(args, "path", None),
        trials=getattr(args, "trials", 100),
        seed=getattr(args, "seed", 0),
        verbose=getattr(args, "verbose", False),
    )


def detect_format(text: str) -> str | None:
    """``'diagram'`` or ``'matrix'`` by the first significant token, else None.

    Comment and blank lines are skipped, so both file formats sniff
    correctly whatever they start with.
    """
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split()[0]
        if head == "component":
            return "diagram"
        if head == "matrix":
            return "matrix"
        return None
    return None


def _print_matrix(m: IntMatrix, out) -> None:
    out.write(format_matrix(m))


def run(config: CliConfig, stdin=None, out=None, err=None) -> int:
    """Execute one invocation; returns the exit code.

    Results go to ``out``, diagnostics to ``err`` (defaulting to the
    process streams).
    """
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err

    if config.subcommand == "selftest":
        if config.trials < 1:
            print("hlk selftest: error: --trials must be at least 1", file=err)
            return EXIT_USAGE
        failures = run_selftest(
            config.trials, config.seed, verbose=config.verbose, out=out, err=err
        )
        return EXIT_SELFTEST if failures else EXIT_OK

    try:
        if config.input_path in (None, "-"):
            text = stdin.read()
        else:
            with open(config.input_path, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        print(f"hlk {config.subcommand}: error: {exc}", file=err)
        return EXIT_USAGE

    kind = detect_format(text)
    if kind is None:
        print(
            f"hlk {config.subcommand}: error: input is neither a diagram nor a"
            " matrix file (expected a 'component' or 'matrix' line first)",
            file=err,
        )
        return EXIT_PARSE
    if config.subcommand == "matrix" and kind != "diagram":
        print("hlk matrix: error: this subcommand takes a diagram file", file=err)
        return EXIT_USAGE

    try:
        if kind == "diagram":
            m = linking_matrix(parse_diagram(text))
        else:
            m = parse_matrix(text)
    except (DiagramParseError, MatrixParseError) as exc:
        print(f"hlk {config.subcommand}: error: {exc}", file=err)
        return EXIT_PARSE
    except InvalidDiagramError as exc:
        print(f"hlk {config.subcommand}: error: {exc}", file=err)
        return EXIT_INVALID

    if config.subcommand == "invariant":
        print(f"Lk = {handlebody_linking(m)}", file=out)
    elif config.subcommand == "matrix":
        _print_matrix(m, out)
    elif config.subcommand == "groups":
        first = quotient_group(m, "first")
        second = quotient_group(m, "second")
        chain_length = m.rows - first.free_rank
        print(f"A1 = {first}", file=out)
        print(f"A2 = {second}", file=out)
        print(f"l = {chain_length}", file=out)
    elif config.subcommand == "snf":
        result = smith_normal_form(m)
        for label, part in (("D", result.d), ("U", result.u), ("V", result.v)):
            print(f"# {label}", file=out)
            _print_matrix(part, out)
    else:
        print(f"hlk: error: unknown subcommand {config.subcommand!r}", file=err)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(_config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
