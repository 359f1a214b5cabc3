"""Command-line interface: check, enumerate, builtin.

Exit codes: 0 all checks passed / search completed; 1 some check failed;
2 input or usage error; 3 search truncated by the candidate cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Sequence

from .core import InvalidDataError
from .datasets import BUILTINS, builtin
from .documents import (
    data_to_document,
    parse_data_document,
    report_to_document,
    summary_record,
    survivor_record,
)
from .search import SearchSpec, SearchTruncatedError, run_search
from .suite import ALL_FILTERS, PAPER_FILTERS, Suite, normalize_filters

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3


def _parse_filters(spec: str, kosniowski: bool) -> tuple[str, ...]:
    if spec == "paper":
        names = list(PAPER_FILTERS)
    elif spec == "all":
        names = list(ALL_FILTERS)
    else:
        names = [part.strip() for part in spec.split(",") if part.strip()]
    if kosniowski and "kosniowski" not in names:
        names.append("kosniowski")
    return normalize_filters(names)


def _usage_error(messages: Sequence[str]) -> int:
    print(json.dumps({"errors": list(messages)}, indent=2))
    return EXIT_USAGE


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        filters = _parse_filters(args.filters, args.kosniowski)
    except ValueError as exc:
        return _usage_error([str(exc)])
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        return _usage_error([f"cannot read input: {exc}"])
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        return _usage_error([f"malformed JSON: {exc}"])
    try:
        data = parse_data_document(doc)
    except InvalidDataError as exc:
        return _usage_error(exc.errors)

    report = Suite(filters).run(data)
    print(json.dumps(report_to_document(report, filters), indent=2))
    return EXIT_PASS if report.overall == "pass" else EXIT_FAIL


def _cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        filters = _parse_filters(args.filters, args.kosniowski)
        spec = SearchSpec(
            n=args.dim_complex,
            k=args.points,
            max_weight=args.max_weight,
            filters=filters,
            gcd_normalize=args.gcd_normalize,
            cap=args.cap,
        )
    except ValueError as exc:
        return _usage_error([str(exc)])

    stream: IO[str]
    close_stream = False
    if args.output is not None:
        try:
            stream = open(args.output, "w", encoding="utf-8")
        except OSError as exc:
            return _usage_error([f"cannot open output: {exc}"])
        close_stream = True
    else:
        stream = sys.stdout

    def emit(record: dict) -> None:
        stream.write(json.dumps(record, separators=(",", ":")) + "\n")

    try:
        result = run_search(spec, on_survivor=lambda d: emit(survivor_record(d)), collect=False)
    except SearchTruncatedError as exc:
        summary = summary_record(exc.partial)
        emit(summary)
        if close_stream:
            stream.close()
            print(json.dumps(summary, separators=(",", ":")))
        return EXIT_TRUNCATED
    summary = summary_record(result)
    emit(summary)
    if close_stream:
        stream.close()
        print(json.dumps(summary, separators=(",", ":")))
    return EXIT_PASS


def _cmd_builtin(args: argparse.Namespace) -> int:
    try:
        params = tuple(int(p) for p in args.params)
    except ValueError:
        return _usage_error([f"builtin parameters must be integers, got {args.params}"])
    try:
        data = builtin(args.name, params)
    except (KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        return _usage_error([str(message)])
    print(json.dumps(data_to_document(data), indent=2))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlesieve",
        description=(
            "Feasibility checks for fixed-point weight data of almost complex "
            "circle actions, plus a bounded exhaustive enumerator."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run the check suite on a data document")
    check.add_argument("--input", required=True, help="JSON data document ('-' for stdin)")
    check.add_argument(
        "--filters", default="paper",
        help="'paper', 'all', or a comma-separated list of check names",
    )
    check.add_argument(
        "--kosniowski", action="store_true",
        help="additionally check chi_y-profile symmetry",
    )
    check.set_defaults(func=_cmd_check)

    enum = sub.add_parser("enumerate", help="enumerate surviving weight data")
    enum.add_argument("--dim-complex", type=int, required=True)
    enum.add_argument("--points", type=int, required=True)
    enum.add_argument("--max-weight", type=int, required=True)
    enum.add_argument("--filters", default="paper")
    enum.add_argument("--kosniowski", action="store_true")
    enum.add_argument(
        "--gcd-normalize", action="store_true",
        help="emit only survivors whose global weight gcd is 1",
    )
    enum.add_argument("--cap", type=int, default=10**9, help="candidate cap")
    enum.add_argument("--output", help="write the JSONL stream to this file")
    enum.set_defaults(func=_cmd_enumerate)

    names = ", ".join(sorted(BUILTINS))
    built = sub.add_parser("builtin", help=f"emit a builtin dataset ({names})")
    built.add_argument("name", help=f"one of: {names}")
    built.add_argument("params", nargs="*", help="integer parameters, e.g. 's6 2 3'")
    built.set_defaults(func=_cmd_builtin)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
