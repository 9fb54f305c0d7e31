"""Command line front end: ``fees <method> --input FILE`` and ``fees compare``.

Exit status is 0 on success, 1 for unreadable or malformed input and 2
when the method does not fit the airline structure (Owen fees on
code-shared movements without ``--alliances``).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .airport import ConfigurationError
from .dataset import DatasetError, bundled_path, read_dataset
from .report import METHODS, compare, render, render_comparison, run

EXIT_OK, EXIT_INPUT, EXIT_STRUCTURE = 0, 1, 2


def _input_path(text: str) -> Path:
    # "@name" picks a dataset shipped with the package
    if text.startswith("@"):
        return bundled_path(text[1:])
    return Path(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fees", description="Airport runway fees for movements and airlines.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="FILE",
                        help="dataset CSV, or @santiago for the bundled example")
    common.add_argument("--exact", action="store_true", help="print exact fractions p/q")
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")

    for method in METHODS:
        p = sub.add_parser(method, parents=[common], help=f"{method} value fees")
        p.add_argument("--per-airline", action="store_true", help="add per-airline totals")
        p.add_argument("--split-by-airline", action="store_true",
                       help="show each airline's part of a code-shared movement's fee")
        p.add_argument("--alliances", action="store_true",
                       help="group airlines by the dataset's [alliances] section")
    sub.add_parser("compare", parents=[common],
                   help="average fees per type and totals per alliance under every method")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ds = read_dataset(_input_path(args.input))
        if args.command == "compare":
            text = render_comparison(compare(ds), args.format, args.exact)
        else:
            if args.alliances and not ds.alliances:
                raise DatasetError("--alliances given but the dataset has no [alliances] section")
            report = run(args.command, ds, use_alliances=args.alliances)
            per_airline = args.per_airline or args.alliances
            text = render(report, args.format, args.exact, per_airline, args.split_by_airline)
    except DatasetError as exc:
        print(f"fees: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConfigurationError as exc:
        print(f"fees: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE

    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"fees: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
