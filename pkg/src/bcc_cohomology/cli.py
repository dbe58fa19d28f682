"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import InvariantViolation, OracleSizeError, ParseError
from .grid import bcc_to_cubic, cubic_to_bcc, format_pts, parse_pts
from .report import INPUT_FORMATS, analyze_file, dumps, export_cycles, write_tables

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3

log = logging.getLogger("bcc_cohomology")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input_opts(p):
    p.add_argument("--format", choices=INPUT_FORMATS, help="input format (default: from file suffix)")
    p.add_argument("--no-thin", action="store_true", help="skip topological thinning")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bcc-cohomology", description="Z/2 cohomology ring of 3D BCC digital pictures")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="compute Betti numbers, generators, cup matrix and HB1")
    a.add_argument("inputs", nargs="+", type=Path)
    _add_input_opts(a)
    a.add_argument("--oracle", action="store_true", help="cross-check with dense linear algebra")
    a.add_argument("--verify", action="store_true", help="check the contraction axioms at runtime")
    a.add_argument("--cup-on-full", action="store_true",
                   help="compute the cup matrix on K(I) instead of the thinned complex")
    a.add_argument("--timings", action="store_true", help="include per-stage wall times")
    a.add_argument("-o", "--output", type=Path, help="write the JSON report here instead of stdout")
    a.add_argument("--export-dir", type=Path, help="also export cycles as OBJ + JSON into this directory")
    a.add_argument("--figures", type=Path, help="write PNG figures and TSV tables into this directory")
    a.add_argument("--dump-contraction", type=Path, help="write the composite contraction as JSON")
    a.add_argument("--jobs", type=int, default=1, help="parallel workers when several inputs are given")

    e = sub.add_parser("export-cycles", help="write representative (co)cycles as OBJ + JSON")
    e.add_argument("input", type=Path)
    _add_input_opts(e)
    e.add_argument("--export-dir", type=Path, default=Path("."))

    c = sub.add_parser("convert", help="convert between cubic (14,14) and BCC point files")
    c.add_argument("input", type=Path)
    c.add_argument("-o", "--output", type=Path)
    c.add_argument("--reverse", action="store_true", help="BCC to cubic instead")

    f = sub.add_parser("fixture", help="write one of the built-in test pictures as a pts-bcc file")
    f.add_argument("name")
    f.add_argument("-o", "--output", type=Path)
    return parser


def _analyze_one(path: Path, args) -> dict:
    analysis, report = analyze_file(
        path, args.format, thin=not args.no_thin, oracle=args.oracle, check=args.verify,
        timings=args.timings, cup_on_full=args.cup_on_full,
    )
    multi = len(args.inputs) > 1
    if args.export_dir:
        export_cycles(analysis, args.export_dir / path.stem if multi else args.export_dir)
    if args.figures:
        from .plotting import render_figures

        out = args.figures / path.stem if multi else args.figures
        render_figures(report, out)
        write_tables(report, out)
    if args.dump_contraction:
        target = args.dump_contraction
        if multi:
            target = target.with_name(f"{target.stem}-{path.stem}{target.suffix}")
        target.write_text(json.dumps(analysis.pipeline.composite.to_json()) + "\n")
    return report


def _analyze_worker(item):
    path, args = item
    return _analyze_one(path, args)


def cmd_analyze(args) -> int:
    if args.jobs > 1 and len(args.inputs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_analyze_worker, [(p, args) for p in args.inputs]))
    else:
        reports = [_analyze_one(p, args) for p in args.inputs]
    text = dumps(reports[0] if len(reports) == 1 else reports)
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export(args) -> int:
    analysis, _ = analyze_file(args.input, args.format, thin=not args.no_thin)
    for p in export_cycles(analysis, args.export_dir, stem=args.input.stem):
        log.info("wrote %s", p)
    return EXIT_OK


def cmd_convert(args) -> int:
    points = parse_pts(args.input.read_text())
    fn = bcc_to_cubic if args.reverse else cubic_to_bcc
    text = format_pts((fn(p) for p in points))
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fixture(args) -> int:
    from .fixtures import PICTURES

    if args.name not in PICTURES:
        log.error("unknown fixture %r; choose from %s", args.name, ", ".join(PICTURES))
        return EXIT_USAGE
    text = format_pts(PICTURES[args.name]().black, header=args.name)
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "export-cycles": cmd_export, "convert": cmd_convert, "fixture": cmd_fixture}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (ParseError, OracleSizeError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    except InvariantViolation as exc:
        log.error("internal invariant violated: %s", exc)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
