"""Command-line entry point: ``artifact [options] [FILE | -e EXPR]``."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from ..suites import SuiteResult
from .emit import emit
from .evaluate import CONTEXTS, THETA_CONVENTIONS, Config, EvalError, Session
from .syntax import CliSyntaxError

EXIT_OK, EXIT_ERROR, EXIT_CHECK_FAILED = 0, 1, 2


def _window(text: str):
    try:
        r, d = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("window must be R,D with two positive integers") from exc
    if r < 1 or d < 1:
        raise argparse.ArgumentTypeError("window bounds must be positive")
    return (r, d)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="artifact",
        description="Evaluate expressions in the motivic Hall algebra engines.",
    )
    src = ap.add_mutually_exclusive_group()
    src.add_argument("file", nargs="?", help="batch file of statements; '-' reads standard input")
    src.add_argument("-e", "--expr", action="append", help="statement to evaluate (repeatable)")
    ap.add_argument("--context", choices=CONTEXTS, default="elliptic-double")
    ap.add_argument("--zeta", default="p1", help="p1, elliptic or genus_one:a=<expr>")
    ap.add_argument("--window", type=_window, default=(12, 12), metavar="R,D")
    ap.add_argument("--order", type=int, default=8, help="series truncation order")
    ap.add_argument("--theta-convention", choices=THETA_CONVENTIONS, default="bs")
    ap.add_argument("--format", choices=("text", "json", "latex"), default="text")
    ap.add_argument("--basis", choices=("p", "e", "h", "m"), default="p", help="output basis for symmetric functions")
    return ap


def run_source(session: Session, source: str, fmt: str, out, err) -> int:
    """Evaluate a whole source text; returns the exit code."""
    try:
        results = session.evaluate_text(source)
    except (CliSyntaxError, EvalError) as exc:
        err.write(exc.pretty() + "\n")
        return EXIT_ERROR
    if results:
        out.write(emit(results, fmt) + "\n")
    if fmt != "json":
        for w in session.config.warnings():
            err.write(f"warning: {w}\n")
    failed = any(isinstance(r.value, SuiteResult) and not r.value.passed for r in results)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def repl(session: Session, fmt: str, out, err) -> int:
    out.write(f"artifact ({session.config.context}); end with Ctrl-D\n")
    while True:
        try:
            line = input("> ")
        except EOFError:
            out.write("\n")
            return EXIT_OK
        if line.strip():
            run_source(session, line, fmt, out, err)


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    config = Config(context=args.context, zeta=args.zeta, window=args.window, order=args.order,
                    theta_convention=args.theta_convention, format=args.format, basis=args.basis)
    try:
        session = Session(config)
    except (CliSyntaxError, EvalError) as exc:
        err.write(exc.pretty() + "\n")
        return EXIT_ERROR
    if args.expr:
        return run_source(session, "\n".join(args.expr), args.format, out, err)
    if args.file and args.file != "-":
        try:
            with open(args.file, encoding="utf-8") as fh:
                source = fh.read()
        except OSError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_ERROR
        return run_source(session, source, args.format, out, err)
    if args.file is None and sys.stdin.isatty():
        return repl(session, args.format, out, err)
    return run_source(session, sys.stdin.read(), args.format, out, err)


if __name__ == "__main__":
    sys.exit(main())
