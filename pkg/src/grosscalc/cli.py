"""Command-line interface and REPL.

Exit codes: 0 success, 1 arithmetic error, 2 syntax error.  --json on any
command switches to the JSON encodings; GROSSCALC_ASCII=1 replaces the ①
symbol with g1 in text output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import ExprSyntaxError, GrossError
from .evaluate import evaluate, evaluate_text, substitution_point
from .fractals import FractalSnapshot, distinguish, snapshot
from .grosspoly import GROSSONE_ASCII, GROSSONE_SYMBOL
from .parsing import CALL_ARITY, Parser
from .process import is_sequentially_countable, sequential_reach
from .values import (
    as_gross_linear,
    format_value,
    value_compare,
    value_eval_at,
    value_to_json,
)

_EPILOG = """\
expressions:
  rationals ("8/9", "1.25", exact), the grossone symbol ① (ASCII alias: g1),
  + - * / ^ and parentheses.  ^ is right-associative and binds tighter than
  unary minus, which binds tighter than * and /: "8/9^g1" is 8/(9^g1) and
  "-2^2" is -(2^2).  Calls: carpet(k,n), sponge(k,n), cantor(k,n) (total
  measure), reach(s), countable(x) (1 or 0), compare(a,b) (-1, 0, or 1),
  approx(x,m).

environment:
  GROSSCALC_ASCII=1   write g1 instead of ① in text output
"""


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    ascii_mode = os.environ.get("GROSSCALC_ASCII") == "1"
    printer = _Printer(ascii_mode=ascii_mode, json_mode=args.json)
    try:
        return args.handler(args, printer)
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except (GrossError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {_error_text(exc)}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grosscalc",
        description="Exact arithmetic with grossone-based infinite and "
        "infinitesimal numbers, and exact fractal measures at any step.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(required=True, metavar="command")

    def command(name: str, help_text: str, handler):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON output")
        p.set_defaults(handler=handler)
        return p

    p = command("eval", "evaluate an expression to canonical form", _cmd_eval)
    p.add_argument("expr")

    for name in ("carpet", "sponge", "cantor"):
        p = command(name, f"{name} snapshot at offset K, step N", _cmd_fractal)
        p.add_argument("k", help="offset expression, e.g. 1 or 2")
        p.add_argument("n", help="step expression, e.g. 3 or g1-9")
        p.set_defaults(fractal=name)

    p = command("compare", "order two values", _cmd_compare)
    p.add_argument("e1")
    p.add_argument("e2")

    p = command("approx", "substitute a finite integer for ①", _cmd_approx)
    p.add_argument("expr")
    p.add_argument("--at", type=int, required=True, metavar="M")

    command("repl", "interactive read-eval-print loop", _cmd_repl)
    return parser


class _Printer:
    def __init__(self, ascii_mode: bool, json_mode: bool):
        self.ascii_mode = ascii_mode
        self.json_mode = json_mode

    def text(self, s: str) -> str:
        if self.ascii_mode:
            s = s.replace(GROSSONE_SYMBOL, GROSSONE_ASCII)
        return s

    def emit(self, payload, out=None) -> None:
        out = out or sys.stdout
        if self.json_mode:
            print(json.dumps(payload if not isinstance(payload, str) else payload), file=out)
        else:
            print(self.text(payload if isinstance(payload, str) else str(payload)), file=out)


def _error_text(exc: Exception) -> str:
    span = getattr(exc, "span", None)
    if span is not None:
        return f"{exc} (at bytes {span[0]}..{span[1]})"
    return str(exc)


def _cmd_eval(args, printer: _Printer) -> int:
    value = evaluate_text(args.expr)
    if printer.json_mode:
        printer.emit(value_to_json(value))
    else:
        printer.emit(format_value(value))
    return 0


def _snapshot_lines(snap: FractalSnapshot) -> str:
    return "\n".join(
        [
            f"fractal: {snap.fractal}",
            f"k: {snap.offset_k}",
            f"n: {snap.step_n}",
            f"count: {format_value(snap.piece_count)}",
            f"size: {format_value(snap.piece_size)}",
            f"measure: {format_value(snap.total_measure)}",
        ]
    )


def _cmd_fractal(args, printer: _Printer) -> int:
    k = as_gross_linear(evaluate_text(args.k))
    n = as_gross_linear(evaluate_text(args.n))
    snap = snapshot(args.fractal, k, n)
    if printer.json_mode:
        printer.emit(snap.to_json())
    else:
        printer.emit(_snapshot_lines(snap))
    return 0


def _cmd_compare(args, printer: _Printer) -> int:
    ordering = value_compare(evaluate_text(args.e1), evaluate_text(args.e2))
    if printer.json_mode:
        printer.emit({"ordering": ordering.word})
    else:
        printer.emit(ordering.word)
    return 0


def _cmd_approx(args, printer: _Printer) -> int:
    if args.at < 1:
        raise ValueError(f"--at must be a positive integer, got {args.at}")
    value = value_eval_at(evaluate_text(args.expr), args.at)
    if printer.json_mode:
        printer.emit({"value": str(value)})
    else:
        printer.emit(str(value))
    return 0


_REPL_HELP = """\
commands:
  EXPR                  evaluate an expression, e.g. (8/9)^(g1-1)
  compare E1 E2         order two values: less / equal / greater
  approx EXPR at M      substitute the integer M for ①
  carpet K N            carpet snapshot (also: sponge K N, cantor K N)
  reach S               farthest element reachable from S in ① steps
  countable EXPR        whether EXPR items can be counted one by one
  help                  this text
  quit                  leave the loop
"""

_WORD_COMMANDS = ("compare", "approx", "carpet", "sponge", "cantor", "reach", "countable")


def run_repl_line(line: str, printer: _Printer) -> str:
    """One REPL interaction; returns the output text (JSON already encoded)."""
    p = Parser(line)
    first = p.peek()
    if first.kind == "ident" and first.text in _WORD_COMMANDS and p.peek(1).kind != "(":
        p.advance()
        return _run_word_command(first.text, p, printer)
    expr = p.parse_expression()
    p.expect_end()
    value = evaluate(expr)
    if printer.json_mode:
        return json.dumps(value_to_json(value))
    return printer.text(format_value(value))


def _run_word_command(name: str, p: Parser, printer: _Printer) -> str:
    if name == "compare":
        e1 = evaluate(p.parse_expression())
        e2 = evaluate(p.parse_expression())
        p.expect_end()
        ordering = value_compare(e1, e2)
        if printer.json_mode:
            return json.dumps({"ordering": ordering.word})
        return ordering.word
    if name == "approx":
        expr = p.parse_expression()
        p.expect_keyword("at")
        point = p.parse_expression()
        p.expect_end()
        value = evaluate(expr)
        result = value_eval_at(value, substitution_point(evaluate(point)))
        if printer.json_mode:
            return json.dumps({"value": str(result)})
        return str(result)
    if name in ("carpet", "sponge", "cantor"):
        k = as_gross_linear(evaluate(p.parse_expression()))
        n = as_gross_linear(evaluate(p.parse_expression()))
        p.expect_end()
        snap = snapshot(name, k, n)
        if printer.json_mode:
            return json.dumps(snap.to_json())
        return printer.text(_snapshot_lines(snap))
    if name == "reach":
        start = as_gross_linear(evaluate(p.parse_expression()))
        p.expect_end()
        result = sequential_reach(start)
        if printer.json_mode:
            return json.dumps(value_to_json(result.as_poly()))
        return printer.text(str(result))
    if name == "countable":
        value = evaluate(p.parse_expression())
        p.expect_end()
        answer = is_sequentially_countable(value)
        if printer.json_mode:
            return json.dumps({"countable": answer})
        return "true" if answer else "false"
    raise AssertionError(name)


def _cmd_repl(args, printer: _Printer) -> int:
    interactive = sys.stdin.isatty()
    prompt = "grosscalc> " if interactive else ""
    if interactive:
        print("grosscalc: exact ① arithmetic; 'help' for commands, 'quit' to leave.")
    while True:
        try:
            line = input(prompt)
        except EOFError:
            break
        except KeyboardInterrupt:
            print()
            break
        line = line.strip()
        if not line:
            continue
        if line in ("quit", "exit"):
            break
        if line == "help":
            print(_REPL_HELP, end="")
            continue
        try:
            print(run_repl_line(line, printer))
        except ExprSyntaxError as exc:
            print(f"syntax error: {exc}")
        except (GrossError, ValueError, ZeroDivisionError, OverflowError) as exc:
            print(f"error: {_error_text(exc)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
