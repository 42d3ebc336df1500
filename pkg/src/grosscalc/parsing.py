"""Expression text -> AST.

Grammar: rational literals (integer, decimal, or p/q via division), the
grossone symbol (① or the ASCII alias g1), unary minus, binary + - * / ^,
parentheses, and the named calls carpet, sponge, cantor, reach, countable,
compare, approx.  Precedence, loosest to tightest: + - then * / then unary
minus then ^; ^ is right-associative.  Decimal literals convert exactly to
rationals.

All failures raise ExprSyntaxError carrying the byte offset into the
UTF-8 input and the set of expected tokens.
"""

from __future__ import annotations

import dataclasses
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ExprSyntaxError
from .grosspoly import GROSSONE_ASCII, GROSSONE_SYMBOL

Span = tuple[int, int]

CALL_ARITY = {
    "carpet": 2,
    "sponge": 2,
    "cantor": 2,
    "reach": 1,
    "countable": 1,
    "compare": 2,
    "approx": 2,
}

_OPERATOR_CHARS = "+-*/^(),"
_ATOM_EXPECTED = ("a number", f"'{GROSSONE_SYMBOL}'", "'g1'", "'('", "'-'", "a function name")


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "grossone", "ident", one of +-*/^(),, or "end"
    text: str
    start: int  # byte offset
    end: int
    value: Fraction | None = None


@dataclass(frozen=True)
class Lit:
    value: Fraction
    span: Span


@dataclass(frozen=True)
class Grossone:
    span: Span


@dataclass(frozen=True)
class Unary:
    op: str
    operand: Expr
    span: Span


@dataclass(frozen=True)
class Binary:
    op: str
    lhs: Expr
    rhs: Expr
    span: Span


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple[Expr, ...]
    span: Span


Expr = Union[Lit, Grossone, Unary, Binary, Call]


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    byte_pos = 0
    n = len(text)
    while i < n:
        ch = text[i]
        ch_bytes = len(ch.encode("utf-8"))
        if ch.isspace():
            i += 1
            byte_pos += ch_bytes
            continue
        start = byte_pos
        if ch in string.digits:
            j = i
            while j < n and text[j] in string.digits:
                j += 1
            if j + 1 < n and text[j] == "." and text[j + 1] in string.digits:
                j += 1
                while j < n and text[j] in string.digits:
                    j += 1
            lexeme = text[i:j]
            end = start + len(lexeme)  # ASCII: one byte per char
            tokens.append(Token("number", lexeme, start, end, Fraction(lexeme)))
            i = j
            byte_pos = end
            continue
        if ch == GROSSONE_SYMBOL:
            tokens.append(Token("grossone", ch, start, start + ch_bytes))
            i += 1
            byte_pos += ch_bytes
            continue
        if ch in string.ascii_letters or ch == "_":
            j = i
            while j < n and (text[j] in string.ascii_letters or text[j] in string.digits or text[j] == "_"):
                j += 1
            lexeme = text[i:j]
            end = start + len(lexeme)
            tokens.append(Token("ident", lexeme, start, end))
            i = j
            byte_pos = end
            continue
        if ch in _OPERATOR_CHARS:
            tokens.append(Token(ch, ch, start, start + 1))
            i += 1
            byte_pos += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", start)
    tokens.append(Token("end", "", byte_pos, byte_pos))
    return tokens


# (left, right) binding powers; right < left would mean right-associative.
_INFIX_BP = {
    "+": (10, 11),
    "-": (10, 11),
    "*": (20, 21),
    "/": (20, 21),
    "^": (40, 40),  # right-associative
}
_UNARY_MINUS_BP = 30  # tighter than * /, looser than ^


class Parser:
    """Token-stream parser; also usable incrementally for command lines
    that contain several expressions in a row."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def at_end(self) -> bool:
        return self.peek().kind == "end"

    def expect(self, kind: str, expected: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(
                f"unexpected {_describe(tok)}", tok.start, (expected,)
            )
        return self.advance()

    def expect_end(self) -> None:
        if not self.at_end():
            tok = self.peek()
            raise ExprSyntaxError(
                f"unexpected trailing {_describe(tok)}", tok.start, ("end of input",)
            )

    def expect_keyword(self, word: str) -> None:
        tok = self.peek()
        if tok.kind != "ident" or tok.text != word:
            raise ExprSyntaxError(
                f"unexpected {_describe(tok)}", tok.start, (f"'{word}'",)
            )
        self.advance()

    def parse_expression(self, min_bp: int = 0) -> Expr:
        lhs = self._parse_atom()
        while True:
            tok = self.peek()
            if tok.kind not in _INFIX_BP:
                break
            left_bp, right_bp = _INFIX_BP[tok.kind]
            if left_bp < min_bp:
                break
            self.advance()
            rhs = self.parse_expression(right_bp)
            lhs = Binary(tok.kind, lhs, rhs, (lhs.span[0], rhs.span[1]))
        return lhs

    def _parse_atom(self) -> Expr:
        tok = self.advance()
        if tok.kind == "number":
            return Lit(tok.value, (tok.start, tok.end))
        if tok.kind == "grossone":
            return Grossone((tok.start, tok.end))
        if tok.kind == "ident":
            if tok.text == GROSSONE_ASCII:
                return Grossone((tok.start, tok.end))
            if tok.text in CALL_ARITY:
                return self._parse_call(tok)
            raise ExprSyntaxError(
                f"unknown name '{tok.text}'",
                tok.start,
                ("'g1'",) + tuple(sorted(CALL_ARITY)),
            )
        if tok.kind == "-":
            operand = self.parse_expression(_UNARY_MINUS_BP)
            return Unary("-", operand, (tok.start, operand.span[1]))
        if tok.kind == "(":
            inner = self.parse_expression(0)
            closing = self.expect(")", "')'")
            # Widen the span to the parentheses for error reporting.
            return _with_span(inner, (tok.start, closing.end))
        raise ExprSyntaxError(
            f"unexpected {_describe(tok)}", tok.start, _ATOM_EXPECTED
        )

    def _parse_call(self, name_tok: Token) -> Call:
        self.expect("(", "'('")
        args: list[Expr] = [self.parse_expression(0)]
        while self.peek().kind == ",":
            self.advance()
            args.append(self.parse_expression(0))
        closing = self.expect(")", "')' or ','")
        arity = CALL_ARITY[name_tok.text]
        if len(args) != arity:
            raise ExprSyntaxError(
                f"{name_tok.text} takes {arity} argument{'s' if arity != 1 else ''}, "
                f"got {len(args)}",
                name_tok.start,
            )
        return Call(name_tok.text, tuple(args), (name_tok.start, closing.end))


def _with_span(node: Expr, span: Span) -> Expr:
    return dataclasses.replace(node, span=span)


def _describe(tok: Token) -> str:
    if tok.kind == "end":
        return "end of input"
    return f"token '{tok.text}'"


def parse(text: str) -> Expr:
    """Parse a complete expression; trailing input is an error."""
    parser = Parser(text)
    expr = parser.parse_expression()
    parser.expect_end()
    return expr
