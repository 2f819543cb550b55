"""Lexer and recursive-descent parser for the expression language.

Precedence, loosest first: ``+ -``, ``&`` (tensor), ``* /``, unary ``-``,
``^``, then primaries (numbers, names, indexed generators ``t[0,1]``,
calls ``f(a, b; key=value)``, brackets ``[x, y]``, tuples ``(a, b)`` and
matrices ``[[a,b],[c,d]]@n``).  Statements are separated by ``;`` or new
lines; ``in <context> { ... }`` evaluates a block in another context.
Every node carries its source span for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

__all__ = [
    "CliSyntaxError",
    "Span",
    "Token",
    "tokenize",
    "parse",
    "parse_program",
    "unparse",
    "Num",
    "Name",
    "Indexed",
    "Call",
    "Bracket",
    "Matrix",
    "TupleExpr",
    "Unary",
    "Binary",
    "Power",
    "InBlock",
]

# names that glue to a following sign when an index list follows: E+[0], tt-[2]
SIGNED_NAMES = ("E", "oneSS", "tt")
PUNCT = "[](){},;=*+-/^@&"


@dataclass(frozen=True)
class Span:
    line: int
    start: int  # 1-based column of the first character
    end: int    # 1-based column one past the last character

    def join(self, other: "Span") -> "Span":
        return Span(self.line, self.start, other.end if other.line == self.line else self.end)


class CliSyntaxError(ValueError):
    def __init__(self, message: str, span: Span, source: str = ""):
        super().__init__(f"line {span.line}, column {span.start}: {message}")
        self.message = message
        self.span = span
        self.source = source

    def pretty(self) -> str:
        lines = self.source.splitlines() or [""]
        text = lines[self.span.line - 1] if 0 < self.span.line <= len(lines) else ""
        width = max(1, self.span.end - self.span.start)
        return f"error: {self}\n  {text}\n  {' ' * (self.span.start - 1)}{'^' * width}"


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, NAME, PUNCT, NEWLINE, EOF
    text: str
    span: Span


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    line, col, i = 1, 1, 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            tokens.append(Token("NEWLINE", "\n", Span(line, col, col + 1)))
            line, col, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i, col = i + 1, col + 1
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            tokens.append(Token("NUM", source[i:j], Span(line, col, col + j - i)))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            word = source[i:j]
            if word in SIGNED_NAMES and j + 1 < n and source[j] in "+-" and source[j + 1] == "[":
                j += 1
                word = source[i:j]
            tokens.append(Token("NAME", word, Span(line, col, col + j - i)))
            col += j - i
            i = j
            continue
        if ch in PUNCT:
            tokens.append(Token("PUNCT", ch, Span(line, col, col + 1)))
            i, col = i + 1, col + 1
            continue
        raise CliSyntaxError(f"unexpected character {ch!r}", Span(line, col, col + 1), source)
    tokens.append(Token("EOF", "", Span(line, col, col + 1)))
    return tokens


# ---------------------------------------------------------------------------
# syntax tree


@dataclass
class Node:
    span: Span = field(compare=False)


@dataclass
class Num(Node):
    value: int = 0


@dataclass
class Name(Node):
    id: str = ""


@dataclass
class Indexed(Node):
    name: str = ""
    indices: Tuple[Fraction, ...] = ()


@dataclass
class Call(Node):
    name: str = ""
    args: List[Node] = field(default_factory=list)
    options: Dict[str, Node] = field(default_factory=dict)


@dataclass
class Bracket(Node):
    left: Node = None
    right: Node = None


@dataclass
class Matrix(Node):
    rows: Tuple[Tuple[int, int], Tuple[int, int]] = ((1, 0), (0, 1))
    offset: int = 0


@dataclass
class TupleExpr(Node):
    items: List[Node] = field(default_factory=list)


@dataclass
class Unary(Node):
    op: str = "-"
    operand: Node = None


@dataclass
class Binary(Node):
    op: str = "+"
    left: Node = None
    right: Node = None


@dataclass
class Power(Node):
    base: Node = None
    exponent: Node = None


@dataclass
class InBlock(Node):
    context: str = ""
    body: List[Node] = field(default_factory=list)


Expr = Union[Num, Name, Indexed, Call, Bracket, Matrix, TupleExpr, Unary, Binary, Power]


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    # -- token helpers ----------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.pos + k, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind == "PUNCT" and self.tok.text == text

    def advance(self) -> Token:
        t = self.tok
        self.pos += 1
        return t

    def error(self, message: str, tok: Optional[Token] = None) -> CliSyntaxError:
        tok = tok or self.tok
        return CliSyntaxError(message, tok.span, self.source)

    def describe(self, tok: Token) -> str:
        if tok.kind == "EOF":
            return "end of input"
        if tok.kind == "NEWLINE":
            return "end of line"
        return repr(tok.text)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}, found {self.describe(self.tok)}")
        return self.advance()

    def skip_newlines(self) -> None:
        while self.tok.kind == "NEWLINE":
            self.advance()

    # -- statements -------------------------------------------------------
    def program(self) -> List[Node]:
        stmts: List[Node] = []
        self.skip_newlines()
        while self.tok.kind != "EOF":
            stmts.append(self.statement())
            if self.at(";") or self.tok.kind == "NEWLINE":
                self.advance()
                self.skip_newlines()
            elif self.tok.kind != "EOF":
                raise self.error(f"expected end of statement, found {self.describe(self.tok)}")
        return stmts

    def statement(self) -> Node:
        if self.tok.kind == "NAME" and self.tok.text == "in" and self.peek().kind == "NAME":
            return self.in_block()
        return self.expr()

    def in_block(self) -> InBlock:
        start = self.advance().span
        parts = [self.advance()]
        if parts[0].kind != "NAME":
            raise self.error("expected a context name", parts[0])
        while self.at("-") and self.peek().kind == "NAME":
            self.advance()
            parts.append(self.advance())
        context = "-".join(p.text for p in parts)
        self.expect("{")
        body: List[Node] = []
        self.skip_newlines()
        while not self.at("}"):
            if self.tok.kind == "EOF":
                raise self.error("unterminated block: expected '}'")
            body.append(self.statement())
            if self.at(";") or self.tok.kind == "NEWLINE":
                self.advance()
                self.skip_newlines()
            elif not self.at("}"):
                raise self.error(f"expected ';' or '}}', found {self.describe(self.tok)}")
        end = self.advance().span
        return InBlock(start.join(end), context, body)

    # -- expressions ------------------------------------------------------
    def expr(self) -> Node:
        node = self.tensor()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            right = self.tensor()
            node = Binary(node.span.join(right.span), op, node, right)
        return node

    def tensor(self) -> Node:
        node = self.term()
        while self.at("&"):
            self.advance()
            right = self.term()
            node = Binary(node.span.join(right.span), "&", node, right)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            right = self.unary()
            node = Binary(node.span.join(right.span), op, node, right)
        return node

    def unary(self) -> Node:
        if self.at("-"):
            start = self.advance().span
            operand = self.unary()
            return Unary(start.join(operand.span), "-", operand)
        return self.power()

    def power(self) -> Node:
        base = self.primary()
        if self.at("^"):
            self.advance()
            if self.at("-"):
                start = self.advance().span
                inner = self.primary()
                exponent: Node = Unary(start.join(inner.span), "-", inner)
            else:
                exponent = self.primary()
            return Power(base.span.join(exponent.span), base, exponent)
        return base

    def index(self) -> Tuple[Fraction, Span]:
        start = self.tok.span
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "NUM":
            raise self.error(f"expected an integer index, found {self.describe(self.tok)}")
        tok = self.advance()
        value = Fraction(int(tok.text)) * sign
        end = tok.span
        if self.at("/"):
            self.advance()
            if self.tok.kind != "NUM":
                raise self.error(f"expected a denominator, found {self.describe(self.tok)}")
            den = self.advance()
            if int(den.text) == 0:
                raise self.error("zero denominator in index", den)
            value = value / int(den.text)
            end = den.span
        return value, start.join(end)

    def primary(self) -> Node:
        tok = self.tok
        if tok.kind == "NUM":
            self.advance()
            return Num(tok.span, int(tok.text))
        if tok.kind == "NAME":
            self.advance()
            if self.at("(") and self.tok.span.start == tok.span.end:
                return self.call(tok)
            if self.at("[") and self.tok.span.start == tok.span.end:
                self.advance()
                indices = [self.index()[0]]
                while self.at(","):
                    self.advance()
                    indices.append(self.index()[0])
                end = self.expect("]").span
                return Indexed(tok.span.join(end), tok.text, tuple(indices))
            if tok.text.endswith(("+", "-")):
                raise self.error(f"{tok.text[:-1]}{tok.text[-1]} needs an index list", tok)
            return Name(tok.span, tok.text)
        if self.at("("):
            start = self.advance().span
            items = [self.expr()]
            while self.at(","):
                self.advance()
                items.append(self.expr())
            end = self.expect(")").span
            if len(items) == 1:
                inner = items[0]
                inner.span = start.join(end)
                return inner
            return TupleExpr(start.join(end), items)
        if self.at("["):
            start = self.advance().span
            left = self.expr()
            self.expect(",")
            right = self.expr()
            end = self.expect("]").span
            node = Bracket(start.join(end), left, right)
            if self.at("@"):
                return self.matrix(node)
            return node
        raise self.error(f"unexpected {self.describe(tok)}")

    def call(self, name: Token) -> Call:
        self.expect("(")
        args: List[Node] = []
        options: Dict[str, Node] = {}
        if not self.at(")") and not self.at(";"):
            args.append(self.expr())
            while self.at(","):
                self.advance()
                args.append(self.expr())
        if self.at(";"):
            self.advance()
            while True:
                key = self.advance()
                if key.kind != "NAME":
                    raise self.error(f"expected an option name, found {self.describe(key)}", key)
                self.expect("=")
                options[key.text] = self.expr()
                if not self.at(","):
                    break
                self.advance()
        end = self.expect(")").span
        return Call(name.span.join(end), name.text, args, options)

    def matrix(self, node: Bracket) -> Matrix:
        self.expect("@")
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "NUM":
            raise self.error(f"expected the lift offset after '@', found {self.describe(self.tok)}")
        off = self.advance()
        rows = matrix_rows(node)
        if rows is None:
            raise CliSyntaxError("a matrix needs the form [[a,b],[c,d]] with integer entries", node.span, self.source)
        return Matrix(node.span.join(off.span), rows, sign * int(off.text))


def _int_literal(node: Node) -> Optional[int]:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Unary) and isinstance(node.operand, Num):
        return -node.operand.value
    return None


def matrix_rows(node: Node):
    """``((a, b), (c, d))`` when ``node`` is a bracket of two integer brackets, else None."""
    if not isinstance(node, Bracket):
        return None
    rows = []
    for row in (node.left, node.right):
        if not isinstance(row, Bracket):
            return None
        a, b = _int_literal(row.left), _int_literal(row.right)
        if a is None or b is None:
            return None
        rows.append((a, b))
    return tuple(rows)


def parse_program(source: str) -> List[Node]:
    return _Parser(source).program()


def parse(source: str) -> Node:
    """Parse a single expression (a single statement)."""
    stmts = parse_program(source)
    if len(stmts) != 1:
        span = stmts[1].span if len(stmts) > 1 else Span(1, 1, 2)
        raise CliSyntaxError("expected exactly one statement", span, source)
    return stmts[0]


def _index_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def unparse(node: Node) -> str:
    """Fully parenthesised source text that parses back to an equal tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Indexed):
        return f"{node.name}[{','.join(_index_text(x) for x in node.indices)}]"
    if isinstance(node, Call):
        args = ", ".join(unparse(a) for a in node.args)
        if node.options:
            opts = ", ".join(f"{k}={unparse(v)}" for k, v in node.options.items())
            args = f"{args}; {opts}" if args else f"; {opts}"
        return f"{node.name}({args})"
    if isinstance(node, Matrix):
        (a, b), (c, d) = node.rows
        return f"[[{a},{b}],[{c},{d}]]@{node.offset}"
    if isinstance(node, Bracket):
        return f"[{unparse(node.left)}, {unparse(node.right)}]"
    if isinstance(node, TupleExpr):
        return "(" + ", ".join(unparse(x) for x in node.items) + ")"
    if isinstance(node, Unary):
        return f"(-{unparse(node.operand)})"
    if isinstance(node, Binary):
        return f"({unparse(node.left)} {node.op} {unparse(node.right)})"
    if isinstance(node, Power):
        exponent = node.exponent
        if isinstance(exponent, Unary):
            exp_text = f"-{unparse(exponent.operand)}"
        else:
            exp_text = unparse(exponent)
        return f"{unparse(node.base)}^{exp_text}"
    if isinstance(node, InBlock):
        return f"in {node.context} {{ " + "; ".join(unparse(x) for x in node.body) + " }"
    raise TypeError(f"cannot print {type(node).__name__}")
