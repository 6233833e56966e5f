"""Text form of Scalars: a small recursive-descent parser.

Grammar (``^`` binds tighter than unary minus)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "i" | SYMBOL | "conj" "(" expr ")" | "(" expr ")"
"""

import re
from dataclasses import dataclass

from ..errors import ParseError, UnknownCoordinate, UnknownSymbol
from .scalar import I, Scalar, format_scalar
from .symbols import CHART_INVOLUTION

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    column: int


def tokenize(text, line=1, column=1):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace remains
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        col = column + start
        if num is not None:
            tokens.append(Token("int", num, col))
        elif name is not None:
            tokens.append(Token("name", name, col))
        else:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}", line, col)
            tokens.append(Token("op", op, col))
        pos = m.end()
    tokens.append(Token("end", "", column + len(text.rstrip())))
    return tokens


class _Parser:
    def __init__(self, text, line, column, chart, involution, constant=False):
        self.constant = constant
        self.tokens = tokenize(text, line, column)
        self.k = 0
        self.line = line
        self.chart = chart
        self.involution = involution

    @property
    def tok(self):
        return self.tokens[self.k]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, self.line, tok.column)

    def take(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.k += 1
            return True
        return False

    def expect(self, text):
        if not self.take(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def parse(self):
        if self.tok.kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.take("*"):
                value = value * self.unary()
            elif self.tok.kind == "op" and self.tok.text == "/":
                tok = self.tok
                self.k += 1
                d = self.unary()
                if not d:
                    raise self.error("division by zero", tok)
                value = value / d
            else:
                return value

    def unary(self):
        if self.take("-"):
            return -self.unary()
        if self.take("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if not self.take("^"):
            return base
        neg = self.take("-")
        tok = self.tok
        if tok.kind != "int":
            raise self.error("exponent must be an integer literal")
        self.k += 1
        e = int(tok.text)
        if neg:
            if not base:
                raise self.error("zero raised to a negative power", tok)
            e = -e
        return base ** e

    def atom(self):
        tok = self.tok
        if tok.kind == "int":
            self.k += 1
            return Scalar.coerce(int(tok.text))
        if tok.kind == "name":
            self.k += 1
            if tok.text == "i":
                return I
            if tok.text == "conj":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                try:
                    return inner.conjugate(self.involution)
                except UnknownSymbol as e:
                    raise ParseError(str(e), self.line, tok.column) from None
            return self.symbol(tok)
        if self.take("("):
            value = self.expr()
            self.expect(")")
            return value
        found = tok.text or "end of input"
        raise self.error(f"unexpected {found!r}")

    def symbol(self, tok):
        name = tok.text
        if self.constant:
            raise ParseError(f"expected a constant, found symbol {name!r}", self.line, tok.column)
        if self.chart is not None:
            if name not in self.chart:
                raise UnknownCoordinate(
                    f"{name!r} is not a coordinate of the n={self.chart.n} chart",
                    self.line, tok.column)
        elif not self.involution.knows(name):
            raise UnknownCoordinate(f"unknown symbol {name!r}", self.line, tok.column)
        return Scalar.symbol(name)


def parse_scalar(text, chart=None, *, line=1, column=1, involution=CHART_INVOLUTION, constant=False):
    """Parse coefficient text into a canonical :class:`Scalar`.

    With ``chart`` given, every symbol must be one of its coordinates;
    ``constant=True`` forbids symbols altogether.  ``line``/``column`` place
    error positions inside a larger document.
    """
    return _Parser(text, line, column, chart, involution, constant).parse()


def serialize_scalar(s):
    return format_scalar(s)
