"""Recursive-descent parser for polynomial expressions in x.

Grammar (whitespace is insignificant)::

    expr     := term (('+' | '-') term)*
    term     := unary ('*'? unary)*        implicit product before 'x' or '('
    unary    := ('-' | '+') unary | factor
    factor   := base ('^' uint)?
    base     := '(' expr ')' | 'x' | rational
    rational := uint ('/' posint)?
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qcore import Poly
from .scalars import Field

__all__ = ["ParseError", "parse_poly_expr", "parse_poly", "Lit", "Var", "Neg", "Sum", "Product", "Pow"]


MAX_DEGREE = 4096


class ParseError(ValueError):
    def __init__(self, offset: int, expected):
        self.offset = offset
        self.expected = sorted(set(expected))
        super().__init__(f"at offset {offset}: expected {' or '.join(self.expected)}")


@dataclass(frozen=True)
class Lit:
    value: Fraction

    def to_poly(self, F):
        return Poly([F(self.value)])


@dataclass(frozen=True)
class Var:
    def to_poly(self, F):
        return Poly([F.zero, F.one])


@dataclass(frozen=True)
class Neg:
    arg: object

    def to_poly(self, F):
        return -self.arg.to_poly(F)


@dataclass(frozen=True)
class Sum:
    """Chain of additions/subtractions; ``terms`` holds (sign, node) pairs."""

    terms: tuple

    def to_poly(self, F):
        total = Poly()
        for sign, node in self.terms:
            total = total + node.to_poly(F) if sign > 0 else total - node.to_poly(F)
        return total


@dataclass(frozen=True)
class Product:
    factors: tuple

    def to_poly(self, F):
        result = Poly([F.one])
        for node in self.factors:
            result = result * node.to_poly(F)
        return result


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int

    def to_poly(self, F):
        base = self.base.to_poly(F)
        if base.degree * self.exponent > MAX_DEGREE:
            raise ValueError(f"expression degree exceeds {MAX_DEGREE}")
        return base ** self.exponent


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def uint(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise ParseError(start, ["integer"])
        return int(self.src[start:self.pos])

    def expr(self):
        terms = [(1, self.term())]
        while self.peek() in ("+", "-"):
            sign = 1 if self.src[self.pos] == "+" else -1
            self.pos += 1
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        factors = [self.unary()]
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
            elif not (c and c in "x("):
                return factors[0] if len(factors) == 1 else Product(tuple(factors))
            factors.append(self.unary())

    def unary(self):
        c = self.peek()
        if c and c in "+-":
            self.pos += 1
            arg = self.unary()
            return Neg(arg) if c == "-" else arg
        return self.factor()

    def factor(self):
        base = self.base()
        if self.peek() == "^":
            self.pos += 1
            self.peek()
            if not self.src[self.pos:self.pos + 1].isdigit():
                raise ParseError(self.pos, ["integer exponent"])
            return Pow(base, self.uint())
        return base

    def base(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise ParseError(self.pos, ["')'", "'+'", "'-'", "'*'"])
            self.pos += 1
            return node
        if c == "x":
            self.pos += 1
            return Var()
        if c and c in "0123456789":
            num = self.uint()
            if self.peek() == "/":
                self.pos += 1
                self.peek()
                at = self.pos
                den = self.uint()
                if den == 0:
                    raise ParseError(at, ["positive integer"])
                return Lit(Fraction(num, den))
            return Lit(Fraction(num))
        raise ParseError(self.pos, ["'('", "'x'", "rational"])


def parse_poly_expr(src):
    """Parse ``src`` (str or UTF-8 bytes) into an expression tree.

    Errors carry the byte offset of the offending input.
    """
    if isinstance(src, bytes):
        try:
            src = src.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(exc.start, ["UTF-8 text"]) from None
    p = _Parser(src)
    try:
        node = p.expr()
        if p.peek():
            raise ParseError(p.pos, ["'+'", "'-'", "'*'", "end of input"])
    except ParseError as exc:
        raise ParseError(len(src[: exc.offset].encode("utf-8")), exc.expected) from None
    except RecursionError:
        raise ParseError(len(src[: p.pos].encode("utf-8")), ["shallower nesting"]) from None
    return node


def parse_poly(src: str, F: Field) -> Poly:
    return parse_poly_expr(src).to_poly(F)
