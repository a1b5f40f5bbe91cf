"""Exact coefficient fields.

Two modes are supported:

* numeric -- ``q`` and ``lambda`` are fixed rationals and every scalar is a
  :class:`fractions.Fraction`;
* symbolic -- scalars live in the rational function field Q(q, lambda).

Symbolic elements are sympy sparse fraction-field elements.  They are kept
reduced (numerator and denominator coprime over Z, denominator with a positive
leading coefficient in lex order, q > lambda), so ``==`` is equality of
canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from sympy import QQ
from sympy.polys.fields import FracElement, field

__all__ = [
    "Field", "RatFunc", "Scalar", "DivisionByZero", "PoleAtPoint", "InvalidField",
    "parse_rational", "inv", "canonicalize", "evaluate", "dump_scalar",
    "load_scalar", "render", "subs_lambda",
]

QL, _Q, _LAM = field("q,lambda", QQ)

RatFunc = FracElement
Scalar = Union[Fraction, FracElement]


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtPoint(ArithmeticError):
    pass


class InvalidField(ValueError):
    pass


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int/Fraction into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    try:
        num, sep, den = s.partition("/")
        if sep and not den.strip().isdigit():
            raise ValueError
        return Fraction(int(num), int(den) if sep else 1)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational literal: {text!r}") from None


@dataclass(frozen=True)
class Field:
    """Scalar field configuration.

    ``Field()`` is the symbolic field Q(q, lambda); ``Field.numeric(q, lam)``
    fixes both parameters to rationals.
    """

    q_value: Fraction | None = None
    lambda_value: Fraction | None = None

    def __post_init__(self):
        if (self.q_value is None) != (self.lambda_value is None):
            raise InvalidField("numeric mode needs both q and lambda")
        if self.q_value is not None:
            if self.q_value in (1, -1):
                raise InvalidField("q must not be a root of unity (q = 1 or q = -1)")
            if self.lambda_value == 1:
                raise InvalidField("lambda must differ from 1")

    @classmethod
    def symbolic(cls) -> "Field":
        return cls()

    @classmethod
    def numeric(cls, q, lam) -> "Field":
        return cls(parse_rational(q), parse_rational(lam))

    @property
    def is_symbolic(self) -> bool:
        return self.q_value is None

    @property
    def mode(self) -> str:
        return "symbolic" if self.is_symbolic else "numeric"

    @property
    def q(self) -> Scalar:
        return _Q if self.is_symbolic else self.q_value

    @property
    def lam(self) -> Scalar:
        return _LAM if self.is_symbolic else self.lambda_value

    @property
    def zero(self) -> Scalar:
        return QL.zero if self.is_symbolic else Fraction(0)

    @property
    def one(self) -> Scalar:
        return QL.one if self.is_symbolic else Fraction(1)

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction, rational string or field element."""
        if isinstance(value, FracElement):
            if not self.is_symbolic:
                return evaluate(value, self.q_value, self.lambda_value)
            return value
        if isinstance(value, str):
            value = parse_rational(value)
        if self.is_symbolic:
            return QL(QQ.convert(Fraction(value)))
        return Fraction(value)

    def specialize(self, value: Scalar) -> Scalar:
        """Map a symbolic scalar into this (numeric) field."""
        return self(value)

    def describe(self) -> dict:
        if self.is_symbolic:
            return {"mode": "symbolic"}
        return {"mode": "numeric", "q": str(self.q_value), "lambda": str(self.lambda_value)}


def inv(a: Scalar) -> Scalar:
    if not a:
        raise DivisionByZero("inverse of zero")
    return 1 / a


def canonicalize(a: Scalar) -> Scalar:
    if isinstance(a, FracElement):
        return a.field.new(a.numer, a.denom)
    return Fraction(a)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _poly_at(poly, q0: Fraction, l0: Fraction) -> Fraction:
    total = Fraction(0)
    for (dq, dl), c in poly.terms():
        total += _to_fraction(c) * q0**dq * l0**dl
    return total


def evaluate(f: Scalar, q0, lam0) -> Fraction:
    """Substitute ``q = q0`` and ``lambda = lam0`` into a reduced scalar."""
    if not isinstance(f, FracElement):
        return Fraction(f)
    q0, lam0 = parse_rational(q0), parse_rational(lam0)
    den = _poly_at(f.denom, q0, lam0)
    if den == 0:
        raise PoleAtPoint(f"{f} has a pole at q={q0}, lambda={lam0}")
    return _poly_at(f.numer, q0, lam0) / den


def subs_lambda(a: Scalar, lam0) -> Scalar:
    """Specialize lambda only, leaving q symbolic."""
    if isinstance(a, FracElement):
        try:
            return a.subs(_LAM, QQ.convert(parse_rational(lam0)))
        except ZeroDivisionError:
            raise PoleAtPoint(f"{a} has a pole at lambda={lam0}") from None
    return a


def _dump_terms(poly) -> list:
    # lex descending, q before lambda
    terms = sorted(poly.terms(), key=lambda t: t[0], reverse=True)
    return [[str(_to_fraction(c)), dq, dl] for (dq, dl), c in terms]


def dump_scalar(a: Scalar) -> Any:
    """JSON form: ``"p/q"`` for rationals, ``{"num": ..., "den": ...}`` otherwise."""
    if isinstance(a, FracElement):
        return {"num": _dump_terms(a.numer), "den": _dump_terms(a.denom)}
    return str(Fraction(a))


def _load_terms(terms):
    poly = QL.ring.zero
    for coef, dq, dl in terms:
        poly += QL.ring({(int(dq), int(dl)): QQ.convert(parse_rational(coef))})
    return poly


def load_scalar(obj) -> Scalar:
    if isinstance(obj, dict):
        den = _load_terms(obj["den"])
        if not den:
            raise DivisionByZero("zero denominator")
        return QL.new(_load_terms(obj["num"]), den)
    return parse_rational(obj)


def render(a: Scalar, latex: bool = False) -> str:
    """Human-readable form; denominators are shown factored."""
    if isinstance(a, FracElement):
        from sympy import factor, latex as to_latex

        expr = factor(a.as_expr())
        return to_latex(expr) if latex else str(expr)
    a = Fraction(a)
    if latex and a.denominator != 1:
        sign = "-" if a < 0 else ""
        return rf"{sign}\frac{{{abs(a.numerator)}}}{{{a.denominator}}}"
    return str(a)
