"""The q-umbral algebra of truncated divided-power series.

A series f(t) = sum_k a_k t^k / [k]_q! is stored through its divided
coefficients a_k, which are exactly the functional values <f(t) | x^k>.
Products are q-binomial convolutions of these coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qcore import Poly, q_derivative, qbinomial, qfactorial
from .scalars import Field, Scalar, dump_scalar, load_scalar

__all__ = [
    "DividedSeries", "NotInvertible", "OrderTooLow",
    "one_series", "eq_series", "scaled_eq_series", "t_power_series",
    "series_mul", "series_inverse", "series_pow",
    "apply_functional", "apply_operator",
]


class NotInvertible(ArithmeticError):
    pass


class OrderTooLow(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class DividedSeries:
    field: Field
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, DividedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "DividedSeries") -> "DividedSeries":
        n = min(len(self.coeffs), len(other.coeffs))
        return DividedSeries(self.field, tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    def __sub__(self, other: "DividedSeries") -> "DividedSeries":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, DividedSeries):
            return series_mul(self, other)
        return self.scale(other)

    def __pow__(self, r: int):
        return series_pow(self, r)

    def scale(self, c) -> "DividedSeries":
        return DividedSeries(self.field, tuple(c * a for a in self.coeffs))

    def truncate(self, order: int) -> "DividedSeries":
        return DividedSeries(self.field, self.coeffs[: order + 1])

    def inverse(self) -> "DividedSeries":
        return series_inverse(self)

    def ordinary_coeffs(self) -> list:
        """Coefficients of plain powers t^k, i.e. a_k / [k]_q!."""
        return [a / qfactorial(self.field, k) for k, a in enumerate(self.coeffs)]

    def to_json(self) -> dict:
        return {"order": self.order, "divided_coeffs": [dump_scalar(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, F: Field, data: dict) -> "DividedSeries":
        coeffs = tuple(F(load_scalar(a)) for a in data["divided_coeffs"])
        if len(coeffs) != data["order"] + 1:
            raise ValueError("order does not match coefficient count")
        return cls(F, coeffs)


def one_series(F: Field, N: int) -> DividedSeries:
    return DividedSeries(F, (F.one,) + (F.zero,) * N)


def eq_series(F: Field, N: int) -> DividedSeries:
    """The q-exponential e_q(t): every divided coefficient is 1."""
    return DividedSeries(F, (F.one,) * (N + 1))


def scaled_eq_series(F: Field, y, N: int) -> DividedSeries:
    """e_q(yt), whose divided coefficients are y^k (with 0^0 = 1)."""
    y = F(y) if not isinstance(y, Poly) else y
    coeffs, yk = [], F.one
    for _ in range(N + 1):
        coeffs.append(yk)
        yk = yk * y
    return DividedSeries(F, tuple(coeffs))


def t_power_series(F: Field, k: int, N: int) -> DividedSeries:
    """The monomial t^k truncated at order N."""
    coeffs = [F.zero] * (N + 1)
    if k <= N:
        coeffs[k] = qfactorial(F, k)
    return DividedSeries(F, tuple(coeffs))


def series_mul(f: DividedSeries, g: DividedSeries) -> DividedSeries:
    F = f.field
    N = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(N + 1):
        s = F.zero
        for k in range(n + 1):
            if a[k] and b[n - k]:
                s += qbinomial(F, n, k) * a[k] * b[n - k]
        out.append(s)
    return DividedSeries(F, tuple(out))


def series_inverse(f: DividedSeries) -> DividedSeries:
    F = f.field
    a = f.coeffs
    if not a[0]:
        raise NotInvertible("series has zero constant term")
    inv0 = 1 / a[0]
    g = [inv0]
    for n in range(1, f.order + 1):
        s = F.zero
        for k in range(1, n + 1):
            if a[k]:
                s += qbinomial(F, n, k) * a[k] * g[n - k]
        g.append(-inv0 * s)
    return DividedSeries(F, tuple(g))


def series_pow(f: DividedSeries, r: int) -> DividedSeries:
    if r < 0:
        return series_pow(series_inverse(f), -r)
    result = one_series(f.field, f.order)
    for _ in range(r):
        result = series_mul(result, f)
    return result


def apply_functional(f: DividedSeries, p: Poly) -> Scalar:
    """<f(t) | p(x)> = sum_k p_k a_k."""
    if p.degree > f.order:
        raise OrderTooLow(f"series order {f.order} < polynomial degree {p.degree}")
    total = f.field.zero
    for k, c in enumerate(p.coeffs):
        if c:
            total += c * f.coeffs[k]
    return total


def apply_operator(f: DividedSeries, p: Poly) -> Poly:
    """Action of f(t) on P, where t^k acts as the k-th q-derivative."""
    if p.degree > f.order:
        raise OrderTooLow(f"series order {f.order} < polynomial degree {p.degree}")
    F = f.field
    result = Poly()
    deriv = p
    for k in range(p.degree + 1):
        if f.coeffs[k]:
            result = result + deriv.scale(f.coeffs[k] / qfactorial(F, k))
        deriv = q_derivative(F, deriv)
    return result
