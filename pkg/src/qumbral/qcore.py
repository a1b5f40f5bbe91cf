"""q-combinatorics and q-calculus on dense polynomials."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, Sequence

from .scalars import Field, Scalar, dump_scalar, load_scalar

__all__ = [
    "Poly", "PartsMismatch", "Unsupported",
    "qint", "qfactorial", "qbinomial", "qmultinomial", "qshifted_factorial",
    "weak_compositions", "q_derivative", "q_derivative_k", "q_antiderivative",
    "q_integral",
]


class PartsMismatch(ValueError):
    pass


class Unsupported(ValueError):
    pass


class Poly:
    """Dense polynomial in x; ``coeffs[k]`` is the coefficient of x^k.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self), len(other))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self or not other:
            return Poly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly([1])
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "Poly":
        return Poly([c * a for a in self.coeffs])

    def __call__(self, c):
        """Horner evaluation; ``c`` may be a scalar or another Poly."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * c + a
        return acc

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def to_json(self) -> list:
        return [dump_scalar(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Poly":
        return cls([load_scalar(c) for c in data])


@lru_cache(maxsize=None)
def qint(F: Field, n: int) -> Scalar:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    total, qp = F.zero, F.one
    for _ in range(n):
        total += qp
        qp *= F.q
    return total


@lru_cache(maxsize=None)
def qfactorial(F: Field, n: int) -> Scalar:
    if n == 0:
        return F.one
    return qfactorial(F, n - 1) * qint(F, n)


@lru_cache(maxsize=None)
def qbinomial(F: Field, n: int, k: int) -> Scalar:
    """Gaussian binomial; zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return F.zero
    return qfactorial(F, n) / (qfactorial(F, k) * qfactorial(F, n - k))


def qmultinomial(F: Field, n: int, parts: Sequence[int]) -> Scalar:
    if sum(parts) != n:
        raise PartsMismatch(f"parts {list(parts)} do not sum to {n}")
    den = F.one
    for i in parts:
        den *= qfactorial(F, i)
    return qfactorial(F, n) / den


def qshifted_factorial(F: Field, a, n) -> Scalar:
    """(a; q)_n for finite n."""
    if n == math.inf:
        raise Unsupported("the infinite product (a; q)_inf is not supported")
    result, qp = F.one, F.one
    for _ in range(n):
        result *= 1 - a * qp
        qp *= F.q
    return result


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative ints summing to ``n`` (colex order)."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for last in range(n + 1):
        for head in weak_compositions(n - last, parts - 1):
            yield head + (last,)


def q_derivative(F: Field, p: Poly) -> Poly:
    return Poly([qint(F, k) * c for k, c in enumerate(p.coeffs)][1:])


def q_derivative_k(F: Field, p: Poly, k: int) -> Poly:
    for _ in range(k):
        if not p:
            break
        p = q_derivative(F, p)
    return p


def q_antiderivative(F: Field, p: Poly) -> Poly:
    """Inverse of the q-derivative with zero constant term."""
    return Poly([0] + [c / qint(F, k + 1) for k, c in enumerate(p.coeffs)])


def q_integral(F: Field, p: Poly, a, b) -> Scalar:
    """Jackson integral of a polynomial from a to b."""
    anti = q_antiderivative(F, p)
    return F(0) + anti(b) - anti(a)
