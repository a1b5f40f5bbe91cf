"""Carlitz q-Bernoulli numbers and polynomials.

beta_n(x) depends on x only through y = q^x, and [x]_q = (1 - y)/(1 - q), so
both beta_n(x) and polynomials in [x]_q are stored as :class:`Poly` in y with
coefficients in Q(q) (or Q in numeric mode).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .qcore import Poly, qint
from .scalars import Field, dump_scalar

__all__ = [
    "carlitz_numbers", "carlitz_poly", "carlitz_poly_via_numbers",
    "qbracket_to_y", "expand_in_carlitz_basis", "reconstruct_carlitz",
    "carlitz_to_json",
]


@lru_cache(maxsize=None)
def carlitz_poly(F: Field, n: int) -> Poly:
    """beta_n(x) as a polynomial in y = q^x:
    (1-q)^-n sum_l binom(n, l) (-1)^l (l+1)/[l+1]_q y^l."""
    pre = 1 / (1 - F.q) ** n
    return Poly([pre * comb(n, l) * (-1) ** l * (l + 1) / qint(F, l + 1) for l in range(n + 1)])


def carlitz_numbers(F: Field, N: int) -> list:
    """beta_0..beta_N, the polynomials at x = 0 (y = 1)."""
    return [carlitz_poly(F, n)(F.one) for n in range(N + 1)]


def _qbracket_x(F: Field) -> Poly:
    return Poly([1 / (1 - F.q), -1 / (1 - F.q)])


def carlitz_poly_via_numbers(F: Field, n: int) -> Poly:
    """sum_l binom(n, l) q^(lx) beta_l [x]_q^(n-l), expanded in y."""
    beta = carlitz_numbers(F, n)
    bracket = _qbracket_x(F)
    result = Poly()
    for l in range(n + 1):
        result = result + (Poly.monomial(l, F.one) * bracket ** (n - l)).scale(comb(n, l) * beta[l])
    return result


def qbracket_to_y(F: Field, p: Poly) -> Poly:
    """Rewrite p([x]_q), given by its coefficients in [x]_q, as a polynomial in y."""
    return p(_qbracket_x(F)) + Poly()


def expand_in_carlitz_basis(F: Field, p: Poly) -> list:
    """Coefficients C_k with sum_k C_k beta_k(x) = p([x]_q).

    Back-substitution against the triangular basis beta_n (degree n in y).
    """
    rest = qbracket_to_y(F, p)
    n = rest.degree
    coeffs = [F.zero] * (n + 1)
    for k in range(n, -1, -1):
        b = carlitz_poly(F, k)
        c = rest[k] / b[k]
        coeffs[k] = c
        if c:
            rest = rest - b.scale(c)
    assert not rest
    return coeffs


def reconstruct_carlitz(F: Field, coeffs) -> Poly:
    result = Poly()
    for k, c in enumerate(coeffs):
        result = result + carlitz_poly(F, k).scale(c)
    return result


def carlitz_to_json(p: Poly) -> dict:
    return {"variable": "q^x", "coeffs": [dump_scalar(c) for c in p.coeffs]}
