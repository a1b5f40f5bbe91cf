"""Expansions of polynomials in the q-Frobenius-Euler bases."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .families import (
    QFROBENIUS_EULER,
    QFROBENIUS_EULER_R,
    FamilyId,
    bernoulli_kernel,
    frobenius_euler_poly,
    frobenius_euler_poly_order_r,
    frobenius_kernel,
)
from .qcore import Poly, q_derivative_k, q_integral, qfactorial, weak_compositions
from .scalars import Field, Scalar, dump_scalar
from .umbral import apply_functional, series_pow

__all__ = [
    "BasisExpansion", "expand_in_fe", "expand_in_fe_order_r",
    "expand_in_fe_order_r_multinomial", "reconstruct", "basis_poly",
    "functional_bernoulli_identity",
]


@dataclass(frozen=True, eq=False)
class BasisExpansion:
    """Coefficients C_0..C_n of a polynomial in the basis {H^(r)_k(x|lambda)}."""

    basis: FamilyId
    field: Field
    coeffs: tuple

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    __hash__ = None

    def to_json(self) -> dict:
        return {
            "basis": self.basis.kind,
            "r": self.basis.r,
            "field": self.field.describe(),
            "coeffs": [dump_scalar(c) for c in self.coeffs],
        }


def basis_poly(F: Field, basis: FamilyId, k: int) -> Poly:
    if basis.kind == QFROBENIUS_EULER:
        return frobenius_euler_poly(F, k)
    if basis.kind == QFROBENIUS_EULER_R:
        return frobenius_euler_poly_order_r(F, k, basis.r)
    raise ValueError(f"{basis.kind} is not an expansion basis")


def _basis_id(r: int) -> FamilyId:
    return FamilyId(QFROBENIUS_EULER) if r == 1 else FamilyId(QFROBENIUS_EULER_R, r)


def expand_in_fe(F: Field, p: Poly) -> BasisExpansion:
    """C_k = (p^(k)(1) - lambda p^(k)(0)) / ([k]_q! (1 - lambda))."""
    scale = 1 / (1 - F.lam)
    coeffs = []
    for k in range(p.degree + 1):
        d = q_derivative_k(F, p, k)
        coeffs.append(scale * (d(F.one) - F.lam * d[0]) / qfactorial(F, k))
    return BasisExpansion(FamilyId(QFROBENIUS_EULER), F, tuple(coeffs))


def expand_in_fe_order_r(F: Field, p: Poly, r: int) -> BasisExpansion:
    """C_k = <kernel(t)^r | D_q^k p> / [k]_q!, via the functional."""
    kernel_r = series_pow(frobenius_kernel(F, max(p.degree, 0)), r)
    coeffs = [
        apply_functional(kernel_r, q_derivative_k(F, p, k)) / qfactorial(F, k)
        for k in range(p.degree + 1)
    ]
    return BasisExpansion(_basis_id(r), F, tuple(coeffs))


def expand_in_fe_order_r_multinomial(F: Field, p: Poly, r: int) -> BasisExpansion:
    """Same coefficients from the binomial expansion of (e_q(t) - lambda)^r.

    (e_q(t))^j contributes sum over compositions l_1+...+l_j = l of
    1/prod [l_i]_q!; the j = 0 term is the empty composition at l = 0.
    """
    n = p.degree
    lam = F.lam
    # weight[l] = sum_j binom(r, j) (-lam)^(r-j) sum_{l_1+..+l_j=l} 1/prod [l_i]_q!
    weight = []
    for l in range(n + 1):
        w = F.zero
        for j in range(r + 1):
            inner = F.zero
            for parts in weak_compositions(l, j):
                den = F.one
                for li in parts:
                    den *= qfactorial(F, li)
                inner += 1 / den
            if inner:
                w += comb(r, j) * (-lam) ** (r - j) * inner
        weight.append(w)
    scale = 1 / (1 - lam) ** r
    # p^(m)(0) = [m]_q! * p_m
    at_zero = [qfactorial(F, m) * p[m] for m in range(n + 1)]
    coeffs = []
    for k in range(n + 1):
        s = F.zero
        for l in range(n - k + 1):
            if at_zero[k + l]:
                s += weight[l] * at_zero[k + l]
        coeffs.append(scale * s / qfactorial(F, k))
    return BasisExpansion(_basis_id(r), F, tuple(coeffs))


def reconstruct(e: BasisExpansion) -> Poly:
    result = Poly()
    for k, c in enumerate(e.coeffs):
        if c:
            result = result + basis_poly(e.field, e.basis, k).scale(c)
    return result


def functional_bernoulli_identity(F: Field, n: int) -> tuple[Scalar, Scalar]:
    """Both sides of <(e_q(t) - 1)/t | H_n(x)> = int_0^1 H_n(u) d_q u."""
    h = frobenius_euler_poly(F, n)
    lhs = apply_functional(bernoulli_kernel(F, n), h)
    rhs = q_integral(F, h, F.zero, F.one)
    return lhs, rhs
