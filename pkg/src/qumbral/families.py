"""Number and polynomial generators for the q-Bernoulli, q-Euler and
q-Frobenius-Euler families (plain and of order r).

Every number table is obtained by inverting a kernel series; the classical
recurrences and convolutions are kept as separate routes so they can be
checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .qcore import Poly, qbinomial, qint, qmultinomial, weak_compositions
from .scalars import Field, dump_scalar, render
from .umbral import DividedSeries, series_inverse, series_pow

__all__ = [
    "FamilyId", "NumberTable", "BERNOULLI_R_ASSUMPTION",
    "QBERNOULLI", "QEULER", "QFROBENIUS_EULER", "QFROBENIUS_EULER_R", "QBERNOULLI_R",
    "frobenius_kernel", "bernoulli_kernel", "euler_kernel", "appell_poly",
    "frobenius_euler_numbers", "frobenius_euler_numbers_by_recurrence",
    "frobenius_euler_poly", "frobenius_euler_numbers_order_r",
    "frobenius_euler_numbers_order_r_by_convolution", "frobenius_euler_poly_order_r",
    "q_bernoulli_numbers", "q_bernoulli_poly", "q_euler_numbers", "q_euler_poly",
    "q_bernoulli_numbers_order_r", "q_bernoulli_poly_order_r",
    "numbers_for", "poly_for",
]

QBERNOULLI = "q-bernoulli"
QEULER = "q-euler"
QFROBENIUS_EULER = "q-frobenius-euler"
QFROBENIUS_EULER_R = "q-frobenius-euler-r"
QBERNOULLI_R = "q-bernoulli-r"
_KINDS = (QBERNOULLI, QEULER, QFROBENIUS_EULER, QFROBENIUS_EULER_R, QBERNOULLI_R)

BERNOULLI_R_ASSUMPTION = "B^(r) generated by (t/(e_q(t)-1))^r e_q(xt)"


@dataclass(frozen=True)
class FamilyId:
    kind: str
    r: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.r < 1:
            raise ValueError("order r must be at least 1")

    @property
    def assumption(self) -> str | None:
        return BERNOULLI_R_ASSUMPTION if self.kind == QBERNOULLI_R else None


@dataclass(frozen=True)
class NumberTable:
    family: FamilyId
    values: tuple
    field: Field = field(compare=False)

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def to_json(self) -> dict:
        out = {
            "family": self.family.kind,
            "r": self.family.r,
            "values": [dump_scalar(v) for v in self.values],
        }
        if self.family.assumption:
            out["assumption"] = self.family.assumption
        return out

    def to_latex(self) -> str:
        rows = [r"\begin{tabular}{rl}", r"$n$ & value \\ \hline"]
        rows += [f"{n} & ${render(v, latex=True)}$ \\\\" for n, v in enumerate(self.values)]
        rows.append(r"\end{tabular}")
        return "\n".join(rows)


def frobenius_kernel(F: Field, N: int) -> DividedSeries:
    """(e_q(t) - lambda) / (1 - lambda)."""
    c = 1 / (1 - F.lam)
    return DividedSeries(F, (F.one,) + (c,) * N)


def euler_kernel(F: Field, N: int) -> DividedSeries:
    """(e_q(t) + 1) / 2."""
    half = F(1) / 2
    return DividedSeries(F, (F.one,) + (half,) * N)


def bernoulli_kernel(F: Field, N: int) -> DividedSeries:
    """(e_q(t) - 1) / t, with divided coefficients 1/[k+1]_q."""
    return DividedSeries(F, tuple(1 / qint(F, k + 1) for k in range(N + 1)))


def appell_poly(F: Field, values, n: int) -> Poly:
    """sum_l qbinom(n, l) v_{n-l} x^l."""
    return Poly([qbinomial(F, n, l) * values[n - l] for l in range(n + 1)])


@lru_cache(maxsize=None)
def frobenius_euler_numbers(F: Field, N: int) -> NumberTable:
    values = series_inverse(frobenius_kernel(F, N)).coeffs
    return NumberTable(FamilyId(QFROBENIUS_EULER), values, F)


def frobenius_euler_numbers_by_recurrence(F: Field, N: int) -> NumberTable:
    """H_n = 1/(lambda - 1) * sum_{l<n} qbinom(n, l) H_l."""
    c = 1 / (F.lam - 1)
    H = [F.one]
    for n in range(1, N + 1):
        H.append(c * sum((qbinomial(F, n, l) * H[l] for l in range(n)), F.zero))
    return NumberTable(FamilyId(QFROBENIUS_EULER), tuple(H), F)


def frobenius_euler_poly(F: Field, n: int) -> Poly:
    return appell_poly(F, frobenius_euler_numbers(F, n).values, n)


@lru_cache(maxsize=None)
def frobenius_euler_numbers_order_r(F: Field, N: int, r: int) -> NumberTable:
    base = DividedSeries(F, frobenius_euler_numbers(F, N).values)
    return NumberTable(FamilyId(QFROBENIUS_EULER_R, r), series_pow(base, r).coeffs, F)


def frobenius_euler_numbers_order_r_by_convolution(F: Field, N: int, r: int) -> NumberTable:
    """Sum over compositions of n into r parts of q-multinomial times H products."""
    H = frobenius_euler_numbers(F, N).values
    out = []
    for n in range(N + 1):
        s = F.zero
        for parts in weak_compositions(n, r):
            term = qmultinomial(F, n, parts)
            for i in parts:
                term *= H[i]
            s += term
        out.append(s)
    return NumberTable(FamilyId(QFROBENIUS_EULER_R, r), tuple(out), F)


def frobenius_euler_poly_order_r(F: Field, n: int, r: int) -> Poly:
    return appell_poly(F, frobenius_euler_numbers_order_r(F, n, r).values, n)


@lru_cache(maxsize=None)
def q_bernoulli_numbers(F: Field, N: int) -> NumberTable:
    values = series_inverse(bernoulli_kernel(F, N)).coeffs
    return NumberTable(FamilyId(QBERNOULLI), values, F)


def q_bernoulli_poly(F: Field, n: int) -> Poly:
    return appell_poly(F, q_bernoulli_numbers(F, n).values, n)


@lru_cache(maxsize=None)
def q_euler_numbers(F: Field, N: int) -> NumberTable:
    values = series_inverse(euler_kernel(F, N)).coeffs
    return NumberTable(FamilyId(QEULER), values, F)


def q_euler_poly(F: Field, n: int) -> Poly:
    return appell_poly(F, q_euler_numbers(F, n).values, n)


@lru_cache(maxsize=None)
def q_bernoulli_numbers_order_r(F: Field, N: int, r: int) -> NumberTable:
    base = DividedSeries(F, q_bernoulli_numbers(F, N).values)
    return NumberTable(FamilyId(QBERNOULLI_R, r), series_pow(base, r).coeffs, F)


def q_bernoulli_poly_order_r(F: Field, n: int, r: int) -> Poly:
    return appell_poly(F, q_bernoulli_numbers_order_r(F, n, r).values, n)


def numbers_for(F: Field, family: FamilyId, N: int) -> NumberTable:
    if family.kind == QBERNOULLI:
        return q_bernoulli_numbers(F, N)
    if family.kind == QEULER:
        return q_euler_numbers(F, N)
    if family.kind == QFROBENIUS_EULER:
        return frobenius_euler_numbers(F, N)
    if family.kind == QFROBENIUS_EULER_R:
        return frobenius_euler_numbers_order_r(F, N, family.r)
    return q_bernoulli_numbers_order_r(F, N, family.r)


def poly_for(F: Field, family: FamilyId, n: int) -> Poly:
    return appell_poly(F, numbers_for(F, family, n).values, n)

