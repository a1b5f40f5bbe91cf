"""Registry of exact identities and the harness that checks them.

Each identity is a function ``sides(F, n, r, ctx) -> (lhs, rhs)``; a check
passes only when both sides are equal as canonical forms.  Symbolic mode runs
every (n, r) in range over Q(q, lambda); numeric mode repeats the sweep at
``trials`` random rational points (q, lambda).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from . import families as fam
from .basis import (
    BasisExpansion,
    expand_in_fe,
    expand_in_fe_order_r,
    expand_in_fe_order_r_multinomial,
    functional_bernoulli_identity,
    reconstruct,
)
from .carlitz import (
    carlitz_poly,
    carlitz_poly_via_numbers,
    expand_in_carlitz_basis,
    qbracket_to_y,
    reconstruct_carlitz,
)
from .qcore import Poly, q_derivative, q_integral, qbinomial, qfactorial, qint, qmultinomial, weak_compositions
from .scalars import Field, PoleAtPoint, dump_scalar, subs_lambda
from .umbral import apply_functional, apply_operator, series_inverse, series_mul, series_pow, t_power_series

__all__ = [
    "Identity", "VerificationReport", "UnknownIdentity", "REGISTRY", "register",
    "verify_identity", "run_suite", "random_point", "random_poly",
]


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    sides: Callable
    min_n: int = 0
    uses_r: bool = False
    assumption: str | None = None


@dataclass
class Context:
    rng: random.Random
    max_n: int


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str
    elapsed: float
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "ExactPass"

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "elapsed": round(self.elapsed, 6),
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


REGISTRY: dict[str, Identity] = {}


def register(name: str, description: str, *, min_n: int = 0, uses_r: bool = False, assumption=None):
    def deco(fn):
        REGISTRY[name] = Identity(name, description, fn, min_n, uses_r, assumption)
        return fn

    return deco


def _dump(obj):
    if isinstance(obj, Poly):
        return {"poly": obj.to_json()}
    if isinstance(obj, BasisExpansion):
        return obj.to_json()
    if isinstance(obj, (list, tuple)):
        return [_dump(o) for o in obj]
    return dump_scalar(obj)


def random_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    """Random rational (q, lambda) avoiding q = +-1 and lambda = 1."""
    while True:
        q = Fraction(rng.randint(-12, 12), rng.randint(1, 9))
        lam = Fraction(rng.randint(-12, 12), rng.randint(1, 9))
        if q not in (1, -1) and lam != 1:
            return q, lam


def random_scalar(F: Field, rng: random.Random):
    c = F(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
    if F.is_symbolic and rng.random() < 0.3:
        c = c + rng.randint(-3, 3) * F.q + rng.randint(-3, 3) * F.lam
    return c


def random_poly(F: Field, degree: int, rng: random.Random) -> Poly:
    coeffs = [random_scalar(F, rng) for _ in range(degree)]
    lead = F.zero
    while not lead:
        lead = random_scalar(F, rng)
    return Poly(coeffs + [lead])


def _delta(F, a, b):
    return F.one if a == b else F.zero


# --- single-family relations -------------------------------------------------


@register("fe-numbers-dual-route", "series inversion = lower-term recurrence = order-r route at r=1")
def _fe_numbers_dual(F, n, r, ctx):
    inv = fam.frobenius_euler_numbers(F, n)[n]
    rec = fam.frobenius_euler_numbers_by_recurrence(F, n)[n]
    order1 = fam.frobenius_euler_numbers_order_r(F, n, 1)[n]
    return (rec, order1), (inv, inv)


@register("fe-boundary", "H_n(1|lam) - lam H_n(lam) = (1-lam) delta_{n,0}")
def _fe_boundary(F, n, r, ctx):
    H = fam.frobenius_euler_numbers(F, n)
    lhs = fam.frobenius_euler_poly(F, n)(F.one) - F.lam * H[n]
    return lhs, (1 - F.lam) * _delta(F, n, 0)


@register("fe-operator-form", "H_n(x|lam) = (1-lam)/(e_q(t)-lam) applied to x^n")
def _fe_operator_form(F, n, r, ctx):
    op = series_inverse(fam.frobenius_kernel(F, n))
    return apply_operator(op, Poly.monomial(n, F.one)), fam.frobenius_euler_poly(F, n)


@register("fe-t-action", "D_q H_n(x|lam) = [n]_q H_{n-1}(x|lam)", min_n=1)
def _fe_t_action(F, n, r, ctx):
    lhs = q_derivative(F, fam.frobenius_euler_poly(F, n))
    return lhs, fam.frobenius_euler_poly(F, n - 1).scale(qint(F, n))


@register("bernoulli-boundary", "B_n(1) - B_n = delta_{n,1}")
def _bernoulli_boundary(F, n, r, ctx):
    B = fam.q_bernoulli_numbers(F, n)
    return fam.q_bernoulli_poly(F, n)(F.one) - B[n], _delta(F, n, 1)


@register("euler-boundary", "E_n(1) + E_n = 2 delta_{n,0}")
def _euler_boundary(F, n, r, ctx):
    E = fam.q_euler_numbers(F, n)
    return fam.q_euler_poly(F, n)(F.one) + E[n], 2 * _delta(F, n, 0)


@register("euler-degeneration", "H_n(x|-1) = E_n(x)")
def _euler_degeneration(F, n, r, ctx):
    if F.is_symbolic:
        h = Poly([subs_lambda(c, -1) for c in fam.frobenius_euler_poly(F, n).coeffs])
    else:
        h = fam.frobenius_euler_poly(Field.numeric(F.q_value, -1), n)
    return h, fam.q_euler_poly(F, n)


# --- umbral functionals ------------------------------------------------------


@register("orthogonality", "<kernel^r t^k | H^(r)_n> = [n]_q! delta_{n,k} for k <= max n", uses_r=True)
def _orthogonality(F, n, r, ctx):
    top = max(n, ctx.max_n)
    h = fam.frobenius_euler_poly_order_r(F, n, r)
    kernel_r = series_pow(fam.frobenius_kernel(F, top), r)
    lhs, rhs = [], []
    for k in range(ctx.max_n + 1):
        lhs.append(apply_functional(series_mul(kernel_r, t_power_series(F, k, top)), h))
        rhs.append(qfactorial(F, n) * _delta(F, n, k))
    return lhs, rhs


@register("fe-integral-functional", "<(e_q(t)-1)/t | H_n(x|lam)> = int_0^1 H_n(u|lam) d_q u")
def _fe_integral_functional(F, n, r, ctx):
    return functional_bernoulli_identity(F, n)


@register("fe-integral-shift", "int_x^{x+y} H_n d_q u = (H_{n+1}(x+y) - H_{n+1}(x)) / [n+1]_q")
def _fe_integral_shift(F, n, r, ctx):
    x0 = F(Fraction(ctx.rng.randint(-9, 9), ctx.rng.randint(1, 5)))
    y0 = F(Fraction(ctx.rng.randint(-9, 9), ctx.rng.randint(1, 5)))
    lhs = q_integral(F, fam.frobenius_euler_poly(F, n), x0, x0 + y0)
    h1 = fam.frobenius_euler_poly(F, n + 1)
    return lhs, (h1(x0 + y0) - h1(x0)) / qint(F, n + 1)


# --- basis expansions --------------------------------------------------------


def _fe_expansion(F, coeffs, r=1):
    basis = fam.FamilyId(fam.QFROBENIUS_EULER) if r == 1 else fam.FamilyId(fam.QFROBENIUS_EULER_R, r)
    return BasisExpansion(basis, F, tuple(coeffs))


@register("bernoulli-in-fe", "B_n(x) = 1/(1-lam) sum_k qbinom(n,k) (B_{n-k}(1) - lam B_{n-k}) H_k(x|lam)")
def _bernoulli_in_fe(F, n, r, ctx):
    B = fam.q_bernoulli_numbers(F, n)
    b_at_one = [fam.q_bernoulli_poly(F, m)(F.one) for m in range(n + 1)]
    coeffs = [
        qbinomial(F, n, k) * (b_at_one[n - k] - F.lam * B[n - k]) / (1 - F.lam)
        for k in range(n + 1)
    ]
    p = fam.q_bernoulli_poly(F, n)
    return (p, list(expand_in_fe(F, p).coeffs)), (reconstruct(_fe_expansion(F, coeffs)), coeffs)


@register("monomial-in-fe", "x^n = sum_k (qbinom(n,k)/(1-lam) - lam/(1-lam) qbinom(n,k) 0^(n-k)) H_k(x|lam)")
def _monomial_in_fe(F, n, r, ctx):
    coeffs = [
        qbinomial(F, n, k) / (1 - F.lam) - F.lam / (1 - F.lam) * qbinomial(F, n, k) * (1 if k == n else 0)
        for k in range(n + 1)
    ]
    x_n = Poly.monomial(n, F.one)
    return (x_n, list(expand_in_fe(F, x_n).coeffs)), (reconstruct(_fe_expansion(F, coeffs)), coeffs)


@register("euler-in-fe", "E_n(x) = 1/(1-lam) sum_k qbinom(n,k) (E_{n-k}(1) - lam E_{n-k}) H_k(x|lam)")
def _euler_in_fe(F, n, r, ctx):
    E = fam.q_euler_numbers(F, n)
    e_at_one = [fam.q_euler_poly(F, m)(F.one) for m in range(n + 1)]
    coeffs = [
        qbinomial(F, n, k) * (e_at_one[n - k] - F.lam * E[n - k]) / (1 - F.lam)
        for k in range(n + 1)
    ]
    return fam.q_euler_poly(F, n), reconstruct(_fe_expansion(F, coeffs))


@register("order-r-convolution", "series power = composition convolution of H numbers", uses_r=True)
def _order_r_convolution(F, n, r, ctx):
    return (
        fam.frobenius_euler_numbers_order_r(F, n, r)[n],
        fam.frobenius_euler_numbers_order_r_by_convolution(F, n, r)[n],
    )


def _fe_numbers_order(F, n, r):
    """H^(r) numbers with H^(0) = delta."""
    if r == 0:
        return [_delta(F, m, 0) for m in range(n + 1)]
    return fam.frobenius_euler_numbers_order_r(F, n, r).values


@register("order-reduction", "H^(r)_n(1|lam) - lam H^(r)_n(lam) = (1-lam) H^(r-1)_n(lam)", uses_r=True)
def _order_reduction(F, n, r, ctx):
    Hr = _fe_numbers_order(F, n, r)
    lhs = fam.frobenius_euler_poly_order_r(F, n, r)(F.one) - F.lam * Hr[n]
    return lhs, (1 - F.lam) * _fe_numbers_order(F, n, r - 1)[n]


@register("fe-r-in-fe", "H^(r)_n(x) = sum_k qbinom(n,k) H^(r-1)_{n-k} H_k(x)", uses_r=True)
def _fe_r_in_fe(F, n, r, ctx):
    lower = _fe_numbers_order(F, n, r - 1)
    coeffs = [qbinomial(F, n, k) * lower[n - k] for k in range(n + 1)]
    return fam.frobenius_euler_poly_order_r(F, n, r), reconstruct(_fe_expansion(F, coeffs))


def _order_r_weights(F, n, k, r, numbers):
    """Bracketed coefficient shared by the H_n and B^(r)_n expansions in {H^(r)_k}."""
    total = F.zero
    for m in range(n - k + 1):
        for l in range(r + 1):
            multi = sum((qmultinomial(F, m, parts) for parts in weak_compositions(m, l)), F.zero)
            if not multi:
                continue
            total += (
                comb(r, l) * (-F.lam) ** (r - l) * multi
                * qbinomial(F, m + k, m) * qbinomial(F, n, m + k) * numbers[n - m - k]
            )
    return total / (1 - F.lam) ** r


@register("fe-in-fe-r", "H_n(x|lam) expanded in {H^(r)_k(x|lam)} by the multinomial formula", uses_r=True)
def _fe_in_fe_r(F, n, r, ctx):
    H = fam.frobenius_euler_numbers(F, n)
    coeffs = [_order_r_weights(F, n, k, r, H) for k in range(n + 1)]
    p = fam.frobenius_euler_poly(F, n)
    return (p, list(expand_in_fe_order_r(F, p, r).coeffs)), (reconstruct(_fe_expansion(F, coeffs, r)), coeffs)


@register(
    "bernoulli-r-in-fe-r",
    "B^(r)_n(x) expanded in {H^(r)_k(x|lam)} by the multinomial formula",
    uses_r=True,
    assumption=fam.BERNOULLI_R_ASSUMPTION,
)
def _bernoulli_r_in_fe_r(F, n, r, ctx):
    B = fam.q_bernoulli_numbers_order_r(F, n, r)
    coeffs = [_order_r_weights(F, n, k, r, B) for k in range(n + 1)]
    return fam.q_bernoulli_poly_order_r(F, n, r), reconstruct(_fe_expansion(F, coeffs, r))


@register("expansion-dual-route", "functional route = multinomial route for order-r coefficients", uses_r=True)
def _expansion_dual_route(F, n, r, ctx):
    p = random_poly(F, n, ctx.rng)
    functional = expand_in_fe_order_r(F, p, r)
    lhs = [functional.coeffs]
    rhs = [expand_in_fe_order_r_multinomial(F, p, r).coeffs]
    if r == 1:
        lhs.append(expand_in_fe(F, p).coeffs)
        rhs.append(functional.coeffs)
    return lhs, rhs


@register("expansion-round-trip", "reconstruct(expand(p)) = p in both bases", uses_r=True)
def _expansion_round_trip(F, n, r, ctx):
    p = random_poly(F, n, ctx.rng)
    return (reconstruct(expand_in_fe(F, p)), reconstruct(expand_in_fe_order_r(F, p, r))), (p, p)


# --- Carlitz -----------------------------------------------------------------


@register("carlitz-dual-route", "closed form of beta_n(x) = expansion through beta numbers")
def _carlitz_dual(F, n, r, ctx):
    return carlitz_poly(F, n), carlitz_poly_via_numbers(F, n)


@register("carlitz-basis-round-trip", "sum_k C_k beta_k(x) = p([x]_q) for the solved coefficients")
def _carlitz_round_trip(F, n, r, ctx):
    p = Poly([F(Fraction(ctx.rng.randint(-9, 9), ctx.rng.randint(1, 5))) for _ in range(n)] + [F.one])
    return reconstruct_carlitz(F, expand_in_carlitz_basis(F, p)), qbracket_to_y(F, p)


# --- harness -----------------------------------------------------------------


def _check(identity: Identity, F: Field, n: int, r: int, ctx: Context, params: dict) -> VerificationReport:
    start = time.perf_counter()
    try:
        lhs, rhs = identity.sides(F, n, r, ctx)
        ok = _equal(lhs, rhs)
    except (PoleAtPoint, ZeroDivisionError) as exc:
        lhs, rhs, ok = str(exc), None, False
    elapsed = time.perf_counter() - start
    if identity.assumption:
        params = {**params, "assumption": identity.assumption}
    if ok:
        return VerificationReport(identity.name, params, "ExactPass", elapsed)
    witness = {"lhs": _dump(lhs) if rhs is not None else lhs, "rhs": _dump(rhs) if rhs is not None else None}
    return VerificationReport(identity.name, params, "Fail", elapsed, witness)


def _equal(a, b) -> bool:
    if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
        return len(a) == len(b) and all(_equal(x, y) for x, y in zip(a, b))
    return a == b


def verify_identity(
    name: str,
    max_n: int,
    max_r: int = 3,
    mode: str = "symbolic",
    trials: int = 5,
    seed: int = 0,
) -> list[VerificationReport]:
    """Check one registered identity over 0..max_n (and 1..max_r where relevant)."""
    try:
        identity = REGISTRY[name]
    except KeyError:
        raise UnknownIdentity(name) from None
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    rng = random.Random(seed)
    if mode == "symbolic":
        fields = [Field.symbolic()]
    elif mode == "numeric":
        fields = [Field.numeric(*random_point(rng)) for _ in range(trials)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    rs = range(1, max_r + 1) if identity.uses_r else [1]
    ctx = Context(rng, max_n)
    reports = []
    for F in fields:
        for r in rs:
            for n in range(identity.min_n, max_n + 1):
                params = {"n": n, "mode": mode}
                if identity.uses_r:
                    params["r"] = r
                if not F.is_symbolic:
                    params["q"], params["lambda"] = str(F.q_value), str(F.lambda_value)
                reports.append(_check(identity, F, n, r, ctx, params))
    return reports


def run_suite(
    names="all",
    max_n: int = 6,
    max_r: int = 3,
    mode: str = "symbolic",
    trials: int = 5,
    seed: int = 0,
) -> list[VerificationReport]:
    if names == "all":
        names = list(REGISTRY)
    reports = []
    for name in names:
        reports.extend(verify_identity(name, max_n, max_r, mode, trials, seed))
    return reports
