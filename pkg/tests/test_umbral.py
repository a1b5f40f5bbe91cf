import random
from fractions import Fraction

import pytest

from qumbral.families import frobenius_euler_poly, frobenius_kernel
from qumbral.qcore import Poly, q_derivative_k, qbinomial, qfactorial, qint
from qumbral.scalars import Field
from qumbral.umbral import (
    DividedSeries,
    NotInvertible,
    OrderTooLow,
    apply_functional,
    apply_operator,
    eq_series,
    one_series,
    scaled_eq_series,
    series_inverse,
    series_mul,
    series_pow,
    t_power_series,
)

SYM = Field.symbolic()
q, lam = SYM.q, SYM.lam
F = Field.numeric(Fraction(2, 5), Fraction(3))


def rand_series(Fd, rng, N, invertible=True):
    coeffs = [Fd(Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(N + 1)]
    if invertible and not coeffs[0]:
        coeffs[0] = Fd.one
    return DividedSeries(Fd, tuple(coeffs))


def test_eq_series():
    assert eq_series(SYM, 0).coeffs == (1,)
    assert eq_series(SYM, 3).coeffs == (1, 1, 1, 1)
    assert eq_series(SYM, 3).ordinary_coeffs()[2] == 1 / (1 + q)


def test_series_mul_examples():
    f = DividedSeries(SYM, (q, lam, SYM(3), q * lam))
    assert series_mul(f, one_series(SYM, 3)) == f
    ee = series_mul(eq_series(SYM, 4), eq_series(SYM, 4))
    for n in range(5):
        assert ee[n] == sum((qbinomial(SYM, n, k) for k in range(n + 1)), SYM.zero)
    assert ee[2] == 3 + q
    g = DividedSeries(SYM, (SYM(2), SYM(5), SYM(7), SYM(1)))
    assert series_mul(f, g)[1] == f[0] * g[1] + f[1] * g[0]


def test_mixed_orders_truncate():
    assert series_mul(eq_series(SYM, 5), eq_series(SYM, 2)).order == 2


def test_series_inverse_examples():
    assert series_inverse(one_series(SYM, 4)) == one_series(SYM, 4)
    c = SYM(7) * q
    inv = series_inverse(DividedSeries(SYM, (c, SYM.zero, SYM.zero)))
    assert inv.coeffs == (1 / c, 0, 0)
    euler_kernel = DividedSeries(SYM, (SYM.one,) + (SYM.one / 2,) * 3)
    assert series_inverse(euler_kernel)[1] == SYM(-1) / 2
    with pytest.raises(NotInvertible):
        series_inverse(DividedSeries(SYM, (SYM.zero, SYM.one)))


def test_series_pow():
    f = DividedSeries(SYM, (SYM.one, q, lam, SYM(2)))
    assert series_pow(f, 1) == f
    assert series_pow(f, 0) == one_series(SYM, 3)
    assert series_pow(one_series(SYM, 3), 4) == one_series(SYM, 3)
    sq = series_pow(f, 2)
    for n in range(4):
        assert sq[n] == sum((qbinomial(SYM, n, k) * f[k] * f[n - k] for k in range(n + 1)), SYM.zero)


def test_functional_on_monomials():
    for k in range(5):
        tk = t_power_series(SYM, k, 6)
        for n in range(6):
            expected = qfactorial(SYM, n) if n == k else 0
            assert apply_functional(tk, Poly.monomial(n, SYM.one)) == expected


def test_functional_of_scaled_exponential_is_evaluation():
    y = SYM(Fraction(-3, 4)) + q
    p = Poly([SYM(2), lam, SYM(0), q])
    assert apply_functional(scaled_eq_series(SYM, y, 3), p) == p(y)
    assert apply_functional(scaled_eq_series(SYM, y, 3), Poly.monomial(3, SYM.one)) == y**3
    assert apply_functional(eq_series(SYM, 3), Poly()) == 0


def test_scaled_eq_series_edges():
    assert scaled_eq_series(SYM, 0, 3) == one_series(SYM, 3)
    assert scaled_eq_series(SYM, 1, 3) == eq_series(SYM, 3)


def test_order_too_low():
    with pytest.raises(OrderTooLow):
        apply_functional(eq_series(SYM, 1), Poly.monomial(3, 1))
    with pytest.raises(OrderTooLow):
        apply_operator(eq_series(SYM, 1), Poly.monomial(3, 1))


def test_operator_examples():
    for n in range(1, 6):
        xn = Poly.monomial(n, SYM.one)
        assert apply_operator(t_power_series(SYM, 1, n), xn) == Poly.monomial(n - 1, qint(SYM, n))
    p = Poly([q, lam, SYM(3)])
    assert apply_operator(one_series(SYM, 2), p) == p
    op = series_inverse(frobenius_kernel(SYM, 2))
    assert apply_operator(op, Poly.monomial(2, SYM.one)) == frobenius_euler_poly(SYM, 2)


def test_mul_commutative_associative():
    rng = random.Random(3)
    for _ in range(20):
        N = rng.randint(0, 12)
        a, b, c = (rand_series(F, rng, N) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
    a, b, c = (rand_series(SYM, rng, 5) for _ in range(3))
    assert a * b == b * a and (a * b) * c == a * (b * c)


def test_inverse_property():
    rng = random.Random(4)
    for _ in range(50):
        f = rand_series(F, rng, rng.randint(0, 12))
        assert f * series_inverse(f) == one_series(F, f.order)
    f = DividedSeries(SYM, (1 - lam, q, SYM(2), lam * q))
    assert f * series_inverse(f) == one_series(SYM, 3)


def test_functional_of_product_is_convolution():
    rng = random.Random(5)
    f, g = rand_series(F, rng, 8), rand_series(F, rng, 8)
    for n in range(9):
        direct = sum(qbinomial(F, n, k) * f[k] * g[n - k] for k in range(n + 1))
        assert apply_functional(f * g, Poly.monomial(n, 1)) == direct


def test_duality_with_derivative_at_zero():
    rng = random.Random(6)
    for _ in range(20):
        p = Poly([F(rng.randint(-5, 5)) for _ in range(rng.randint(1, 9))])
        for k in range(p.degree + 2):
            t_k = t_power_series(F, k, max(p.degree, k))
            assert apply_functional(t_k, p) == q_derivative_k(F, p, k)(0)
            assert apply_functional(one_series(F, max(p.degree, 0)), q_derivative_k(F, p, k)) == q_derivative_k(F, p, k)(0)


def test_functional_linearity():
    rng = random.Random(7)
    for _ in range(30):
        f, g = rand_series(F, rng, 6), rand_series(F, rng, 6)
        p = Poly([F(rng.randint(-5, 5)) for _ in range(7)])
        r = Poly([F(rng.randint(-5, 5)) for _ in range(5)])
        a, b = F(Fraction(rng.randint(-5, 5), 3)), F(rng.randint(-5, 5))
        assert apply_functional(f, p.scale(a) + r.scale(b)) == a * apply_functional(f, p) + b * apply_functional(f, r)
        assert apply_functional(f.scale(a) + g.scale(b), p) == a * apply_functional(f, p) + b * apply_functional(g, p)


def test_json_roundtrip():
    f = DividedSeries(SYM, (SYM.one, q / (1 - lam), SYM(Fraction(1, 2))))
    data = f.to_json()
    assert data["order"] == 2
    assert DividedSeries.from_json(SYM, data) == f
