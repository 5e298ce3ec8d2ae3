import random
from fractions import Fraction
from itertools import product

import pytest

from bilaguerre.errors import DomainError
from bilaguerre.laguerre1 import laguerre_explicit
from bilaguerre.laguerre2 import explicit
from bilaguerre.polyring import Poly1, Poly2
from bilaguerre.powerseries import (
    Series1,
    Series2,
    compose_poly,
    diagonal,
    genfun2,
    lemma1_rhs,
    reciprocal,
    series_add,
    series_exp,
    series_mul,
    series_scale,
)
from bilaguerre.rational_core import factorial

X, Y = Poly2.x(), Poly2.y()
ONE = Poly2.const(1)


def word_count_oracle(n, m):
    """Coefficient of s^n t^m in sum_k (s+t)^k: count words over {s,t}."""
    return sum(1 for w in product("st", repeat=n + m) if w.count("s") == n)


def rand_series(rng, K, unit=False):
    coeffs = {}
    for a in range(K + 1):
        for b in range(K + 1 - a):
            if (a, b) == (0, 0) or rng.random() < 0.5:
                coeffs[(a, b)] = Poly2({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-4, 4)})
    coeffs[(0, 0)] = ONE if unit else Poly2()
    return Series2(coeffs, K)


def test_ring_examples():
    s, t = Series2.s(2), Series2.t(2)
    assert (1 + s) * (1 + t) == 1 + s + t + s * t
    assert series_mul(1 - s - t, reciprocal(1 - s - t)) == Series2.one(2)
    s3, t3 = Series2.s(3), Series2.t(3)
    assert ((s3 + t3) ** 3)[(2, 1)] == Poly2.const(3)
    assert series_add(s, t) == s + t
    assert series_scale(s, 3)[(1, 0)] == Poly2.const(3)


def test_truncation_drops_high_orders():
    s = Series2.s(2)
    assert (s * s * s) == Series2({}, 2)
    assert Series2({(3, 0): ONE}, 2) == Series2({}, 2)


def test_order_mismatch():
    with pytest.raises(ValueError):
        Series2.s(2) + Series2.s(3)


def test_reciprocal_examples():
    assert reciprocal(Series2.one(4)) == Series2.one(4)
    r = reciprocal(1 - Series2.s(8) - Series2.t(8))
    for n in range(9):
        for m in range(9 - n):
            assert r[(n, m)] == Poly2.const(word_count_oracle(n, m))
    g = reciprocal(1 - Series1.gen(6))
    assert g.coefficients == [ONE] * 7


def test_reciprocal_errors():
    with pytest.raises(DomainError):
        reciprocal(Series2.s(3))
    with pytest.raises(DomainError):
        reciprocal(Series2.const(X, 3))


def test_reciprocal_random():
    rng = random.Random(11)
    for _ in range(50):
        K = rng.randint(0, 8)
        a = rand_series(rng, K, unit=True)
        assert a * reciprocal(a) == Series2.one(K)


def test_exp_examples():
    assert series_exp(Series2({}, 5)) == Series2.one(5)
    e = series_exp(Series2.s(6) * (Y - X))
    for k in range(7):
        assert e[(k, 0)] == ((Y - X) ** k).scale(Fraction(1, factorial(k)))
    zero_arg = (Series2.s(4) + Series2.t(4)) * Poly2()
    assert series_exp(zero_arg) == Series2.one(4)
    with pytest.raises(DomainError):
        series_exp(Series2.one(3))


def test_exp_is_additive():
    rng = random.Random(3)
    for _ in range(20):
        K = rng.randint(0, 6)
        a, b = rand_series(rng, K), rand_series(rng, K)
        assert series_exp(a + b) == series_exp(a) * series_exp(b)


def test_compose_poly_examples():
    t = Series1.gen(4)
    arg = t * reciprocal(1 - t) * Y + X
    assert compose_poly(Poly1({0: 1, 1: -1}), arg)[0] == 1 - X
    s2, t2 = Series2.s(2), Series2.t(2)
    assert compose_poly(Poly1({2: 1}), s2 + t2) == s2 * s2 + 2 * s2 * t2 + t2 * t2


def test_compose_l2_matches_row_series():
    K = 4
    t = Series1.gen(K)
    inv = reciprocal(1 - t)
    u = t * inv * Y
    assembled = series_exp(-u) * inv**3 * compose_poly(laguerre_explicit(2), u + X) * 2
    assert assembled.coefficients == [explicit(2, m).scale(2) for m in range(K + 1)]


def test_genfun2_low_orders():
    assert genfun2(0)[(0, 0)] == ONE
    g1 = genfun2(1)
    assert (g1[(1, 0)], g1[(0, 1)]) == (1 - X, 1 - Y)
    assert genfun2(2)[(1, 1)] == 2 - 2 * X - 2 * Y + X * Y


def test_genfun2_matches_explicit():
    g = genfun2(12)
    for n in range(13):
        for m in range(13 - n):
            assert g[(n, m)] == explicit(n, m), (n, m)


def test_genfun2_against_sympy_taylor():
    sp = pytest.importorskip("sympy")
    s, t, x, y = sp.symbols("s t x y")
    f = sp.exp((-s * x - t * y) / (1 - s - t)) / (1 - s - t)
    g = genfun2(4)
    for n in range(3):
        for m in range(3 - n):
            d = sp.diff(f, s, n, t, m) if n and m else sp.diff(f, s, n) if n else sp.diff(f, t, m) if m else f
            coeff = sp.expand(sp.simplify(d.subs({s: 0, t: 0})) / (sp.factorial(n) * sp.factorial(m)))
            ours = sum((sp.Rational(c.numerator, c.denominator) * x**i * y**j for (i, j), c in g[(n, m)].items()), 0)
            assert sp.expand(coeff - ours) == 0


def test_lemma1_examples():
    assert lemma1_rhs(0, 2).coefficients == [
        Poly2.const(1),
        1 - Y,
        Poly2({(0, 0): 1, (0, 1): -2, (0, 2): Fraction(1, 2)}),
    ]
    assert lemma1_rhs(1, 0).coefficients == [1 - X]
    assert lemma1_rhs(3, 8).coefficients == [explicit(3, m).scale(6) for m in range(9)]


def test_lemma1_rows():
    for n in range(7):
        assert lemma1_rhs(n, 10).coefficients == [explicit(n, m).scale(factorial(n)) for m in range(11)]


def test_diagonal_substitution():
    d = diagonal(genfun2(3))
    assert d[1] == 2 - X - Y
    d_alt = diagonal(genfun2(3), sign=-1)
    assert d_alt[1] == Y - X


def test_series1_dense_coefficients():
    t = Series1.gen(3)
    assert t.coefficients == [Poly2(), ONE, Poly2(), Poly2()]
    assert len(Series1({}, 5).coefficients) == 6
