from fractions import Fraction

import pytest

from bilaguerre.laguerre1 import genfun1_coefficients, laguerre_by_recurrence, laguerre_explicit
from bilaguerre.polyring import Poly1
from bilaguerre.rational_core import binomial, factorial

x = Poly1.gen()


def rodrigues_oracle(n, alpha):
    """(1/n!) e^x x^-alpha D^n (e^-x x^(n+alpha)), expanded by sympy."""
    sp = pytest.importorskip("sympy")
    t = sp.Symbol("t")
    expr = sp.expand(sp.simplify(sp.exp(t) * t**-alpha * sp.diff(sp.exp(-t) * t ** (n + alpha), t, n) / sp.factorial(n)))
    poly = sp.Poly(expr, t)
    return Poly1({e: Fraction(int(c.p), int(c.q)) for (e,), c in poly.terms()})


def test_examples():
    for alpha in range(5):
        assert laguerre_explicit(1, alpha) == alpha + 1 - x
        assert laguerre_explicit(0, alpha) == Poly1.const(1)
    assert laguerre_explicit(2, 2) == Fraction(1, 2) * (x - 2) * (x - 6)
    assert laguerre_explicit(-1, 3) == Poly1(())
    with pytest.raises(ValueError):
        laguerre_explicit(2, -1)


def test_matches_rodrigues_definition():
    for n in range(7):
        for alpha in range(4):
            assert laguerre_explicit(n, alpha) == rodrigues_oracle(n, alpha), (n, alpha)


def test_leading_and_constant_terms():
    for n in range(13):
        for alpha in range(5):
            p = laguerre_explicit(n, alpha)
            assert p.degree == n
            assert p.coeff(n) == Fraction((-1) ** n, factorial(n))
            assert p.coeff(0) == binomial(n + alpha, n)


def test_recurrence_path():
    assert laguerre_by_recurrence(1, 0) == [Poly1.const(1), 1 - x]
    assert laguerre_by_recurrence(2, 2)[-1] == laguerre_explicit(2, 2)
    assert laguerre_by_recurrence(8, 0) == [laguerre_explicit(n, 0) for n in range(9)]


def test_generating_function_path():
    assert genfun1_coefficients(0, 0) == [Poly1.const(1)]
    assert genfun1_coefficients(0, 1) == [Poly1.const(1), 1 - x]
    assert genfun1_coefficients(1, 6) == [laguerre_explicit(n, 1) for n in range(7)]


def test_three_paths_agree():
    for alpha in range(5):
        explicit = [laguerre_explicit(n, alpha) for n in range(11)]
        assert laguerre_by_recurrence(10, alpha) == explicit
        assert genfun1_coefficients(alpha, 10) == explicit


def test_parameter_shift():
    for n in range(13):
        for alpha in range(7):
            assert laguerre_explicit(n, alpha) == laguerre_explicit(n, alpha + 1) - laguerre_explicit(n - 1, alpha + 1)


def test_derivative_lowers_degree_raises_parameter():
    for n in range(13):
        for alpha in range(7):
            assert laguerre_explicit(n, alpha).derivative() == -laguerre_explicit(n - 1, alpha + 1)


def test_step_relation_via_shifted_parameter():
    for n in range(13):
        lhs = (n + 1) * laguerre_explicit(n + 1)
        assert lhs == (n + 1) * laguerre_explicit(n) - x * laguerre_explicit(n, 1)


def test_sum_relation():
    for n in range(13):
        assert laguerre_explicit(n - 1, 1) + laguerre_explicit(n) == laguerre_explicit(n, 1)
