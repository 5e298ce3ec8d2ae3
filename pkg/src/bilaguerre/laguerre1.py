"""Generalized Laguerre polynomials L_n^(alpha)(x) for integer alpha >= 0."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .polyring import Poly1
from .rational_core import binomial, factorial

__all__ = [
    "genfun1_coefficients",
    "laguerre_by_recurrence",
    "laguerre_explicit",
]


def _check_alpha(alpha: int) -> int:
    if int(alpha) != alpha or alpha < 0:
        raise ValueError(f"alpha must be a nonnegative integer, got {alpha}")
    return int(alpha)


@lru_cache(maxsize=None)
def _explicit(n: int, alpha: int, var: str) -> Poly1:
    return Poly1(
        {j: Fraction((-1) ** j * binomial(n + alpha, n - j), factorial(j)) for j in range(n + 1)},
        var,
    )


def laguerre_explicit(n: int, alpha: int = 0, var: str = "x") -> Poly1:
    """L_n^(alpha) from the closed sum  sum_j (-1)^j/j! C(n+alpha, n-j) x^j.

    Negative ``n`` gives the zero polynomial, which is the boundary
    convention the recurrences rely on.  Results are cached; ``Poly1`` is
    immutable so sharing is safe.
    """
    alpha = _check_alpha(alpha)
    if n < 0:
        return Poly1((), var)
    return _explicit(n, alpha, var)


def laguerre_by_recurrence(n_max: int, alpha: int = 0, var: str = "x") -> list[Poly1]:
    """[L_0, ..., L_{n_max}] from the three-term recurrence in n."""
    alpha = _check_alpha(alpha)
    x = Poly1.gen(var)
    prev, cur = Poly1((), var), Poly1.const(1, var)
    out = [cur]
    for n in range(n_max):
        # (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}
        nxt = ((2 * n + 1 + alpha - x) * cur - (n + alpha) * prev) * Fraction(1, n + 1)
        prev, cur = cur, nxt
        out.append(cur)
    return out


def genfun1_coefficients(alpha: int, K: int, var: str = "x") -> list[Poly1]:
    """First K+1 coefficients of exp(-x t/(1-t)) / (1-t)^(alpha+1) in t."""
    from . import powerseries as ps
    from .polyring import Poly2

    alpha = _check_alpha(alpha)
    t = ps.Series1.gen(K)
    one = ps.Series1.one(K)
    inv = ps.reciprocal(one - t)
    expo = ps.series_exp(t * inv * Poly2.x().scale(-1))
    rhs = expo * inv ** (alpha + 1)
    return [Poly1({i: c for (i, _), c in coef.items()}, var) for coef in rhs.coefficients]
