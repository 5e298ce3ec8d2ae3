"""Truncated formal power series in t or (s, t) with polynomial coefficients.

Truncation is by total degree: a series of order K keeps the coefficients
of s^a t^b with a + b <= K and nothing else.  Every coefficient is a
``Poly2`` in (x, y), so generating functions can be expanded exactly and
compared coefficient-by-coefficient with the explicit polynomials.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .errors import DomainError
from .laguerre1 import laguerre_explicit
from .polyring import Poly1, Poly2
from .rational_core import factorial

__all__ = [
    "Series1",
    "Series2",
    "compose_poly",
    "diagonal",
    "genfun2",
    "lemma1_rhs",
    "reciprocal",
    "series_add",
    "series_exp",
    "series_mul",
    "series_scale",
]

_ZERO = Poly2()
_ONE = Poly2.const(1)


def _as_poly2(c) -> Poly2:
    if isinstance(c, Poly2):
        return c
    return Poly2.const(c)


class _Series:
    nvars = 0

    __slots__ = ("order", "_c")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        self._c: dict[tuple, Poly2] = {}
        for key, c in dict(coeffs).items():
            key = self._key(key)
            if sum(key) <= order:
                c = _as_poly2(c)
                if c:
                    self._c[key] = c

    @classmethod
    def _key(cls, key) -> tuple:
        key = (key,) if isinstance(key, int) else tuple(key)
        if len(key) != cls.nvars or min(key) < 0:
            raise KeyError(key)
        return key

    @classmethod
    def one(cls, order: int):
        return cls.const(_ONE, order)

    @classmethod
    def const(cls, c, order: int):
        return cls({(0,) * cls.nvars: _as_poly2(c)}, order)

    def __getitem__(self, key) -> Poly2:
        return self._c.get(self._key(key), _ZERO)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")

    def _new(self, coeffs):
        return type(self)(coeffs, self.order)

    def __add__(self, other):
        if not isinstance(other, _Series):
            other = self.const(other, self.order)
        self._check(other)
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, _ZERO) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, _Series):
            other = self.const(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly2)):
            other = _as_poly2(other)
            return self._new({k: c * other for k, c in self._c.items()})
        self._check(other)
        out: dict[tuple, Poly2] = {}
        K = self.order
        for k1, c1 in self._c.items():
            d1 = sum(k1)
            for k2, c2 in other._c.items():
                if d1 + sum(k2) > K:
                    continue
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, _ZERO) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return reciprocal(self) ** (-k)
        out = self.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, _Series):
            return NotImplemented
        return type(self) is type(other) and self.order == other.order and self._c == other._c

    def __hash__(self):
        return hash((type(self).__name__, self.order, frozenset(self._c.items())))

    def __repr__(self):
        body = ", ".join(f"{k}: {c!r}" for k, c in self.items())
        return f"{type(self).__name__}(order={self.order}, {{{body}}})"

    @property
    def constant(self) -> Poly2:
        return self._c.get((0,) * self.nvars, _ZERO)

    def keys_by_degree(self):
        """All admissible exponent keys, lowest total degree first."""
        K = self.order
        keys = [k for k in product(range(K + 1), repeat=self.nvars) if sum(k) <= K]
        return sorted(keys, key=lambda k: (sum(k), k))


class Series1(_Series):
    """Series in one auxiliary variable t; ``coefficients`` is the dense list."""

    nvars = 1
    __slots__ = ()

    @classmethod
    def gen(cls, order: int) -> "Series1":
        return cls({(1,): _ONE}, order)

    @property
    def coefficients(self) -> list[Poly2]:
        return [self[k] for k in range(self.order + 1)]


class Series2(_Series):
    """Series in two auxiliary variables (s, t), truncated at total degree K."""

    nvars = 2
    __slots__ = ()

    @classmethod
    def s(cls, order: int) -> "Series2":
        return cls({(1, 0): _ONE}, order)

    @classmethod
    def t(cls, order: int) -> "Series2":
        return cls({(0, 1): _ONE}, order)


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_scale(a, c):
    return a * c


def reciprocal(a):
    """Inverse of a series whose constant term is a nonzero constant, solved degree by degree."""
    c0 = a.constant
    if c0.degree != 0:
        raise DomainError("reciprocal needs a nonzero constant leading coefficient")
    inv0 = 1 / c0.coeff(0, 0)
    zero_key = (0,) * a.nvars
    terms = [(k, c) for k, c in a._c.items() if k != zero_key]
    out: dict[tuple, Poly2] = {zero_key: Poly2.const(inv0)}
    for key in a.keys_by_degree():
        if key == zero_key:
            continue
        acc = _ZERO
        for lam, c in terms:
            rest = tuple(p - q for p, q in zip(key, lam))
            if min(rest) < 0:
                continue
            b = out.get(rest)
            if b is not None:
                acc = acc + c * b
        if acc:
            out[key] = acc.scale(-inv0)
    return type(a)(out, a.order)


def series_exp(a):
    """exp(a) = sum_{j<=K} a^j / j! for a with zero constant term."""
    if a.constant:
        raise DomainError("series_exp needs a zero constant term")
    out = a.one(a.order)
    power = a.one(a.order)
    for j in range(1, a.order + 1):
        power = power * a
        if not power._c:
            break
        out = out + power * Fraction(1, factorial(j))
    return out


def compose_poly(p: Poly1, a):
    """p(a) for a polynomial p, by Horner's scheme in the series ring."""
    if p.is_laurent:
        raise DomainError("compose_poly needs a genuine polynomial")
    out = type(a)({}, a.order)
    if p.degree == -math.inf:
        return out
    for e in range(int(p.degree), -1, -1):
        out = out * a + Poly2.const(p.coeff(e))
    return out


def diagonal(series: Series2, sign: int = 1) -> Series1:
    """Substitute s = u, t = sign*u; the coefficient of u^k collects a + b = k."""
    out: dict[tuple, Poly2] = {}
    for (a, b), c in series._c.items():
        out[(a + b,)] = out.get((a + b,), _ZERO) + c.scale(sign**b)
    return Series1(out, series.order)


def genfun2(K: int) -> Series2:
    """exp((-s x - t y) / (1 - s - t)) / (1 - s - t), truncated at total degree K."""
    s, t = Series2.s(K), Series2.t(K)
    inv = reciprocal(1 - s - t)
    numer = (s * Poly2.x() + t * Poly2.y()) * -1
    return series_exp(numer * inv) * inv


def lemma1_rhs(n: int, K: int) -> Series1:
    """exp(-t y/(1-t)) / (1-t)^(n+1) * n! * L_n(x + t y/(1-t)) as a series in t."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = Series1.gen(K)
    inv = reciprocal(1 - t)
    u = t * inv * Poly2.y()
    inner = compose_poly(laguerre_explicit(n), u + Poly2.x())
    return series_exp(-u) * inv ** (n + 1) * inner * factorial(n)
