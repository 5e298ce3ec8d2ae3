"""Two-variable Laguerre polynomials L_{n,m}(x, y).

Five independent constructions are provided so they can be cross-checked:
the explicit double sum, the two single-sum row forms (one-variable
Laguerre polynomials with shifted parameter times powers of the other
variable), the Horn hypergeometric form, and the recurrence-filled table.
The generating-function extraction lives in ``powerseries`` and is wired
into ``genfun_table`` here.

Any index pair with a negative entry denotes the zero polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .laguerre1 import laguerre_explicit
from .polyring import Poly2, substitute, to_records
from .rational_core import binomial, factorial, pochhammer

__all__ = [
    "Lag2Table",
    "check_recurrence",
    "check_recurrence_5term",
    "check_recurrence_dual",
    "explicit",
    "explicit_table",
    "genfun_table",
    "horn_form",
    "recurrence_table",
    "row_form_x",
    "row_form_y",
    "symmetry_swap",
]

_X, _Y = Poly2.x(), Poly2.y()


@lru_cache(maxsize=None)
def _explicit(n: int, m: int) -> Poly2:
    terms = {}
    for i in range(m + 1):
        for s in range(n + 1):
            num = (-1) ** (i + s) * binomial(m + n, m - i) * binomial(n + i, n - s)
            if num:
                terms[(s, i)] = Fraction(num, factorial(i) * factorial(s))
    return Poly2(terms)


def explicit(n: int, m: int) -> Poly2:
    """Double-sum formula; the reference path the others are checked against."""
    if n < 0 or m < 0:
        return Poly2.zero()
    return _explicit(n, m)


def row_form_y(n: int, m: int) -> Poly2:
    """sum_i (-1)^i/i! C(m+n, m-i) L_n^(i)(x) y^i."""
    if n < 0 or m < 0:
        return Poly2.zero()
    out = Poly2.zero()
    for i in range(m + 1):
        c = Fraction((-1) ** i * binomial(m + n, m - i), factorial(i))
        out = out + substitute(laguerre_explicit(n, i), _X) * Poly2.monomial(c, 0, i)
    return out


def row_form_x(n: int, m: int) -> Poly2:
    """sum_s (-1)^s/s! C(n+m, n-s) L_m^(s)(y) x^s."""
    if n < 0 or m < 0:
        return Poly2.zero()
    out = Poly2.zero()
    for s in range(n + 1):
        c = Fraction((-1) ** s * binomial(n + m, n - s), factorial(s))
        out = out + substitute(laguerre_explicit(m, s), _Y) * Poly2.monomial(c, s, 0)
    return out


def horn_form(n: int, m: int) -> Poly2:
    """C(n+m, n) * Phi_2(-n, -m; 1; x, y), summed over its finite support.

    Pochhammer symbols are rising factorials, so (-n)_s vanishes for s > n.
    """
    if n < 0 or m < 0:
        return Poly2.zero()
    lead = binomial(n + m, n)
    terms = {}
    for s in range(n + 1):
        ps = pochhammer(-n, s)
        for i in range(m + 1):
            terms[(s, i)] = (
                lead * ps * pochhammer(-m, i)
                / (factorial(s + i) * factorial(s) * factorial(i))
            )
    return Poly2(terms)


def symmetry_swap(p: Poly2) -> Poly2:
    return p.swap()


@dataclass
class Lag2Table:
    """Triangular table of L_{n,m} for 0 <= n + m <= K.

    ``provenance`` records which construction produced each entry:
    ``"explicit"``, ``"recurrence"`` or ``"genfun"``.
    """

    K: int
    entries: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    def __getitem__(self, nm) -> Poly2:
        n, m = nm
        if n < 0 or m < 0:
            return Poly2.zero()
        if n + m > self.K:
            raise KeyError(f"({n}, {m}) is beyond total degree {self.K}")
        return self.entries[(n, m)]

    def __len__(self):
        return len(self.entries)

    def keys(self):
        return sorted(self.entries, key=lambda nm: (nm[0] + nm[1], nm[0]))

    def to_records(self) -> list[dict]:
        return [{"n": n, "m": m, "poly": to_records(self.entries[(n, m)])} for n, m in self.keys()]


def _indices(K: int):
    for d in range(K + 1):
        for n in range(d + 1):
            yield n, d - n


def explicit_table(K: int) -> Lag2Table:
    table = Lag2Table(K)
    for n, m in _indices(K):
        table.entries[(n, m)] = explicit(n, m)
        table.provenance[(n, m)] = "explicit"
    return table


def genfun_table(K: int) -> Lag2Table:
    from .powerseries import genfun2

    series = genfun2(K)
    table = Lag2Table(K)
    for n, m in _indices(K):
        table.entries[(n, m)] = series[(n, m)]
        table.provenance[(n, m)] = "genfun"
    return table


def recurrence_table(K: int) -> Lag2Table:
    """Fill by total degree: edges from one-variable Laguerre, interior from the n-recurrence.

    The recurrence
        (n+1) L_{n+1,m+1} = 2(n+1) L_{n+1,m} + (2n+1-x) L_{n,m+1} - (n+1) L_{n+1,m-1}
                            - (2n+1-x+y) L_{n,m} - n L_{n-1,m+1}
    is solved for its top entry; every right-hand entry has lower total degree.
    """
    table = Lag2Table(K)
    E, P = table.entries, table.provenance
    for d in range(K + 1):
        E[(d, 0)] = substitute(laguerre_explicit(d), _X)
        E[(0, d)] = substitute(laguerre_explicit(d), _Y)
        P[(d, 0)] = P[(0, d)] = "explicit"
        for N in range(1, d):
            M = d - N
            n, m = N - 1, M - 1
            rhs = (
                table[n + 1, m] * (2 * (n + 1))
                + (2 * n + 1 - _X) * table[n, m + 1]
                - table[n + 1, m - 1] * (n + 1)
                - (2 * n + 1 - _X + _Y) * table[n, m]
                - table[n - 1, m + 1] * n
            )
            E[(N, M)] = rhs.scale(Fraction(1, n + 1))
            P[(N, M)] = "recurrence"
    return table


def _L(n, m):
    return explicit(n, m)


def recurrence_residual(n: int, m: int) -> Poly2:
    """LHS - RHS of the six-term recurrence stepping in n (zero iff it holds)."""
    lhs = _L(n + 1, m + 1) * (n + 1)
    rhs = (
        _L(n + 1, m) * (2 * (n + 1))
        + (2 * n + 1 - _X) * _L(n, m + 1)
        - _L(n + 1, m - 1) * (n + 1)
        - (2 * n + 1 - _X + _Y) * _L(n, m)
        - _L(n - 1, m + 1) * n
    )
    return lhs - rhs


def recurrence_dual_residual(n: int, m: int) -> Poly2:
    """LHS - RHS of the six-term recurrence stepping in m."""
    lhs = _L(n + 1, m + 1) * (m + 1)
    rhs = (
        (2 * m + 1 - _Y) * _L(n + 1, m)
        + _L(n, m + 1) * (2 * (m + 1))
        - _L(n + 1, m - 1) * m
        - (2 * m + 1 + _X - _Y) * _L(n, m)
        - _L(n - 1, m + 1) * (m + 1)
    )
    return lhs - rhs


def recurrence_5term_residual(n: int, m: int) -> Poly2:
    """LHS - RHS of the five-term recurrence linking total degrees n+m and n+m+1."""
    lhs = (n + 1) * (_Y + 1) * _L(n + 1, m) - (m + 1) * (_X + 1) * _L(n, m + 1)
    rhs = (
        _L(n + 1, m - 1) * (n + 1)
        - _L(n - 1, m + 1) * (m + 1)
        + ((m + 1) * (_Y - 1 - _X) - (n + 1) * (_X - 1 - _Y)) * _L(n, m)
    )
    return lhs - rhs


def check_recurrence(n: int, m: int) -> bool:
    return not recurrence_residual(n, m)


def check_recurrence_dual(n: int, m: int) -> bool:
    return not recurrence_dual_residual(n, m)


def check_recurrence_5term(n: int, m: int) -> bool:
    return not recurrence_5term_residual(n, m)
