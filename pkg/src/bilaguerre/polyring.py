"""Sparse exact polynomials in one and two variables over the rationals.

Exponents may be negative (Laurent terms); only the substitutions behind
the x/(1/x) summation identities produce them, and ``substitute_laurent``
asserts they cancel out again.

Serialization uses a fixed graded order: terms sorted by total degree and,
inside one degree, by decreasing x-exponent ("x before y").
"""
from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, VariableMismatch
from .rational_core import as_rat, format_rat

__all__ = [
    "Poly1",
    "Poly2",
    "add",
    "eval_exact",
    "eval_float",
    "mul",
    "scale",
    "substitute",
    "substitute_laurent",
    "to_csv",
    "to_json",
    "to_latex",
    "to_text",
]


def _clean(items) -> dict:
    out = {}
    for key, c in items:
        c = as_rat(c)
        if c:
            out[key] = out.get(key, 0) + c
            if not out[key]:
                del out[key]
    return out


def _pow_exact(base: Fraction, e: int) -> Fraction:
    if e < 0:
        if base == 0:
            raise DomainError("zero base raised to a negative exponent")
        return Fraction(1) / base ** (-e)
    return base**e


def _check_float(v):
    try:
        import numpy as np
    except ImportError:  # pragma: no cover
        np = None
    if np is not None and isinstance(v, np.ndarray):
        if not np.all(np.isfinite(v)):
            raise DomainError("non-finite evaluation point")
        return v.astype(float)
    v = float(v)
    if not math.isfinite(v):
        raise DomainError(f"non-finite evaluation point {v}")
    return v


def _any_zero(v) -> bool:
    try:
        return bool((v == 0).any())
    except AttributeError:
        return v == 0


def _horner(coeffs: Mapping[int, object], v):
    """Evaluate sum c_e v**e; nonnegative part by Horner, Laurent part directly."""
    pos = {e: c for e, c in coeffs.items() if e >= 0}
    acc = 0.0
    if pos:
        top = max(pos)
        for e in range(top, -1, -1):
            acc = acc * v + pos.get(e, 0.0)
    for e, c in coeffs.items():
        if e < 0:
            if _any_zero(v):
                raise DomainError("zero base raised to a negative exponent")
            acc = acc + c * v**e
    return acc


# Double-double helpers (error-free transformations); they only use + - *,
# so they work elementwise on numpy arrays as well as on floats.
_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd(c: Fraction):
    hi = float(c)
    return hi, float(c - Fraction(hi))


def _horner_dd(coeffs: Mapping[int, tuple], v):
    """Compensated Horner: coefficients and accumulator carried as (hi, lo) pairs.

    Error is about eps + cond * eps**2 relative, instead of cond * eps.
    """
    pos = {e: c for e, c in coeffs.items() if e >= 0}
    hi, lo = 0.0, 0.0
    if pos:
        for e in range(max(pos), -1, -1):
            c_hi, c_lo = pos.get(e, (0.0, 0.0))
            p, pe = _two_prod(hi, v)
            pe = pe + lo * v
            s, se = _two_sum(p, c_hi)
            se = se + (pe + c_lo)
            hi = s + se
            lo = se - (hi - s)
    for e, (c_hi, c_lo) in coeffs.items():
        if e < 0:
            if _any_zero(v):
                raise DomainError("zero base raised to a negative exponent")
            s, se = _two_sum(hi, (c_hi + c_lo) * v**e)
            hi = s + (se + lo)
            lo = (se + lo) - (hi - s)
    return hi, lo


class Poly1:
    """Sparse Laurent polynomial in one variable; immutable."""

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, object] | Iterable = (), var: str = "x"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _clean((int(e), c) for e, c in items)
        self.var = var

    @classmethod
    def const(cls, c, var: str = "x") -> "Poly1":
        return cls({0: c}, var)

    @classmethod
    def gen(cls, var: str = "x") -> "Poly1":
        return cls({1: 1}, var)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    @property
    def degree(self) -> float:
        """Highest exponent; ``-math.inf`` for the zero polynomial."""
        return max(self._terms, default=-math.inf)

    @property
    def is_laurent(self) -> bool:
        return any(e < 0 for e in self._terms)

    def _same(self, other: "Poly1"):
        if self.var != other.var:
            raise VariableMismatch(f"{self.var!r} vs {other.var!r}")

    def _lift(self, other):
        if isinstance(other, Poly1):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly1.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Poly1(list(self._terms.items()) + list(other._terms.items()), self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly1({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Poly1(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly1.const(1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly1.const(other, self.var)
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self):
        return hash((self.var, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"Poly1({to_text(self)!r}, var={self.var!r})"

    def derivative(self) -> "Poly1":
        return Poly1({e - 1: e * c for e, c in self._terms.items() if e}, self.var)

    def eval_exact(self, v) -> Fraction:
        v = as_rat(v)
        return sum((c * _pow_exact(v, e) for e, c in self._terms.items()), Fraction(0))

    def eval_float(self, v, compensated: bool = True):
        v = _check_float(v)
        if not compensated:
            return _horner({e: float(c) for e, c in self._terms.items()}, v)
        hi, lo = _horner_dd({e: _dd(c) for e, c in self._terms.items()}, v)
        return hi + lo

    def __call__(self, v):
        return self.eval_exact(v)


class Poly2:
    """Sparse Laurent polynomial in two variables, keyed by ``(i, j)`` for x^i y^j."""

    __slots__ = ("_terms", "vars")

    def __init__(self, terms: Mapping | Iterable = (), vars: tuple[str, str] = ("x", "y")):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = _clean(((int(i), int(j)), c) for (i, j), c in items)
        self.vars = tuple(vars)

    @classmethod
    def const(cls, c, vars=("x", "y")) -> "Poly2":
        return cls({(0, 0): c}, vars)

    @classmethod
    def monomial(cls, c, i: int, j: int, vars=("x", "y")) -> "Poly2":
        return cls({(i, j): c}, vars)

    @classmethod
    def x(cls) -> "Poly2":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "Poly2":
        return cls({(0, 1): 1})

    @classmethod
    def zero(cls) -> "Poly2":
        return cls()

    def items(self):
        return list(self._terms.items())

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def __len__(self):
        return len(self._terms)

    @property
    def degree(self) -> float:
        """Total degree; ``-math.inf`` for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-math.inf)

    @property
    def degree_x(self) -> float:
        return max((i for i, _ in self._terms), default=-math.inf)

    @property
    def degree_y(self) -> float:
        return max((j for _, j in self._terms), default=-math.inf)

    @property
    def is_laurent(self) -> bool:
        return any(i < 0 or j < 0 for i, j in self._terms)

    def _lift(self, other):
        if isinstance(other, Poly2):
            if other.vars != self.vars:
                raise VariableMismatch(f"{self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly2.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Poly2(list(self._terms.items()) + list(other._terms.items()), self.vars)

    __radd__ = __add__

    def __neg__(self):
        return Poly2({k: -c for k, c in self._terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Poly2(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly2.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale(self, c) -> "Poly2":
        c = as_rat(c)
        return Poly2({k: c * v for k, v in self._terms.items()}, self.vars)

    def swap(self) -> "Poly2":
        """Exchange the roles of x and y."""
        return Poly2({(j, i): c for (i, j), c in self._terms.items()}, self.vars)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other, self.vars)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        return hash((self.vars, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"Poly2({to_text(self)!r})"

    def eval_exact(self, x0, y0) -> Fraction:
        x0, y0 = as_rat(x0), as_rat(y0)
        return sum(
            (c * _pow_exact(x0, i) * _pow_exact(y0, j) for (i, j), c in self._terms.items()),
            Fraction(0),
        )

    def eval_float(self, x0, y0, compensated: bool = True):
        """Iterated Horner: Horner in y over coefficients that are Horner polynomials in x.

        Accepts floats or equally shaped numpy arrays.  By default both levels
        run in compensated (double-double) arithmetic, which keeps the result
        accurate where x and y have opposite signs and the terms cancel;
        ``compensated=False`` gives the plain, faster scheme.
        """
        x0, y0 = _check_float(x0), _check_float(y0)
        if not compensated:
            by_j: dict[int, dict[int, float]] = {}
            for (i, j), c in self._terms.items():
                by_j.setdefault(j, {})[i] = float(c)
            return _horner({j: _horner(row, x0) for j, row in by_j.items()}, y0)
        rows: dict[int, dict[int, tuple]] = {}
        for (i, j), c in self._terms.items():
            rows.setdefault(j, {})[i] = _dd(c)
        hi, lo = _horner_dd({j: _horner_dd(row, x0) for j, row in rows.items()}, y0)
        return hi + lo


# module-level ring operations


def add(a: Poly2, b: Poly2) -> Poly2:
    return a + b


def scale(a: Poly2, c) -> Poly2:
    return a.scale(c)


def mul(a: Poly2, b: Poly2) -> Poly2:
    return a * b


def eval_exact(p: Poly2, x0, y0) -> Fraction:
    return p.eval_exact(x0, y0)


def eval_float(p: Poly2, x0, y0, compensated: bool = True):
    return p.eval_float(x0, y0, compensated)


def substitute(p: Poly1, q: Poly2) -> Poly2:
    """Replace the variable of ``p`` by ``q`` and expand (Horner in q)."""
    if p.is_laurent:
        raise DomainError("cannot substitute into a Laurent polynomial")
    out = Poly2((), q.vars)
    top = p.degree
    if top == -math.inf:
        return out
    for e in range(int(top), -1, -1):
        out = out * q + p.coeff(e)
    return out


def _as_monomial(m) -> tuple[Fraction, int, int]:
    if isinstance(m, Poly2):
        if len(m) != 1:
            raise ValueError(f"expected a monomial, got {to_text(m)!r}")
        ((i, j), c), = m.items()
        return c, i, j
    c, i, j = m
    return as_rat(c), int(i), int(j)


def substitute_laurent(p: Poly2, x_image, y_image, premultiplier=(1, 0, 0)) -> Poly2:
    """Map x -> x_image, y -> y_image (monomials such as 1/x or -1/y), then premultiply.

    Monomials are single-term ``Poly2`` values or ``(coeff, i, j)`` triples.
    The result must be a genuine polynomial; a surviving negative exponent
    means the substitution was misused and raises ``DomainError``.
    """
    if p.is_laurent:
        raise DomainError("substitute_laurent expects a genuine polynomial")
    cx, xi, xj = _as_monomial(x_image)
    cy, yi, yj = _as_monomial(y_image)
    cp, pi, pj = _as_monomial(premultiplier)
    out = {}
    for (i, j), c in p.items():
        key = (pi + i * xi + j * yi, pj + i * xj + j * yj)
        out[key] = out.get(key, 0) + cp * c * cx**i * cy**j
    result = Poly2(out, p.vars)
    if result.is_laurent:
        raise DomainError(f"Laurent residue after substitution: {to_text(result)}")
    return result


# serialization


def _graded_key(key):
    i, j = key
    return (i + j, -i)


def _ordered(p) -> list[tuple[tuple[int, int], Fraction]]:
    if isinstance(p, Poly1):
        return [((e, 0), c) for e, c in sorted(p.items())]
    return sorted(p.items(), key=lambda kv: _graded_key(kv[0]))


def _vars(p) -> tuple[str, str]:
    return (p.var, "") if isinstance(p, Poly1) else p.vars


def to_json(p) -> str:
    """``[{"i": .., "j": .., "c": "p/q"}, ...]`` in ascending graded order."""
    return json.dumps(to_records(p), separators=(",", ":"))


def to_records(p) -> list[dict]:
    return [{"i": i, "j": j, "c": format_rat(c)} for (i, j), c in _ordered(p)]


def from_records(records) -> Poly2:
    return Poly2({(r["i"], r["j"]): as_rat(r["c"]) for r in records})


def to_csv(p) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i", "j", "num", "den"])
    for (i, j), c in _ordered(p):
        w.writerow([i, j, c.numerator, c.denominator])
    return buf.getvalue()


def _monomial_body(i, j, names, caret) -> str:
    parts = []
    for e, name in ((i, names[0]), (j, names[1])):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{{{e}}}" if caret == "latex" else f"{name}^{e}")
    return "".join(parts)


def _render(terms, names, style) -> str:
    if not terms:
        return "0"
    out = []
    for n, ((i, j), c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = _monomial_body(i, j, names, style)
        if a == 1 and body:
            coef = ""
        elif a.denominator == 1:
            coef = str(a.numerator)
        elif style == "latex":
            coef = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
        else:
            coef = f"({a.numerator}/{a.denominator})" if body else f"{a.numerator}/{a.denominator}"
        term = coef + body
        if n == 0:
            out.append(term if sign == "+" else "-" + term)
        else:
            out.append(f" {sign} {term}")
    return "".join(out)


def to_latex(p) -> str:
    """LaTeX in ascending graded order, e.g. ``2 - 2x - 2y + xy``."""
    return _render(_ordered(p), _vars(p), "latex")


def to_text(p) -> str:
    """Plain text in descending graded order, e.g. ``xy - 2x - 2y + 2``."""
    terms = _ordered(p)
    if isinstance(p, Poly1):
        terms = terms[::-1]
    else:
        terms = sorted(terms, key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
    return _render(terms, _vars(p), "text")
