"""Diagonal-sum identities over the k+1 polynomials of total degree k.

Each check builds both sides as exact polynomials and compares canonical
forms.  The x <-> 1/x substitutions are cleared by their premultipliers, so
those two identities are verified as polynomial identities rather than at
sample points.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .laguerre1 import laguerre_explicit
from .laguerre2 import explicit
from .polyring import Poly2, substitute, substitute_laurent
from .rational_core import factorial

__all__ = [
    "IDENTITIES",
    "IdentityCheck",
    "alternating_sum_identity",
    "check_identity",
    "ls_poly",
    "sum_identity",
    "xsum_identity",
    "xysum_identity",
]

_X, _Y = Poly2.x(), Poly2.y()


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    k: int
    lhs: Poly2
    rhs: Poly2

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_record(self) -> dict:
        return {
            "identity": self.identity,
            "k": self.k,
            "pass": self.passed,
            "lhs_terms": len(self.lhs),
            "rhs_terms": len(self.rhs),
        }


def _diagonal(k: int):
    return [(n, k - n) for n in range(k + 1)]


def _half_sum() -> Poly2:
    return (_X + _Y).scale(Fraction(1, 2))


def sum_identity(k: int) -> IdentityCheck:
    """sum_{n+m=k} L_{n,m}(x,y) against 2^k L_k((x+y)/2)."""
    lhs = sum((explicit(n, m) for n, m in _diagonal(k)), Poly2.zero())
    rhs = substitute(laguerre_explicit(k), _half_sum()).scale(2**k)
    return IdentityCheck("SUM", k, lhs, rhs)


def alternating_sum_identity(k: int) -> IdentityCheck:
    """sum_{n+m=k} (-1)^m L_{n,m}(x,y) against (y-x)^k / k!."""
    lhs = sum((explicit(n, m).scale((-1) ** m) for n, m in _diagonal(k)), Poly2.zero())
    rhs = ((_Y - _X) ** k).scale(Fraction(1, factorial(k)))
    return IdentityCheck("ASUM", k, lhs, rhs)


def xsum_identity(k: int) -> IdentityCheck:
    """sum_{n+m=k} x^m L_{n,m}(x, 1/x) against L_k(1) (1+x)^k."""
    lhs = sum(
        (substitute_laurent(explicit(n, m), (1, 1, 0), (1, -1, 0), (1, m, 0)) for n, m in _diagonal(k)),
        Poly2.zero(),
    )
    rhs = ((1 + _X) ** k).scale(laguerre_explicit(k).eval_exact(1))
    return IdentityCheck("XSUM", k, lhs, rhs)


def xysum_identity(k: int) -> IdentityCheck:
    """sum_{n+m=k} x^n y^m L_{n,m}(1/x, -1/y) against (x+y)^k."""
    lhs = sum(
        (substitute_laurent(explicit(n, m), (1, -1, 0), (-1, 0, -1), (1, n, m)) for n, m in _diagonal(k)),
        Poly2.zero(),
    )
    return IdentityCheck("XYSUM", k, lhs, (_X + _Y) ** k)


IDENTITIES = {
    "SUM": sum_identity,
    "ASUM": alternating_sum_identity,
    "XSUM": xsum_identity,
    "XYSUM": xysum_identity,
}


def check_identity(name: str, k: int) -> IdentityCheck:
    return IDENTITIES[name](k)


@lru_cache(maxsize=None)
def ls_poly(k: int) -> Poly2:
    """LS_k = 2^-k sum_{n+m=k} L_{n,m}; asserts it equals L_k((x+y)/2)."""
    by_sum = sum((explicit(n, m) for n, m in _diagonal(k)), Poly2.zero()).scale(Fraction(1, 2**k))
    by_subst = substitute(laguerre_explicit(k), _half_sum())
    if by_sum != by_subst:
        raise AssertionError(f"the two definitions of LS_{k} disagree")
    return by_sum
