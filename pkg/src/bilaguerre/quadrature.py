"""Gauss-Laguerre rules for the weight x^alpha e^-x on (0, inf), and the
orthogonality integrals they are used for.

Rules come from the Golub-Welsch construction: the nodes are the
eigenvalues of the symmetric tridiagonal Jacobi matrix of the monic
Laguerre recurrence, and each weight is mu0 times the squared first
component of the matching normalized eigenvector.  The eigenproblem is
solved by implicit-shift QL with Wilkinson-type shifts, carrying only the
first row of the accumulated rotations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError
from .laguerre1 import laguerre_explicit
from .rational_core import binomial, factorial

__all__ = [
    "OrthogonalityResult",
    "QuadratureRule",
    "TrapezoidResult",
    "gamma_half_integer",
    "gauss_laguerre",
    "orthogonality_1d",
    "orthonormality_2d",
    "rule_to_csv",
    "trapezoid_oracle_2d",
]

SQRT_PI = 1.7724538509055160273


def _as_alpha(alpha) -> Fraction:
    if isinstance(alpha, str):
        alpha = Fraction(alpha.strip())
    a = Fraction(alpha)
    if a <= -1:
        raise DomainError(f"alpha must exceed -1, got {a}")
    if (2 * a).denominator != 1:
        raise DomainError(f"only integer and half-integer alpha are supported, got {a}")
    return a


def gamma_half_integer(z) -> float:
    """Gamma(z) for positive integer or half-integer z.

    Integers go through the exact factorial; half-integers start from
    Gamma(1/2) = sqrt(pi) and climb with Gamma(z+1) = z Gamma(z).
    """
    z = Fraction(z)
    if z <= 0 or (2 * z).denominator != 1:
        raise DomainError(f"gamma_half_integer needs z in {{1/2, 1, 3/2, ...}}, got {z}")
    if z.denominator == 1:
        return float(factorial(int(z) - 1))
    g, w = SQRT_PI, Fraction(1, 2)
    while w < z:
        g *= float(w)
        w += 1
    return g


def _tridiagonal_eig_first(diag, offdiag, max_iter: int):
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal matrix.

    ``offdiag[i]`` couples rows i and i+1.  Returns (values, first) unsorted.
    """
    d = [float(v) for v in diag]
    n = len(d)
    e = [float(v) for v in offdiag] + [0.0]
    z = [0.0] * n
    z[0] = 1.0
    eps = np.finfo(float).eps
    iters = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            iters += 1
            if iters > max_iter:
                raise ConvergenceError(f"QL iteration did not converge in {max_iter} steps")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z


@dataclass(frozen=True)
class QuadratureRule:
    alpha: Fraction
    nodes: tuple
    weights: tuple
    mu0: float

    @property
    def q(self) -> int:
        return len(self.nodes)

    def integrate(self, values) -> float:
        """sum_i w_i f(x_i) for values already sampled at the nodes."""
        return float(np.dot(np.asarray(self.weights), np.asarray(values, dtype=float)))


@lru_cache(maxsize=64)
def _rule(alpha: Fraction, q: int) -> QuadratureRule:
    a = float(alpha)
    diag = [2 * j + a + 1 for j in range(q)]
    off = [math.sqrt(j * (j + a)) for j in range(1, q)]
    values, first = _tridiagonal_eig_first(diag, off, max_iter=100 * q)
    mu0 = gamma_half_integer(alpha + 1)
    order = sorted(range(q), key=values.__getitem__)
    nodes = tuple(values[i] for i in order)
    weights = tuple(mu0 * first[i] ** 2 for i in order)
    return QuadratureRule(alpha, nodes, weights, mu0)


def gauss_laguerre(alpha, q: int) -> QuadratureRule:
    """q-point Gauss rule for x^alpha e^-x, exact for polynomials of degree <= 2q-1."""
    if q < 1:
        raise DomainError(f"need at least one node, got q={q}")
    return _rule(_as_alpha(alpha), int(q))


def rule_to_csv(rule: QuadratureRule) -> str:
    lines = ["node,weight"]
    lines += [f"{x:.17g},{w:.17g}" for x, w in zip(rule.nodes, rule.weights)]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class OrthogonalityResult:
    n: int
    m: int
    computed: float
    expected: float

    @property
    def abs_error(self) -> float:
        return abs(self.computed - self.expected)


@lru_cache(maxsize=1024)
def _node_values(n: int, alpha: int, q: int) -> np.ndarray:
    # monomial Horner cancels badly at the large nodes; evaluate exactly at the
    # (exactly representable) float nodes and round once
    poly = laguerre_explicit(n, alpha)
    vals = np.array([float(poly.eval_exact(Fraction(x))) for x in gauss_laguerre(alpha, q).nodes])
    vals.setflags(write=False)
    return vals


def orthogonality_1d(n: int, m: int, alpha: int, q: int = 24) -> OrthogonalityResult:
    """Quadrature value of int e^-x x^alpha L_n^(alpha) L_m^(alpha) dx.

    The expected value is Gamma(alpha+1) C(n+alpha, n) when n == m, else 0.
    """
    if q < n + m + 1:
        raise DomainError(f"q={q} is too small for degrees ({n}, {m}); need q >= {n + m + 1}")
    rule = gauss_laguerre(alpha, q)
    vals = _node_values(n, alpha, q) * _node_values(m, alpha, q)
    expected = float(factorial(alpha) * binomial(n + alpha, n)) if n == m else 0.0
    return OrthogonalityResult(n, m, rule.integrate(vals), expected)


def orthonormality_2d(n: int, m: int, q: int = 40) -> OrthogonalityResult:
    """int int w(x,y) LS_n LS_m over the open quadrant, w = e^{-(x+y)/2} / (2 pi sqrt(xy)).

    With x = 2a, y = 2b the weight becomes a^-1/2 e^-a b^-1/2 e^-b / pi, so a
    tensor product of the alpha = -1/2 rule integrates it exactly.
    """
    from .identities import ls_poly

    if q < n + m + 1:
        raise DomainError(f"q={q} is too small for degrees ({n}, {m}); need q >= {n + m + 1}")
    rule = gauss_laguerre(Fraction(-1, 2), q)
    a = np.asarray(rule.nodes)
    w = np.asarray(rule.weights)
    A, B = 2 * a[:, None], 2 * a[None, :]
    vals = ls_poly(n).eval_float(A, B) * ls_poly(m).eval_float(A, B)
    computed = float(w @ vals @ w) / math.pi
    return OrthogonalityResult(n, m, computed, 1.0 if n == m else 0.0)


@dataclass(frozen=True)
class TrapezoidResult:
    value: float
    raw_value: float
    strip_correction: float
    points_per_axis: int
    error_estimate: float


def _graded_trapezoid(lo: float, hi: float, N: int):
    x = np.geomspace(lo, hi, N)
    dx = np.diff(x)
    w = np.zeros(N)
    w[:-1] += dx / 2
    w[1:] += dx / 2
    return x, w


def _trapezoid_pass(p_n, p_m, eps, R, N, chunk=256):
    x, w = _graded_trapezoid(eps, R, N)
    g = np.exp(-x / 2) / np.sqrt(x)
    total = 0.0
    for s in range(0, N, chunk):
        X = np.broadcast_to(x[s:s + chunk, None], (min(chunk, N - s), N))
        Y = np.broadcast_to(x[None, :], X.shape)
        F = p_n.eval_float(X, Y, compensated=False) * p_m.eval_float(X, Y, compensated=False)
        F *= g[s:s + chunk, None] * g[None, :]
        total += float(w[s:s + chunk] @ F @ w)
    raw = total / (2 * math.pi)
    # strips [0, eps] x [eps, R], [eps, R] x [0, eps] and the corner: the x^-1/2
    # factor integrates to 2 sqrt(eps), the smooth remainder is frozen at 0
    zeros = np.zeros(N)
    strip_len = 2 * math.sqrt(eps)
    along_y = float(w @ (g * p_n.eval_float(zeros, x) * p_m.eval_float(zeros, x)))
    along_x = float(w @ (g * p_n.eval_float(x, zeros) * p_m.eval_float(x, zeros)))
    corner = strip_len**2 * p_n.eval_float(0.0, 0.0) * p_m.eval_float(0.0, 0.0)
    strips = (strip_len * (along_x + along_y) + corner) / (2 * math.pi)
    return raw, strips


def trapezoid_oracle_2d(
    n: int,
    m: int,
    eps: float = 1e-8,
    R: float = 120.0,
    tol: float = 2e-5,
    start: int = 256,
    max_points: int = 8192,
) -> TrapezoidResult:
    """Brute-force check of the quadrant integral straight from the x, y integrand.

    Tensor trapezoid on a geometrically graded grid over [eps, R]^2, doubled
    until the Richardson error estimate |I_N - I_{N/2}|/3 drops below ``tol``.
    The mass of the singular strips below eps is O(sqrt(eps)), too large to
    drop at a 1e-4 comparison, so their leading term is added in closed form.
    """
    from .identities import ls_poly

    p_n, p_m = ls_poly(n), ls_poly(m)
    N = start
    prev = None
    while True:
        raw, strips = _trapezoid_pass(p_n, p_m, eps, R, N)
        value = raw + strips
        if prev is not None:
            err = abs(value - prev) / 3
            if err < tol or 2 * N > max_points:
                return TrapezoidResult(value, raw, strips, N, err)
        prev = value
        N *= 2
