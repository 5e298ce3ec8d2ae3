"""Verification suites emitting one JSON record per check.

Checks are independent, so they may run in a process pool; results are
sorted by (suite, k, n, m, ...) before emission, which makes the report
byte-identical for a given configuration regardless of parallelism.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

SUITES = ("recurrences", "identities", "genfun", "lemma1", "orthogonality")

DEFAULT_TOLERANCES = {
    "orthogonality_1d": 1e-10,  # scaled by max(1, expected)
    "orthonormality_2d": 1e-8,
    "trapezoid_oracle": 1e-4,
}

ORACLE_CASES = ((0, 0), (1, 0), (1, 1))
JOBS_ENV = "BILAGUERRE_JOBS"


@dataclass(frozen=True)
class Task:
    suite: str
    check: str
    args: tuple

    @property
    def key(self):
        return (SUITES.index(self.suite), self.check, self.args)


def _tasks(suite: str, K: int, max_index: int, tolerances: dict) -> list[Task]:
    if suite == "recurrences":
        out = []
        for check in ("recurrence_n", "recurrence_m", "five_term"):
            out += [Task(suite, check, (n, m)) for n in range(K + 1) for m in range(K + 1)]
        return out
    if suite == "identities":
        return [
            Task(suite, ident, (k,))
            for k in range(K + 1)
            for ident in ("SUM", "ASUM", "XSUM", "XYSUM")
        ]
    if suite == "genfun":
        # one task: the whole series is built once and every coefficient compared
        return [Task(suite, "genfun", (K,))]
    if suite == "lemma1":
        return [Task(suite, "lemma1", (n, K)) for n in range(K + 1)]
    if suite == "orthogonality":
        t1 = tolerances["orthogonality_1d"]
        t2 = tolerances["orthonormality_2d"]
        t3 = tolerances["trapezoid_oracle"]
        rng = range(max_index + 1)
        out = [
            Task(suite, "orthogonality_1d", (alpha, n, m, 24, t1))
            for alpha in range(5)
            for n in rng
            for m in rng
        ]
        out += [Task(suite, "orthonormality_2d", (n, m, 40, t2)) for n in rng for m in rng]
        out += [Task(suite, "trapezoid_oracle", (n, m, t3)) for n, m in ORACLE_CASES]
        return out
    raise ValueError(f"unknown suite {suite!r}")


def _run(task: Task) -> list[dict]:
    from . import identities, laguerre2, powerseries, quadrature
    from .rational_core import factorial

    c, a = task.check, task.args
    if task.suite == "recurrences":
        fn = {
            "recurrence_n": laguerre2.recurrence_residual,
            "recurrence_m": laguerre2.recurrence_dual_residual,
            "five_term": laguerre2.recurrence_5term_residual,
        }[c]
        res = fn(*a)
        return [{"check": c, "n": a[0], "m": a[1], "pass": not res, "residual_terms": len(res)}]
    if task.suite == "identities":
        return [identities.check_identity(c, a[0]).to_record()]
    if task.suite == "genfun":
        (K,) = a
        series = powerseries.genfun2(K)
        return [
            {"check": "genfun", "n": n, "m": d - n, "pass": series[(n, d - n)] == laguerre2.explicit(n, d - n)}
            for d in range(K + 1)
            for n in range(d + 1)
        ]
    if task.suite == "lemma1":
        n, K = a
        rhs = powerseries.lemma1_rhs(n, K)
        ok = all(rhs[m] == laguerre2.explicit(n, m).scale(factorial(n)) for m in range(K + 1))
        return [{"check": "lemma1", "n": n, "order": K, "pass": ok}]
    if c == "orthogonality_1d":
        alpha, n, m, q, tol = a
        r = quadrature.orthogonality_1d(n, m, alpha, q)
        bound = tol * max(1.0, r.expected)
        return [_numeric(c, {"alpha": alpha, "n": n, "m": m, "q": q}, r.computed, r.expected, bound)]
    if c == "orthonormality_2d":
        n, m, q, tol = a
        r = quadrature.orthonormality_2d(n, m, q)
        return [_numeric(c, {"n": n, "m": m, "q": q}, r.computed, r.expected, tol)]
    if c == "trapezoid_oracle":
        n, m, tol = a
        oracle = quadrature.trapezoid_oracle_2d(n, m)
        reduced = quadrature.orthonormality_2d(n, m, 40)
        return [_numeric(c, {"n": n, "m": m}, oracle.value, reduced.computed, tol)]
    raise ValueError(f"unknown check {c!r}")


def _numeric(check, ids, computed, expected, tol) -> dict:
    err = abs(computed - expected)
    rec = {"check": check, **ids}
    rec.update(computed=computed, expected=expected, abs_error=err, tolerance=tol, **{"pass": err <= tol})
    return rec


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def run_suites(
    suites,
    K: int,
    max_index: int | None = None,
    tolerances: dict | None = None,
    jobs: int | None = None,
) -> list[dict]:
    """Run the named suites and return their records in canonical order."""
    tol = dict(DEFAULT_TOLERANCES)
    tol.update(tolerances or {})
    if max_index is None:
        max_index = K
    tasks = []
    for suite in suites:
        tasks += _tasks(suite, K, max_index, tol)
    tasks.sort(key=lambda t: t.key)
    jobs = jobs or default_jobs()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks, chunksize=4))
    else:
        results = [_run(t) for t in tasks]
    records = []
    for task, recs in zip(tasks, results):
        for rec in recs:
            records.append({"suite": task.suite, **rec})
    records.sort(key=_record_key)
    return records


def _record_key(rec):
    k = rec.get("k", rec.get("n", 0) + rec.get("m", 0))
    return (
        SUITES.index(rec["suite"]),
        k,
        rec.get("n", -1),
        rec.get("m", -1),
        str(rec.get("check", rec.get("identity"))),
        rec.get("alpha", -1),
    )


def format_record(rec: dict) -> str:
    """One JSON line; doubles are written with 17 significant digits."""
    parts = []
    for key, val in rec.items():
        if isinstance(val, float):
            text = f"{val:.17g}" if math.isfinite(val) else json.dumps(str(val))
        else:
            text = json.dumps(val)
        parts.append(f"{json.dumps(key)}: {text}")
    return "{" + ", ".join(parts) + "}"
