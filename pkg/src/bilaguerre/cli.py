"""Command-line front end.

Exit status: 0 success, 1 a verification check failed, 2 usage error,
3 domain error (e.g. a zero base under a negative exponent).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import laguerre2, polyring, quadrature, verify
from .errors import DomainError
from .rational_core import format_rat, parse_rat

FORMATS = ("json", "csv", "latex", "text")


@dataclass
class RunConfig:
    command: str
    bounds: dict = field(default_factory=dict)
    fmt: str = "text"
    tolerances: dict = field(default_factory=dict)
    jobs: int = 1
    output: str | None = None

    def __post_init__(self):
        for name, v in self.bounds.items():
            if v is not None and v < 0:
                raise ValueError(f"--{name} must be nonnegative")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        for name, v in self.tolerances.items():
            if not v > 0:
                raise ValueError(f"tolerance {name} must be positive")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")


def _poly_out(p, fmt: str) -> str:
    if fmt == "json":
        return polyring.to_json(p) + "\n"
    if fmt == "csv":
        return polyring.to_csv(p)
    if fmt == "latex":
        return polyring.to_latex(p) + "\n"
    return polyring.to_text(p) + "\n"


def _table_out(table, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(table.to_records(), separators=(",", ":")) + "\n"
    if fmt == "csv":
        lines = ["n,m,i,j,num,den"]
        for n, m in table.keys():
            for rec in polyring.to_records(table[n, m]):
                c = parse_rat(rec["c"])
                lines.append(f"{n},{m},{rec['i']},{rec['j']},{c.numerator},{c.denominator}")
        return "\n".join(lines) + "\n"
    lines = []
    for n, m in table.keys():
        p = table[n, m]
        if fmt == "latex":
            lines.append(f"L_{{{n},{m}}}(x,y) = {polyring.to_latex(p)}")
        else:
            lines.append(f"L[{n},{m}] ({table.provenance[(n, m)]}) = {polyring.to_text(p)}")
    return "\n".join(lines) + "\n"


def _rule_out(rule, fmt: str) -> str:
    if fmt == "csv":
        return quadrature.rule_to_csv(rule)
    if fmt == "json":
        nodes = ", ".join(f"{x:.17g}" for x in rule.nodes)
        weights = ", ".join(f"{w:.17g}" for w in rule.weights)
        return (
            f'{{"alpha": "{format_rat(rule.alpha)}", "q": {rule.q}, "mu0": {rule.mu0:.17g}, '
            f'"nodes": [{nodes}], "weights": [{weights}]}}\n'
        )
    return "".join(f"{x:.17g} {w:.17g}\n" for x, w in zip(rule.nodes, rule.weights))


def _real(text: str):
    try:
        return float(text)
    except ValueError:
        return float(parse_rat(text))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bilaguerre", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=FORMATS, default="text"):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")

    g = sub.add_parser("gen", help="print L_{n,m}(x,y)")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    common(g)

    e = sub.add_parser("eval", help="evaluate L_{n,m} at a point")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--x", required=True)
    e.add_argument("--y", required=True)
    e.add_argument("--exact", action="store_true", help="exact rational evaluation; accepts p/q")
    e.add_argument("-o", "--output")

    v = sub.add_parser("verify", help="run verification suites, one JSON line per check")
    v.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    v.add_argument("--K", type=int, default=8)
    v.add_argument("--max-index", type=int, default=None, help="orthogonality index bound (default K)")
    v.add_argument("--tolerance", type=float, default=None,
                   help="override the 1-d (relative) and 2-d (absolute) orthogonality tolerances")
    v.add_argument("--oracle-tolerance", type=float, default=None)
    v.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${verify.JOBS_ENV} or 1)")
    v.add_argument("-o", "--output")

    t = sub.add_parser("table", help="triangular table of L_{n,m}, n+m <= K")
    t.add_argument("--K", type=int, required=True)
    t.add_argument("--source", choices=("recurrence", "explicit", "genfun"), default="recurrence")
    common(t)

    q = sub.add_parser("quad", help="Gauss-Laguerre nodes and weights (use --alpha=-1/2)")
    q.add_argument("--alpha", default="0")
    q.add_argument("--q", type=int, required=True)
    common(q, formats=("csv", "json", "text"), default="csv")
    return p


def _config(args) -> RunConfig:
    c = args.command
    tolerances = {}
    if c == "gen":
        bounds = {"n": args.n, "m": args.m}
    elif c == "eval":
        bounds = {"n": args.n, "m": args.m}
    elif c == "verify":
        bounds = {"K": args.K, "max-index": args.max_index}
        if args.tolerance is not None:
            tolerances["orthogonality_1d"] = tolerances["orthonormality_2d"] = args.tolerance
        if args.oracle_tolerance is not None:
            tolerances["trapezoid_oracle"] = args.oracle_tolerance
    elif c == "table":
        bounds = {"K": args.K}
    else:
        bounds = {"q": args.q - 1}
    return RunConfig(
        command=c,
        bounds=bounds,
        fmt=getattr(args, "format", "text") if getattr(args, "format", "text") in FORMATS else "text",
        tolerances=tolerances,
        jobs=getattr(args, "jobs", None) or verify.default_jobs(),
        output=args.output,
    )


def _execute(args, cfg: RunConfig, parser) -> tuple[str, int]:
    if cfg.command == "gen":
        return _poly_out(laguerre2.explicit(args.n, args.m), args.format), 0
    if cfg.command == "eval":
        p = laguerre2.explicit(args.n, args.m)
        try:
            if args.exact:
                x0, y0 = parse_rat(args.x), parse_rat(args.y)
            else:
                x0, y0 = _real(args.x), _real(args.y)
        except (ValueError, ZeroDivisionError) as exc:
            parser.error(str(exc))
        if args.exact:
            return format_rat(p.eval_exact(x0, y0)) + "\n", 0
        return f"{p.eval_float(x0, y0):.17g}\n", 0
    if cfg.command == "verify":
        suites = verify.SUITES if args.suite == "all" else (args.suite,)
        records = verify.run_suites(suites, args.K, args.max_index, cfg.tolerances, cfg.jobs)
        text = "".join(verify.format_record(r) + "\n" for r in records)
        return text, 0 if all(r["pass"] for r in records) else 1
    if cfg.command == "table":
        build = {
            "recurrence": laguerre2.recurrence_table,
            "explicit": laguerre2.explicit_table,
            "genfun": laguerre2.genfun_table,
        }[args.source]
        return _table_out(build(args.K), args.format), 0
    alpha = args.alpha
    try:
        alpha = Fraction(alpha.strip())
    except (ValueError, ZeroDivisionError) as exc:
        parser.error(f"--alpha: {exc}")
    return _rule_out(quadrature.gauss_laguerre(alpha, args.q), args.format), 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        text, status = _execute(args, cfg, parser)
    except DomainError as exc:
        print(f"bilaguerre: domain error: {exc}", file=sys.stderr)
        return 3
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
