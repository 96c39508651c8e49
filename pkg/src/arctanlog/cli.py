"""Command-line front end: ``arctanlog eval | verify | constants``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction as F

from . import verify
from .closedform import closed_form
from .constexpr import format_expr, to_json as expr_to_json
from .errors import ArctanLogError, NotCovered, OutOfRegion, UnknownSuite
from .numerics import PrecisionContext, decimal_string
from .quadrature import IntegralSpec, integrate_I
from .series import FAMILY_IDS, SIDES, SumFamily, family_sum, series_I
from .special import (BETA, CATALAN_G, LI_HALF, PSI, W3, ZETA, ConstantSymbol, constant,
                      cross_check)

EXIT_OK, EXIT_INTERNAL, EXIT_NOT_COVERED, EXIT_USAGE = 0, 1, 2, 64
DIGITS = 40
METHODS = ("closed", "series", "quad", "all")

log = logging.getLogger("arctanlog")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class CliConfig:
    command: str
    precision_bits: int = 256
    fmt: str = "text"
    suite: str | None = None
    method: str = "all"
    a: int | None = None
    p: int | None = None
    q: int | None = None
    r: int | None = None
    family: str | None = None
    k: int | None = None
    side: str = "H_SIDE"
    out: str | None = None

    @property
    def ctx(self) -> PrecisionContext:
        return PrecisionContext(self.precision_bits)


def _default_prec() -> int:
    env = os.environ.get("ARCTANLOG_PREC")
    if env is None:
        return 256
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"ARCTANLOG_PREC must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--prec", type=int, default=None, help="precision in bits (default 256)")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")

    parser = _Parser(prog="arctanlog",
                     description="Evaluate and cross-check arctan-logarithm integrals and sums.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", parents=[common], help="evaluate I(a,p,q,r) or a sum family")
    ev.add_argument("--method", choices=METHODS, default="all")
    for name in ("a", "p", "q", "r"):
        ev.add_argument(f"--{name}", type=int)
    ev.add_argument("--family", choices=FAMILY_IDS)
    ev.add_argument("--k", type=int)
    ev.add_argument("--side", choices=SIDES, default="H_SIDE")

    vf = sub.add_parser("verify", parents=[common], help="run verification suites")
    vf.add_argument("--suite", default="all", help="task-id glob, or 'all'")

    sub.add_parser("constants", parents=[common], help="list constants with cross-checks")
    return parser


def parse_config(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    prec = ns.prec if ns.prec is not None else _default_prec()
    if prec < 64:
        raise UsageError("--prec must be at least 64")
    cfg = CliConfig(ns.command, prec, ns.fmt, out=ns.out,
                    suite=getattr(ns, "suite", None), method=getattr(ns, "method", "all"),
                    a=getattr(ns, "a", None), p=getattr(ns, "p", None),
                    q=getattr(ns, "q", None), r=getattr(ns, "r", None),
                    family=getattr(ns, "family", None), k=getattr(ns, "k", None),
                    side=getattr(ns, "side", "H_SIDE"))
    if cfg.command == "eval":
        params = (cfg.a, cfg.p, cfg.q, cfg.r)
        if cfg.family is not None:
            if any(v is not None for v in params):
                raise UsageError("give either --family/--k or --a/--p/--q/--r, not both")
            if cfg.k is None or cfg.k < 0:
                raise UsageError("--family needs a nonnegative --k")
            if cfg.method not in ("series", "all"):
                raise UsageError("sum families are evaluated with --method series")
        else:
            if any(v is None for v in params):
                raise UsageError("eval needs --a, --p, --q and --r (or --family and --k)")
            if any(v < 0 for v in params):
                raise UsageError("a, p, q, r must be nonnegative")
    return cfg


def _emit(cfg: CliConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _num(x) -> str:
    return decimal_string(x, DIGITS)


def cmd_eval(cfg: CliConfig) -> int:
    ctx = cfg.ctx
    rows = []
    if cfg.family is not None:
        fam = SumFamily(cfg.family, cfg.side, cfg.k)
        value, tail = family_sum(fam, ctx)
        rows.append({"method": "series", "value": _num(value), "terms": tail.terms_used,
                     "tail_bound": decimal_string(tail.bound, 6)})
        target = str(fam)
    else:
        spec = IntegralSpec(cfg.a, cfg.p, cfg.q, cfg.r)
        target = str(spec)
        methods = ("closed", "series", "quad") if cfg.method == "all" else (cfg.method,)
        for m in methods:
            if m == "closed":
                try:
                    expr = closed_form(spec)
                except (NotCovered, OutOfRegion) as exc:
                    if cfg.method == "closed":
                        print(f"{spec}: not covered; use --method quad", file=sys.stderr)
                        log.debug("%s", exc)
                        return EXIT_NOT_COVERED
                    rows.append({"method": "closed", "value": None, "note": "not covered"})
                    continue
                rows.append({"method": "closed", "value": _num(expr.evaluate(ctx)),
                             "expr": format_expr(expr), "expr_json": expr_to_json(expr)})
            elif m == "series":
                try:
                    value, tail = series_I(spec, ctx)
                except ArctanLogError as exc:
                    if cfg.method == "series":
                        print(f"{spec}: {exc}", file=sys.stderr)
                        return EXIT_NOT_COVERED
                    rows.append({"method": "series", "value": None, "note": str(exc)})
                    continue
                rows.append({"method": "series", "value": _num(value), "terms": tail.terms_used,
                             "tail_bound": decimal_string(tail.bound, 6)})
            else:
                res = integrate_I(spec, ctx)
                rows.append({"method": "quad", "value": _num(res.value),
                             "estimated_error": decimal_string(res.estimated_error, 6)})
    if cfg.fmt == "json":
        _emit(cfg, json.dumps({"target": target, "precision_bits": cfg.precision_bits,
                               "results": rows}, indent=2) + "\n")
    else:
        lines = [target]
        for row in rows:
            value = row["value"] if row["value"] is not None else row.get("note", "")
            lines.append(f"  {row['method']:<7} {value}")
            if "expr" in row:
                lines.append(f"  {'':<7} = {row['expr']}")
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(cfg: CliConfig) -> int:
    report = verify.run_suite(cfg.suite, cfg.ctx)
    _emit(cfg, report.to_json() if cfg.fmt == "json" else report.to_text())
    s = report.summary()
    print(f"{len(report.verdicts)} tasks: " + ", ".join(f"{k} {s[k]}" for k in verify.STATUSES),
          file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_INTERNAL


# constants listed by the ``constants`` command
LISTED_CONSTANTS = (
    CATALAN_G, ZETA(3), ZETA(4), ZETA(5), BETA(4), LI_HALF(4), W3,
    PSI(1, F(1, 4)), PSI(1, F(3, 4)), PSI(3, F(1, 4)), PSI(3, F(3, 4)),
)


def _second_route(sym: ConstantSymbol, ctx):
    """Independent value for the cross-check column, or None."""
    v = cross_check(sym, ctx)
    if v is not None or sym.kind != "PSI":
        return v
    # psi^{(m)}(z) = (-1)^(m+1) m! zeta(m+1, z)
    from math import factorial
    from .special import hurwitz_zeta
    m, z = sym.args
    return (-1) ** (m + 1) * factorial(m) * hurwitz_zeta(m + 1, z, ctx.working_bits)


def cmd_constants(cfg: CliConfig) -> int:
    ctx = cfg.ctx
    tol = ctx.mp.mpf(verify.TOL_CONST)
    rows = []
    for sym in LISTED_CONSTANTS:
        value = constant(sym, ctx)
        other = _second_route(sym, ctx)
        if other is None:
            status = "n/a"
        else:
            status = "pass" if abs(value - ctx.mp.mpf(other)) <= tol else "fail"
        rows.append({"name": sym.name, "text": sym.text(), "value": _num(value),
                     "cross_check": status})
    if cfg.fmt == "json":
        _emit(cfg, json.dumps({"precision_bits": cfg.precision_bits, "constants": rows}, indent=2) + "\n")
    else:
        width = max(len(r["name"]) for r in rows)
        _emit(cfg, "".join(f"{r['name']:<{width}}  {r['value']}  cross-check: {r['cross_check']}\n"
                           for r in rows))
    return EXIT_OK if all(r["cross_check"] != "fail" for r in rows) else EXIT_INTERNAL


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "constants": cmd_constants}


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.command](cfg)
    except UnknownSuite as exc:
        print(f"unknown suite: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotCovered, OutOfRegion) as exc:
        print(f"{exc}; not covered; use --method quad", file=sys.stderr)
        return EXIT_NOT_COVERED
    except Exception as exc:  # noqa: BLE001 - the CLI maps anything unexpected to exit 1
        log.exception("internal error: %s", exc)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
