"""Command-line front end: one subcommand per library operation.

Exit codes: 0 success, 1 malformed input, 2 domain error (e.g. a
non-hyperbolic matrix fed to axis-length), 3 precision exhausted.
JSON mode emits a single document on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import dimension_group as dg
from . import jacobi_perron as jp
from . import modular_group as mg
from . import regular_cf as rcf
from .errors import DomainError, ParseError, PrecisionExhausted
from .matrices import parse_matrix
from .realnum import format_real, parse_real

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_PRECISION = 0, 1, 2, 3

_MODULE_RE = re.compile(
    r"module:\{\s*lambda\s*:\s*\[(.*?)\]\s*(?:,\s*unit\s*:\s*\[(.*?)\])?\s*\}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse defaults to exit code 2; malformed input is 1 here
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(EXIT_PARSE)


def _parse_real_list(text: str):
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty value list")
    return [parse_real(p) for p in parts]


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise ParseError("bad integer list %r" % text) from exc


def _parse_module(args) -> dg.ModuleRep:
    if getattr(args, "module", None):
        m = _MODULE_RE.fullmatch(args.module.strip())
        if not m:
            raise ParseError("bad module literal %r" % args.module)
        lam = _parse_real_list(m.group(1))
        unit = _parse_int_list(m.group(2)) if m.group(2) else None
        return dg.build_module(lam, unit)
    if getattr(args, "lam", None):
        unit = _parse_int_list(args.unit) if getattr(args, "unit", None) else None
        return dg.build_module(_parse_real_list(args.lam), unit)
    raise ParseError("provide --module or --lambda")


def _parse_module_text(text: str) -> dg.ModuleRep:
    m = _MODULE_RE.fullmatch(text.strip())
    if not m:
        raise ParseError("bad module literal %r" % text)
    lam = _parse_real_list(m.group(1))
    unit = _parse_int_list(m.group(2)) if m.group(2) else None
    return dg.build_module(lam, unit)


def _module_json(m: dg.ModuleRep) -> dict:
    return {"n": m.n,
            "lambda": [format_real(l) for l in m.lam],
            "theta": [format_real(t) for t in m.theta],
            "unit": list(m.order_unit),
            "rational_dependence": m.rational_dependence}


def _emit(args, doc, text_lines):
    if args.format == "json":
        json.dump(doc, sys.stdout)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            sys.stdout.write("%s\n" % line)


# -- subcommand handlers ----------------------------------------------

def _cmd_cf_expand(args):
    e = rcf.cf_expand(parse_real(args.input), args.depth)
    _emit(args, e.to_json(), [str(e)])


def _cmd_cf_equiv(args):
    d = rcf.gl2_equivalent(parse_real(args.x), parse_real(args.y), args.budget)
    _emit(args, {"decision": d}, [d])


def _cmd_factor(args):
    digits = rcf.factor_unimodular(parse_matrix(args.matrix),
                                   pad_parity=args.pad_parity)
    _emit(args, {"digits": digits}, [",".join(str(a) for a in digits)])


def _cmd_jp_expand(args):
    e = jp.jp_expand(_parse_real_list(args.input), args.depth)
    _emit(args, e.to_json(),
          ["steps: " + " ".join(str(s) for s in e.steps),
           "terminated: %s  truncated: %s" % (e.terminated, e.truncated)])


def _cmd_jp_reconstruct(args):
    e = jp.jp_expand(_parse_real_list(args.input), args.depth)
    k = min(args.depth, len(e.steps))
    conv = jp.jp_convergents(e, k)
    ratios = jp.jp_reconstruct(e, k)
    doc = {"k": k, "matrix": conv.A.to_lists(),
           "ratios": [format_real(r) for r in ratios]}
    lines = [str(list(row)) for row in conv.A.rows]
    lines.append("ratios: " + " ".join(format_real(r) for r in ratios))
    _emit(args, doc, lines)


def _cmd_classify(args):
    c = mg.classify_element(parse_matrix(args.matrix))
    _emit(args, {"class": c}, [c])


def _cmd_axis_length(args):
    val = mg.axis_length(parse_matrix(args.matrix), bits=args.precision)
    doc = {"low": format_real(val.low), "high": format_real(val.high),
           "bits": args.precision}
    _emit(args, doc, ["%.15g" % float(val.midpoint),
                      "interval: [%s, %s]" % (val.low, val.high)])


def _cmd_gamma(args):
    member = mg.gamma_membership(parse_matrix(args.matrix), args.level)
    _emit(args, {"member": member}, ["true" if member else "false"])


def _cmd_legendre_audit(args):
    if args.digits:
        digits = _parse_int_list(args.digits)
        e = rcf.CFExpansion(digits, None, True)
        depth = args.depth or len(digits)
    else:
        if not args.input:
            raise ParseError("provide --input or --digits")
        if not args.depth:
            raise ParseError("--depth is required with --input")
        depth = args.depth
        e = rcf.cf_expand(parse_real(args.input), depth)
    records = mg.legendre_audit(e, args.level, depth)
    doc = [r.to_json() for r in records]
    lines = ["k=%d  T=%s  member=%s" % (r.k, r.T, r.member) for r in records]
    lines.append("legendre to depth %d: %s"
                 % (depth, all(r.member for r in records)))
    _emit(args, doc, lines)


def _cmd_module_build(args):
    m = _parse_module(args)
    doc = _module_json(m)
    _emit(args, doc, ["rank %d" % m.n,
                      "lambda: " + " ".join(doc["lambda"]),
                      "theta: " + " ".join(doc["theta"]),
                      "unit: %s" % (list(m.order_unit),),
                      "rational_dependence: %s" % m.rational_dependence])


def _cmd_cone(args):
    m = _parse_module(args)
    s = dg.cone_contains(m, _parse_int_list(args.element))
    _emit(args, {"sign": s}, [s])


def _cmd_state(args):
    m = _parse_module(args)
    v = dg.state_eval(m, _parse_int_list(args.element))
    _emit(args, {"value": format_real(v)}, [format_real(v)])


def _cmd_order_iso(args):
    ma = _parse_module_text(args.a)
    mb = _parse_module_text(args.b)
    d = dg.order_iso(ma, mb, args.budget)
    _emit(args, {"decision": d}, [d])


def _cmd_chain(args):
    m = _parse_module(args)
    ch = dg.simplicial_chain(m, args.depth)
    _emit(args, ch.to_json(),
          ["%s" % mm for mm in ch.matrices] + ["source: %s" % ch.source])


def _cmd_rank(args):
    n = dg.rank_from_topology(args.genus, args.regions)
    _emit(args, {"rank": n}, [str(n)])


def _cmd_riesz_audit(args):
    m = _parse_module(args)
    rep = dg.riesz_audit(m, args.samples, args.bound, seed=args.seed)
    doc = rep.to_json()
    lines = ["checked: %s" % rep.checks,
             "violations: %d" % len(rep.violations)]
    lines += ["  %s" % v for v in rep.violations[:20]]
    lines.append("precision incidents: %d" % rep.precision_incidents)
    _emit(args, doc, lines)


def _add_module_args(p):
    p.add_argument("--module", help="module:{lambda:[...], unit:[...]} literal")
    p.add_argument("--lambda", dest="lam",
                   help="comma-separated generator values")
    p.add_argument("--unit", help="comma-separated order unit coordinates")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cfgroups",
                     description="Exact continued fractions, the modular "
                                 "group, and totally ordered dimension groups")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf-expand", help="regular continued fraction digits")
    p.add_argument("--input", required=True)
    p.add_argument("--depth", type=int, default=64)
    p.set_defaults(func=_cmd_cf_expand)

    p = sub.add_parser("cf-equiv", help="GL(2,Z) equivalence of two reals")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--budget", type=int, default=64)
    p.set_defaults(func=_cmd_cf_equiv)

    p = sub.add_parser("factor", help="factor a non-negative unimodular "
                                      "matrix into elementary factors")
    p.add_argument("--matrix", required=True)
    p.add_argument("--pad-parity", action="store_true")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("jp-expand", help="Jacobi-Perron digit vectors")
    p.add_argument("--input", required=True,
                   help="comma-separated theta coordinates")
    p.add_argument("--depth", type=int, default=32)
    p.set_defaults(func=_cmd_jp_expand)

    p = sub.add_parser("jp-reconstruct",
                       help="convergent matrix and ratio vector")
    p.add_argument("--input", required=True)
    p.add_argument("--depth", type=int, default=32)
    p.set_defaults(func=_cmd_jp_reconstruct)

    p = sub.add_parser("classify", help="elliptic/parabolic/hyperbolic")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("axis-length", help="translation length of a "
                                           "hyperbolic element")
    p.add_argument("--matrix", required=True)
    p.add_argument("--precision", type=int, default=64)
    p.set_defaults(func=_cmd_axis_length)

    p = sub.add_parser("gamma", help="principal congruence group membership")
    p.add_argument("--matrix", required=True)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("legendre-audit",
                       help="audit CF partial products against a level")
    p.add_argument("--input")
    p.add_argument("--digits", help="explicit partial quotients a0,a1,...")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--depth", type=int)
    p.set_defaults(func=_cmd_legendre_audit)

    p = sub.add_parser("module-build", help="build a Z-module in R")
    _add_module_args(p)
    p.set_defaults(func=_cmd_module_build)

    p = sub.add_parser("cone", help="sign of an element's image")
    _add_module_args(p)
    p.add_argument("--element", required=True)
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("state", help="normalized state value of an element")
    _add_module_args(p)
    p.add_argument("--element", required=True)
    p.set_defaults(func=_cmd_state)

    p = sub.add_parser("order-iso", help="order isomorphism of two modules")
    p.add_argument("--a", required=True, help="module literal")
    p.add_argument("--b", required=True, help="module literal")
    p.add_argument("--budget", type=int, default=64)
    p.set_defaults(func=_cmd_order_iso)

    p = sub.add_parser("chain", help="simplicial approximation chain")
    _add_module_args(p)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("rank", help="rank from genus and principal regions")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--regions", type=int, required=True)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("riesz-audit", help="sampled positive-cone axiom audit")
    _add_module_args(p)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_riesz_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_PARSE
    try:
        args.func(args)
        return EXIT_OK
    except ParseError as exc:
        _fail(args, "parse_error", exc)
        return EXIT_PARSE
    except PrecisionExhausted as exc:
        _fail(args, "precision_exhausted", exc)
        return EXIT_PRECISION
    except DomainError as exc:
        _fail(args, type(exc).__name__, exc)
        return EXIT_DOMAIN


def _fail(args, kind, exc):
    sys.stderr.write("%s: %s\n" % (kind, exc))
    if getattr(args, "format", "text") == "json":
        json.dump({"error": {"type": kind, "message": str(exc)}}, sys.stdout)
        sys.stdout.write("\n")


if __name__ == "__main__":
    sys.exit(main())
