"""Command-line front end.  Every command prints one JSON object on stdout.

Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 budget exhausted.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import am, boolfn, constructions, moments, predictor, repro
from .code import DEFAULT_CODEWORD_BUDGET, BudgetExceeded, LinearCode, WeightDistribution
from .designs import DEFAULT_DESIGN_BUDGET, Design, is_t_design, support_design
from .gf import field_new, parse_field_spec

SCHEMA = 1
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
INT64_LIMIT = 1 << 63


class UsageError(Exception):
    pass


def jsonable(obj):
    """Plain JSON types; integers beyond 64 bits become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        obj = int(obj)
        return str(obj) if abs(obj) >= INT64_LIMIT else obj
    if isinstance(obj, Fraction):
        return jsonable(obj.numerator) if obj.denominator == 1 else str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(payload):
    return json.dumps(jsonable({"schema": SCHEMA, **payload}), sort_keys=True)


# -- input helpers -------------------------------------------------------------

def _ints(text):
    if text is None or text == "":
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _field(args, p=2, m=None):
    if getattr(args, "field", None):
        return parse_field_spec(args.field)
    if m is None:
        return None
    return field_new(p, m)


def _coef(token, field):
    if token.startswith("a"):
        return field.exp(int(token[1:] or 1))
    return int(token)


def load_function(spec, field=None):
    """Function mini-spec or table file.

    mono:n:e[:c]   x -> c x^e (c is a code, or aK for alpha^K)
    kasami:n:i, gold:n:i, btt:m:i
    any spec may end in /tr:d to apply the trace down to GF(2^d)
    """
    base, _, tail = spec.partition("/")
    parts = base.split(":")
    kind = parts[0]
    try:
        if kind == "mono":
            n, e = int(parts[1]), int(parts[2])
            fld = field if field is not None and field.m == n else field_new(2, n)
            coef = _coef(parts[3], fld) if len(parts) > 3 else 1
            F = boolfn.from_exponent(n, e, fld, coef=coef)
        elif kind in ("kasami", "gold"):
            n, i = int(parts[1]), int(parts[2])
            fld = field if field is not None and field.m == n else None
            F, _ = getattr(boolfn, kind)(n, i, fld)
        elif kind == "btt":
            m, i = int(parts[1]), int(parts[2])
            fld = field if field is not None and field.m == 3 * m else None
            F, _ = boolfn.bracken_tan_tan(m, i, fld)
        elif Path(spec).exists():
            return boolfn.read_table_text(Path(spec).read_text())
        else:
            raise UsageError(f"unrecognized function spec {spec!r}")
    except (IndexError, ValueError) as exc:
        raise UsageError(f"bad function spec {spec!r}: {exc}") from None
    if tail:
        if not tail.startswith("tr:"):
            raise UsageError(f"unknown modifier {tail!r}")
        F = boolfn.with_trace_to(F, int(tail[3:]))
    return F


def load_code(args):
    if getattr(args, "code_file", None):
        return LinearCode.from_text(Path(args.code_file).read_text())
    if getattr(args, "fn", None):
        F = load_function(args.fn, _field(args))
        return constructions.code_from_vectorial(F, budget=False, predict=False).code
    raise UsageError("give a code file or --fn")


def load_dist(path):
    obj = json.loads(Path(path).read_text())
    return WeightDistribution(len(obj["counts"]) - 1, tuple(int(c) for c in obj["counts"]), int(obj.get("q", 2)))


def _dist_json(dist, code=None):
    out = {"nu": dist.length, "q": dist.q, "counts": list(dist.counts)}
    if code is not None:
        out["m"] = code.dimension
        out["d"] = dist.min_weight()
    return out


def _write(args, text):
    if getattr(args, "out", None):
        Path(args.out).write_text(text)


# -- commands ------------------------------------------------------------------

def cmd_field(args):
    fld = parse_field_spec(args.field) if args.field else field_new(args.p, args.m)
    out = {"p": fld.p, "m": fld.m, "q": fld.q, "modulus": list(fld.modulus),
           "generator": fld.generator, "spec": fld.spec()}
    if args.x is not None:
        if not 0 <= args.x < fld.q:
            raise UsageError(f"x must lie in 0..{fld.q - 1}")
        out["x"] = args.x
        out["log"] = int(fld.log[args.x])
        if args.trace_degree:
            out["trace"] = fld.trace(args.x, args.trace_degree)
    return out, EXIT_OK


def cmd_code(args):
    code = load_code(args)
    budget = args.budget_codewords
    if args.op == "wdist":
        return _dist_json(code.weight_distribution(budget), code), EXIT_OK
    if args.op == "dual":
        result = code.dual()
    elif args.op == "shorten":
        result = code.shorten(_ints(args.coords))
    elif args.op == "puncture":
        result = code.puncture(_ints(args.coords))
    else:
        raise UsageError(f"unknown code operation {args.op!r}")
    _write(args, result.to_text())
    out = {"nu": result.length, "m": result.dimension}
    if result.size <= budget:
        dist = result.weight_distribution(budget)
        out.update(_dist_json(dist, result))
    return out, EXIT_OK


def cmd_moments(args):
    if args.op == "check":
        dist = load_dist(args.dist)
        dual = load_dist(args.dual) if args.dual else moments.macwilliams(dist)
        rows = moments.moment_check(dist, dual, args.t_max)
        failing = next((t for t, _, _, ok in rows if not ok), None)
        out = {
            "moments": [{"t": t, "lhs": lhs, "rhs": rhs, "ok": ok} for t, lhs, rhs, ok in rows],
            "first_failure": failing,
        }
        return out, EXIT_OK if failing is None else EXIT_MISMATCH
    known = {int(k): int(v) for k, v in json.loads(args.known or "{}").items()}
    dist, dual_used = moments.solve_distribution(
        args.nu, args.m, args.q, _ints(args.unknown), known, _ints(args.dual_prefix)
    )
    return {**_dist_json(dist), "dual_used": list(dual_used)}, EXIT_OK


def cmd_design(args):
    if args.op == "extract":
        code = load_code(args)
        if args.dual:
            code = code.dual()
        des = support_design(code, args.weight, args.budget_codewords)
        _write(args, json.dumps(des.to_json(), sort_keys=True))
        out = {"nu": des.nu, "k": des.k, "blocks": len(des.blocks), "total": des.num_blocks,
               "simple": des.is_simple()}
        if args.t is not None:
            out["lambda"] = is_t_design(des, args.t, args.budget_design_steps)
        return out, EXIT_OK
    des = Design.from_json(json.loads(Path(args.design_file).read_text()))
    lam = is_t_design(des, args.t, args.budget_design_steps)
    out = {"nu": des.nu, "k": des.k, "t": args.t, "lambda": lam, "is_design": lam is not None}
    return out, EXIT_OK if lam is not None else EXIT_MISMATCH


def _params(text):
    out = {}
    for item in (text or "").split(","):
        if not item.strip():
            continue
        key, _, value = item.partition("=")
        if not value:
            raise UsageError(f"expected key=value, got {item!r}")
        out[key.strip()] = int(value)
    return out


def cmd_predict(args):
    if args.op == "table":
        pred = predictor.table_predict(args.family, **_params(args.params))
    else:
        dist = load_dist(args.dist)
        fn = predictor.shortened_predict if args.op == "shorten" else predictor.punctured_predict
        pred = fn(dist, t=args.t)
    return pred.to_json(), EXIT_OK


def cmd_fn(args):
    if args.op == "family":
        if args.family == "btt":
            F, s = boolfn.bracken_tan_tan(args.m, args.i)
        else:
            F, s = getattr(boolfn, args.family)(args.n, args.i)
        _write(args, F.to_text())
        out = {"n": F.n, "l": F.l, "predicted_s": s}
        if F.n <= boolfn.MAX_DIFF_N:
            out["two_valued_s"] = boolfn.two_valued_s(F)
        return out, EXIT_OK
    F = load_function(args.fn, _field(args))
    if args.op == "walsh":
        spectrum = boolfn.walsh_spectrum(F)
        out = {"n": F.n, "l": F.l, "values": boolfn.walsh_value_set(F, spectrum)}
        if F.n % 2 == 0:
            out["bent"] = bool(np.all(np.abs(spectrum[1:]) == 1 << (F.n // 2)))
        if F.l == F.n and F.n <= boolfn.MAX_DIFF_N:
            diff = boolfn.diff_spectrum(F)
            out["fourth_moment"] = boolfn.fourth_moment(F, spectrum)
            out["fourth_moment_target"] = boolfn.fourth_moment_target(F.n, diff.delta)
            out["fourth_moment_design"] = out["fourth_moment"] == out["fourth_moment_target"]
        return out, EXIT_OK
    diff = boolfn.diff_spectrum(F)
    out = {"n": F.n, "l": F.l, "histogram": diff.histogram, "delta": diff.delta,
           "two_valued_s": boolfn.two_valued_s(F, diff)}
    return out, EXIT_OK


def _report_out(args, report):
    _write(args, report.code.to_text())
    out = report.to_json()
    return out, EXIT_MISMATCH if report.match is False else EXIT_OK


def cmd_build(args):
    budget = args.budget_codewords
    if args.kind == "bent-support":
        if not args.f:
            raise UsageError("build bent-support needs --f")
        f = load_function(args.f, _field(args))
        if f.l != 1:
            f = boolfn.with_trace_to(f, 1)
        return _report_out(args, constructions.code_from_bent_support(f, budget))
    if args.kind == "vectorial":
        if not args.fn:
            raise UsageError("build vectorial needs --fn")
        F = load_function(args.fn, _field(args))
        return _report_out(args, constructions.code_from_vectorial(F, budget))
    if args.kind == "ternary":
        return _report_out(args, constructions.ternary_code(args.m, budget))
    if args.kind == "rm1":
        code = constructions.rm1(args.n)
        _write(args, code.to_text())
        return _dist_json(code.weight_distribution(budget), code), EXIT_OK
    raise UsageError(f"unknown build kind {args.kind!r}")


def cmd_steiner(args):
    F = load_function(args.fn, _field(args))
    spectrum = boolfn.diff_spectrum(F)
    des = constructions.steiner_from_function(F)
    _write(args, json.dumps(des.to_json(), sort_keys=True))
    s = boolfn.two_valued_s(F, spectrum)
    lam = is_t_design(des, 2, args.budget_design_steps) if des.blocks else 0
    out = {
        "nu": des.nu,
        "blocks": des.num_blocks,
        "two_valued_s": s,
        "pair_lambdas": constructions.all_pair_lambdas(F, spectrum),
        "lambda": lam,
    }
    code = EXIT_OK
    if s is not None and 1 <= s <= F.n - 1:
        out["a4_dual"] = moments.a4_dual_from_two_valued(F.n, s)
        if out["a4_dual"] != des.num_blocks:
            code = EXIT_MISMATCH
    return out, code


def cmd_am(args):
    code = load_code(args)
    if args.op == "classic":
        report = am.classic_am(code, args.t, args.budget_codewords)
    elif args.op == "generalized":
        if not args.S:
            raise UsageError("am generalized needs --S")
        report = am.generalized_am(code, args.t, _ints(args.S), args.budget_codewords,
                                   args.budget_design_steps)
    else:
        report = am.characterization(code, args.t, args.budget_codewords, args.budget_design_steps)
    return report.to_json(), EXIT_OK


def cmd_repro(args):
    try:
        results = repro.run(args.subset)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    for r in results:
        print(r.line(), file=sys.stderr)
    ok = all(r.passed for r in results)
    return {"results": [r.to_json() for r in results], "passed": ok}, EXIT_OK if ok else EXIT_MISMATCH


# -- parser --------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="designcodes", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="field spec 'p m c_m ... c_0'")
    common.add_argument("--budget-codewords", type=int, default=DEFAULT_CODEWORD_BUDGET)
    common.add_argument("--budget-design-steps", type=int, default=DEFAULT_DESIGN_BUDGET)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the primary artifact (code, design, table) here")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common], help="describe a finite field")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--x", type=int, help="element code to inspect")
    p.add_argument("--trace-degree", type=int)
    p.set_defaults(func=cmd_field)

    def with_code_input(sp):
        sp.add_argument("code_file", nargs="?", help="code file ('q nu m' header + rows)")
        sp.add_argument("--fn", help="build C(F) from a function spec instead")

    p = sub.add_parser("code", parents=[common], help="code operations")
    p.add_argument("op", choices=["wdist", "dual", "shorten", "puncture"])
    with_code_input(p)
    p.add_argument("--coords", help="comma-separated coordinates")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("moments", parents=[common], help="Pless power moments")
    p.add_argument("op", choices=["check", "solve"])
    p.add_argument("--dist")
    p.add_argument("--dual")
    p.add_argument("--t-max", type=int, default=5)
    p.add_argument("--nu", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--unknown")
    p.add_argument("--known", help='JSON object weight -> count, e.g. {"36": 1}')
    p.add_argument("--dual-prefix", help="A^perp_1..A^perp_{s-1}")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("design", parents=[common], help="support designs")
    p.add_argument("op", choices=["extract", "verify"])
    p.add_argument("code_file", nargs="?", help="code file (extract) or design JSON (verify)")
    p.add_argument("--fn")
    p.add_argument("--weight", type=int)
    p.add_argument("--dual", action="store_true")
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("predict", parents=[common], help="closed-form distributions")
    p.add_argument("op", choices=["shorten", "puncture", "table"])
    p.add_argument("--dist")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--family", choices=predictor.FAMILIES)
    p.add_argument("--params", help="key=value list, e.g. n=6,nu_f=36")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("fn", parents=[common], help="vectorial Boolean functions")
    p.add_argument("op", choices=["walsh", "diffspec", "family"])
    p.add_argument("family", nargs="?", choices=["kasami", "gold", "btt"])
    p.add_argument("--fn")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_fn)

    p = sub.add_parser("build", parents=[common], help="code constructions")
    p.add_argument("kind", choices=["bent-support", "vectorial", "ternary", "rm1"])
    p.add_argument("--f", help="Boolean function spec (traced to GF(2) if needed)")
    p.add_argument("--fn")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n", type=int, default=6)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("steiner", parents=[common], help="Steiner system from a two-valued function")
    p.add_argument("--fn", required=True)
    p.set_defaults(func=cmd_steiner)

    p = sub.add_parser("am", parents=[common], help="design-support decisions")
    p.add_argument("op", choices=["classic", "generalized", "characterize"])
    with_code_input(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--S")
    p.set_defaults(func=cmd_am)

    p = sub.add_parser("repro", parents=[common], help="reproduce the worked examples")
    p.add_argument("target", choices=["paper-examples"])
    p.add_argument("--subset", default="all", help=", ".join(repro.SUBSETS))
    p.set_defaults(func=cmd_repro)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.command == "design" and args.op == "verify":
        args.design_file = args.code_file
        if not args.design_file or args.t is None:
            print("design verify needs a design file and --t", file=sys.stderr)
            return EXIT_USAGE
    try:
        payload, status = args.func(args)
    except (BudgetExceeded, boolfn.SpectrumBudgetExceeded) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(dumps({"command": args.command, **payload}))
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
