"""Command-line front end: construct, analyze, recognize, verify.

Reports are JSON with a provenance block (field moduli, bases, seeds, caps)
so that any run can be reproduced byte-for-byte from its own output; CSV is
a lossy convenience view.  Exit codes: 0 success or a positive decision,
2 negative decision or failed verification, 3 undecided, 4 input error,
5 search or enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import constructions as cons
from . import qsystem as qs
from . import recognize as rec
from . import rmcode as rm
from .errors import (
    DivrankError,
    SearchBudgetExceeded,
    SearchSpaceTooLarge,
    TooLarge,
)
from .field_tower import format_field, parse_field, power_basis
from .linpoly import LinPoly, format_linpoly, parse_linpoly
from .matspace import GFMatrix, parse_matrix
from .rmcode import DEFAULT_MAX_ENUM, MatrixCode, PolyCode, VectorCode

EXIT_OK = 0
EXIT_NEGATIVE = 2
EXIT_UNDECIDED = 3
EXIT_INPUT = 4
EXIT_BUDGET = 5


# ---------------------------------------------------------------------------
# code (de)serialization
# ---------------------------------------------------------------------------


def code_to_json(code) -> dict:
    if isinstance(code, MatrixCode):
        return {
            "view": "matrix",
            "field": format_field(code.field),
            "generators": [B.format() for B in code.basis],
        }
    if isinstance(code, VectorCode):
        return {
            "view": "vector",
            "field": format_field(code.field),
            "base": code.q0,
            "generators": [
                ",".join(code.field.format_element(v) for v in code.G.row(i))
                for i in range(code.k)
            ],
        }
    if isinstance(code, PolyCode):
        out = {
            "view": "poly",
            "field": format_field(code.field),
            "base": code.q0,
            "generators": [format_linpoly(g) for g in code.gens],
        }
        if code.nvars > 1:
            out["nvars"] = code.nvars
        return out
    raise TypeError(f"not a code: {code!r}")


def code_from_json(obj: dict):
    view = obj.get("view")
    field = parse_field(obj["field"])
    gens = obj["generators"]
    if view == "matrix":
        mats = [parse_matrix(field, s) for s in gens]
        return MatrixCode(field, mats[0].rows, mats[0].cols, mats)
    base = obj.get("base", field.p)
    q0 = parse_field(base).order if isinstance(base, str) else int(base)
    if view == "vector":
        rows = [[field.parse_element(e) for e in s.split(",")] for s in gens]
        return VectorCode(field, q0, GFMatrix.from_rows(field, rows))
    if view == "poly":
        nvars = obj.get("nvars")
        polys = [parse_linpoly(field, q0, s, nvars=nvars) for s in gens]
        return PolyCode(field, q0, polys)
    raise DivrankError(f"unknown code view {view!r}")


def load_code(path: str):
    with open(path) as fh:
        return code_from_json(json.load(fh))


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _provenance(args, **extra) -> dict:
    out = {
        "command": " ".join(sys.argv[1:]) if sys.argv[1:] else args.command,
        "seed": getattr(args, "seed", None),
        "max_enum": getattr(args, "max_enum", None),
    }
    out.update(extra)
    return out


def _emit(args, report: dict) -> None:
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = _to_csv(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _to_csv(report: dict) -> str:
    lines = []
    analysis = report.get("analysis", report)
    spectrum = analysis.get("spectrum")
    if isinstance(spectrum, dict):
        lines.append("weight,count")
        for w in sorted(spectrum, key=int):
            lines.append(f"{w},{spectrum[w]}")
    else:
        lines.append("key,value")
        for k, v in sorted(report.items()):
            if not isinstance(v, (dict, list)):
                lines.append(f"{k},{v}")
    return "\n".join(lines) + "\n"


def _construct_report(args, code, params: dict, bases: dict | None = None) -> dict:
    spec = rm.weight_spectrum(code, args.max_enum)
    analysis = {
        "spectrum": {str(w): c for w, c in spec.counts},
    }
    try:
        analysis["divisibility_index"] = spec.divisibility_index()
    except DivrankError:
        analysis["divisibility_index"] = None
    return {
        "code": code_to_json(code),
        "analysis": analysis,
        "provenance": _provenance(args, params=params, bases=bases or {}),
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_construct(args) -> int:
    if args.family == "alternating":
        field = parse_field(args.field)
        code = cons.alternating_code(args.m, field)
        report = _construct_report(args, code, {"m": args.m, "field": args.field})
    elif args.family == "counterexample":
        params = cons.CounterexampleParams(args.q, args.t, args.l, args.e, args.g)
        code = cons.counterexample_code(params)
        report = _construct_report(
            args, code,
            {"q": args.q, "t": args.t, "l": args.l, "e": args.e, "g": args.g},
        )
    elif args.family == "gabidulin":
        field = parse_field(args.field)
        q0 = args.base if args.base else field.p
        code = cons.gabidulin_like(args.n, args.k, field, q0)
        report = _construct_report(
            args, code, {"n": args.n, "k": args.k, "field": args.field, "base": q0}
        )
    elif args.family == "em":
        code_in = load_code(args.code)
        if not isinstance(code_in, MatrixCode):
            raise DivrankError("em expects a matrix-view code")
        field = code_in.field
        col_basis = _parse_basis(field, args.col_basis)
        row_basis = _parse_basis(field, args.row_basis)
        code = rm.em_embed(code_in, args.to_base, col_basis, row_basis)
        bases = {
            "col_basis": [field.format_element(b) for b in
                          (col_basis or power_basis(field, args.to_base))],
            "row_basis": [field.format_element(b) for b in
                          (row_basis or power_basis(field, args.to_base))],
        }
        report = _construct_report(
            args, code, {"code": args.code, "to_base": args.to_base}, bases
        )
    elif args.family == "block-rep":
        code_in = load_code(args.code)
        if not isinstance(code_in, MatrixCode):
            raise DivrankError("block-rep expects a matrix-view code")
        code = cons.block_repetition(code_in, args.e)
        report = _construct_report(args, code, {"code": args.code, "e": args.e})
    elif args.family == "scramble":
        code_in = load_code(args.code)
        if not isinstance(code_in, MatrixCode):
            raise DivrankError("scramble expects a matrix-view code")
        code, X, Y = cons.random_equivalence(code_in, args.seed)
        report = _construct_report(args, code, {"code": args.code, "seed": args.seed})
        report["witness"] = {"X": X.format(), "Y": Y.format()}
    else:
        raise DivrankError(f"unknown construction {args.family!r}")
    report.setdefault("provenance", {})
    _emit(args, report)
    return EXIT_OK


def _parse_basis(field, text):
    if not text:
        return None
    return tuple(field.parse_element(e) for e in text.split(","))


def cmd_analyze(args) -> int:
    code = load_code(args.code)
    try:
        report = rm.analyze_code(code, max_enum=args.max_enum, seed=args.seed)
    except TooLarge as err:
        raise TooLarge(f"{err}; raise --max-enum to enumerate anyway") from err
    report["field"] = format_field(code.field)
    out = {
        "analysis": report,
        "code": code_to_json(code),
        "provenance": _provenance(args),
    }
    _emit(args, out)
    return EXIT_OK


def cmd_recognize(args) -> int:
    code = load_code(args.code)
    result = rec.arises_over(code, args.e, seed=args.seed, max_enum=args.max_enum)
    out = result.as_json()
    out["provenance"] = _provenance(args, e=args.e)
    _emit(args, out)
    if result.arises is True:
        return EXIT_OK
    if result.arises is False:
        return EXIT_NEGATIVE
    return EXIT_UNDECIDED


def cmd_verify(args) -> int:
    if args.target == "directions":
        return _verify_directions(args)
    if args.target == "weight-dual":
        return _verify_weight_dual(args)
    if args.target == "prop-5.1":
        return _verify_intersections(args)
    raise DivrankError(f"unknown verification target {args.target!r}")


def _load_function_table(field, path) -> list:
    table = [None] * field.order
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            x_s, y_s = line.split(",")
            table[field.parse_element(x_s)] = field.parse_element(y_s)
    if any(v is None for v in table):
        raise DivrankError("function table does not cover the whole field")
    return table


def _verify_directions(args) -> int:
    from .errors import TheoremViolation

    field = parse_field(args.field)
    rng = random.Random(args.seed)
    branch_counts = {1: 0, 2: 0, 3: 0}
    checked = 0
    failures = []
    if args.table:
        table = _load_function_table(field, args.table)
        rep = qs.verify_direction_theorem(field, table)
        report = rep.as_json()
        report["field"] = format_field(field)
        report["provenance"] = _provenance(args, table=args.table)
        _emit(args, report)
        return EXIT_OK
    if args.points:
        pts = []
        with open(args.points) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    pts.append(tuple(field.parse_element(c) for c in line.split(",")))
        rep = qs.verify_higher_direction_theorem(field, pts)
        report = rep.as_json()
        report["field"] = format_field(field)
        report["provenance"] = _provenance(args, points=args.points)
        _emit(args, report)
        return EXIT_OK

    def check(instance, label):
        nonlocal checked
        try:
            rep = qs.verify_direction_theorem(field, instance)
            branch_counts[rep.branch] += 1
        except TheoremViolation as err:
            failures.append({"instance": label, "detail": str(err)})
        checked += 1

    if args.all_polys:
        m = field.h
        total = field.order**m
        if total > args.max_enum:
            raise TooLarge(f"{total} polynomials exceed --max-enum")
        from itertools import product as iproduct

        for coeffs in iproduct(range(field.order), repeat=m):
            check(LinPoly(field, field.p, coeffs), f"poly {coeffs}")
    for i in range(args.samples):
        table = [rng.randrange(field.order) for _ in range(field.order)]
        check(table, f"table sample {i}")
    report = {
        "target": "directions",
        "field": format_field(field),
        "checked": checked,
        "branches": {str(k): v for k, v in branch_counts.items()},
        "failures": failures,
        "pass": not failures,
        "provenance": _provenance(args, samples=args.samples, all_polys=args.all_polys),
    }
    _emit(args, report)
    return EXIT_OK if not failures else EXIT_NEGATIVE


def _verify_weight_dual(args) -> int:
    field = parse_field(args.field)
    amb = qs.ExtensionAmbient(field, args.base or field.p, args.k)
    rng = random.Random(args.seed)
    from .matspace import GFSubspace

    bad = 0
    for _ in range(args.trials):
        nvecs = rng.randrange(1, amb.fq_dim)
        U = amb.subspace_from_vectors(
            [[rng.randrange(field.order) for _ in range(args.k)] for _ in range(nvecs)]
        )
        wdim = rng.randrange(0, args.k + 1)
        W = GFSubspace.from_span(
            field, args.k,
            [[rng.randrange(field.order) for _ in range(args.k)] for _ in range(wdim)],
        )
        lhs, rhs = qs.check_weight_dual(amb, U, W)
        if lhs != rhs:
            bad += 1
    report = {
        "target": "weight-dual",
        "field": format_field(field),
        "k": args.k,
        "trials": args.trials,
        "failures": bad,
        "pass": bad == 0,
        "provenance": _provenance(args),
    }
    _emit(args, report)
    return EXIT_OK if bad == 0 else EXIT_NEGATIVE


def _verify_intersections(args) -> int:
    params = cons.CounterexampleParams(args.q, args.t, args.l, args.e, args.g)
    system = cons.counterexample_system(params, validate=False)
    profile = cons.intersection_profile(system)
    allowed = {0, params.e, params.g * params.e}
    dims = sorted(set(profile.values()))
    counting = sum(params.q**d - 1 for d in profile.values())
    expected = params.q**params.n - 1
    ok = set(dims) <= allowed and counting == expected
    report = {
        "target": "prop-5.1",
        "params": {"q": args.q, "t": args.t, "l": args.l, "e": args.e, "g": args.g},
        "projective_points": len(profile),
        "intersection_dims": dims,
        "allowed_dims": sorted(allowed),
        "counting_identity": {"sum": counting, "expected": expected},
        "pass": ok,
        "provenance": _provenance(args),
    }
    _emit(args, report)
    return EXIT_OK if ok else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM)
    shared.add_argument("--out", default=None)
    shared.add_argument("--format", choices=("json", "csv"), default="json")

    top = argparse.ArgumentParser(
        prog="divrank",
        description="divisible rank-metric code toolkit",
    )
    subs = top.add_subparsers(dest="command", required=True)

    c = subs.add_parser("construct", help="build a code family")
    cf = c.add_subparsers(dest="family", required=True)
    alt = cf.add_parser("alternating", parents=[shared])
    alt.add_argument("--m", type=int, required=True)
    alt.add_argument("--field", required=True)
    cx = cf.add_parser("counterexample", parents=[shared])
    for name in ("q", "t", "l", "e", "g"):
        cx.add_argument(f"--{name}", type=int, required=True)
    gab = cf.add_parser("gabidulin", parents=[shared])
    gab.add_argument("--n", type=int, required=True)
    gab.add_argument("--k", type=int, required=True)
    gab.add_argument("--field", required=True)
    gab.add_argument("--base", type=int, default=None)
    em = cf.add_parser("em", parents=[shared])
    em.add_argument("--code", required=True)
    em.add_argument("--to-base", type=int, required=True)
    em.add_argument("--col-basis", default=None)
    em.add_argument("--row-basis", default=None)
    br = cf.add_parser("block-rep", parents=[shared])
    br.add_argument("--code", required=True)
    br.add_argument("--e", type=int, required=True)
    sc = cf.add_parser("scramble", parents=[shared])
    sc.add_argument("--code", required=True)
    c.set_defaults(func=cmd_construct)
    for leaf in (alt, cx, gab, em, br, sc):
        leaf.set_defaults(func=cmd_construct)

    a = subs.add_parser("analyze", parents=[shared],
                        help="spectrum, divisibility, idealizer report")
    a.add_argument("--code", required=True)
    a.set_defaults(func=cmd_analyze)

    r = subs.add_parser("recognize", parents=[shared],
                        help="decide arising over a subfield power")
    r.add_argument("--code", required=True)
    r.add_argument("--e", type=int, required=True)
    r.set_defaults(func=cmd_recognize)

    v = subs.add_parser("verify", parents=[shared], help="numerical theorem checks")
    v.add_argument("target", choices=("directions", "weight-dual", "prop-5.1"))
    v.add_argument("--field", default=None)
    v.add_argument("--samples", type=int, default=0)
    v.add_argument("--table", default=None,
                   help="CSV function table: input,output per line")
    v.add_argument("--points", default=None,
                   help="CSV point set for the higher-dimensional check")
    v.add_argument("--all-polys", action="store_true")
    v.add_argument("--k", type=int, default=2)
    v.add_argument("--base", type=int, default=None)
    v.add_argument("--trials", type=int, default=1000)
    for name in ("q", "t", "l", "e", "g"):
        v.add_argument(f"--{name}", type=int, default=None)
    v.set_defaults(func=cmd_verify)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TooLarge, SearchBudgetExceeded, SearchSpaceTooLarge) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except DivrankError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
