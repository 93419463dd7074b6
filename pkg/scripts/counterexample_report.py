#!/usr/bin/env python3
"""Build a two-slot product system, analyze its code, and run the recognizer.

Searches the parameter box (or takes one explicit parameter set) for valid
families, then prints a JSON report per family: intersection profile,
weight spectrum, divisibility index, and the recognition outcome.

examples:
    python scripts/counterexample_report.py --q 2 --t 3 --l 3 --e 2 --g 3
    python scripts/counterexample_report.py --scan --max-m 9
"""

import argparse
import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from divrank import constructions as cons  # noqa: E402
from divrank.cli import code_to_json  # noqa: E402
from divrank.errors import BadParams  # noqa: E402
from divrank.recognize import arises_over  # noqa: E402
from divrank.rmcode import is_nondegenerate, weight_spectrum  # noqa: E402


def report_for(params: cons.CounterexampleParams) -> dict:
    system = cons.counterexample_system(params, validate=False)
    profile = cons.intersection_profile(system)
    code = cons.counterexample_code(params, validate=False)
    spec = weight_spectrum(code)
    res = arises_over(code, params.e)
    return {
        "params": {"q": params.q, "t": params.t, "l": params.ell,
                   "e": params.e, "g": params.g},
        "shape": [params.n, 2],
        "ambient_field_order": params.q**params.m,
        "intersection_dims": sorted(set(profile.values())),
        "spectrum": {str(w): c for w, c in spec.counts},
        "divisibility_index": spec.divisibility_index(),
        "nondegenerate": is_nondegenerate(code),
        "arises": res.arises,
        "reason": res.reason,
        "code": code_to_json(code),
    }


def scan(q: int, max_m: int):
    for t in range(2, max_m + 1):
        for ell in range(1, max_m // t + 1):
            for e in range(1, t):
                for g in range(1, (t * ell) // e + 1):
                    try:
                        yield cons.CounterexampleParams(q, t, ell, e, g)
                    except BadParams:
                        continue


def main() -> int:
    ap = argparse.ArgumentParser()
    for name in ("q", "t", "l", "e", "g"):
        ap.add_argument(f"--{name}", type=int, default=None)
    ap.add_argument("--scan", action="store_true")
    ap.add_argument("--max-m", type=int, default=9)
    args = ap.parse_args()
    if args.scan:
        found = list(scan(args.q or 2, args.max_m))
        print(f"{len(found)} valid parameter sets with m <= {args.max_m}",
              file=sys.stderr)
        for params in found:
            print(json.dumps(report_for(params), sort_keys=True))
        return 0
    params = cons.CounterexampleParams(args.q, args.t, args.l, args.e, args.g)
    print(json.dumps(report_for(params), indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
