#!/usr/bin/env python3
"""Run every acceptance criterion and print one pass/fail line per criterion.

Exit status 0 only when all criteria pass.
"""

import os
import sys
import traceback

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

import test_acceptance  # noqa: E402


def main() -> int:
    criteria = sorted(
        name for name in dir(test_acceptance) if name.startswith("test_criterion")
    )
    failures = 0
    for name in criteria:
        try:
            getattr(test_acceptance, name)()
        except Exception:
            failures += 1
            traceback.print_exc()
    total = len(criteria)
    print(f"\n{total - failures}/{total} criteria passed")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
