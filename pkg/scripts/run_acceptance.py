#!/usr/bin/env python3
"""Run every acceptance criterion and print one verdict line per criterion.

Exit status is the number of failing criteria. The same checks run under
pytest (tests/test_acceptance.py); this script is the standalone reporter
that keeps going past a failing criterion.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import test_acceptance as acc


def main() -> int:
    criteria = sorted(
        (
            (name, fn)
            for name, fn in vars(acc).items()
            if name.startswith("test_criterion_") and callable(fn)
        ),
        key=lambda item: int(item[0].split("_")[2]),
    )
    failures = 0
    for _, fn in criteria:
        try:
            fn()
        except AssertionError:
            failures += 1
    print(f"\n{len(criteria) - failures}/{len(criteria)} criteria passed")
    return failures


if __name__ == "__main__":
    sys.exit(main())
