#!/usr/bin/env python3
"""Audit the quadratic exceptions of the totally real cubic layers.

For each m in {0,-1,-2,-3} the exceptions of the (m, c) instances land in
real quadratic instances whose index avoids a small excluded set, and two
specific golden-ratio elements never appear in the layers that forbid them.
"""

import argparse
import sys

from algseeds.coverage import EXCLUDED_INDICES, quad_layer_report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--c-bound", type=int, default=200)
    args = ap.parse_args()

    bad = 0
    for m in (0, -1, -2, -3):
        rep = quad_layer_report(m, args.c_bound)
        bad += len(rep.violations)
        print(f"m={m:>2}: {len(rep.exceptions)} exceptions, "
              f"indices {list(rep.indices_seen)} "
              f"(excluded {list(EXCLUDED_INDICES[m])}), "
              f"golden_plus={rep.golden_plus_seen}, "
              f"golden_refl={rep.golden_refl_seen}, "
              f"{'ok' if rep.ok else 'VIOLATIONS'}")
        for v in rep.violations:
            print(f"  {v}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
