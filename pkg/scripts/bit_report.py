#!/usr/bin/env python3
"""Dump binary expansions and run statistics for every element of a real
family instance."""

import argparse

from algseeds.bits import binary_expansion, bit_stats, complement_check
from algseeds.families import SetSpec, build_set


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="2r", choices=["2r", "3ntr", "3tr"])
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--m", type=int, default=None)
    ap.add_argument("--bits", type=int, default=64)
    args = ap.parse_args()

    params = (args.n,) if args.m is None else (args.m, args.n)
    inst = build_set(SetSpec(args.family, params))
    for e in inst.elements:
        s = binary_expansion(e.number, args.bits)
        st = bit_stats(s)
        print(f"{e.number.minpoly}  {e.number.decimal(5)}  hex={s.as_hex()}  "
              f"ones={st.ones}  longest_run={st.longest_run}  runs={st.runs_count}")

    if args.family == "2r":
        rep = complement_check(inst)
        print(f"complement check vs mirrored instance: "
              f"{'ok' if rep.ok else 'FAILED'} ({rep.size} elements)")


if __name__ == "__main__":
    main()
