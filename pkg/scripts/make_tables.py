#!/usr/bin/env python3
"""Regenerate the four root tables, to stdout or into a directory."""

import argparse
from pathlib import Path

from algseeds.tables import render_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=None,
                    help="write tableK.txt files here instead of stdout")
    args = ap.parse_args()

    for k in (1, 2, 3, 4):
        text = render_table(k)
        if args.out_dir is None:
            print(f"# table {k}")
            print(text, end="")
        else:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            (args.out_dir / f"table{k}.txt").write_text(text)
            print(f"wrote table{k}.txt ({len(text.splitlines())} rows)")


if __name__ == "__main__":
    main()
