#!/usr/bin/env python3
"""Regenerate the data files behind all six figures into an output directory.

Usage: python scripts/reproduce_figures.py [--out-dir figures]
"""

import argparse
import pathlib

from levhom.cli import main as cli_main


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for fig in range(1, 7):
        dest = out / f"figure_{fig}.csv"
        print(f"writing {dest} ...")
        code = cli_main(["figure", str(fig), "--out", str(dest)])
        if code != 0:
            raise SystemExit(code)
    print("done")


if __name__ == "__main__":
    main()
