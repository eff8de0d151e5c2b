#!/usr/bin/env python3
"""Print how the radius curve of a 16-cycle degenerates as one weight is
driven to zero: the interior second derivative converges while the curvature
near the endpoints blows up, so the convergence is not uniform in t.

Usage: python scripts/weight_limit_study.py [--steps 4]
"""

import argparse

import numpy as np

from levhom import analysis, families


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=4)
    parser.add_argument("--index", type=int, default=12,
                        help="1-based position of the weight to shrink")
    parser.add_argument("--factor", type=float, default=2.0 ** -8)
    parser.add_argument("--grid", type=int, default=101)
    args = parser.parse_args()

    weights = families.reversible_cyclic_weights(16, 16.0)
    results = analysis.weight_limit_experiment(
        weights, index=args.index, factor=args.factor, steps=args.steps,
        grid_size=args.grid)

    print(f"{'scale':>12}  {'d2r at t=0.5':>14}  {'max |d2r|, t < 0.05':>20}")
    for scale, sc in results:
        mid = sc.d2r[len(sc.d2r) // 2]
        edge = np.nanmax(np.abs(sc.d2r[(sc.t_grid < 0.05) & (sc.t_grid > 0.0)]))
        print(f"{scale:12.5e}  {mid:14.6f}  {edge:20.3f}")


if __name__ == "__main__":
    main()
