"""Command-line front end.

Subcommands: eval, scan, decompose, figure, verify, search.  All numeric
output uses 17 significant digits so emitted CSV is reproducible bit-for-bit
and round-trips through a parser byte-identically.

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 solver failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import analysis, families, verify
from .matrix_core import (MatrixFormatError, decompose, format_matrix,
                          levinger_homotopy, load_matrix, matrix,
                          nonneg_extension_bound)
from .spectra import SolverError, full_spectrum

EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_SOLVER_FAILURE = 3


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--matrix", help="path to a plain-text matrix file")
    p.add_argument("--family", choices=families.FAMILY_KINDS,
                   help="build a named matrix family instead of reading a file")
    p.add_argument("--family-file", help="path to a key-value family block")
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--d", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--u", type=float)
    p.add_argument("--v", type=float)
    p.add_argument("--w", type=float)
    p.add_argument("--h-mix", type=float, dest="h_mix",
                   help="block blend h for the four_by_four family")
    p.add_argument("--weights", help="comma-separated weight list")
    p.add_argument("--indices", help="comma-separated 1-based circuit indices")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")


def _source_matrix(args):
    sources = [s for s in (args.matrix, args.family, args.family_file) if s]
    if len(sources) != 1:
        raise MatrixFormatError("specify exactly one of --matrix, --family, --family-file")
    if args.matrix:
        return load_matrix(args.matrix)
    if args.family_file:
        with open(args.family_file) as fh:
            return families.build(families.parse_family_block(fh.read()))
    params = {}
    for key in ("a", "b", "c", "d", "n", "u", "v", "w"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    if args.h_mix is not None:
        params["h"] = args.h_mix
    if args.weights:
        params["weights"] = [float(tok) for tok in args.weights.split(",")]
    if args.indices:
        params["indices"] = [int(tok) for tok in args.indices.split(",")]
    try:
        return families.build(families.FamilySpec(args.family, params))
    except KeyError as exc:
        raise MatrixFormatError(f"family {args.family!r} is missing parameter {exc}") from exc


def _emit(args, text: str) -> None:
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell if isinstance(cell, str) else _fmt(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _spectrum_cells(a):
    vals = full_spectrum(a).values
    return [v.real for v in vals] + [v.imag for v in vals]


def cmd_eval(args) -> int:
    a = _source_matrix(args)
    t = args.t
    b = levinger_homotopy(a, t)
    vals = full_spectrum(b).values
    r = analysis.levinger_value(a, t)
    if args.format == "json":
        _emit(args, json.dumps({"command": "eval", "t": t, "r": r,
                                "eigenvalues": [[v.real, v.imag] for v in vals],
                                "nonnegative": a.is_nonnegative()}, indent=2) + "\n")
    else:
        n = a.n
        header = (["t", "r"] + [f"eig_re_{i+1}" for i in range(n)]
                  + [f"eig_im_{i+1}" for i in range(n)])
        _emit(args, _csv(header, [[t, r] + _spectrum_cells(b)]))
    return 0


def cmd_scan(args) -> int:
    a = _source_matrix(args)
    sc = analysis.scan(a, args.grid, args.fd_step)
    n = a.n
    header = (["t", "r", "dr", "d2r"] + [f"eig_re_{i+1}" for i in range(n)]
              + [f"eig_im_{i+1}" for i in range(n)])
    rows = []
    for i, t in enumerate(sc.t_grid):
        rows.append([t, sc.r[i], sc.dr[i], sc.d2r[i]]
                    + _spectrum_cells(levinger_homotopy(a, t)))
    if args.format == "json":
        _emit(args, json.dumps({"command": "scan", "header": header,
                                "rows": [[float(c) for c in row] for row in rows]},
                               indent=2) + "\n")
    else:
        _emit(args, _csv(header, rows))
    return 0


def cmd_decompose(args) -> int:
    a = _source_matrix(args)
    d = decompose(a)
    bound = nonneg_extension_bound(a) if a.is_nonnegative() else None
    if args.format == "json":
        payload = {"command": "decompose",
                   "sym": d.sym.entries.tolist(),
                   "skew": d.skew.entries.tolist(),
                   "extension_bound": bound}
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        parts = ["sym", format_matrix(d.sym).rstrip("\n"),
                 "skew", format_matrix(d.skew).rstrip("\n")]
        if bound is not None:
            parts.append(f"extension_bound {_fmt(bound) if np.isfinite(bound) else 'inf'}")
        _emit(args, "\n".join(parts) + "\n")
    return 0


# --- figures ----------------------------------------------------------------

def _figure_1():
    a = families.build(families.FamilySpec("ex1"))
    header = ["t"] + [f"eig_re_{i}" for i in (1, 2, 3)] + [f"eig_im_{i}" for i in (1, 2, 3)]
    rows = []
    for t in np.linspace(0.0, 1.0, 201):
        rows.append([t] + _spectrum_cells(levinger_homotopy(a, t)))
    return header, rows


def _figure_2():
    header = (["h", "t", "r"] + [f"eig_re_{i+1}" for i in range(4)]
              + [f"eig_im_{i+1}" for i in range(4)] + ["h04_slice", "nonconcave"])
    rows = []
    for h in np.round(np.linspace(0.0, 1.0, 21), 10):
        a = families.four_by_four_example(float(h))
        sc = analysis.scan(a, 101)
        flag = int(analysis.certify_nonconcavity(a, sc).verdict == "nonconcave")
        for i, t in enumerate(sc.t_grid):
            rows.append([h, t, sc.r[i]] + _spectrum_cells(levinger_homotopy(a, t))
                        + [str(int(abs(h - 0.4) < 1e-12)), str(flag)])
    return header, rows


def _figure_3():
    a = families.build(families.FamilySpec("four_param_toeplitz"))
    rows = [[t, analysis.second_derivative(a, t)] for t in np.linspace(0.0, 1.0, 201)]
    return ["t", "d2r"], rows


def _figure_4():
    a = families.cyclic_weighted_shift(families.reversible_cyclic_weights(16, 16.0))
    sc = analysis.scan(a, 201)
    return ["t", "r"], [[t, r] for t, r in zip(sc.t_grid, sc.r)]


def _figure_weight_limit(column):
    results = analysis.weight_limit_experiment(
        families.reversible_cyclic_weights(16, 16.0), index=12, factor=2.0 ** -8,
        steps=4, grid_size=101)
    rows = []
    for scale, sc in results:
        series = sc.r if column == "r" else sc.d2r
        for t, val in zip(sc.t_grid, series):
            rows.append([scale, t, val])
    return ["scale", "t", column], rows


def cmd_figure(args) -> int:
    builders = {1: _figure_1, 2: _figure_2, 3: _figure_3, 4: _figure_4,
                5: lambda: _figure_weight_limit("r"),
                6: lambda: _figure_weight_limit("d2r")}
    header, rows = builders[args.id]()
    if args.format == "json":
        _emit(args, json.dumps({"command": "figure", "id": args.id, "header": header,
                                "rows": [[c if isinstance(c, str) else float(c) for c in row]
                                         for row in rows]}, indent=2) + "\n")
    else:
        _emit(args, _csv(header, rows))
    return 0


def cmd_verify(args) -> int:
    cfg = verify.VerifyConfig(seed=args.seed, grid_size=args.grid,
                              fd_step=args.fd_step, tol=args.tol)
    results = verify.run_all(cfg)
    if args.format == "json":
        payload = {"command": "verify",
                   "config": {"seed": cfg.seed, "grid_size": cfg.grid_size,
                              "fd_step": cfg.fd_step, "tol": cfg.tol},
                   "checks": [{"name": r.name, "pass": bool(r.passed),
                               "measured": float(r.measured),
                               "threshold": float(r.threshold),
                               "note": r.note} for r in results],
                   "witnesses": [[float(x) for x in w]
                                 for r in results for w in r.witnesses if w]}
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            note = f"  ({r.note})" if r.note else ""
            lines.append(f"{status} {r.name}: measured={_fmt(r.measured)} "
                         f"threshold={_fmt(r.threshold)}{note}")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def cmd_search(args) -> int:
    rng = np.random.default_rng(args.seed)  # PCG64: reproducible across platforms
    header = ["trial", "n", "t1", "t2", "margin", "entries"]
    rows = []
    for trial in range(args.trials):
        n = int(rng.integers(args.size_min, args.size_max + 1))
        entries = rng.uniform(0.0, 1.0, size=(n, n))
        entries *= rng.uniform(size=(n, n)) >= args.sparsity
        a = matrix(entries)
        sc = analysis.scan(a, args.grid, args.fd_step)
        rep = analysis.certify_nonconcavity(a, sc, args.tol)
        if rep.verdict == "nonconcave":
            t1, t2, margin = rep.witness
            rows.append([str(trial), str(n), _fmt(t1), _fmt(t2), _fmt(margin),
                         " ".join(_fmt(x) for x in entries.ravel())])
    if args.format == "json":
        payload = {"command": "search",
                   "config": {"seed": args.seed, "trials": args.trials,
                              "sparsity": args.sparsity},
                   "records": [{"trial": int(r[0]), "n": int(r[1]),
                                "witness": [float(r[2]), float(r[3]), float(r[4])],
                                "entries": [float(x) for x in r[5].split()]}
                               for r in rows]}
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        _emit(args, _csv(header, rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="levhom",
                                     description="Spectral radius along the homotopy "
                                                 "from a matrix to its transpose")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="radius and spectrum at one homotopy parameter")
    _add_source_args(p)
    _add_output_args(p)
    p.add_argument("--t", type=float, default=0.0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("scan", help="sample r, r', r'' and the spectrum on a grid")
    _add_source_args(p)
    _add_output_args(p)
    p.add_argument("--grid", type=int, default=analysis.DEFAULT_GRID)
    p.add_argument("--fd-step", type=float, default=analysis.DEFAULT_FD_STEP, dest="fd_step")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("decompose", help="symmetric/skew parts and extension bound")
    _add_source_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("figure", help="emit the data behind one of the six figures")
    p.add_argument("id", type=int, choices=range(1, 7))
    _add_output_args(p)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run the full acceptance checklist")
    _add_output_args(p)
    p.add_argument("--seed", type=int, default=2026)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--fd-step", type=float, default=1e-4, dest="fd_step")
    p.add_argument("--tol", type=float, default=1e-7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="random search for nonconcavity counterexamples")
    _add_output_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--size-min", type=int, default=3, dest="size_min")
    p.add_argument("--size-max", type=int, default=6, dest="size_max")
    p.add_argument("--sparsity", type=float, default=0.5,
                   help="probability of zeroing each entry")
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--fd-step", type=float, default=1e-4, dest="fd_step")
    p.add_argument("--tol", type=float, default=analysis.DEFAULT_TOL)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatrixFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER_FAILURE


if __name__ == "__main__":
    sys.exit(main())
