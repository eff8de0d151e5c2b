"""Dense square matrices, the Levinger and centered homotopies, and
symmetric/skew decomposition.

Everything here is a pure function on immutable `Matrix` values; entries are
plain float64 and are validated (square, finite) at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MAX_DIM = 256

# Structural comparisons (symmetry, skewness) use this tolerance scaled by the
# largest absolute entry; inputs in practice are O(1)-O(16).
STRUCT_TOL = 1e-12


class MatrixFormatError(ValueError):
    """Raised when a matrix text file cannot be parsed."""


@dataclass(frozen=True)
class Matrix:
    """Immutable dense square real matrix."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"matrix must be square, got shape {a.shape}")
        if a.shape[0] == 0:
            raise ValueError("matrix must be nonempty")
        if a.shape[0] > MAX_DIM:
            raise ValueError(f"dimension {a.shape[0]} exceeds cap {MAX_DIM}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def transpose(self) -> "Matrix":
        return Matrix(self.entries.T)

    def is_nonnegative(self) -> bool:
        return bool(np.all(self.entries >= 0.0))

    def _scale(self) -> float:
        return float(np.max(np.abs(self.entries)))

    def is_symmetric(self) -> bool:
        tol = STRUCT_TOL * max(1.0, self._scale())
        return bool(np.all(np.abs(self.entries - self.entries.T) <= tol))

    def is_skew_symmetric(self) -> bool:
        tol = STRUCT_TOL * max(1.0, self._scale())
        return bool(np.all(np.abs(self.entries + self.entries.T) <= tol))

    def __repr__(self):
        return f"Matrix(n={self.n})"


@dataclass(frozen=True)
class Decomposition:
    """Symmetric part S = (A + A^T)/2 and skew part K = (A - A^T)/2."""

    sym: Matrix
    skew: Matrix


def matrix(rows) -> Matrix:
    """Convenience constructor from nested lists or an ndarray."""
    return Matrix(np.array(rows, dtype=float))


def levinger_homotopy(a: Matrix, t: float) -> Matrix:
    """(1-t) A + t A^T for t in [0, 1]."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"homotopy parameter t={t} outside [0, 1]")
    e = a.entries
    return Matrix((1.0 - t) * e + t * e.T)


def decompose(a: Matrix) -> Decomposition:
    e = a.entries
    return Decomposition(sym=Matrix((e + e.T) / 2.0), skew=Matrix((e - e.T) / 2.0))


def centered_homotopy(a: Matrix, p: float) -> Matrix:
    """S + p K.

    p = 1 gives back A, p = -1 gives A^T, p = 0 the symmetric part.  For any
    p, S + pK is the transpose of the Levinger homotopy at t = (p+1)/2, so the
    two parametrizations trace the same spectral-radius curve.
    """
    d = decompose(a)
    return Matrix(d.sym.entries + p * d.skew.entries)


def nonneg_extension_bound(a: Matrix) -> float:
    """Largest |p| keeping S + pK entrywise nonnegative.

    Equals min over index pairs with A_ij != A_ji of
    (A_ij + A_ji) / |A_ji - A_ij|; math.inf for a symmetric matrix (the
    minimand is empty).  Always >= 1 for nonnegative input.
    """
    if not a.is_nonnegative():
        raise ValueError("extension bound requires a nonnegative matrix")
    e = a.entries
    diff = np.abs(e - e.T)
    mask = diff > 0.0
    if not np.any(mask):
        return math.inf
    ratios = (e + e.T)[mask] / diff[mask]
    return float(np.min(ratios))


def direct_sum(a1: Matrix, a2: Matrix) -> Matrix:
    n1, n2 = a1.n, a2.n
    out = np.zeros((n1 + n2, n1 + n2))
    out[:n1, :n1] = a1.entries
    out[n1:, n1:] = a2.entries
    return Matrix(out)


def is_irreducible(a: Matrix) -> bool:
    """Strong connectivity of the digraph with an edge i->j iff A_ij > 0.

    The positivity threshold is exact zero: entries are treated as exact
    inputs, not computed quantities.
    """
    if not a.is_nonnegative():
        raise ValueError("irreducibility is defined for nonnegative matrices")
    adj = a.entries > 0.0
    return _reaches_all(adj) and _reaches_all(adj.T)


def _reaches_all(adj: np.ndarray) -> bool:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    stack = [0]
    while stack:
        i = stack.pop()
        for j in np.nonzero(adj[i] & ~seen)[0]:
            seen[j] = True
            stack.append(int(j))
    return bool(seen.all())


def perturb_positive(a: Matrix, eps: float) -> Matrix:
    """A + eps * (all-ones); positive, hence irreducible, for eps > 0."""
    if eps <= 0.0:
        raise ValueError("perturbation eps must be positive")
    return Matrix(a.entries + eps)


def load_matrix(path) -> Matrix:
    """Read the plain-text format: first line n, then n rows of n numbers."""
    with open(path) as fh:
        return parse_matrix(fh.read())


def parse_matrix(text: str) -> Matrix:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise MatrixFormatError(f"first line must be the dimension: {lines[0]!r}") from exc
    if n <= 0:
        raise MatrixFormatError(f"dimension must be positive, got {n}")
    if len(lines) != n + 1:
        raise MatrixFormatError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [float(tok) for tok in ln.split()]
        except ValueError as exc:
            raise MatrixFormatError(f"bad number in row: {ln!r}") from exc
        if len(row) != n:
            raise MatrixFormatError(f"ragged row (expected {n} values): {ln!r}")
        rows.append(row)
    try:
        return matrix(rows)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def format_matrix(a: Matrix) -> str:
    lines = [str(a.n)]
    for row in a.entries:
        lines.append(" ".join(format(x, ".17g") for x in row))
    return "\n".join(lines) + "\n"
