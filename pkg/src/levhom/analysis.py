"""Sampling and certification of the spectral-radius curve r(t) along the
homotopy from a matrix to its transpose.

Verdicts are deliberately finitary: "concave-on-grid" claims only that no
sampled three-point violation exceeds the tolerance, while "nonconcave" ships
a re-verifiable (t1, t2) witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .families import cyclic_weighted_shift
from .matrix_core import Matrix, decompose, is_irreducible, levinger_homotopy
from .spectra import (SolverError, null_space_contains, perron_root,
                      spectral_radius, symmetric_eigen)

DEFAULT_GRID = 1001
DEFAULT_FD_STEP = 1e-4
DEFAULT_TOL = 1e-7
# below this slope gap a crossing does not certify nonconcavity
DEFAULT_SLOPE_TOL = 1e-5


@dataclass(frozen=True)
class LevingerScan:
    """Sampled (t, r, r', r'') grid.  Derivative slots are NaN where the
    finite-difference stencil would leave [0, 1]."""

    t_grid: np.ndarray
    r: np.ndarray
    dr: np.ndarray
    d2r: np.ndarray
    fd_step: float
    failures: tuple = ()

    @property
    def value_range(self) -> float:
        return float(np.max(self.r) - np.min(self.r))


@dataclass(frozen=True)
class ConcavityReport:
    """Verdict plus machine-checkable evidence.

    For "nonconcave" the witness is (t1, t2, margin) with
    margin = (r(t1) + r(t2))/2 - r((t1+t2)/2) recomputed from scratch;
    for "constant" the evidence is the max-min range of r.
    """

    verdict: str  # "constant" | "concave-on-grid" | "nonconcave"
    witness: Optional[tuple]
    value_range: float


@dataclass(frozen=True)
class CrossingCertificate:
    """A block-radius crossing with distinct slopes, which forces the direct
    sum's radius curve (the max of the two) to be nonconcave at t_star."""

    t_star: float
    r_star: float
    s1: float
    s2: float
    delta: float


def levinger_value(a: Matrix, t: float) -> float:
    return spectral_radius(levinger_homotopy(a, t))


def scan(a: Matrix, grid_size: int = DEFAULT_GRID,
         fd_step: float = DEFAULT_FD_STEP) -> LevingerScan:
    """Sample r(t) on a uniform grid, with central-difference first and second
    derivatives (step fd_step) wherever the stencil fits inside [0, 1].

    Solver failures are recorded per grid point (value NaN) and the scan
    continues.
    """
    if grid_size < 3:
        raise ValueError("grid_size must be at least 3")
    if not 0.0 < fd_step <= 1e-3:
        raise ValueError("fd_step must lie in (0, 1e-3]")
    ts = np.linspace(0.0, 1.0, grid_size)
    r = np.full(grid_size, np.nan)
    dr = np.full(grid_size, np.nan)
    d2r = np.full(grid_size, np.nan)
    failures = []
    for i, t in enumerate(ts):
        try:
            r[i] = levinger_value(a, t)
            if t - fd_step >= 0.0 and t + fd_step <= 1.0:
                rp = levinger_value(a, t + fd_step)
                rm = levinger_value(a, t - fd_step)
                dr[i] = (rp - rm) / (2.0 * fd_step)
                d2r[i] = (rp - 2.0 * r[i] + rm) / fd_step ** 2
        except SolverError as exc:
            failures.append((float(t), str(exc)))
    return LevingerScan(t_grid=ts, r=r, dr=dr, d2r=d2r, fd_step=fd_step,
                        failures=tuple(failures))


def second_derivative(a: Matrix, t: float, fd_step: float = DEFAULT_FD_STEP) -> float:
    """Richardson-extrapolated central second difference of r at t.

    Combines the step-h and step-h/2 stencils as (4 D(h/2) - D(h)) / 3.  A t
    closer to an endpoint than fd_step is clamped to the nearest point where
    the full stencil fits (the curve may have unbounded curvature at the
    endpoints; the clamped value is still informative).
    """
    if not 0.0 < fd_step <= 1e-3:
        raise ValueError("fd_step must lie in (0, 1e-3]")
    if fd_step >= 0.5:
        raise ValueError("no stencil fits inside [0, 1]")
    t = min(max(t, fd_step), 1.0 - fd_step)

    def stencil(h):
        return (levinger_value(a, t + h) - 2.0 * levinger_value(a, t)
                + levinger_value(a, t - h)) / h ** 2

    return (4.0 * stencil(fd_step / 2.0) - stencil(fd_step)) / 3.0


def certify_nonconcavity(a: Matrix, sc: LevingerScan,
                         tol: float = DEFAULT_TOL) -> ConcavityReport:
    """Search all grid pairs whose midpoint is on the grid for a chord lying
    above the curve by more than tol.

    The maximal-margin pair is re-verified with three fresh spectral-radius
    evaluations before a nonconcave verdict is issued.  Otherwise the verdict
    is "constant" when max-min of r is within tol, else "concave-on-grid".
    """
    r = sc.r
    n = len(r)
    best_margin = -math.inf
    best = None
    for span in range(1, (n - 1) // 2 + 1):
        margins = (r[: n - 2 * span] + r[2 * span:]) / 2.0 - r[span: n - span]
        i = int(np.nanargmax(margins)) if np.any(np.isfinite(margins)) else None
        if i is not None and margins[i] > best_margin:
            best_margin = float(margins[i])
            best = (sc.t_grid[i], sc.t_grid[i + 2 * span])
    if best is not None and best_margin > tol:
        t1, t2 = best
        fresh = ((levinger_value(a, t1) + levinger_value(a, t2)) / 2.0
                 - levinger_value(a, (t1 + t2) / 2.0))
        if fresh > tol / 2.0:
            return ConcavityReport(verdict="nonconcave",
                                   witness=(float(t1), float(t2), float(fresh)),
                                   value_range=sc.value_range)
    if sc.value_range <= tol:
        return ConcavityReport(verdict="constant", witness=None,
                               value_range=sc.value_range)
    return ConcavityReport(verdict="concave-on-grid", witness=None,
                           value_range=sc.value_range)


def check_unimodality(sc: LevingerScan, tol: float = 1e-9) -> bool:
    """r nondecreasing up to t = 1/2 and nonincreasing after, within tol.

    This must hold for every nonnegative matrix; a failure here indicates a
    solver defect, not a counterexample.
    """
    left = sc.t_grid <= 0.5 + 1e-15
    right = sc.t_grid >= 0.5 - 1e-15
    rising = np.diff(sc.r[left])
    falling = np.diff(sc.r[right])
    return bool(np.all(rising >= -tol) and np.all(falling <= tol))


def concave_interval_around_center(sc: LevingerScan) -> tuple:
    """Largest symmetric interval around t = 1/2 on which sampled r'' <= 0.

    Empirical only; no theoretical neighborhood size is claimed.
    """
    mid = (len(sc.t_grid) - 1) // 2
    lo, hi = mid, mid
    while lo - 1 >= 0 and hi + 1 < len(sc.t_grid):
        d_lo, d_hi = sc.d2r[lo - 1], sc.d2r[hi + 1]
        if (np.isfinite(d_lo) and d_lo > 0) or (np.isfinite(d_hi) and d_hi > 0):
            break
        lo -= 1
        hi += 1
    return float(sc.t_grid[lo]), float(sc.t_grid[hi])


def is_constant_levinger(a: Matrix, tol: float = 1e-8) -> bool:
    """Constant-curve criterion: the Perron vector of A + A^T lies in the null
    space of A - A^T.  Requires nonnegative irreducible input (the criterion's
    hypothesis); reducible input is rejected rather than silently answered."""
    if not a.is_nonnegative():
        raise ValueError("constant-curve criterion needs a nonnegative matrix")
    if not is_irreducible(a):
        raise ValueError("constant-curve criterion needs an irreducible matrix")
    sym = Matrix(a.entries + a.entries.T)
    x = perron_root(sym).right
    skew = Matrix(a.entries - a.entries.T)
    if np.linalg.norm(skew.entries) == 0.0:
        return True
    return null_space_contains(skew, x, tol)


def kqp_structure_check(a: Matrix, tol: float = 1e-8) -> bool:
    """Equivalent constancy criterion through the eigenbasis of the symmetric
    part: with S = Q diag(lam) Q^T, the rotated skew part Q^T K Q must have a
    zero first row and column."""
    if not a.is_nonnegative():
        raise ValueError("structure check needs a nonnegative matrix")
    d = decompose(a)
    if not is_irreducible(d.sym):
        raise ValueError("structure check needs an irreducible symmetric part")
    knorm = np.linalg.norm(d.skew.entries)
    if knorm == 0.0:
        return True
    q = symmetric_eigen(d.sym).q.entries
    k1 = q.T @ d.skew.entries @ q
    edge = max(np.linalg.norm(k1[0, :]), np.linalg.norm(k1[:, 0]))
    return bool(edge <= tol * knorm)


@dataclass(frozen=True)
class SkewSingularityReport:
    n_odd: bool
    skew_rank_deficient: bool
    smallest_singular_value: float


def skew_singularity_check(a: Matrix) -> SkewSingularityReport:
    """Report whether the skew part is singular (it must be for odd n).

    The smallest singular value comes from the Jacobi solver applied to the
    symmetric embedding [[0, K], [K^T, 0]], whose eigenvalues are +-sigma_i
    (squaring K^T K instead would floor sigma_min at sqrt(eps) * ||K||);
    K counts as rank deficient below 1e-10 * ||K||_F.
    """
    k = decompose(a).skew.entries
    knorm = float(np.linalg.norm(k))
    if knorm == 0.0:
        return SkewSingularityReport(n_odd=a.n % 2 == 1, skew_rank_deficient=True,
                                     smallest_singular_value=0.0)
    n = a.n
    embed = np.zeros((2 * n, 2 * n))
    embed[:n, n:] = k
    embed[n:, :n] = k.T
    sigmas = np.abs(symmetric_eigen(Matrix(embed)).lam)
    smin = float(np.min(sigmas))
    return SkewSingularityReport(n_odd=a.n % 2 == 1,
                                 skew_rank_deficient=smin <= 1e-10 * knorm,
                                 smallest_singular_value=smin)


def directsum_crossing(a1: Matrix, a2: Matrix,
                       tol: float = DEFAULT_SLOPE_TOL,
                       grid_size: int = 1001) -> Optional[CrossingCertificate]:
    """Find a parameter t* where the two blocks' radius curves cross with
    distinct slopes.

    Such a crossing makes the direct sum's curve (the pointwise max) locally
    a tent pointing upward, hence nonconcave.  Crossings are bracketed on a
    fine interior grid and bisected to |r1 - r2| <= 1e-12; a certificate is
    issued only when the slope gap exceeds tol.  Returns None when no
    qualifying crossing exists (in particular for identical blocks).
    """
    if not (a1.is_nonnegative() and a2.is_nonnegative()):
        raise ValueError("crossing detector needs nonnegative blocks")
    ts = np.linspace(0.0, 1.0, grid_size)[1:-1]
    g = np.array([levinger_value(a1, t) - levinger_value(a2, t) for t in ts])
    for i in range(len(ts) - 1):
        if g[i] == 0.0 and g[i + 1] == 0.0:
            continue
        if g[i] * g[i + 1] > 0.0:
            continue
        cert = _certify_crossing(a1, a2, ts[i], ts[i + 1], g[i], g[i + 1], tol)
        if cert is not None:
            return cert
    return None


def _certify_crossing(a1, a2, lo, hi, g_lo, g_hi, tol):
    def g(t):
        return levinger_value(a1, t) - levinger_value(a2, t)

    while hi - lo > 1e-14:
        mid = (lo + hi) / 2.0
        g_mid = g(mid)
        if g_mid == 0.0:
            lo = hi = mid
            break
        if (g_lo < 0) == (g_mid < 0):
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
    t_star = (lo + hi) / 2.0
    if abs(g(t_star)) > 1e-12:
        return None
    h = 1e-6
    h = min(h, t_star, 1.0 - t_star)
    if h <= 0.0:
        return None
    s1 = (levinger_value(a1, t_star + h) - levinger_value(a1, t_star - h)) / (2.0 * h)
    s2 = (levinger_value(a2, t_star + h) - levinger_value(a2, t_star - h)) / (2.0 * h)
    delta = abs(s1 - s2)
    if delta <= tol:
        return None
    return CrossingCertificate(t_star=float(t_star),
                               r_star=float(levinger_value(a1, t_star)),
                               s1=float(s1), s2=float(s2), delta=float(delta))


def weight_limit_experiment(base_weights: Sequence[float], index: int,
                            factor: float, steps: int,
                            grid_size: int = DEFAULT_GRID,
                            fd_step: float = DEFAULT_FD_STEP):
    """Scans of the cyclic shift as one weight is driven to zero.

    `index` is the 1-based weight label c_index.  Entry k (k = 0..steps)
    scales that weight by factor**k; a final entry sets it exactly to zero,
    where the matrix degenerates to a non-cyclic shift and the curve becomes
    proportional to sqrt(t(1-t)).  Returns a list of (scale, LevingerScan).

    The second derivatives converge to the zero-weight curve pointwise in the
    interior but diverge near the endpoints as the weight shrinks (the limit
    curve has unbounded curvature there) -- the nonuniform-convergence effect
    this experiment is built to expose.
    """
    weights = np.asarray(base_weights, dtype=float)
    if not 1 <= index <= weights.size:
        raise ValueError(f"weight index {index} out of range 1..{weights.size}")
    if not 0.0 < factor < 1.0:
        raise ValueError("factor must lie in (0, 1)")
    if steps < 1:
        raise ValueError("need at least one step")
    out = []
    scales = [factor ** k for k in range(steps + 1)] + [0.0]
    for scale in scales:
        w = weights.copy()
        w[index - 1] = weights[index - 1] * scale
        out.append((scale, scan(cyclic_weighted_shift(w), grid_size, fd_step)))
    return out
