"""Self-contained eigensolvers.

Three independent routes are provided on purpose: power iteration for the
Perron root of a nonnegative matrix, Hessenberg reduction plus shifted QR for
the full spectrum of a general real matrix, and cyclic Jacobi rotations for
symmetric matrices.  Cross-agreement between them is part of the test
contract, so none delegates to the others except the documented power
iteration fallback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrix_core import Matrix

POWER_TOL = 1e-13
POWER_MAX_ITER = 100_000
JACOBI_MAX_SWEEPS = 100
_EPS = np.finfo(float).eps


class SolverError(RuntimeError):
    """An iterative eigensolver failed to converge."""


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues, sorted by descending modulus.

    Ties break by descending real part, then descending imaginary part, so
    output is deterministic for a given build.
    """

    values: np.ndarray

    @property
    def radius(self) -> float:
        return float(abs(self.values[0]))


@dataclass(frozen=True)
class PerronPair:
    """Spectral radius with nonnegative unit left/right eigenvectors.

    For reducible input the radius is still correct but the vectors may have
    zero entries; `vectors_positive` records whether both came out strictly
    positive.
    """

    value: float
    right: np.ndarray
    left: np.ndarray

    @property
    def vectors_positive(self) -> bool:
        return bool(np.all(self.right > 0) and np.all(self.left > 0))


@dataclass(frozen=True)
class OrthogonalFactorization:
    """Q and descending eigenvalues of a symmetric matrix: S = Q diag(lam) Q^T."""

    q: Matrix
    lam: np.ndarray


def sort_eigenvalues(values) -> np.ndarray:
    vals = np.asarray(values, dtype=complex)
    order = np.lexsort((-vals.imag, -vals.real, -np.abs(vals)))
    return vals[order]


def perron_root(a: Matrix) -> PerronPair:
    """Perron root and vectors of a nonnegative matrix by power iteration.

    Iterates on A + cI with shift c = max diagonal + 1, which makes the
    dominant eigenvalue of any irreducible block strictly dominant in modulus
    (periodic matrices like cyclic shifts would otherwise oscillate).  Falls
    back to the QR spectrum for the value if the vectors do not settle.
    """
    if not a.is_nonnegative():
        raise ValueError("perron_root requires a nonnegative matrix")
    shift = float(np.max(np.diag(a.entries))) + 1.0
    m = a.entries + shift * np.eye(a.n)
    right, right_ok = _power_vector(m)
    left, left_ok = _power_vector(m.T)
    if right_ok:
        value = float(right @ (m @ right)) - shift
    elif left_ok:
        value = float(left @ (m.T @ left)) - shift
    else:
        value = full_spectrum(a).radius
    # iterates of a nonnegative matrix from a positive start stay nonnegative;
    # clip only rounding dust
    right = np.maximum(right, 0.0)
    left = np.maximum(left, 0.0)
    right /= np.linalg.norm(right)
    left /= np.linalg.norm(left)
    return PerronPair(value=max(value, 0.0), right=right, left=left)


def _power_vector(m: np.ndarray):
    # matvecs run in blocks of 8 with one normalization and convergence check
    # per block; the 8-step diff upper-bounds the successive-iterate diff, so
    # stopping on it is conservative w.r.t. the 1e-13 criterion
    n = m.shape[0]
    x = np.full(n, 1.0 / math.sqrt(n))
    block = 8
    check = 512
    prev_diff = None
    k = 0
    while k < POWER_MAX_ITER:
        y = x
        for _ in range(block):
            y = m @ y
        norm = math.sqrt(y @ y)
        if norm == 0.0:
            return x, True  # zero-matrix edge; shift makes this unreachable otherwise
        y = y / norm
        diff = float(abs(y - x).max())
        x = y
        k += block
        if diff < POWER_TOL:
            return x, True
        if k % check == 0:
            # bail to the QR fallback once the measured contraction rate shows
            # the tolerance is unreachable within the iteration budget
            if prev_diff is not None and diff > 0.0:
                rho = (diff / prev_diff) ** (1.0 / check)
                if rho >= 1.0 or math.log(POWER_TOL / diff) / math.log(rho) > POWER_MAX_ITER - k:
                    return x, False
            prev_diff = diff
    return x, False


def spectral_radius(a: Matrix) -> float:
    """Max eigenvalue modulus; Perron route when nonnegative, QR otherwise."""
    if a.is_nonnegative():
        return perron_root(a).value
    return full_spectrum(a).radius


def full_spectrum(a: Matrix) -> Spectrum:
    """All eigenvalues via Householder Hessenberg reduction + shifted QR.

    The QR iteration runs in complex arithmetic with a Wilkinson shift taken
    from the trailing 2x2 block; 1x1 and 2x2 trailing blocks deflate directly.
    For real input, imaginary dust below 1e-12 * ||A||_F is removed so real
    spectra come out exactly real.
    """
    h = _hessenberg(a.entries.astype(complex))
    vals = _qr_eigenvalues(h, max_sweeps=30 * a.n)
    scale = float(np.linalg.norm(a.entries))
    vals = np.where(np.abs(vals.imag) <= 1e-12 * max(scale, 1.0), vals.real, vals)
    return Spectrum(values=sort_eigenvalues(vals))


def _hessenberg(a: np.ndarray) -> np.ndarray:
    h = a.copy()
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        xmax = float(np.abs(x).max())
        if xmax == 0.0 or xmax <= _EPS * np.linalg.norm(h):
            continue
        v = x / xmax  # rescale so subnormal entries cannot overflow the phase
        normv = np.linalg.norm(v)
        phase = np.exp(1j * np.angle(v[0])) if v[0] != 0 else 1.0
        v[0] += phase * normv
        v /= np.linalg.norm(v)
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
    return h


def _givens(f: complex, g: complex):
    if g == 0:
        return 1.0, 0.0 + 0.0j
    if f == 0:
        return 0.0, complex(np.exp(-1j * np.angle(g)))
    d = math.hypot(abs(f), abs(g))
    c = abs(f) / d
    s = complex(np.exp(1j * np.angle(f))) * (g.conjugate() / d)
    return c, s


def _eig2(a, b, c, d):
    tr = a + d
    disc = np.sqrt(complex((a - d) * (a - d) + 4.0 * b * c))
    return (tr + disc) / 2.0, (tr - disc) / 2.0


def _wilkinson_shift(h, m):
    a, b = h[m - 1, m - 1], h[m - 1, m]
    c, d = h[m, m - 1], h[m, m]
    l1, l2 = _eig2(a, b, c, d)
    return l1 if abs(l1 - d) <= abs(l2 - d) else l2


def _subdiag_negligible(h, i):
    tol = _EPS * (abs(h[i - 1, i - 1]) + abs(h[i, i]))
    if tol == 0.0:
        tol = _EPS * np.linalg.norm(h)
    return abs(h[i, i - 1]) <= tol


def _qr_eigenvalues(h: np.ndarray, max_sweeps: int) -> np.ndarray:
    n = h.shape[0]
    if n == 1:
        return h.diagonal().copy()
    h = h.copy()
    eigs = []
    m = n - 1
    sweeps = 0
    stagnant = 0
    while m >= 0:
        if m == 0:
            eigs.append(h[0, 0])
            break
        if _subdiag_negligible(h, m):
            eigs.append(h[m, m])
            h[m, m - 1] = 0.0
            m -= 1
            stagnant = 0
            continue
        if m == 1 or _subdiag_negligible(h, m - 1):
            l1, l2 = _eig2(h[m - 1, m - 1], h[m - 1, m], h[m, m - 1], h[m, m])
            eigs.extend([l1, l2])
            if m >= 2:
                h[m - 1, m - 2] = 0.0
            m -= 2
            stagnant = 0
            continue
        if sweeps >= max_sweeps:
            raise SolverError(f"QR iteration did not converge after {max_sweeps} sweeps")
        # unreduced block [l..m]
        l = m - 1
        while l > 0 and not _subdiag_negligible(h, l):
            l -= 1
        stagnant += 1
        if stagnant % 12 == 0:
            # exceptional shift to break symmetric cycling (e.g. roots of unity)
            mu = h[m, m] + 0.75 * abs(h[m, m - 1]) * (1.0 + 0.5j)
        else:
            mu = _wilkinson_shift(h, m)
        _qr_step(h, l, m, mu)
        sweeps += 1
    return np.array(eigs, dtype=complex)


def _qr_step(h: np.ndarray, l: int, m: int, mu: complex) -> None:
    """One shifted QR similarity transform on the decoupled block h[l:m+1]."""
    k = m - l + 1
    b = h[l:m + 1, l:m + 1]
    b[np.diag_indices(k)] -= mu
    rots = []
    for i in range(k - 1):
        c, s = _givens(b[i, i], b[i + 1, i])
        rows = b[[i, i + 1], i:]
        b[i, i:] = c * rows[0] + s * rows[1]
        b[i + 1, i:] = -s.conjugate() * rows[0] + c * rows[1]
        rots.append((c, s))
    for i, (c, s) in enumerate(rots):
        top = min(i + 2, k - 1) + 1
        cols = b[:top, [i, i + 1]]
        b[:top, i] = c * cols[:, 0] + s.conjugate() * cols[:, 1]
        b[:top, i + 1] = -s * cols[:, 0] + c * cols[:, 1]
    b[np.diag_indices(k)] += mu


def symmetric_eigen(s: Matrix) -> OrthogonalFactorization:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Sweeps rotate away off-diagonal mass until its Frobenius norm drops below
    1e-12 * ||S||_F.  Eigenvalues come back descending with Q's columns
    permuted to match; each column's sign is fixed so its largest-magnitude
    entry is positive (making the first column the Perron vector for
    nonnegative irreducible input).
    """
    if not s.is_symmetric():
        raise ValueError("symmetric_eigen requires a symmetric matrix")
    n = s.n
    a = np.array(s.entries)
    v = np.eye(n)
    norm = np.linalg.norm(a)
    target = 1e-12 * norm
    for _ in range(JACOBI_MAX_SWEEPS):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= target or norm == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:  # theta^2 would overflow; tan is ~1/(2 theta)
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                sn = t * c
                rot_p = c * a[:, p] - sn * a[:, q]
                rot_q = sn * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - sn * a[q, :]
                rot_q = sn * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
                rot_p = c * v[:, p] - sn * v[:, q]
                rot_q = sn * v[:, p] + c * v[:, q]
                v[:, p], v[:, q] = rot_p, rot_q
    else:
        raise SolverError("Jacobi sweeps did not reach the off-diagonal target")
    lam = np.diag(a).copy()
    order = np.argsort(-lam, kind="stable")
    lam = lam[order]
    v = v[:, order]
    for j in range(n):
        i = int(np.argmax(np.abs(v[:, j])))
        if v[i, j] < 0:
            v[:, j] = -v[:, j]
    return OrthogonalFactorization(q=Matrix(v), lam=lam)


def null_space_contains(k: Matrix, x: np.ndarray, tol: float) -> bool:
    """True iff ||K x|| <= tol * ||K||_F * ||x|| (Frobenius-scaled residual)."""
    x = np.asarray(x, dtype=float)
    nx = np.linalg.norm(x)
    if nx == 0.0:
        raise ValueError("null-space test needs a nonzero vector")
    return bool(np.linalg.norm(k.entries @ x) <= tol * np.linalg.norm(k.entries) * nx)
