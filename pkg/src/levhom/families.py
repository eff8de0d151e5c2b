"""Constructors for the matrix families under study, plus their closed-form
spectral-radius curves.

The closed forms double as independent oracles for the numerical eigensolvers:
every family built here can be cross-checked against `spectra` at arbitrary
homotopy parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .matrix_core import Matrix, levinger_homotopy, matrix
from .spectra import Spectrum, sort_eigenvalues, spectral_radius

FAMILY_KINDS = (
    "two_by_two",
    "tridiag_toeplitz",
    "fiedler_toeplitz",
    "weighted_shift",
    "cyclic_weighted_shift",
    "circuit",
    "four_param_toeplitz",
    "ex1",
    "four_by_four",
    "direct_sum",
)


@dataclass(frozen=True)
class FamilySpec:
    """Declarative family descriptor: a kind plus named parameters.

    Scalar parameters are floats, `weights` is a sequence, `indices` (circuit
    only) a sequence of distinct 1-based positions, and direct_sum nests two
    child specs under `first` / `second`.
    """

    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")


@dataclass(frozen=True)
class ClosedFormCurve:
    """Spectral-radius curve t -> r with analytic first/second derivatives,
    valid on the open interval (0, 1)."""

    r: Callable[[float], float]
    dr: Callable[[float], float]
    d2r: Callable[[float], float]
    domain: tuple = (0.0, 1.0)


def build(spec: FamilySpec) -> Matrix:
    """Materialize the matrix described by a FamilySpec."""
    p = spec.params
    if spec.kind == "two_by_two":
        a, b, c, d = (float(p[k]) for k in "abcd")
        return matrix([[a, b], [c, d]])
    if spec.kind == "tridiag_toeplitz":
        return tridiag_toeplitz(int(p["n"]), float(p["a"]), float(p["b"]), float(p["c"]))
    if spec.kind == "fiedler_toeplitz":
        return fiedler_toeplitz(int(p["n"]), float(p["u"]), float(p["v"]), float(p["w"]))
    if spec.kind == "weighted_shift":
        return weighted_shift(p["weights"])
    if spec.kind == "cyclic_weighted_shift":
        return cyclic_weighted_shift(p["weights"])
    if spec.kind == "circuit":
        return circuit_matrix(int(p["n"]), p["indices"], p["weights"])
    if spec.kind == "four_param_toeplitz":
        return matrix([[5, 0, 6, 0], [1, 5, 0, 6], [0, 1, 5, 0], [8, 0, 1, 5]])
    if spec.kind == "ex1":
        return matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0.4]])
    if spec.kind == "four_by_four":
        return four_by_four_example(float(p["h"]))
    if spec.kind == "direct_sum":
        from .matrix_core import direct_sum as dsum
        return dsum(build(p["first"]), build(p["second"]))
    raise AssertionError(spec.kind)


def tridiag_toeplitz(n: int, a: float, b: float, c: float) -> Matrix:
    """n x n Toeplitz with subdiagonal a, diagonal b, superdiagonal c."""
    if n < 2:
        raise ValueError("tridiagonal Toeplitz needs n >= 2")
    if a < 0 or b < 0 or c < 0 or max(a, c) <= 0:
        raise ValueError("need a, b, c >= 0 with max(a, c) > 0")
    m = b * np.eye(n) + a * np.eye(n, k=-1) + c * np.eye(n, k=1)
    return Matrix(m)


def fiedler_toeplitz(n: int, u: float, v: float, w: float) -> Matrix:
    """Three-parameter Toeplitz: w on the diagonal, u on the superdiagonal and
    the (1, n) corner, v on the subdiagonal and the (n, 1) corner."""
    if n < 3:
        raise ValueError("Fiedler family needs n >= 3")
    if u <= 0 or v <= 0 or w <= 0:
        raise ValueError("need u, v, w > 0")
    m = w * np.eye(n) + u * np.eye(n, k=1) + v * np.eye(n, k=-1)
    m[0, n - 1] = u
    m[n - 1, 0] = v
    return Matrix(m)


def circulant_from_fiedler(n: int, u: float, v: float, w: float) -> Matrix:
    """The Fiedler matrix with its two corner entries exchanged, which makes
    it circulant (first row w, u, 0, ..., 0, v) and its radius curve constant."""
    m = np.array(fiedler_toeplitz(n, u, v, w).entries)
    m[0, n - 1], m[n - 1, 0] = m[n - 1, 0], m[0, n - 1]
    return Matrix(m)


def weighted_shift(weights: Sequence[float]) -> Matrix:
    """(len(weights)+1)-dimensional matrix with the weights on the superdiagonal."""
    c = np.asarray(weights, dtype=float)
    if c.size < 1:
        raise ValueError("need at least one weight")
    if np.any(c < 0):
        raise ValueError("weights must be nonnegative")
    n = c.size + 1
    m = np.zeros((n, n))
    m[np.arange(n - 1), np.arange(1, n)] = c
    return Matrix(m)


def cyclic_weighted_shift(weights: Sequence[float]) -> Matrix:
    """Downshift cycle: c_1..c_{n-1} on the superdiagonal, c_n at (n, 1)."""
    c = np.asarray(weights, dtype=float)
    if c.size < 2:
        raise ValueError("cyclic shift needs at least two weights")
    if np.any(c < 0):
        raise ValueError("weights must be nonnegative")
    n = c.size
    m = np.zeros((n, n))
    m[np.arange(n - 1), np.arange(1, n)] = c[:-1]
    m[n - 1, 0] = c[-1]
    return Matrix(m)


def hollow_tridiag_variant(weights: Sequence[float], flips: Sequence[bool]) -> Matrix:
    """Weighted shift with selected weights moved to the transposed position.

    flips[i] true places c_i on the subdiagonal at (i+1, i) instead of the
    superdiagonal at (i, i+1).  All such variants share the homotopy's
    characteristic polynomial, hence its radius curve.
    """
    c = np.asarray(weights, dtype=float)
    if len(flips) != c.size:
        raise ValueError("need one flip flag per weight")
    if np.any(c < 0):
        raise ValueError("weights must be nonnegative")
    n = c.size + 1
    m = np.zeros((n, n))
    for i, (w, flip) in enumerate(zip(c, flips)):
        if flip:
            m[i + 1, i] = w
        else:
            m[i, i + 1] = w
    return Matrix(m)


def circuit_matrix(n: int, indices: Sequence[int], weights: Sequence[float]) -> Matrix:
    """Zero except for the weights along one directed cycle of distinct
    1-based indices i_1 -> i_2 -> ... -> i_k -> i_1."""
    idx = [int(i) for i in indices]
    c = [float(x) for x in weights]
    if len(idx) != len(c) or not idx:
        raise ValueError("need one weight per circuit index")
    if len(set(idx)) != len(idx):
        raise ValueError("circuit indices must be distinct")
    if any(i < 1 or i > n for i in idx):
        raise ValueError("circuit indices out of range")
    m = np.zeros((n, n))
    for j, i in enumerate(idx):
        m[i - 1, idx[(j + 1) % len(idx)] - 1] = c[j]
    return Matrix(m)


def circuit_to_cyclic_shift(n: int, indices: Sequence[int], weights: Sequence[float]) -> Matrix:
    """Canonical reduction of a circuit matrix: restrict to the cycle's
    principal submatrix and relabel in cycle order starting from the smallest
    index, yielding a cyclic weighted shift with the weights in cycle order."""
    idx = [int(i) for i in indices]
    c = [float(x) for x in weights]
    start = idx.index(min(idx))
    order = c[start:] + c[:start]
    return cyclic_weighted_shift(order)


def four_by_four_example(h: float) -> Matrix:
    """Weighted direct sum of two 2x2 shift homotopies frozen at opposite ends
    of the interval (t1 = 511/512, t2 = 1/8), blended by h."""
    if not 0.0 <= h <= 1.0:
        raise ValueError("h must lie in [0, 1]")
    a1 = levinger_homotopy(matrix([[0, 1], [0, 0]]), 511.0 / 512.0)
    a2 = levinger_homotopy(matrix([[0, 1], [0, 0]]), 1.0 / 8.0)
    out = np.zeros((4, 4))
    out[:2, :2] = (1.0 - h) * a1.entries
    out[2:, 2:] = h * a2.entries
    return Matrix(out)


def reversible_cyclic_weights(n: int, base: float) -> np.ndarray:
    """Two-pivot reversible weights c_j = base + sin(2 pi j / n), j = 1..n."""
    if n < 2:
        raise ValueError("need n >= 2")
    if base <= 1.0:
        raise ValueError("base must exceed 1 so all weights stay positive")
    j = np.arange(1, n + 1)
    return base + np.sin(2.0 * np.pi * j / n)


def closed_levinger_2x2(a: float, b: float, c: float, d: float) -> ClosedFormCurve:
    """Exact radius curve of the homotopy of [[a, b], [c, d]], a,b,c,d > 0.

    r(t) = (a + d + sqrt((a-d)^2 + 4 t(1-t)(b-c)^2 + 4bc)) / 2, with its
    first and second derivatives; strictly concave whenever b != c.
    """
    if min(a, b, c, d) <= 0:
        raise ValueError("need a, b, c, d > 0")

    def disc(t):
        return (a - d) ** 2 + 4.0 * t * (1.0 - t) * (b - c) ** 2 + 4.0 * b * c

    def r(t):
        return (a + d + math.sqrt(disc(t))) / 2.0

    def dr(t):
        return (1.0 - 2.0 * t) * (b - c) ** 2 / math.sqrt(disc(t))

    def d2r(t):
        return -2.0 * (b - c) ** 2 * ((a - d) ** 2 + (b + c) ** 2) / disc(t) ** 1.5

    return ClosedFormCurve(r=r, dr=dr, d2r=d2r)


def tridiag_eigenvalue_curve(n: int, a: float, b: float, c: float, k: int) -> ClosedFormCurve:
    """Exact curve of the k-th eigenvalue of the tridiagonal Toeplitz homotopy:
    b + 2 sqrt(((1-t)a + tc)(ta + (1-t)c)) cos(k pi / (n+1))."""
    if n < 2:
        raise ValueError("need n >= 2")
    if a < 0 or c < 0 or max(a, c) <= 0:
        raise ValueError("need a, c >= 0 with max(a, c) > 0")
    if not 1 <= k <= n:
        raise ValueError("eigenvalue index k out of range")
    ck = math.cos(k * math.pi / (n + 1))

    def pq(t):
        return ((1.0 - t) * a + t * c) * (t * a + (1.0 - t) * c)

    def r(t):
        return b + 2.0 * ck * math.sqrt(pq(t))

    def dr(t):
        return ck * (a - c) ** 2 * (1.0 - 2.0 * t) / math.sqrt(pq(t))

    def d2r(t):
        return -ck * (a * a - c * c) ** 2 / (2.0 * pq(t) ** 1.5)

    return ClosedFormCurve(r=r, dr=dr, d2r=d2r)


def tridiag_closed_forms(n: int, a: float, b: float, c: float) -> ClosedFormCurve:
    """Radius curve (k = 1 eigenvalue) of the tridiagonal Toeplitz homotopy."""
    return tridiag_eigenvalue_curve(n, a, b, c, k=1)


def fiedler_eigs(n: int, u: float, v: float, w: float) -> Spectrum:
    """Exact spectrum of the Fiedler matrix: with omega = e^{2 pi i / n},
    lambda_{j+1} = w + omega^j u^{1-1/n} v^{1/n} + omega^{n-j} u^{1/n} v^{1-1/n}."""
    fiedler_toeplitz(n, u, v, w)  # parameter validation
    j = np.arange(n)
    omega = np.exp(2j * np.pi / n)
    vals = (w
            + omega ** j * u ** (1.0 - 1.0 / n) * v ** (1.0 / n)
            + omega ** (n - j) * u ** (1.0 / n) * v ** (1.0 - 1.0 / n))
    return Spectrum(values=sort_eigenvalues(vals))


def fiedler_levinger(n: int, u: float, v: float, w: float) -> ClosedFormCurve:
    """Exact radius curve of the Fiedler homotopy:
    w + P^{1-1/n} Q^{1/n} + P^{1/n} Q^{1-1/n} with P = (1-t)u + tv and
    Q = (1-t)v + tu.  Derivatives come from direct differentiation; the curve
    is concave, strictly iff u != v."""
    fiedler_toeplitz(n, u, v, w)  # parameter validation
    ea = 1.0 - 1.0 / n
    eb = 1.0 / n
    dp = v - u

    def parts(t):
        return (1.0 - t) * u + t * v, (1.0 - t) * v + t * u

    def r(t):
        p, q = parts(t)
        return w + p ** ea * q ** eb + p ** eb * q ** ea

    def dr(t):
        p, q = parts(t)
        f = p ** ea * q ** eb
        g = p ** eb * q ** ea
        return dp * (f * (ea / p - eb / q) + g * (eb / p - ea / q))

    def d2r(t):
        p, q = parts(t)
        f = p ** ea * q ** eb
        g = p ** eb * q ** ea
        term_f = f * ((ea / p - eb / q) ** 2 - ea / p ** 2 - eb / q ** 2)
        term_g = g * ((eb / p - ea / q) ** 2 - eb / p ** 2 - ea / q ** 2)
        return dp * dp * (term_f + term_g)

    return ClosedFormCurve(r=r, dr=dr, d2r=d2r)


def jacobi_charpoly(weights: Sequence[float], alpha: float, beta: float) -> np.ndarray:
    """Characteristic polynomial of the hollow tridiagonal matrix whose
    superdiagonal is alpha * c_i and subdiagonal beta * c_i.

    Built from the three-term recurrence on leading principal minors:
    p_1 = x, p_2 = x^2 - alpha beta c_1^2,
    p_k = x p_{k-1} - alpha beta c_{k-1}^2 p_{k-2}.
    Coefficients are returned highest degree first (np.roots order); the
    coefficient of x^j carries the factor (alpha beta)^{(n-j)/2}, so the roots
    scale as sqrt(alpha beta).
    """
    c = np.asarray(weights, dtype=float)
    if c.size == 0:
        raise ValueError("need at least one weight")
    n = c.size + 1
    prev = np.array([1.0])            # p_0 = 1, ascending coefficients
    cur = np.array([0.0, 1.0])        # p_1 = x
    for k in range(2, n + 1):
        shifted = np.concatenate(([0.0], cur))           # x * p_{k-1}
        nxt = shifted.copy()
        nxt[:prev.size] -= alpha * beta * c[k - 2] ** 2 * prev
        prev, cur = cur, nxt
    return cur[::-1].copy()


def shift_profile(weights: Sequence[float]) -> float:
    """Scale factor f of the shift-matrix radius curve r(t) = sqrt(t(1-t)) f.

    Computed as r(B(1/2)) / 0.5 for the weighted shift with the given
    weights; a single evaluation pins the whole curve.
    """
    c = np.asarray(weights, dtype=float)
    if not np.any(c > 0):
        raise ValueError("need at least one positive weight")
    b_half = levinger_homotopy(weighted_shift(c), 0.5)
    return spectral_radius(b_half) / 0.5


# --- key-value text blocks for file-driven batch runs -----------------------

def parse_family_block(text: str) -> FamilySpec:
    """Parse "key: value" lines into a FamilySpec.

    `kind` is required; `weights` and `indices` are whitespace-separated
    lists; direct_sum children use dotted keys like "first.kind: ex1".
    """
    flat: dict[str, str] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        if ":" not in ln:
            raise ValueError(f"expected 'key: value', got {ln!r}")
        key, val = ln.split(":", 1)
        flat[key.strip()] = val.strip()
    return _spec_from_flat(flat)


def _spec_from_flat(flat: dict) -> FamilySpec:
    if "kind" not in flat:
        raise ValueError("family block is missing 'kind'")
    kind = flat["kind"]
    if kind == "direct_sum":
        first = {k.split(".", 1)[1]: v for k, v in flat.items() if k.startswith("first.")}
        second = {k.split(".", 1)[1]: v for k, v in flat.items() if k.startswith("second.")}
        return FamilySpec("direct_sum", {"first": _spec_from_flat(first),
                                         "second": _spec_from_flat(second)})
    params: dict = {}
    for key, val in flat.items():
        if key == "kind" or "." in key:
            continue
        if key in ("weights",):
            params[key] = [float(tok) for tok in val.split()]
        elif key == "indices":
            params[key] = [int(tok) for tok in val.split()]
        elif key == "n":
            params[key] = int(val)
        else:
            params[key] = float(val)
    return FamilySpec(kind, params)


def format_family_block(spec: FamilySpec) -> str:
    lines = [f"kind: {spec.kind}"]
    for key, val in spec.params.items():
        if isinstance(val, FamilySpec):
            for sub in format_family_block(val).splitlines():
                k, v = sub.split(":", 1)
                lines.append(f"{key}.{k}:{v}")
        elif isinstance(val, (list, tuple, np.ndarray)):
            lines.append(f"{key}: " + " ".join(format(float(x), ".17g") for x in val))
        elif key in ("n",):
            lines.append(f"{key}: {int(val)}")
        else:
            lines.append(f"{key}: {format(float(val), '.17g')}")
    return "\n".join(lines) + "\n"
