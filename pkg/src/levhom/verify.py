"""The acceptance checklist: every headline claim about the matrix families,
run numerically at fixed tolerances.

Each check returns a CheckResult with the worst measured margin, so the same
functions back both the pytest acceptance suite and the `verify` CLI command.
All randomness is seeded through the config for reproducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import analysis, families, spectra
from .matrix_core import (Matrix, direct_sum, is_irreducible, levinger_homotopy,
                          matrix, perturb_positive)


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 2026
    grid_size: int = 101
    fd_step: float = 1e-4
    tol: float = 1e-7


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    threshold: float
    note: str = ""
    witnesses: tuple = field(default_factory=tuple)


def _r(a: Matrix, t: float) -> float:
    return analysis.levinger_value(a, t)


def _multiset_error(got, expected) -> float:
    """Greedy closest-pair matching between two eigenvalue multisets."""
    pool = list(np.asarray(expected, dtype=complex))
    worst = 0.0
    for x in np.asarray(got, dtype=complex):
        j = min(range(len(pool)), key=lambda j: abs(pool[j] - x))
        worst = max(worst, abs(pool[j] - x))
        pool.pop(j)
    return worst


def _raw_second_difference(a: Matrix, t: float, h: float) -> float:
    # deliberately unclamped/unvalidated: verify must be able to demonstrate
    # that an oversized stencil breaks the derivative checks
    def stencil(step):
        return (_r(a, t + step) - 2.0 * _r(a, t) + _r(a, t - step)) / step ** 2

    return (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0


def check_ex1_spectrum(cfg: VerifyConfig) -> CheckResult:
    """Block-diagonal 3x3: spectrum is {2/5, +sqrt(t(1-t)), -sqrt(t(1-t))}."""
    a = families.build(families.FamilySpec("ex1"))
    worst = 0.0
    for t in (0.09, 0.2, 0.5):
        got = spectra.full_spectrum(levinger_homotopy(a, t)).values
        s = math.sqrt(t * (1.0 - t))
        worst = max(worst, _multiset_error(got, [0.4, s, -s]))
    return CheckResult("ex1_spectrum", worst <= 1e-10, worst, 1e-10)


def check_ex1_witness(cfg: VerifyConfig) -> CheckResult:
    """Chord above the curve at the radius crossing, surviving perturbation."""
    a = families.build(families.FamilySpec("ex1"))
    margin = (_r(a, 0.15) + _r(a, 0.25)) / 2.0 - _r(a, 0.2)
    expected = (0.4 + math.sqrt(0.1875)) / 2.0 - 0.4
    err = abs(margin - expected)
    ok = err <= 1e-6 and margin > 0.016
    witnesses = []
    for m in (a, perturb_positive(a, 1e-6)):
        rep = analysis.certify_nonconcavity(m, analysis.scan(m, cfg.grid_size, cfg.fd_step), cfg.tol)
        ok = ok and rep.verdict == "nonconcave"
        witnesses.append(rep.witness)
    return CheckResult("ex1_witness", ok, margin, 0.016,
                       note=f"|margin-expected|={err:.3g}", witnesses=tuple(witnesses))


def check_2x2_oracle(cfg: VerifyConfig) -> CheckResult:
    """Closed-form 2x2 curve vs the numerical solvers, values and curvature."""
    rng = np.random.default_rng(cfg.seed)
    ts = np.linspace(0.0, 1.0, 101)
    worst_r = 0.0
    worst_d2 = 0.0
    min_neg = 0.0
    for _ in range(50):
        a, b, c, d = rng.uniform(0.05, 5.0, size=4)
        curve = families.closed_levinger_2x2(a, b, c, d)
        m = matrix([[a, b], [c, d]])
        worst_r = max(worst_r, max(abs(curve.r(t) - _r(m, t)) for t in ts))
        for t in np.arange(0.1, 0.95, 0.1):
            num = _raw_second_difference(m, t, cfg.fd_step)
            worst_d2 = max(worst_d2, abs(num - curve.d2r(t)))
            if b != c:
                min_neg = min(min_neg, -curve.d2r(t))
    ok = worst_r <= 1e-9 and worst_d2 <= 1e-5 and min_neg >= 0.0
    return CheckResult("2x2_oracle", ok, worst_r, 1e-9,
                       note=f"worst d2r mismatch {worst_d2:.3g} (limit 1e-5)")


def check_tridiag(cfg: VerifyConfig) -> CheckResult:
    """n=8 tridiagonal Toeplitz: closed form, concavity, unimodality."""
    n, a, b, c = 8, 2.0, 1.0, 3.0
    m = families.tridiag_toeplitz(n, a, b, c)
    curve = families.tridiag_closed_forms(n, a, b, c)
    ts = np.linspace(0.0, 1.0, 101)
    worst = max(abs(curve.r(t) - _r(m, t)) for t in ts)
    sc = analysis.scan(m, cfg.grid_size, cfg.fd_step)
    rep = analysis.certify_nonconcavity(m, sc, cfg.tol)
    uni = analysis.check_unimodality(sc)
    eq = families.tridiag_toeplitz(6, 2.0, 1.0, 2.0)
    rep_eq = analysis.certify_nonconcavity(
        eq, analysis.scan(eq, cfg.grid_size, cfg.fd_step), cfg.tol)
    ok = (worst <= 1e-10 and rep.verdict == "concave-on-grid" and uni
          and rep_eq.verdict == "constant")
    return CheckResult("tridiag_toeplitz", ok, worst, 1e-10,
                       note=f"verdict={rep.verdict}, a=c verdict={rep_eq.verdict}, unimodal={uni}")


def check_fiedler(cfg: VerifyConfig) -> CheckResult:
    """Fiedler family: exact spectrum, concave curve, circulant constancy."""
    rng = np.random.default_rng(cfg.seed + 1)
    worst_spec = 0.0
    worst_d2 = -math.inf
    for n in (3, 5, 8):
        u, v, w = rng.uniform(0.5, 4.0, size=3)
        m = families.fiedler_toeplitz(n, u, v, w)
        worst_spec = max(worst_spec, _multiset_error(
            spectra.full_spectrum(m).values, families.fiedler_eigs(n, u, v, w).values))
        curve = families.fiedler_levinger(n, u, v, w)
        for t in np.linspace(0.02, 0.98, 25):
            worst_d2 = max(worst_d2, curve.d2r(t))
    uv = families.fiedler_toeplitz(5, 2.0, 2.0, 1.0)
    rep_uv = analysis.certify_nonconcavity(
        uv, analysis.scan(uv, cfg.grid_size, cfg.fd_step), cfg.tol)
    circ = families.circulant_from_fiedler(5, 1.0, 4.0, 2.0)
    sc = analysis.scan(circ, cfg.grid_size, cfg.fd_step)
    ok = (worst_spec <= 1e-8 and worst_d2 <= 1e-7 and rep_uv.verdict == "constant"
          and sc.value_range <= 1e-10 and analysis.is_constant_levinger(circ))
    return CheckResult("fiedler", ok, worst_spec, 1e-8,
                       note=f"max d2r={worst_d2:.3g}, circulant range={sc.value_range:.3g}")


def check_weighted_shift(cfg: VerifyConfig) -> CheckResult:
    """Shift matrices: sqrt(t(1-t)) profile, root scaling, swap invariance."""
    rng = np.random.default_rng(cfg.seed + 2)
    weights = rng.uniform(0.2, 3.0, size=5)  # n = 6
    m = families.weighted_shift(weights)
    ratios = [_r(m, t) / math.sqrt(t * (1.0 - t)) for t in np.arange(0.1, 0.95, 0.1)]
    worst_ratio = max(ratios) - min(ratios)
    r11 = np.sort(np.roots(families.jacobi_charpoly(weights, 1.0, 1.0)).real)
    r41 = np.sort(np.roots(families.jacobi_charpoly(weights, 4.0, 1.0)).real)
    worst_scale = float(np.max(np.abs(r41 - 2.0 * r11)))
    worst_swap = 0.0
    for _ in range(4):
        flips = rng.integers(0, 2, size=5).astype(bool)
        variant = families.hollow_tridiag_variant(weights, flips)
        worst_swap = max(worst_swap, max(abs(_r(variant, t) - _r(m, t))
                                         for t in np.arange(0.1, 0.95, 0.1)))
    ok = worst_ratio <= 1e-9 and worst_scale <= 1e-8 and worst_swap <= 1e-10
    return CheckResult("weighted_shift", ok, worst_ratio, 1e-9,
                       note=f"root scaling err {worst_scale:.3g}, swap err {worst_swap:.3g}")


def check_toeplitz_convex(cfg: VerifyConfig) -> CheckResult:
    """The 4-parameter Toeplitz: convex at the ends, concave in the middle."""
    m = families.build(families.FamilySpec("four_param_toeplitz"))
    d2_lo = analysis.second_derivative(m, 0.01, cfg.fd_step)
    d2_hi = analysis.second_derivative(m, 0.99, cfg.fd_step)
    d2_mid = analysis.second_derivative(m, 0.5, cfg.fd_step)
    rep = analysis.certify_nonconcavity(m, analysis.scan(m, cfg.grid_size, cfg.fd_step), cfg.tol)
    ok = d2_lo > 0 and d2_hi > 0 and d2_mid < 0 and rep.verdict == "nonconcave"
    return CheckResult("toeplitz_convex", ok, d2_lo, 0.0,
                       note=f"d2r(0.01)={d2_lo:.3g} d2r(0.99)={d2_hi:.3g} d2r(0.5)={d2_mid:.3g}",
                       witnesses=(rep.witness,))


def check_cyclic_shift16(cfg: VerifyConfig) -> CheckResult:
    """16x16 reversible cyclic shift: convex near the ends yet unimodal."""
    m = families.cyclic_weighted_shift(families.reversible_cyclic_weights(16, 16.0))
    d2_lo = analysis.second_derivative(m, 0.05, cfg.fd_step)
    d2_mid = analysis.second_derivative(m, 0.5, cfg.fd_step)
    sc = analysis.scan(m, cfg.grid_size, cfg.fd_step)
    rep = analysis.certify_nonconcavity(m, sc, cfg.tol)
    uni = analysis.check_unimodality(sc)
    ok = d2_lo > 0 and d2_mid < 0 and rep.verdict == "nonconcave" and uni
    return CheckResult("cyclic_shift16", ok, d2_lo, 0.0,
                       note=f"d2r(0.05)={d2_lo:.3g} d2r(0.5)={d2_mid:.3g} unimodal={uni}",
                       witnesses=(rep.witness,))


def check_directsum_crossing(cfg: VerifyConfig) -> CheckResult:
    """Two-block 4x4 at h = 0.4: crossing certificate and nonconcavity."""
    h = 0.4
    shift = matrix([[0, 1], [0, 0]])
    a1 = Matrix((1.0 - h) * levinger_homotopy(shift, 511.0 / 512.0).entries)
    a2 = Matrix(h * levinger_homotopy(shift, 1.0 / 8.0).entries)
    cert = analysis.directsum_crossing(a1, a2, grid_size=501)
    assembled = families.four_by_four_example(h)
    rep = analysis.certify_nonconcavity(
        assembled, analysis.scan(assembled, cfg.grid_size, cfg.fd_step), cfg.tol)
    delta = cert.delta if cert is not None else 0.0
    ok = cert is not None and delta > 1e-3 and rep.verdict == "nonconcave"
    return CheckResult("directsum_crossing", ok, delta, 1e-3,
                       note=f"t*={cert.t_star:.6f}" if cert else "no crossing found",
                       witnesses=(rep.witness,))


def check_constancy_agreement(cfg: VerifyConfig) -> CheckResult:
    """Three independent constancy tests must agree on every instance."""
    rng = np.random.default_rng(cfg.seed + 3)
    cases = []
    while len(cases) < 100:
        n = int(rng.integers(4, 9))
        m = matrix(rng.uniform(0.0, 1.0, size=(n, n)) * (rng.uniform(size=(n, n)) > 0.3))
        if is_irreducible(m):
            cases.append(m)
    for _ in range(10):
        n = int(rng.integers(4, 9))
        s = rng.uniform(0.1, 1.0, size=(n, n))
        cases.append(matrix(s + s.T))  # symmetric
    for _ in range(10):
        n = int(rng.integers(4, 9))
        row = rng.uniform(0.1, 1.0, size=n)
        cases.append(matrix(np.array([np.roll(row, k) for k in range(n)])))  # circulant
    disagreements = 0
    for m in cases:
        p1 = analysis.is_constant_levinger(m)
        p2 = analysis.kqp_structure_check(m)
        p3 = analysis.scan(m, 21, cfg.fd_step).value_range <= 1e-9
        if not (p1 == p2 == p3):
            disagreements += 1
    return CheckResult("constancy_agreement", disagreements == 0,
                       float(disagreements), 0.0,
                       note=f"{len(cases)} instances")


def check_skew_corollaries(cfg: VerifyConfig) -> CheckResult:
    """Odd-order skew parts are singular; a nonsingular skew part forces a
    nonconstant curve."""
    rng = np.random.default_rng(cfg.seed + 4)
    ok = True
    for n in (3, 5, 7):
        m = matrix(rng.uniform(size=(n, n)))
        rep = analysis.skew_singularity_check(m)
        ok = ok and rep.n_odd and rep.skew_rank_deficient
    k = np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]) / 4.0
    a = matrix(np.ones((4, 4)) + k)
    rep4 = analysis.skew_singularity_check(a)
    constant = analysis.is_constant_levinger(a)
    ok = ok and not rep4.skew_rank_deficient and not constant
    return CheckResult("skew_corollaries", ok, rep4.smallest_singular_value, 0.0,
                       note=f"4x4 sigma_min={rep4.smallest_singular_value:.3g}, constant={constant}")


def check_weight_limit(cfg: VerifyConfig) -> CheckResult:
    """Nonuniform convergence as one cyclic weight is driven to zero: interior
    curvature converges while endpoint curvature diverges."""
    results = analysis.weight_limit_experiment(
        families.reversible_cyclic_weights(16, 16.0), index=12, factor=2.0 ** -8,
        steps=4, grid_size=cfg.grid_size, fd_step=cfg.fd_step)
    scans = [sc for _, sc in results]
    mid = (cfg.grid_size - 1) // 2
    limit_mid = scans[-1].d2r[mid]
    gaps = [abs(sc.d2r[mid] - limit_mid) for sc in scans[:-1]]
    monotone = all(gaps[i + 1] <= gaps[i] + 1e-3 for i in range(len(gaps) - 1))

    def early_peak(sc):
        sel = (sc.t_grid < 0.05) & np.isfinite(sc.d2r)
        return float(np.max(np.abs(sc.d2r[sel])))

    growth = early_peak(scans[4]) / early_peak(scans[0])
    ok = monotone and growth >= 10.0
    return CheckResult("weight_limit", ok, growth, 10.0,
                       note=f"interior gaps {['%.3g' % g for g in gaps]}, endpoint growth {growth:.1f}x")


ALL_CHECKS = (
    check_ex1_spectrum,
    check_ex1_witness,
    check_2x2_oracle,
    check_tridiag,
    check_fiedler,
    check_weighted_shift,
    check_toeplitz_convex,
    check_cyclic_shift16,
    check_directsum_crossing,
    check_constancy_agreement,
    check_skew_corollaries,
    check_weight_limit,
)


def run_all(cfg: VerifyConfig = VerifyConfig()):
    results = []
    for check in ALL_CHECKS:
        try:
            results.append(check(cfg))
        except (ValueError, spectra.SolverError) as exc:
            # a config the numerics reject (e.g. an oversized finite-difference
            # step) is reported as a failed check, not a crash
            name = check.__name__.removeprefix("check_")
            results.append(CheckResult(name, False, math.nan, math.nan, str(exc)))
    return results
