import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levhom import families
from levhom.analysis import levinger_value
from levhom.families import FamilySpec, build
from levhom.spectra import full_spectrum

pos = st.floats(0.05, 5.0, allow_nan=False)

# radii computed with an independent dense eigensolver and frozen here
TOEPLITZ_CONVEX_RADII = {
    0.0: 9.2925291647578803,
    0.25: 10.630442075347686,
    0.5: 11.163118960624642,
}
TRIDIAG_830_RADIUS_T03 = 5.6834038885769456
FIEDLER_5_RADII = {0.0: 5.4352672768405847, 0.37: 5.495670319599455}
WSHIFT_12321_RADII = {0.5: 2.0256871208655234, 0.2: 1.620549696692414}
CYC16_RADII = {0.0: 15.98435971133566, 0.5: 16.319943786249969}


def test_four_param_toeplitz_radii():
    a = build(FamilySpec("four_param_toeplitz"))
    for t, expected in TOEPLITZ_CONVEX_RADII.items():
        assert levinger_value(a, t) == pytest.approx(expected, abs=1e-10)


def test_tridiag_radius_and_closed_form():
    a = build(FamilySpec("tridiag_toeplitz", {"n": 8, "a": 2.0, "b": 1.0, "c": 3.0}))
    assert levinger_value(a, 0.3) == pytest.approx(TRIDIAG_830_RADIUS_T03, abs=1e-10)
    curve = families.tridiag_closed_forms(8, 2.0, 1.0, 3.0)
    assert curve.r(0.3) == pytest.approx(TRIDIAG_830_RADIUS_T03, abs=1e-12)


@given(st.floats(0.01, 0.99), pos, pos, pos)
@settings(max_examples=25, deadline=None)
def test_tridiag_derivatives_match_finite_differences(t, a, b, c):
    curve = families.tridiag_closed_forms(6, a, b, c)
    h = 1e-5
    fd1 = (curve.r(t + h) - curve.r(t - h)) / (2.0 * h)
    fd2 = (curve.r(t + h) - 2.0 * curve.r(t) + curve.r(t - h)) / h ** 2
    scale = max(1.0, abs(curve.r(t)))
    assert curve.dr(t) == pytest.approx(fd1, abs=1e-6 * scale)
    assert curve.d2r(t) == pytest.approx(fd2, abs=1e-3 * scale)


def test_fiedler_radii_and_curve():
    a = build(FamilySpec("fiedler_toeplitz", {"n": 5, "w": 0.5, "u": 2.0, "v": 3.0}))
    for t, expected in FIEDLER_5_RADII.items():
        assert levinger_value(a, t) == pytest.approx(expected, abs=1e-10)
    curve = families.fiedler_levinger(5, 2.0, 3.0, 0.5)
    assert curve.r(0.37) == pytest.approx(FIEDLER_5_RADII[0.37], abs=1e-10)


def test_fiedler_eigs_formula():
    # eigenvalues from the explicit root-of-unity formula must match the solver
    a = families.fiedler_toeplitz(4, 1.5, 2.5, 0.25)
    got = sorted(full_spectrum(a).values, key=lambda z: (round(z.real, 9), z.imag))
    want = sorted(families.fiedler_eigs(4, 1.5, 2.5, 0.25).values,
                  key=lambda z: (round(z.real, 9), z.imag))
    assert max(abs(g - w) for g, w in zip(got, want)) < 1e-9


def test_weighted_shift_profile():
    a = families.weighted_shift([1.0, 2.0, 3.0, 2.0, 1.0])
    for t, expected in WSHIFT_12321_RADII.items():
        assert levinger_value(a, t) == pytest.approx(expected, abs=1e-10)
    # r(t) = sqrt(t(1-t)) * f(c): the ratio is constant in t
    f = families.shift_profile([1.0, 2.0, 3.0, 2.0, 1.0])
    assert levinger_value(a, 0.2) == pytest.approx(math.sqrt(0.16) * f, abs=1e-9)


def test_charpoly_root_scaling():
    """Roots with alpha*beta = 4 are exactly twice those with alpha*beta = 1."""
    w = [1.0, 2.0, 1.5]
    p1 = families.jacobi_charpoly(w, 1.0, 1.0)
    p4 = families.jacobi_charpoly(w, 4.0, 1.0)
    r1 = np.sort_complex(np.roots(p1))
    r4 = np.sort_complex(np.roots(p4))
    assert np.allclose(r4, 2.0 * r1, atol=1e-10)


def test_cyclic_shift_radii():
    a = families.cyclic_weighted_shift(families.reversible_cyclic_weights(16, 16.0))
    for t, expected in CYC16_RADII.items():
        assert levinger_value(a, t) == pytest.approx(expected, abs=1e-9)


def test_reversible_weights():
    w = families.reversible_cyclic_weights(16, 16.0)
    assert len(w) == 16
    assert w[0] == pytest.approx(16.0 + math.sin(2.0 * math.pi / 16.0))
    assert w[15] == pytest.approx(16.0)


def test_circuit_canonical_rotation():
    # the same directed cycle written from a different starting vertex must
    # canonicalize to the same weighted cyclic shift
    w = [2.0, 3.0, 5.0]
    a = families.circuit_to_cyclic_shift(3, [1, 2, 3], w)
    b = families.circuit_to_cyclic_shift(3, [2, 3, 1], [3.0, 5.0, 2.0])
    assert np.allclose(a.entries, b.entries)


def test_two_by_two_closed_form_against_solver():
    curve = families.closed_levinger_2x2(1.0, 3.0, 0.5, 2.0)
    a = build(FamilySpec("two_by_two", {"a": 1.0, "b": 3.0, "c": 0.5, "d": 2.0}))
    for t in (0.0, 0.31, 0.5, 0.77, 1.0):
        assert curve.r(t) == pytest.approx(levinger_value(a, t), abs=1e-10)


@given(pos, pos, pos, pos, st.floats(0.01, 0.99))
@settings(max_examples=25, deadline=None)
def test_two_by_two_second_derivative_negative(a, b, c, d, t):
    """For positive 2x2 matrices the closed-form curve is strictly concave."""
    curve = families.closed_levinger_2x2(a, b, c, d)
    h = 1e-5
    fd2 = (curve.r(t + h) - 2.0 * curve.r(t) + curve.r(t - h)) / h ** 2
    assert curve.d2r(t) == pytest.approx(fd2, abs=1e-4 * max(1.0, abs(fd2)))
    if abs(b - c) > 1e-3:
        assert curve.d2r(t) < 0.0


def test_ex1_matrix():
    a = build(FamilySpec("ex1"))
    assert a.entries[0, 1] == 1.0
    assert a.entries[2, 2] == 0.4
    # spectrum at t: {0.4, +/- sqrt(t(1-t))}
    vals = full_spectrum(families.build(FamilySpec("ex1"))).values
    assert sorted(v.real for v in vals) == pytest.approx([0.0, 0.0, 0.4])


def test_four_by_four_blocks():
    a = families.four_by_four_example(0.4)
    assert a.n == 4
    assert np.count_nonzero(a.entries[:2, 2:]) == 0
    assert np.count_nonzero(a.entries[2:, :2]) == 0


def test_family_block_round_trip():
    spec = FamilySpec("tridiag_toeplitz", {"n": 6, "a": 2.0, "b": 0.0, "c": 3.0})
    text = families.format_family_block(spec)
    again = families.parse_family_block(text)
    assert again.kind == spec.kind
    assert np.allclose(build(again).entries, build(spec).entries)


def test_direct_sum_family():
    spec = families.parse_family_block(
        "kind: direct_sum\n"
        "first.kind: ex1\n"
        "second.kind: two_by_two\n"
        "second.a: 1\nsecond.b: 2\nsecond.c: 0.5\nsecond.d: 1\n")
    m = build(spec)
    assert m.n == 5
    assert np.count_nonzero(m.entries[:3, 3:]) == 0
