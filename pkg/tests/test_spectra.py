import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levhom.matrix_core import matrix
from levhom.spectra import (full_spectrum, null_space_contains, perron_root,
                            spectral_radius, symmetric_eigen)

entry = st.floats(-10.0, 10.0, allow_nan=False)


def square(n):
    return st.lists(entry, min_size=n * n, max_size=n * n).map(
        lambda xs: np.array(xs).reshape(n, n))


def charpoly_roots(a):
    """Independent eigenvalue oracle: interpolate det(xI - A) from samples.

    Uses only determinants (LU), never an eigensolver, so agreement with
    full_spectrum is a genuine cross-check.
    """
    n = a.shape[0]
    xs = np.cos(np.pi * (2 * np.arange(n + 1) + 1) / (2 * (n + 1)))  # Chebyshev nodes
    scale = max(1.0, np.abs(a).max()) * n
    xs = xs * scale
    ys = [np.linalg.det(x * np.eye(n) - a) for x in xs]
    coeffs = np.polyfit(xs, ys, n)
    coeffs /= coeffs[0]
    return np.roots(coeffs)


def multiset_gap(got, expected):
    pool = list(np.asarray(expected, dtype=complex))
    worst = 0.0
    for x in np.asarray(got, dtype=complex):
        j = min(range(len(pool)), key=lambda k: abs(pool[k] - x))
        worst = max(worst, abs(pool[j] - x))
        pool.pop(j)
    return worst


@given(square(4))
@settings(max_examples=25, deadline=None)
def test_full_spectrum_matches_charpoly_oracle(entries):
    a = matrix(entries)
    got = full_spectrum(a).values
    scale = max(1.0, np.abs(entries).max())
    # tolerance limited by root sensitivity: a k-fold eigenvalue moves
    # like eps**(1/k) under coefficient noise
    assert multiset_gap(got, charpoly_roots(entries)) < 5e-3 * scale


@given(square(5))
@settings(max_examples=25, deadline=None)
def test_trace_equals_eigenvalue_sum(entries):
    a = matrix(entries)
    vals = full_spectrum(a).values
    scale = max(1.0, np.abs(entries).max())
    assert abs(np.sum(vals) - np.trace(entries)) < 1e-8 * scale


@given(square(4))
@settings(max_examples=20, deadline=None)
def test_transpose_has_same_spectrum(entries):
    a = matrix(entries)
    gap = multiset_gap(full_spectrum(a).values,
                       full_spectrum(a.transpose()).values)
    assert gap < 1e-8 * max(1.0, np.abs(entries).max())


@given(square(4).map(np.abs))
@settings(max_examples=25, deadline=None)
def test_perron_agrees_with_full_spectrum(entries):
    a = matrix(entries)
    pair = perron_root(a)
    assert pair.value == pytest.approx(full_spectrum(a).radius,
                                       abs=1e-8 * max(1.0, entries.max()))


def test_perron_pair_vectors():
    a = matrix([[1.0, 2.0], [3.0, 1.0]])
    pair = perron_root(a)
    assert pair.vectors_positive
    # residual of the right eigenvector
    res = a.entries @ pair.right - pair.value * pair.right
    assert np.linalg.norm(res) < 1e-10
    res_l = a.entries.T @ pair.left - pair.value * pair.left
    assert np.linalg.norm(res_l) < 1e-10


def test_perron_known_value():
    # ones(3) has spectral radius exactly 3
    a = matrix(np.ones((3, 3)))
    assert perron_root(a).value == pytest.approx(3.0, abs=1e-12)


def test_spectral_radius_defective_matrix():
    a = matrix([[0.0, 1.0], [0.0, 0.0]])
    assert spectral_radius(a) == pytest.approx(0.0, abs=1e-12)


@given(square(5))
@settings(max_examples=20, deadline=None)
def test_symmetric_eigen_reconstruction(entries):
    s = (entries + entries.T) / 2.0
    fac = symmetric_eigen(matrix(s))
    scale = max(1.0, np.abs(s).max())
    q = fac.q.entries
    recon = q @ np.diag(fac.lam) @ q.T
    assert np.abs(recon - s).max() < 1e-9 * scale
    assert np.abs(q @ q.T - np.eye(5)).max() < 1e-12
    assert (np.diff(fac.lam) <= 1e-12 * scale).all()  # descending order


def test_spectrum_ordering():
    vals = full_spectrum(matrix([[0.0, 2.0, 0.0],
                                 [0.0, 0.0, 2.0],
                                 [2.0, 0.0, 0.0]])).values
    mods = np.abs(vals)
    assert (np.diff(mods) <= 1e-9).all()
    assert min(abs(v - 2.0) for v in vals) < 1e-9


def test_null_space_contains():
    k = matrix([[0.0, 1.0], [-1.0, 0.0]])
    assert not null_space_contains(k, np.array([1.0, 0.0]), 1e-10)
    assert null_space_contains(matrix(np.zeros((2, 2))), np.array([1.0, 1.0]), 1e-10)
