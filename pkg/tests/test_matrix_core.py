import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levhom.matrix_core import (MatrixFormatError, centered_homotopy, decompose,
                                direct_sum, format_matrix, is_irreducible,
                                levinger_homotopy, matrix,
                                nonneg_extension_bound, parse_matrix,
                                perturb_positive)

finite = st.floats(-1e6, 1e6, allow_nan=False)


def square(n, draw_entries):
    return st.lists(draw_entries, min_size=n * n, max_size=n * n).map(
        lambda xs: np.array(xs).reshape(n, n))


def test_matrix_rejects_nonsquare():
    with pytest.raises(ValueError):
        matrix([[1.0, 2.0]])


def test_matrix_rejects_nonfinite():
    with pytest.raises(ValueError):
        matrix([[1.0, math.inf], [0.0, 0.0]])


def test_matrix_entries_read_only():
    m = matrix([[1.0, 0.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5.0


def test_homotopy_endpoints():
    a = matrix([[0.0, 1.0], [3.0, 0.0]])
    assert np.array_equal(levinger_homotopy(a, 0.0).entries, a.entries)
    assert np.array_equal(levinger_homotopy(a, 1.0).entries, a.entries.T)


def test_homotopy_rejects_outside_unit_interval():
    a = matrix([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError):
        levinger_homotopy(a, 1.5)
    with pytest.raises(ValueError):
        levinger_homotopy(a, -0.1)


@given(square(3, finite), st.floats(0.0, 1.0))
@settings(max_examples=30, deadline=None)
def test_homotopy_transpose_symmetry(entries, t):
    """B(1 - t) is exactly the transpose of B(t)."""
    a = matrix(entries)
    lhs = levinger_homotopy(a, 1.0 - t).entries
    rhs = levinger_homotopy(a, t).entries.T
    assert np.allclose(lhs, rhs, rtol=0.0, atol=1e-9 * (1.0 + abs(entries).max()))


@given(square(4, finite))
@settings(max_examples=30, deadline=None)
def test_decompose_parts(entries):
    a = matrix(entries)
    d = decompose(a)
    assert d.sym.is_symmetric()
    assert d.skew.is_skew_symmetric()
    assert np.allclose(d.sym.entries + d.skew.entries, entries)


def test_centered_homotopy_matches_shifted_parameter():
    a = matrix([[0.0, 2.0, 0.0], [1.0, 0.0, 5.0], [0.0, 3.0, 0.0]])
    # C(p) at p = 1 - 2t agrees with B(t) up to transposition, so the
    # symmetric part alone is recovered at p = 0
    c0 = centered_homotopy(a, 0.0)
    assert np.allclose(c0.entries, levinger_homotopy(a, 0.5).entries)
    c1 = centered_homotopy(a, 1.0)
    assert np.array_equal(c1.entries, a.entries)


def test_extension_bound():
    a = matrix([[0.0, 1.0], [3.0, 0.0]])
    # (1+3)/|3-1| = 2
    assert nonneg_extension_bound(a) == pytest.approx(2.0)
    sym = matrix([[1.0, 2.0], [2.0, 1.0]])
    assert nonneg_extension_bound(sym) == math.inf


def test_direct_sum_blocks():
    a = matrix([[1.0]])
    b = matrix([[2.0, 3.0], [4.0, 5.0]])
    s = direct_sum(a, b)
    assert s.n == 3
    assert s.entries[0, 0] == 1.0
    assert np.array_equal(s.entries[1:, 1:], b.entries)
    assert np.count_nonzero(s.entries[0, 1:]) == 0


def test_irreducibility():
    cycle = matrix([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
    assert is_irreducible(cycle)
    upper = matrix([[0.0, 1.0], [0.0, 0.0]])
    assert not is_irreducible(upper)


def test_perturb_positive():
    a = matrix([[0.0, 1.0], [0.0, 0.0]])
    p = perturb_positive(a, 1e-3)
    assert (p.entries > 0.0).all()
    assert p.entries[0, 1] == pytest.approx(1.001)


def test_parse_format_round_trip():
    text = "2\n0 1\n0.5 0\n"
    m = parse_matrix(text)
    assert parse_matrix(format_matrix(m)).entries.tolist() == m.entries.tolist()


def test_parse_rejects_ragged_rows():
    with pytest.raises(MatrixFormatError):
        parse_matrix("2\n0 1\n0.5\n")


def test_parse_rejects_bad_header():
    with pytest.raises(MatrixFormatError):
        parse_matrix("x\n1\n")
