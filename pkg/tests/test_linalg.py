from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from satake import _linalg as la

small_ints = st.integers(min_value=-12, max_value=12)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)))


def det_int(m):
    return int(Matrix(m).det())


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_smith_transforms_and_divisibility(a):
    u, d, v = la.smith_normal_form(a)
    assert la.matmul(la.matmul(u, a), v) == d
    assert abs(det_int(u)) == 1 and abs(det_int(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    for i, row in enumerate(d):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    assert diag[: len(nonzero)] == nonzero
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_invariant_factors_match_sympy(a):
    m = Matrix(a)
    s = sympy_snf(m, domain=ZZ)
    expected = [abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0]
    assert la.invariant_factors(a) == sorted(expected, key=lambda x: (x == 0, x))


def test_smith_is_deterministic():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert la.smith_normal_form(a) == la.smith_normal_form(a)
    assert la.invariant_factors(a) == [2, 6, 12]


@settings(max_examples=100, deadline=None)
@given(matrices(), st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
def test_hermite_is_a_lattice_invariant(a, mixer):
    # rows of a and rows of (unimodular) * a span the same lattice
    n = len(a)
    mix = [row[:n] for row in mixer[:n]]
    if abs(det_int(mix)) != 1:
        mix = la.identity(n)
    assert la.hermite_normal_form(la.matmul(mix, a)) == la.hermite_normal_form(a)


def test_rational_helpers():
    m = [[2, 1], [1, 1]]
    inv = la.inverse(m)
    assert la.matmul(m, inv) == [[1, 0], [0, 1]]
    assert la.nullspace([[1, 1, 0]], 3) == [[-1, 1, 0], [0, 0, 1]]
    p = la.left_inverse([[1, 0, 1], [0, 1, 1]])
    assert la.matmul([[1, 0, 1], [0, 1, 1]], p) == [[1, 0], [0, 1]]
    assert la.rank([[1, 2], [2, 4]]) == 1
    with pytest.raises(ZeroDivisionError):
        la.inverse([[1, 2], [2, 4]])
    assert la.xgcd(12, -18) == (6, -1, -1) or 12 * la.xgcd(12, -18)[1] - 18 * la.xgcd(12, -18)[2] == 6
    assert la.common_denominator([[Fraction(1, 2), Fraction(1, 3)]]) == 6
