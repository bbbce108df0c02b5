from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import int_matrices, int_vectors
from torcone.errors import InvalidInput, NotPrimitive, ZeroVector
from torcone.lattice import (
    UnimodularWitness,
    complete_to_basis,
    det,
    ext_gcd,
    gcd_of,
    gcd_reduce,
    hermite_normal_form,
    identity,
    mat_mul,
    mat_vec,
    primitive,
    random_sl,
    rank,
    smith_normal_form,
)


def test_ext_gcd_bezout():
    for a, b in [(0, 0), (0, 5), (5, 0), (12, -18), (-7, -21), (1, -1), (240, 46)]:
        g, x, y = ext_gcd(a, b)
        assert g == oracles.euclid_gcd([a, b])
        assert a * x + b * y == g


def test_gcd_of_and_primitive():
    assert gcd_of((6, 10, 15)) == 1
    assert gcd_of((0, -4, 6)) == 2
    assert primitive((2, 4, -6)) == (1, 2, -3)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive((0, 0)) == (0, 0)


def test_gcd_reduce_example():
    # U frozen from the implementation; checked by multiplication and Leibniz det
    g, u = gcd_reduce((6, 10, 15))
    assert g == 1
    assert u.matrix == ((-14, 7, 1), (-5, 3, 0), (-30, 15, 2))
    assert mat_vec(u.matrix, (6, 10, 15)) == (1, 0, 0)
    assert oracles.leibniz_det(u.matrix) == 1


@pytest.mark.parametrize(
    "v, g",
    [((2, 4, 6), 2), ((3, 6, 0), 3), ((1, 1, 1), 1), ((0, 0, -5), 5), ((-4, 0, 0), 4), ((0, 7), 7)],
)
def test_gcd_reduce_cases(v, g):
    got, u = gcd_reduce(v)
    assert got == g == oracles.euclid_gcd(v)
    assert mat_vec(u.matrix, v) == (g,) + (0,) * (len(v) - 1)
    assert u.det == 1


def test_gcd_reduce_errors():
    with pytest.raises(ZeroVector):
        gcd_reduce((0, 0, 0))
    with pytest.raises(InvalidInput):
        gcd_reduce((3,))
    with pytest.raises(InvalidInput):
        gcd_reduce((1.5, 2))


@settings(max_examples=300, deadline=None)
@given(int_vectors())
def test_gcd_reduce_property(v):
    g, u = gcd_reduce(v)
    assert g == oracles.euclid_gcd(v)
    assert mat_vec(u.matrix, v) == (g,) + (0,) * (len(v) - 1)
    assert oracles.leibniz_det(u.matrix) == 1
    assert mat_mul(u.matrix, u.inverse) == identity(len(v))


def test_complete_to_basis_example():
    w = complete_to_basis((2, 3))
    assert w.matrix == ((2, -1), (3, -1))
    assert w.det == 1


def test_complete_to_basis_errors():
    with pytest.raises(NotPrimitive):
        complete_to_basis((2, 4))
    with pytest.raises(ZeroVector):
        complete_to_basis((0, 0))


@settings(max_examples=200, deadline=None)
@given(int_vectors(max_dim=5, lo=-30, hi=30))
def test_complete_to_basis_property(v):
    p = primitive(v)
    w = complete_to_basis(p)
    assert tuple(row[0] for row in w.matrix) == p
    assert oracles.leibniz_det(w.matrix) == 1


def test_hnf_examples():
    h, u = hermite_normal_form([[2, 4], [1, 3]])
    assert h == ((1, 1), (0, 2))
    assert mat_mul(u.matrix, ((2, 4), (1, 3))) == h
    # |det| preserved: 1 * 2 * 22 = |-44|
    h, _ = hermite_normal_form([[3, 0, 1], [1, 2, 5], [0, 4, 2]])
    assert h == ((1, 0, 15), (0, 2, 12), (0, 0, 22))


def _is_row_hnf(h):
    last = -1
    for i, row in enumerate(h):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            assert all(not any(r) for r in h[i:])
            break
        j = nz[0]
        assert j > last
        assert row[j] > 0
        for k in range(i):
            assert 0 <= h[k][j] < row[j]
        last = j
    return True


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_hnf_property(m):
    h, u = hermite_normal_form(m)
    assert mat_mul(u.matrix, m) == h
    assert abs(oracles.leibniz_det(u.matrix)) == 1
    assert _is_row_hnf(h)
    assert rank(h) == oracles.rank(m)


def test_snf_examples():
    # reference diagonals computed independently with sympy and frozen here
    cases = [
        ([[2, 0], [0, 3]], ((1, 0), (0, 6))),
        ([[12, 6, 4], [3, 9, 6], [2, 16, 14]], ((1, 0, 0), (0, 10, 0), (0, 0, 30))),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], ((2, 0, 0), (0, 6, 0), (0, 0, 12))),
        (
            [[1, 2, 3, 4], [5, 6, 7, 8], [9, 10, 11, 12], [2, 4, 6, 9]],
            ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 4, 0), (0, 0, 0, 0)),
        ),
    ]
    for m, s in cases:
        got, u, v = smith_normal_form(m)
        assert got == s
        assert mat_mul(mat_mul(u.matrix, m), v.matrix) == s


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_snf_property(m):
    s, u, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u.matrix, m), v.matrix) == s
    assert abs(oracles.leibniz_det(u.matrix)) == 1
    assert abs(oracles.leibniz_det(v.matrix)) == 1
    diag = [s[i][i] for i in range(min(len(s), len(s[0])))]
    for i, row in enumerate(s):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0


def test_det_matches_leibniz():
    m = ((2, -1, 0, 3), (1, 1, 4, -2), (0, 5, -3, 1), (7, 0, 2, 2))
    assert det(m) == oracles.leibniz_det(m)


def test_witness_rejects_bad_inverse():
    with pytest.raises(InvalidInput):
        UnimodularWitness(((1, 1), (0, 1)), ((1, 0), (0, 1)))


@given(st.integers(2, 5), st.integers(0, 10_000))
def test_random_sl_is_special_linear(n, seed):
    import random

    w = random_sl(n, random.Random(seed))
    assert oracles.leibniz_det(w.matrix) == 1
    assert mat_mul(w.matrix, w.inverse) == identity(n)
