"""Smith normal form checked against sympy as an independent oracle."""

from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_factors

from affweyl.linalg import mat_mul, mat_inverse_int
from affweyl.smith import invariant_factors, smith_normal_form, verify_decomposition


def check_matrix(a):
    s, u, v = smith_normal_form(a)
    assert verify_decomposition(a, s, u, v)
    # unimodularity
    for m in (u, v):
        mat_inverse_int(m)
    # divisibility chain and oracle agreement
    mine = list(invariant_factors(a))
    for x, y in zip(mine, mine[1:]):
        assert y % x == 0
    oracle = [int(x) for x in sympy_factors(Matrix(a)) if int(x) != 0]
    assert mine == oracle


def test_fixed_matrices():
    check_matrix(((12, 6, 4), (3, 9, 6), (2, 16, 14)))
    check_matrix(((2, 0), (0, 0)))
    check_matrix(((0, 0), (0, 0)))
    check_matrix(((1,),))
    check_matrix(((2, 4, 4), (-6, 6, 12), (10, 4, 16)))


entry = st.integers(min_value=-9, max_value=9)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4),
       st.data())
def test_random_matrices(m, n, data):
    a = tuple(tuple(data.draw(entry) for _ in range(n)) for _ in range(m))
    check_matrix(a)


def test_reconstruction_bit_exact():
    a = ((2, -1, 0), (0, 3, -3), (4, 4, 4))
    s, u, v = smith_normal_form(a)
    uinv = mat_inverse_int(u)
    vinv = mat_inverse_int(v)
    assert mat_mul(mat_mul(uinv, s), vinv) == a
