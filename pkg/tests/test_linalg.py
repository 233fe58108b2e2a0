from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from octacolor import linalg


def small_int_matrix(max_dim=5, lo=-4, hi=4):
    return st.integers(1, max_dim).flatmap(
        lambda rows: st.integers(1, max_dim).flatmap(
            lambda cols: st.lists(
                st.lists(st.integers(lo, hi), min_size=cols, max_size=cols),
                min_size=rows, max_size=rows)))


@given(small_int_matrix())
@settings(max_examples=150, deadline=None)
def test_rank_methods_agree(m):
    assert linalg.rank(m) == linalg.rank_fraction_free(m)


@given(small_int_matrix())
@settings(max_examples=100, deadline=None)
def test_nullspace_vectors_annihilate(m):
    basis = linalg.nullspace(m)
    assert len(basis) == len(m[0]) - linalg.rank(m)
    for v in basis:
        assert all(x == 0 for x in linalg.mat_vec(m, v))


def test_rref_identity():
    red, pivots = linalg.rref([[1, 0], [0, 1]])
    assert pivots == [0, 1]
    assert red == [[1, 0], [0, 1]]


def test_primitive_vector():
    assert linalg.primitive_vector([Fraction(1, 2), Fraction(1, 2)]) == [1, 1]
    assert linalg.primitive_vector([-4, 6]) == [-2, 3]


def test_solve_consistent_and_inconsistent():
    x = linalg.solve([[2, 0], [0, 4]], [1, 2])
    assert x == [Fraction(1, 2), Fraction(1, 2)]
    assert linalg.solve([[1, 1], [1, 1]], [0, 1]) is None


def test_integer_kernel_saturates_half_integer_span():
    # rational span of (1, 1): the integer points are generated by (1, 1)
    assert linalg.integer_kernel([[1, -1]]) == [[1, 1]]


def test_integer_kernel_matches_hand_reduction():
    # span of (1,0,1) and (0,1,0): complement is (1,0,-1)
    basis = linalg.integer_kernel([[1, 0, -1]])
    assert basis == [[1, 0, 1], [0, 1, 0]]


def test_integer_kernel_is_saturated():
    # the scaled row (2, 2) must not trap the kernel in an index-2 sublattice
    assert linalg.integer_kernel([[2, -2]]) == [[1, 1]]


@given(small_int_matrix(max_dim=4, lo=-3, hi=3))
@settings(max_examples=60, deadline=None)
def test_integer_kernel_membership_and_rank(m):
    basis = linalg.integer_kernel(m)
    for v in basis:
        assert all(x == 0 for x in linalg.mat_vec(m, v))
    assert len(basis) == len(m[0]) - linalg.rank(m)


def test_hnf_is_canonical_under_row_mixing():
    a = [[2, 4, 4], [-6, 6, 12]]
    b = [[2, 4, 4], [-4, 10, 16]]  # row2 + row1
    assert linalg.hermite_normal_form(a) == linalg.hermite_normal_form(b)
