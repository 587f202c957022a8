from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from gfsuper.exactla import SparseMatrix, kernel_dim, rank, rref_rows


def test_identity_rank():
    assert rank(SparseMatrix.identity(3)) == 3


def test_proportional_rows():
    assert rank(SparseMatrix.from_dense([[1, 2], [2, 4]])) == 1


def test_empty_rows():
    assert rank(SparseMatrix(0, 5)) == 0
    assert rank(SparseMatrix(4, 0)) == 0


def test_kernel_examples():
    assert kernel_dim(SparseMatrix(2, 2)) == 2
    assert kernel_dim(SparseMatrix.identity(3)) == 0
    assert kernel_dim(SparseMatrix.from_dense([[1, 1, 0], [0, 1, 1]])) == 1


def test_zero_entries_not_stored():
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): Fraction(1, 3)})
    assert m.nnz == 1 and m[1, 1] == Fraction(1, 3)


def test_out_of_range_entry():
    with pytest.raises(IndexError):
        SparseMatrix(1, 1, {(1, 0): 1})


def test_rref_pivots_span():
    basis, pivots = rref_rows([{0: 2, 1: 4}, {0: 1, 1: 2}, {1: 3}])
    assert len(basis) == 2 and sorted(pivots) == [0, 1]


entries = st.one_of(st.integers(-3, 3), st.fractions(min_value=-2, max_value=2, max_denominator=4))


def dense(max_r=6, max_c=6):
    return st.integers(0, max_r).flatmap(
        lambda r: st.integers(0, max_c).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r).map(
                lambda rows: (rows, c))))


def sparse(rows, c):
    return SparseMatrix(len(rows), c, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)})


@given(dense())
def test_rank_matches_sympy(data):
    rows, c = data
    m = sparse(rows, c)
    expected = sympy.Matrix(len(rows), c, [sympy.Rational(v.numerator, v.denominator) if isinstance(v, Fraction)
                                            else v for row in rows for v in row]).rank() if rows and c else 0
    assert m.rank() == expected


@given(dense())
def test_transpose_rank(data):
    m = sparse(*data)
    assert m.rank() == m.transpose().rank()


@given(dense(5, 5), st.integers(0, 5), st.data())
def test_product_rank_bound(a, k, data):
    rows, c = a
    A = sparse(rows, c)
    B_rows = data.draw(st.lists(st.lists(entries, min_size=k, max_size=k), min_size=c, max_size=c))
    B = sparse(B_rows, k)
    assert (A @ B).rank() <= min(A.rank(), B.rank())


@given(dense())
def test_rank_nullity(data):
    m = sparse(*data)
    assert m.rank() + kernel_dim(m) == m.ncols
    assert 0 <= m.rank() <= min(m.shape)
