from fractions import Fraction as Q

from hypothesis import given, settings, strategies as st

from nhsf.linalg import (IntSpan, Reducer, SparseRationalMatrix, echelon_int,
                         nullspace, rank, row_to_ints, rref, solve)


def test_rref_identity():
    red, piv = rref([[1, 0], [0, 1]])
    assert piv == [0, 1]
    assert red == [[Q(1), Q(0)], [Q(0), Q(1)]]


def test_nullspace_simple():
    # x + y + z = 0
    basis = nullspace([[1, 1, 1]], 3)
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], [1, 2]) is None
    assert solve([[1, 1], [1, -1]], [2, 0]) == [Q(1), Q(1)]


def test_row_to_ints():
    assert row_to_ints([Q(1, 2), Q(1, 3)]) == [3, 2]
    assert row_to_ints([2, 4]) == [1, 2]
    assert row_to_ints([0, 0]) == [0, 0]


rows_strategy = st.lists(
    st.lists(st.integers(min_value=-6, max_value=6), min_size=4, max_size=4),
    min_size=1, max_size=6,
)


@given(rows_strategy)
@settings(max_examples=60, deadline=None)
def test_rank_matches_rref(rows):
    assert rank(rows) == len(rref(rows)[0])


@given(rows_strategy)
@settings(max_examples=60, deadline=None)
def test_nullspace_annihilates(rows):
    for v in nullspace(rows, 4):
        for row in rows:
            assert sum(Q(a) * b for a, b in zip(row, v)) == 0
    assert rank(rows) + len(nullspace(rows, 4)) == 4


@given(rows_strategy)
@settings(max_examples=40, deadline=None)
def test_int_span_rank(rows):
    span = IntSpan(4)
    added = sum(1 for r in rows if span.add(r))
    assert added == rank(rows)


def test_reducer_express():
    red = Reducer(3)
    assert red.add([1, 0, 1])
    assert red.add([0, 1, 1])
    assert not red.add([1, 1, 2])  # dependent; still counted as a source
    coords = red.express([2, 3, 5])
    assert coords[:2] == [Q(2), Q(3)]
    # the expressed combination must reproduce the vector
    rows = [[1, 0, 1], [0, 1, 1], [1, 1, 2]]
    recon = [sum(c * Q(r[j]) for c, r in zip(coords, rows)) for j in range(3)]
    assert recon == [Q(2), Q(3), Q(5)]
    assert red.express([0, 0, 1]) is None


def test_sparse_matrix_rank_and_entries():
    m = SparseRationalMatrix(3, 3)
    m.set(0, 0, 1)
    m.set(1, 1, Q(1, 2))
    m.set(2, 2, 3)
    m.set(2, 0, 2)
    assert m.rank() == 3
    m.set(2, 2, 0)
    m.set(2, 0, 0)
    assert m.rank() == 2
    assert m.nnz() == 2
    assert list(m.entries()) == [(0, 0, Q(1)), (1, 1, Q(1, 2))]


def test_sparse_matrix_bounds():
    m = SparseRationalMatrix(2, 2)
    try:
        m.set(2, 0, 1)
    except IndexError:
        pass
    else:
        raise AssertionError("expected IndexError")
