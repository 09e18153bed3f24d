from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from skewpbw.linalg import Echelon, rank, rational_kernel, rref_rows, same_span


def test_identity_has_trivial_kernel():
    assert rational_kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []


def test_zero_matrix_kernel_is_everything():
    ker = rational_kernel([[0, 0, 0], [0, 0, 0]])
    assert len(ker) == 3
    assert rank([{c: v for c, v in enumerate(k) if v} for k in ker]) == 3


def test_rank_one_kernel():
    assert rational_kernel([[1, 1], [2, 2]]) == [[Fraction(-1), Fraction(1)]]


def test_rref_pivots_are_one():
    rows = rref_rows([{0: 2, 1: 4}, {1: 3, 2: 1}])
    assert [min(r) for r in rows] == [0, 1]
    assert all(r[min(r)] == 1 for r in rows)
    assert rows[0].get(1) is None


def test_echelon_contains():
    ech = Echelon()
    ech.add({0: 1, 1: 1})
    assert ech.contains({0: 3, 1: 3})
    assert not ech.contains({0: 1})
    assert not ech.add({0: -2, 1: -2})


def test_same_span():
    assert same_span([{0: 1}, {1: 1}], [{0: 1, 1: 1}, {0: 1, 1: -1}])
    assert not same_span([{0: 1}], [{1: 1}])


small = st.integers(-4, 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=4)))
def test_kernel_is_exact_and_complete(matrix):
    ncols = len(matrix[0])
    ker = rational_kernel(matrix)
    for v in ker:
        for row in matrix:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
    sparse = [{c: Fraction(v) for c, v in enumerate(r) if v} for r in matrix]
    assert rank(sparse) + len(ker) == ncols
