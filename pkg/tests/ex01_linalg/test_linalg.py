import pytest

from affwreath.exceptions import DimensionMismatch, SingularMatrix
from affwreath.linalg import (
    SparseEchelon,
    as_matrix,
    identity,
    inverse,
    matmul,
    matrices_equal,
    nullspace,
    rank,
    same_span,
    solve,
    span_rank,
    vecmat,
)
from affwreath.scalars import root_of_unity


def test_inverse():
    m = as_matrix([[2, 1], [1, 1]])
    assert matrices_equal(matmul(m, inverse(m)), identity(2))
    assert inverse(m) == as_matrix([[1, -1], [-1, 2]])


def test_inverse_over_a_cyclotomic_field():
    i = root_of_unity(4)
    m = as_matrix([[1, i], [i, 1]])
    assert matrices_equal(matmul(inverse(m), m), identity(2))


def test_singular_and_shape_errors():
    with pytest.raises(SingularMatrix):
        inverse(as_matrix([[1, 2], [2, 4]]))

    with pytest.raises(DimensionMismatch):
        inverse(as_matrix([[1, 2]]))

    with pytest.raises(DimensionMismatch):
        matmul(as_matrix([[1, 2]]), as_matrix([[1, 2]]))


def test_rank_and_nullspace():
    m = as_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(m) == 2
    kernel = nullspace(m)
    assert len(kernel) == 1
    assert all(not x for x in vecmat(kernel[0], as_matrix(
        [[1, 2, 0], [2, 4, 1], [3, 6, 1]])))
    assert rank([]) == 0


def test_solve():
    m = as_matrix([[1, 1], [1, -1]])
    assert solve(m, as_matrix([[3, 1]])[0]) == as_matrix([[2, 1]])[0]
    assert solve(as_matrix([[1, 1], [2, 2]]),
                 as_matrix([[1, 3]])[0]) is None


def test_sparse_echelon():
    echelon = SparseEchelon()
    assert echelon.add({"a": 1, "b": 1})
    assert echelon.add({"b": 1})
    assert not echelon.add({"a": 2})
    assert echelon.contains({"a": 1, "b": -1})
    assert not echelon.contains({"c": 1})
    assert len(echelon) == 2


def test_spans():
    first = [{1: 1, 2: 1}, {1: 1, 2: -1}]
    second = [{1: 1}, {2: 5}]
    assert span_rank(first) == 2
    assert same_span(first, second)
    assert not same_span(first, [{1: 1}])
