import pytest
from hypothesis import given, strategies as st

from conftest import oracle_catalan
from fullcomm.catalan import catalan, catalan_closed, catalan_number, catalan_triangle
from fullcomm.errors import InvalidArgumentError

TRIANGLE_TOP = [
    [1],
    [1, 1],
    [1, 2, 2],
    [1, 3, 5, 5],
    [1, 4, 9, 14, 14],
    [1, 5, 14, 28, 42, 42],
    [1, 6, 20, 48, 90, 132, 132],
    [1, 7, 27, 75, 165, 297, 429, 429],
]


def test_top_rows():
    assert catalan_triangle(8) == TRIANGLE_TOP


def test_examples():
    assert catalan(7, 4) == 165
    assert catalan(5, 5) == 42
    assert all(catalan(n, 0) == 1 for n in range(20))


@pytest.mark.parametrize("method", ["recursive", "closed"])
def test_k_above_n_rejected(method):
    with pytest.raises(InvalidArgumentError):
        catalan(3, 4, method)


def test_unknown_method():
    with pytest.raises(InvalidArgumentError):
        catalan(3, 1, "memo")


def test_rows_must_be_positive():
    with pytest.raises(InvalidArgumentError):
        catalan_triangle(0)


@given(st.integers(0, 120).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_methods_agree_with_ballot_oracle(nk):
    n, k = nk
    assert catalan(n, k, "recursive") == catalan(n, k, "closed") == oracle_catalan(n, k)


@given(st.integers(1, 150))
def test_diagonal_is_catalan_number(n):
    assert catalan(n, n) == catalan(n, n - 1) == catalan_number(n)


@given(st.integers(2, 80).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))))
def test_additive_rule(nk):
    n, k = nk
    assert catalan(n, k) == catalan(n, k - 1) + catalan(n - 1, k)


def test_deep_row_does_not_recurse():
    assert catalan(2000, 1000) == catalan_closed(2000, 1000)
