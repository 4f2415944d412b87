"""Test k-Fibonacci / k-Lucas numbers and the identities built on them."""

# third party
import pytest
from hypothesis import given
from hypothesis import strategies as st
from icecream import ic  # noqa F401

# current project
from fiblucas_matrix.errors import ConsistencyError
from fiblucas_matrix.errors import InvalidParameterError
from fiblucas_matrix.sequences import cross_diff
from fiblucas_matrix.sequences import diag_term
from fiblucas_matrix.sequences import evaluate_polynomial
from fiblucas_matrix.sequences import exact_quotient
from fiblucas_matrix.sequences import fib_lucas_product
from fiblucas_matrix.sequences import fib_lucas_product_alt
from fiblucas_matrix.sequences import fib_polynomial
from fiblucas_matrix.sequences import kfib
from fiblucas_matrix.sequences import klucas
from fiblucas_matrix.sequences import lucas_from_fib
from fiblucas_matrix.sequences import lucas_polynomial
from fiblucas_matrix.sequences import offdiag_term
from fiblucas_matrix.sequences import product_sum
from fiblucas_matrix.sequences import product_sum_closed
from fiblucas_matrix.sequences import simson
from fiblucas_matrix.sequences import stride_sum
from fiblucas_matrix.sequences import stride_sum_closed

K_VALUES = range(1, 11)


@pytest.mark.parametrize(
    "k, expected",
    [
        (1, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]),
        (2, [0, 1, 2, 5, 12, 29, 70, 169, 408, 985]),
        (3, [0, 1, 3, 10, 33, 109, 360, 1189, 3927, 12970]),
    ],
)
def test_kfib_listings(k, expected):
    assert [kfib(k, i) for i in range(len(expected))] == expected


@pytest.mark.parametrize(
    "k, expected",
    [
        (1, [2, 1, 3, 4, 7, 11, 18, 29]),
        (2, [2, 2, 6, 14, 34, 82, 198, 478]),
        (3, [2, 3, 11, 36, 119, 393, 1298, 4287]),
    ],
)
def test_klucas_listings(k, expected):
    assert [klucas(k, i) for i in range(len(expected))] == expected


def test_negative_indices():
    assert [kfib(1, -i) for i in range(1, 6)] == [1, -1, 2, -3, 5]
    assert [klucas(1, -i) for i in range(1, 6)] == [-1, 3, -4, 7, -11]
    # recurrence still holds across zero
    for k in K_VALUES:
        for idx in range(-50, 201):
            assert kfib(k, idx + 1) == k * kfib(k, idx) + kfib(k, idx - 1)
            assert klucas(k, idx + 1) == k * klucas(k, idx) + klucas(k, idx - 1)


def test_large_index_is_exact():
    # F_300 has 63 digits; recurrence check catches any float drift
    big = kfib(1, 300)
    assert big == kfib(1, 299) + kfib(1, 298)
    assert len(str(big)) == 63


@pytest.mark.parametrize("k", [0, -1, True, 1.0, "2"])
def test_invalid_k(k):
    with pytest.raises(InvalidParameterError):
        kfib(k, 3)
    with pytest.raises(InvalidParameterError):
        klucas(k, 3)


def test_fib_lucas_product_identities():
    for k in range(1, 9):
        for m in range(-20, 61):
            for n in range(-20, 61):
                direct = kfib(k, m) * klucas(k, n)
                assert fib_lucas_product(k, m, n) == direct, (k, m, n)
                assert fib_lucas_product_alt(k, m, n) == direct, (k, m, n)


def test_lucas_from_fib_and_simson():
    for k in K_VALUES:
        for n in range(-15, 201):
            assert lucas_from_fib(k, n) == klucas(k, n)
            assert simson(k, n) == (-1) ** n


def test_cross_diff():
    assert all(cross_diff(k, j) == 2 for k in K_VALUES for j in range(0, 101))
    with pytest.raises(InvalidParameterError):
        cross_diff(1, -1)


def test_matrix_entries_reduce_to_single_terms():
    for k in K_VALUES:
        for j in range(1, 16):
            assert offdiag_term(k, j) == kfib(k, 4 * j - 1) - 1
            assert diag_term(k, j) == kfib(k, 4 * j - 1) + 1
            assert diag_term(k, j) - offdiag_term(k, j) == 2


def test_sums_match_closed_forms():
    for k in K_VALUES:
        for n in range(0, 16):
            assert stride_sum(k, n) == stride_sum_closed(k, n), (k, n)
        for n in range(1, 61):
            assert product_sum(k, n) == product_sum_closed(k, n), (k, n)


def test_diagonal_sum_shift():
    # swapping one off-diagonal product for the diagonal one adds exactly 2
    for n in range(2, 61):
        diagonal = kfib(1, 2 * n - 1) * klucas(1, 2 * n)
        assert diagonal == diag_term(1, n)
        assert product_sum(1, n - 1) + diagonal == 2 + product_sum(1, n), n


def test_classical_lucas_identities():
    for n in range(1, 81):
        assert 5 * kfib(1, n) == klucas(1, n - 1) + klucas(1, n + 1)
        assert klucas(1, n) ** 2 == klucas(1, 2 * n) + 2 * (-1) ** n
        assert klucas(1, n - 1) * klucas(1, n + 1) == klucas(1, n) ** 2 + 5 * (-1) ** (n - 1)


def test_sum_values():
    # k = 1: v = 1, 12, 88, 609, ...
    assert [product_sum(1, n) for n in range(1, 5)] == [1, 13, 101, 710]
    assert stride_sum(1, 0) == 1
    with pytest.raises(InvalidParameterError):
        product_sum(1, 0)
    with pytest.raises(InvalidParameterError):
        stride_sum(1, -1)


def test_polynomials():
    assert fib_polynomial(0) == []
    assert fib_polynomial(1) == [1]
    assert fib_polynomial(5) == [1, 0, 3, 0, 1]
    assert lucas_polynomial(0) == [2]
    assert lucas_polynomial(2) == [2, 0, 1]
    for idx in range(0, 16):
        for k in K_VALUES:
            assert evaluate_polynomial(fib_polynomial(idx), k) == kfib(k, idx)
            assert evaluate_polynomial(lucas_polynomial(idx), k) == klucas(k, idx)
    with pytest.raises(InvalidParameterError):
        fib_polynomial(-1)


def test_exact_quotient():
    assert exact_quotient(12, 4) == 3
    with pytest.raises(ConsistencyError, match="remainder 1"):
        exact_quotient(7, 2, "test")


@given(
    k=st.integers(min_value=1, max_value=20),
    m=st.integers(min_value=-40, max_value=40),
    n=st.integers(min_value=-40, max_value=40),
)
def test_addition_formula_property(k, m, n):
    # 2 F_{k,m+n} = F_{k,m} L_{k,n} + F_{k,n} L_{k,m}
    assert 2 * kfib(k, m + n) == kfib(k, m) * klucas(k, n) + kfib(k, n) * klucas(k, m)
    assert fib_lucas_product(k, m, n) == kfib(k, m) * klucas(k, n)


@given(k=st.integers(min_value=1, max_value=50), n=st.integers(min_value=-60, max_value=60))
def test_lucas_squared_property(k, n):
    # L_{k,n}^2 - (k^2 + 4) F_{k,n}^2 = 4 (-1)^n
    assert klucas(k, n) ** 2 - (k * k + 4) * kfib(k, n) ** 2 == 4 * (-1) ** n
