"""k-Fibonacci and k-Lucas numbers, and the identity layer built on them.

All values are Python ints. Negative indices follow F_{k,-n} = (-1)^(n+1) F_{k,n} and
L_{k,-n} = (-1)^n L_{k,n}, i.e. the recurrence run backwards.
"""

# standard library
from dataclasses import dataclass
from functools import lru_cache
from typing import List

# current project
from fiblucas_matrix.errors import ConsistencyError
from fiblucas_matrix.errors import InvalidParameterError


@dataclass(frozen=True)
class SeqParams:
    """Sequence family parameter k and (signed) term index."""

    k: int
    idx: int = 0

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise InvalidParameterError(f"k must be an integer >= 1, got {self.k!r}")
        if isinstance(self.idx, bool) or not isinstance(self.idx, int):
            raise InvalidParameterError(f"index must be an integer, got {self.idx!r}")


def exact_quotient(numerator, denominator, what="division"):
    """Divide two ints, refusing to truncate.

    Raises:
        ConsistencyError: if the remainder is nonzero
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder != 0:
        raise ConsistencyError(
            f"{what}: {numerator} is not divisible by {denominator} (remainder {remainder})"
        )
    return quotient


@lru_cache(maxsize=8192)
def _forward_term(k, first, second, idx):
    # pair recurrence from (term 0, term 1), idx >= 0
    previous, current = first, second
    for _ in range(idx):
        previous, current = current, k * current + previous
    return previous


def kfib(k, idx):
    """k-Fibonacci number F_{k,idx}, for any integer idx.

    Args:
        k (int): recurrence multiplier, k >= 1
        idx (int): term index, may be negative

    Returns:
        (int)
    """
    SeqParams(k, idx)
    if idx >= 0:
        return _forward_term(k, 0, 1, idx)
    sign = 1 if (-idx) % 2 == 1 else -1
    return sign * _forward_term(k, 0, 1, -idx)


def klucas(k, idx):
    """k-Lucas number L_{k,idx}, for any integer idx.

    Args:
        k (int): recurrence multiplier, k >= 1
        idx (int): term index, may be negative

    Returns:
        (int)
    """
    SeqParams(k, idx)
    if idx >= 0:
        return _forward_term(k, 2, k, idx)
    sign = 1 if (-idx) % 2 == 0 else -1
    return sign * _forward_term(k, 2, k, -idx)


def fib_lucas_product(k, m, n):
    """Right-hand side of F_{k,m} L_{k,n} = F_{k,m+n} - (-1)^m F_{k,n-m}."""
    sign = -1 if m % 2 else 1
    return kfib(k, m + n) - sign * kfib(k, n - m)


def fib_lucas_product_alt(k, m, n):
    """Right-hand side of F_{k,m} L_{k,n} = F_{k,m+n} + (-1)^n F_{k,m-n}."""
    sign = -1 if n % 2 else 1
    return kfib(k, m + n) + sign * kfib(k, m - n)


def lucas_from_fib(k, n):
    """L_{k,n} evaluated as F_{k,n-1} + F_{k,n+1}."""
    return kfib(k, n - 1) + kfib(k, n + 1)


def simson(k, n):
    """F_{k,n-1} F_{k,n+1} - F_{k,n}^2 by direct multiplication; equals (-1)^n."""
    return kfib(k, n - 1) * kfib(k, n + 1) - kfib(k, n) ** 2


def cross_diff(k, j):
    """F_{k,2j+1} L_{k,2j+2} - F_{k,2j+2} L_{k,2j+1}, always 2.

    Computed by multiplying out the terms, not hard-coded.
    """
    if j < 0:
        raise InvalidParameterError(f"j must be >= 0, got {j}")
    return kfib(k, 2 * j + 1) * klucas(k, 2 * j + 2) - kfib(k, 2 * j + 2) * klucas(k, 2 * j + 1)


def offdiag_term(k, j):
    """F_{k,2j} L_{k,2j-1}: the constant off-diagonal entry of column j."""
    return kfib(k, 2 * j) * klucas(k, 2 * j - 1)


def diag_term(k, j):
    """F_{k,2j-1} L_{k,2j}: diagonal entry j."""
    return kfib(k, 2 * j - 1) * klucas(k, 2 * j)


def _check_count(n, minimum):
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise InvalidParameterError(f"n must be an integer >= {minimum}, got {n!r}")


def product_sum(k, n):
    """Sum of F_{k,2j} L_{k,2j-1} for j = 1..n, by literal summation."""
    SeqParams(k)
    _check_count(n, 1)
    return sum(offdiag_term(k, j) for j in range(1, n + 1))


def stride_sum(k, n):
    """Sum of F_{k,4i-1} for i = 0..n, by literal summation."""
    SeqParams(k)
    _check_count(n, 0)
    return sum(kfib(k, 4 * i - 1) for i in range(0, n + 1))


def stride_sum_closed(k, n):
    """Closed form (F_{k,4n+3} - F_{k,4n-1} + F_{k,5} - 1) / (L_{k,4} - 2) of stride_sum."""
    SeqParams(k)
    _check_count(n, 0)
    numerator = kfib(k, 4 * n + 3) - kfib(k, 4 * n - 1) + kfib(k, 5) - 1
    return exact_quotient(numerator, klucas(k, 4) - 2, f"stride sum (k={k}, n={n})")


def product_sum_closed(k, n):
    """Closed form of product_sum: stride_sum_closed(k, n) - 1 - n.

    Each summand reduces to F_{k,4j-1} - 1, and the i = 0 term of the stride sum is F_{k,-1} = 1.
    """
    _check_count(n, 1)
    return stride_sum_closed(k, n) - 1 - n


def _trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _polynomial_term(first, second, idx):
    # coefficient lists in k, ascending powers; x_{i+1} = k * x_i + x_{i-1}
    if idx < 0:
        raise InvalidParameterError(f"polynomial index must be >= 0, got {idx}")
    previous, current = list(first), list(second)
    for _ in range(idx):
        shifted = [0] + current
        padded = previous + [0] * (len(shifted) - len(previous))
        previous, current = current, [a + b for a, b in zip(shifted, padded)]
    return _trim(previous)


def fib_polynomial(idx) -> List[int]:
    """Coefficients (ascending powers of k) of F_{k,idx} as a polynomial in k.

    Example: fib_polynomial(5) == [1, 0, 3, 0, 1], i.e. k^4 + 3k^2 + 1.
    """
    return _polynomial_term([], [1], idx)


def lucas_polynomial(idx) -> List[int]:
    """Coefficients (ascending powers of k) of L_{k,idx} as a polynomial in k."""
    return _polynomial_term([2], [0, 1], idx)


def evaluate_polynomial(coeffs, k):
    """Evaluate an ascending coefficient list at k (Horner)."""
    value = 0
    for coeff in reversed(coeffs):
        value = value * k + coeff
    return value
