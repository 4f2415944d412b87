"""The matrix family A_{k,n} and the closed forms of its invariants.

A_{k,n} is the n x n matrix with diagonal entries F_{k,2i-1} L_{k,2i} and off-diagonal entries
F_{k,2j} L_{k,2j-1} (constant down column j). It splits as A = 2 I + 1 v^T with
v_j = F_{k,2j} L_{k,2j-1}, and every closed form here follows from that rank-one structure:
the spectrum is {2 (n-1 times), lambda2 = 2 + v^T 1}.
"""

# standard library
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

# current project
from fiblucas_matrix.errors import ConsistencyError
from fiblucas_matrix.errors import InvalidParameterError
from fiblucas_matrix.linalg import Polynomial
from fiblucas_matrix.linalg import det_rank_one_update
from fiblucas_matrix.linalg import identity
from fiblucas_matrix.linalg import int_matrix
from fiblucas_matrix.linalg import outer
from fiblucas_matrix.linalg import sherman_morrison_inverse
from fiblucas_matrix.sequences import diag_term
from fiblucas_matrix.sequences import exact_quotient
from fiblucas_matrix.sequences import kfib
from fiblucas_matrix.sequences import klucas
from fiblucas_matrix.sequences import offdiag_term
from fiblucas_matrix.sequences import stride_sum_closed

DIAGONAL_SHIFT = 2


def _positive_int(value, name):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise InvalidParameterError(f"{name} must be an integer >= 1, got {value!r}")


@dataclass(frozen=True)
class FamilyParams:
    """Family parameter k and matrix order n."""

    k: int
    n: int

    def __post_init__(self):
        _positive_int(self.k, "k")
        _positive_int(self.n, "n")


@dataclass(frozen=True)
class RankOneForm:
    """A = d I + 1 v^T."""

    d: int
    v: Tuple[int, ...]

    @property
    def weight(self):
        """v^T 1, the sum of the entries of v."""
        return sum(self.v)

    def reconstruct(self):
        n = len(self.v)
        return self.d * identity(n) + outer(n, self.v)


@dataclass(frozen=True)
class SpectrumReport:
    lambda1: int
    mult1: int
    lambda2: int
    mult2: int
    spectral_radius: int
    energy: int


def build_matrix(p: FamilyParams):
    """Entrywise construction of A_{k,n}.

    Args:
        p (FamilyParams)

    Returns:
        (numpy.ndarray): n x n object matrix of ints
    """
    column_values = [offdiag_term(p.k, j) for j in range(1, p.n + 1)]
    return int_matrix(
        [
            [diag_term(p.k, i) if i == j else column_values[j - 1] for j in range(1, p.n + 1)]
            for i in range(1, p.n + 1)
        ]
    )


def decompose(p: FamilyParams) -> RankOneForm:
    return RankOneForm(
        d=DIAGONAL_SHIFT, v=tuple(offdiag_term(p.k, j) for j in range(1, p.n + 1))
    )


def _stride(p):
    # (F_{k,4n+3} - F_{k,4n-1} + F_{k,5} - 1) / (L_{k,4} - 2), the common quotient
    return stride_sum_closed(p.k, p.n)


def closed_det(p: FamilyParams):
    """det(A_{k,n}) = 2^n (1 + S/2), S the closed-form sum of v."""
    weight = _stride(p) - 1 - p.n
    return exact_quotient(2**p.n * (2 + weight), 2, f"determinant (k={p.k}, n={p.n})")


def closed_det_k1(n):
    """det(A_{1,n}) = 2^(n-1) (L_{4n+1} + 9 - 5n) / 5."""
    _positive_int(n, "n")
    return exact_quotient(2 ** (n - 1) * (klucas(1, 4 * n + 1) + 9 - 5 * n), 5, f"det (n={n})")


def closed_trace(p: FamilyParams):
    """Tr(A_{k,n}) = (F_{k,4n+3} - F_{k,4n-1} + F_{k,5} - 1) / (L_{k,4} - 2) + n - 1."""
    return _stride(p) + p.n - 1


def closed_trace_k1(n):
    """Tr(A_{1,n}) = (F_{4n+3} - F_{4n-1} + 4) / 5 + n - 1."""
    _positive_int(n, "n")
    numerator = kfib(1, 4 * n + 3) - kfib(1, 4 * n - 1) + 4
    return exact_quotient(numerator, 5, f"trace (n={n})") + n - 1


def lambda2(p: FamilyParams):
    """The simple eigenvalue, (F_{k,4n+3} - F_{k,4n-1} + F_{k,5} - 1) / (L_{k,4} - 2) - n + 1.

    Equal to 2 + v^T 1.
    """
    return _stride(p) - p.n + 1


def lambda2_k1(n):
    """lambda2 for k = 1: (F_{4n+3} - F_{4n-1} - 5n + 9) / 5."""
    _positive_int(n, "n")
    numerator = kfib(1, 4 * n + 3) - kfib(1, 4 * n - 1) - 5 * n + 9
    return exact_quotient(numerator, 5, f"lambda2 (n={n})")


def spectrum(p: FamilyParams) -> SpectrumReport:
    """Eigenvalues with multiplicities, spectral radius and energy.

    Every eigenvalue is positive, so the energy (sum of absolute eigenvalues) equals the trace.
    For n = 1 the radius is the sole eigenvalue lambda2.
    """
    second = lambda2(p)
    mult1 = p.n - 1
    return SpectrumReport(
        lambda1=DIAGONAL_SHIFT,
        mult1=mult1,
        lambda2=second,
        mult2=1,
        spectral_radius=max(abs(second), DIAGONAL_SHIFT) if mult1 else abs(second),
        energy=mult1 * abs(DIAGONAL_SHIFT) + abs(second),
    )


def closed_charpoly(p: FamilyParams) -> Polynomial:
    """det(A_{k,n} - lambda I) = (2 - lambda)^(n-1) (lambda2 - lambda), expanded."""
    return Polynomial.linear(DIAGONAL_SHIFT, -1) ** (p.n - 1) * Polynomial.linear(lambda2(p), -1)


def closed_inverse(p: FamilyParams):
    """A^-1 = I/2 - 1 v^T / (2 lambda2), as a matrix of Fractions."""
    form = decompose(p)
    second = lambda2(p)
    return int_matrix(
        [
            [Fraction(int(i == j), 2) - Fraction(form.v[j], 2 * second) for j in range(p.n)]
            for i in range(p.n)
        ]
    )


def inverse_via_sherman_morrison(p: FamilyParams):
    form = decompose(p)
    return sherman_morrison_inverse([form.d] * p.n, [1] * p.n, form.v)


def power_coefficient(p: FamilyParams, m):
    """(lambda2^m - 2^m) / (lambda2 - 2), the coefficient of 1 v^T in A^m."""
    if m < 0:
        raise InvalidParameterError(f"power must be >= 0, got {m}")
    second = lambda2(p)
    what = f"power (k={p.k}, n={p.n}, m={m})"
    return exact_quotient(second**m - DIAGONAL_SHIFT**m, second - DIAGONAL_SHIFT, what)


def power_coefficient_binomial(p: FamilyParams, m):
    """Sum of C(m, i) 2^(m-i) (v^T 1)^(i-1) for i = 1..m, the unsimplified coefficient."""
    if m < 0:
        raise InvalidParameterError(f"power must be >= 0, got {m}")
    weight = decompose(p).weight
    return sum(
        math.comb(m, i) * DIAGONAL_SHIFT ** (m - i) * weight ** (i - 1) for i in range(1, m + 1)
    )


def closed_power(p: FamilyParams, m):
    """A^m = 2^m I + ((lambda2^m - 2^m) / (lambda2 - 2)) 1 v^T."""
    form = decompose(p)
    return DIAGONAL_SHIFT**m * identity(p.n) + power_coefficient(p, m) * outer(p.n, form.v)


def det_via_rank_one(p: FamilyParams):
    """Determinant through the matrix determinant lemma applied to 2 I + 1 v^T."""
    form = decompose(p)
    value = det_rank_one_update([form.d] * p.n, [1] * p.n, form.v)
    if value.denominator != 1:
        raise ConsistencyError(f"determinant lemma gave a non-integer {value}")
    return value.numerator
