"""Exact linear algebra over the integers and the rationals.

Matrices are square numpy arrays with dtype=object holding Python ints (IntMatrix) or
fractions.Fraction values (RatMatrix), so every operation is exact at any magnitude. Nothing
in this module uses floating point.
"""

# standard library
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence
from typing import Tuple

# third party
import numpy as np

# current project
from fiblucas_matrix.errors import ConsistencyError
from fiblucas_matrix.errors import InvalidParameterError
from fiblucas_matrix.errors import SingularMatrixError
from fiblucas_matrix.errors import SizeLimitError

COFACTOR_MAX_ORDER = 7


def int_matrix(rows):
    """Build an exact matrix (object dtype) from nested sequences."""
    matrix = np.empty((len(rows), len(rows[0]) if len(rows) else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            matrix[i, j] = value
    return matrix


def identity(n):
    """n x n identity with Python int entries."""
    return int_matrix([[int(i == j) for j in range(n)] for i in range(n)])


def _order(a):
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise InvalidParameterError(f"matrix is not square (shape = {a.shape})")
    return a.shape[0]


def mat_mul(a, b):
    return a.dot(b)


def diag_sum(a):
    """Trace as a Python int (or Fraction)."""
    return sum(a[i, i] for i in range(_order(a)))


def to_lists(a):
    """Matrix as nested lists, e.g. for serialization."""
    return [list(row) for row in a]


def outer(ones_dim, v):
    """The matrix 1 v^T: every row equals v.

    Args:
        ones_dim (int): length of the all-ones column vector
        v (sequence of int)

    Returns:
        (numpy.ndarray): ones_dim x len(v) object matrix
    """
    if len(v) != ones_dim:
        raise InvalidParameterError(
            f"dimension mismatch: ones vector has length {ones_dim}, v has length {len(v)}"
        )
    return int_matrix([list(v) for _ in range(ones_dim)])


def det_bareiss(a):
    """Exact determinant by fraction-free (Bareiss) elimination.

    A zero pivot is replaced by swapping in a later row with a nonzero entry in the pivot
    column (flipping the sign); if there is none the determinant is 0.
    """
    n = _order(a)
    m = a.copy()
    sign = 1
    previous_pivot = 1
    for k in range(n - 1):
        if m[k, k] == 0:
            for i in range(k + 1, n):
                if m[i, k] != 0:
                    m[[k, i]] = m[[i, k]]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = m[k, k] * m[i, j] - m[i, k] * m[k, j]
                quotient, remainder = divmod(numerator, previous_pivot)
                if remainder:
                    raise ConsistencyError(f"Bareiss step {k} left remainder {remainder}")
                m[i, j] = quotient
            m[i, k] = 0
        previous_pivot = m[k, k]
    return sign * m[n - 1, n - 1]


def det_cofactor(a):
    """Determinant by Laplace expansion along the first row; orders up to 7 only."""
    n = _order(a)
    if n > COFACTOR_MAX_ORDER:
        raise SizeLimitError(
            f"cofactor expansion is capped at order {COFACTOR_MAX_ORDER}, got {n}"
        )
    return _laplace(to_lists(a))


def _laplace(rows):
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, pivot in enumerate(rows[0]):
        if pivot == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]  # noqa E203
        total += (-1) ** j * pivot * _laplace(minor)
    return total


def rat_inverse(a):
    """Exact Gauss-Jordan inverse over the rationals.

    Raises:
        SingularMatrixError: if a has no inverse
    """
    n = _order(a)
    x = int_matrix([[Fraction(value) for value in row] for row in a])
    y = int_matrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    # downward elimination: make lower triangle zero and main diagonal 1
    for i in range(n):
        for j in range(i, n):
            if x[j, i] != 0:
                if i != j:
                    x[[i, j]] = x[[j, i]]
                    y[[i, j]] = y[[j, i]]
                break
        else:
            raise SingularMatrixError("matrix is not invertible")
        pivot = x[i, i]
        x[i, :] = x[i, :] / pivot
        y[i, :] = y[i, :] / pivot
        for j in range(i + 1, n):
            factor = x[j, i]
            if factor != 0:
                y[j, :] = y[j, :] - factor * y[i, :]
                x[j, :] = x[j, :] - factor * x[i, :]

    # upward elimination: zero the upper triangle
    for j in range(n - 2, -1, -1):
        for i in range(j + 1, n):
            factor = x[j, i]
            if factor != 0:
                y[j, :] = y[j, :] - factor * y[i, :]
                x[j, :] = x[j, :] - factor * x[i, :]

    return y


def mat_pow(a, m):
    """a ** m by repeated squaring; m = 0 gives the identity."""
    n = _order(a)
    if m < 0:
        raise InvalidParameterError(f"power must be >= 0, got {m}")
    result = identity(n)
    base = a.copy()
    while m:
        if m & 1:
            result = mat_mul(result, base)
        m >>= 1
        if m:
            base = mat_mul(base, base)
    return result


def rank_exact(a):
    """Rank over the rationals by fraction-free elimination."""
    if a.ndim != 2:
        raise InvalidParameterError(f"expected a 2-d matrix, got shape {a.shape}")
    m = a.copy()
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        pivot_row = next((i for i in range(rank, rows) if m[i, col] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            m[[rank, pivot_row]] = m[[pivot_row, rank]]
        for i in range(rank + 1, rows):
            if m[i, col] != 0:
                m[i, :] = m[rank, col] * m[i, :] - m[i, col] * m[rank, :]
        rank += 1
        if rank == rows:
            break
    return rank


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in lambda with exact rational coefficients, coeffs[i] multiplying lambda^i.

    Trailing zero coefficients are dropped, so the zero polynomial has no coefficients.
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def linear(cls, constant, slope):
        return cls((constant, slope))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        value = Fraction(0)
        for coeff in reversed(self.coeffs):
            value = value * x + coeff
        return value

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Polynomial(tuple(product))

    def __pow__(self, exponent):
        result = Polynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def integer_coeffs(self):
        """Coefficients as ints; raises ConsistencyError if one is not an integer."""
        values = []
        for i, coeff in enumerate(self.coeffs):
            if coeff.denominator != 1:
                raise ConsistencyError(f"coefficient of lambda^{i} is not an integer: {coeff}")
            values.append(coeff.numerator)
        return values


def char_poly(a):
    """det(A - lambda I) by the Faddeev-LeVerrier recurrence over the rationals.

    The recurrence yields det(lambda I - A) = sum c_i lambda^i with c_n = 1; the stored
    polynomial is (-1)^n times that, so its leading coefficient is (-1)^n.
    """
    n = _order(a)
    a_rat = int_matrix([[Fraction(value) for value in row] for row in a])
    eye = int_matrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = int_matrix([[Fraction(0)] * n for _ in range(n)])
    for step in range(1, n + 1):
        m = mat_mul(a_rat, m) + coeffs[n - step + 1] * eye
        coeffs[n - step] = -diag_sum(mat_mul(a_rat, m)) / step
    sign = -1 if n % 2 else 1
    poly = Polynomial(tuple(sign * c for c in coeffs))
    poly.integer_coeffs()
    return poly


def det_rank_one_update(d: Sequence, u: Sequence, w: Sequence):
    """det(diag(d) + u w^T) by the matrix determinant lemma.

    det(D + u w^T) = det(D) * (1 + w^T D^-1 u), evaluated exactly.
    """
    if not len(d) == len(u) == len(w):
        raise InvalidParameterError("d, u and w must have the same length")
    det_d = Fraction(1)
    for value in d:
        det_d *= value
    if det_d == 0:
        raise SingularMatrixError("diagonal part is singular")
    correction = 1 + sum(Fraction(wi * ui) / di for di, ui, wi in zip(d, u, w))
    return det_d * correction


def sherman_morrison_inverse(d: Sequence, u: Sequence, w: Sequence):
    """(diag(d) + u w^T)^-1 by the Sherman-Morrison formula, as a RatMatrix.

    (D + u w^T)^-1 = D^-1 - D^-1 u w^T D^-1 / (1 + w^T D^-1 u)

    Raises:
        SingularMatrixError: if some d_i is 0 or 1 + w^T D^-1 u = 0
    """
    n = len(d)
    if not n == len(u) == len(w):
        raise InvalidParameterError("d, u and w must have the same length")
    if any(value == 0 for value in d):
        raise SingularMatrixError("diagonal part is singular")
    d_inv_u = [Fraction(ui) / di for di, ui in zip(d, u)]
    w_d_inv = [Fraction(wi) / di for di, wi in zip(d, w)]
    denominator = 1 + sum(wi * x for wi, x in zip(w, d_inv_u))
    if denominator == 0:
        raise SingularMatrixError("1 + w^T D^-1 u vanishes")
    inverse = int_matrix(
        [[-d_inv_u[i] * w_d_inv[j] / denominator for j in range(n)] for i in range(n)]
    )
    for i in range(n):
        inverse[i, i] += Fraction(1) / d[i]
    return inverse

