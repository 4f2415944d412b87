"""Check every closed form of the A_{k,n} family against the brute-force oracles.

A failing check is a record in the report, never an exception.
"""

# standard library
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field
from typing import List
from typing import Optional

# current project
from fiblucas_matrix.linalg import char_poly
from fiblucas_matrix.linalg import det_bareiss
from fiblucas_matrix.linalg import diag_sum
from fiblucas_matrix.linalg import identity
from fiblucas_matrix.linalg import mat_mul
from fiblucas_matrix.linalg import mat_pow
from fiblucas_matrix.linalg import rank_exact
from fiblucas_matrix.linalg import rat_inverse
from fiblucas_matrix.linalg import to_lists
from fiblucas_matrix.matrix_family import FamilyParams
from fiblucas_matrix.matrix_family import build_matrix
from fiblucas_matrix.matrix_family import closed_charpoly
from fiblucas_matrix.matrix_family import closed_det
from fiblucas_matrix.matrix_family import closed_det_k1
from fiblucas_matrix.matrix_family import closed_inverse
from fiblucas_matrix.matrix_family import closed_power
from fiblucas_matrix.matrix_family import closed_trace
from fiblucas_matrix.matrix_family import closed_trace_k1
from fiblucas_matrix.matrix_family import decompose
from fiblucas_matrix.matrix_family import det_via_rank_one
from fiblucas_matrix.matrix_family import lambda2
from fiblucas_matrix.matrix_family import lambda2_k1
from fiblucas_matrix.matrix_family import power_coefficient
from fiblucas_matrix.matrix_family import power_coefficient_binomial
from fiblucas_matrix.matrix_family import spectrum

logger = logging.getLogger()

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class CheckRecord:
    k: int
    n: int
    check: str
    status: str
    witness: Optional[str] = None

    @property
    def passed(self):
        return self.status == PASS


@dataclass
class VerificationReport:
    records: List[CheckRecord] = field(default_factory=list)

    @property
    def total(self):
        return len(self.records)

    @property
    def failures(self):
        return [record for record in self.records if not record.passed]

    @property
    def passed(self):
        return not self.failures

    @property
    def first_failure(self):
        failures = self.failures
        return failures[0] if failures else None

    def as_rows(self):
        """One dict per record, in report order."""
        return [asdict(record) for record in self.records]


def _same(a, b):
    return to_lists(a) == to_lists(b)


def _checks_for(p, m_max):
    """Yield (name, callable) pairs; a callable returns None on success or a witness string."""
    a = build_matrix(p)
    form = decompose(p)
    second = lambda2(p)

    def structure():
        if not _same(a, form.reconstruct()):
            return f"A != 2I + 1v^T with v={list(form.v)}"

    def det():
        closed, oracle = closed_det(p), det_bareiss(a)
        if closed != oracle:
            return f"closed {closed} != Bareiss {oracle}"

    def det_rank_one():
        lemma, closed = det_via_rank_one(p), closed_det(p)
        scaled = 2 ** (p.n - 1) * second
        if lemma != closed or lemma != scaled:
            return f"determinant lemma {lemma}, closed {closed}, 2^(n-1)*lambda2 {scaled}"

    def trace():
        closed, oracle = closed_trace(p), diag_sum(a)
        if closed != oracle:
            return f"closed {closed} != diagonal sum {oracle}"

    def charpoly():
        closed, oracle = closed_charpoly(p), char_poly(a)
        if closed != oracle:
            return f"closed {closed.coeffs} != Faddeev-LeVerrier {oracle.coeffs}"

    def inverse():
        closed = closed_inverse(p)
        if not _same(mat_mul(closed, a), identity(p.n)):
            return "closed inverse times A is not I"
        if not _same(closed, rat_inverse(a)):
            return "closed inverse differs from Gauss-Jordan inverse"

    def power():
        for m in range(0, m_max + 1):
            if not _same(closed_power(p, m), mat_pow(a, m)):
                return f"m={m}: closed power differs from repeated multiplication"

    def power_binomial():
        for m in range(0, m_max + 1):
            simplified, binomial = power_coefficient(p, m), power_coefficient_binomial(p, m)
            if simplified != binomial:
                return f"m={m}: {simplified} != binomial sum {binomial}"

    def rank():
        found = rank_exact(a - form.d * identity(p.n))
        if found != 1:
            return f"rank(A - 2I) = {found}, expected 1"

    def eigenvector_right():
        image = [sum(row) for row in to_lists(a)]
        if image != [second] * p.n:
            return f"A 1 = {image}, expected lambda2 1 with lambda2={second}"

    def eigenvector_left():
        image = [sum(form.v[i] * a[i, j] for i in range(p.n)) for j in range(p.n)]
        if image != [second * value for value in form.v]:
            return f"v^T A = {image}, expected lambda2 v^T"

    def energy():
        report = spectrum(p)
        if report.energy != closed_trace(p):
            return f"energy {report.energy} != trace {closed_trace(p)}"
        if report.spectral_radius != second:
            return f"spectral radius {report.spectral_radius} != lambda2 {second}"

    def k1_specialisation():
        pairs = {
            "det": (closed_det_k1(p.n), closed_det(p)),
            "trace": (closed_trace_k1(p.n), closed_trace(p)),
            "lambda2": (lambda2_k1(p.n), second),
        }
        for name, (specialised, general) in pairs.items():
            if specialised != general:
                return f"{name}: k=1 formula {specialised} != general {general}"

    yield "charpoly", charpoly
    yield "det", det
    yield "det_rank_one", det_rank_one
    yield "eigenvector_left", eigenvector_left
    yield "eigenvector_right", eigenvector_right
    yield "energy", energy
    yield "inverse", inverse
    if p.k == 1:
        yield "k1_specialisation", k1_specialisation
    yield "power", power
    yield "power_binomial", power_binomial
    yield "rank", rank
    yield "structure", structure
    yield "trace", trace


def check_cell(k, n, m_max):
    """Run every check for one (k, n) cell of the grid."""
    logger.debug(f"Verifying k={k} n={n}")
    records = []
    try:
        checks = list(_checks_for(FamilyParams(k, n), m_max))
    except Exception as error_msg:
        return [CheckRecord(k, n, "build", FAIL, f"{type(error_msg).__name__}: {error_msg}")]
    for name, check in checks:
        try:
            witness = check()
        except Exception as error_msg:
            witness = f"{type(error_msg).__name__}: {error_msg}"
        records.append(CheckRecord(k, n, name, PASS if witness is None else FAIL, witness))
    return records


def verify_grid(k_range, n_range, m_max, workers=1) -> VerificationReport:
    """Verify closed forms against oracles on every (k, n) of the grid.

    Args:
        k_range (iterable of int)
        n_range (iterable of int)
        m_max (int): powers m = 0..m_max are compared
        workers (int): thread pool size used to evaluate cells

    Returns:
        (VerificationReport): records sorted by (k, n, check)
    """
    cells = [(k, n) for k in k_range for n in n_range]
    if workers > 1 and len(cells) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(lambda cell: check_cell(*cell, m_max), cells))
    else:
        results = [check_cell(k, n, m_max) for k, n in cells]
    report = VerificationReport(
        sorted(
            (record for records in results for record in records),
            key=lambda record: (record.k, record.n, record.check),
        )
    )
    logger.info(
        f"Verified {len(cells)} cells: {report.total} checks, {len(report.failures)} failures"
    )
    return report
