"""Derived integer sequences of the A_{k,n} family, and golden b-file fixtures to check them."""

# standard library
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional
from typing import Tuple
from typing import Union

# third party
import pandas as pd

# current project
from fiblucas_matrix.errors import AccessionError
from fiblucas_matrix.errors import BFileParseError
from fiblucas_matrix.errors import InvalidParameterError
from fiblucas_matrix.matrix_family import FamilyParams
from fiblucas_matrix.matrix_family import closed_det
from fiblucas_matrix.matrix_family import closed_trace
from fiblucas_matrix.matrix_family import lambda2
from fiblucas_matrix.sequences import SeqParams
from fiblucas_matrix.sequences import kfib
from fiblucas_matrix.sequences import klucas

FIXTURES_DIR = Path(__file__).parent / "data"
ACCESSION_PATTERN = re.compile(r"^A\d{6}$")


class SequenceKind(str, Enum):
    KFIB = "kfib"
    KLUCAS = "klucas"
    DET = "det"
    TRACE = "trace"
    LAMBDA2 = "lambda2"


FAMILY_KINDS = (SequenceKind.DET, SequenceKind.TRACE, SequenceKind.LAMBDA2)


@dataclass(frozen=True)
class SequenceId:
    kind: SequenceKind
    k: int

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", SequenceKind(self.kind))
        except ValueError:
            raise InvalidParameterError(f"unknown sequence kind {self.kind!r}")
        SeqParams(self.k)

    @property
    def start(self):
        """Index of the first term: 0 for kfib/klucas, 1 (matrix order) otherwise."""
        return 1 if self.kind in FAMILY_KINDS else 0


@dataclass(frozen=True)
class SequenceFixture:
    """Stored terms of a sequence; offset is the index of terms[0]."""

    id: Union[SequenceId, str]
    terms: Tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise InvalidParameterError(f"fixture {self.id} has no terms")


@dataclass(frozen=True)
class MatchReport:
    """Outcome of comparing generated terms with a fixture.

    On mismatch, index is the sequence index of the first differing term, expected the fixture
    value and actual the generated one.
    """

    matched: bool
    compared: int
    index: Optional[int] = None
    expected: Optional[int] = None
    actual: Optional[int] = None


# OEIS accessions with a local counterpart
OEIS_COUNTERPARTS = {
    "A000045": SequenceId(SequenceKind.KFIB, 1),
    "A000129": SequenceId(SequenceKind.KFIB, 2),
    "A006190": SequenceId(SequenceKind.KFIB, 3),
    "A000032": SequenceId(SequenceKind.KLUCAS, 1),
    "A002203": SequenceId(SequenceKind.KLUCAS, 2),
    "A006497": SequenceId(SequenceKind.KLUCAS, 3),
}


def term_at(seq_id: SequenceId, index):
    """Single term of a sequence; family kinds need index >= 1."""
    if seq_id.kind == SequenceKind.KFIB:
        return kfib(seq_id.k, index)
    if seq_id.kind == SequenceKind.KLUCAS:
        return klucas(seq_id.k, index)
    p = FamilyParams(seq_id.k, index)
    if seq_id.kind == SequenceKind.DET:
        return closed_det(p)
    if seq_id.kind == SequenceKind.TRACE:
        return closed_trace(p)
    return lambda2(p)


def emit_sequence(seq_id: SequenceId, count):
    """First count terms, starting at index seq_id.start.

    Args:
        seq_id (SequenceId)
        count (int): >= 1

    Returns:
        (list[int])
    """
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise InvalidParameterError(f"count must be an integer >= 1, got {count!r}")
    return [term_at(seq_id, seq_id.start + i) for i in range(count)]


def check_fixture(seq_id: SequenceId, fixture: SequenceFixture, max_terms=None) -> MatchReport:
    """Compare generated terms with a fixture, respecting the fixture offset."""
    if fixture.offset < seq_id.start:
        raise InvalidParameterError(
            f"fixture starts at index {fixture.offset}, "
            f"but {seq_id.kind.value} k={seq_id.k} is defined from index {seq_id.start}"
        )
    terms = fixture.terms if max_terms is None else fixture.terms[:max_terms]
    for i, expected in enumerate(terms):
        index = fixture.offset + i
        actual = term_at(seq_id, index)
        if actual != expected:
            return MatchReport(False, i + 1, index, expected, actual)
    return MatchReport(True, len(terms))


def validate_accession(accession):
    if not isinstance(accession, str) or not ACCESSION_PATTERN.match(accession):
        raise AccessionError(f"accession must be 'A' followed by 6 digits, got {accession!r}")
    return accession


def decode_bfile(content, source):
    """Decode raw b-file bytes as UTF-8, reporting the offending line on failure."""
    try:
        return content.decode("utf-8")
    except UnicodeDecodeError as error_msg:
        line_number = content.count(b"\n", 0, error_msg.start) + 1
        raw = content.split(b"\n")[line_number - 1].rstrip(b"\r")
        raise BFileParseError(source, line_number, raw, reason="not UTF-8 text in")


def parse_bfile(text, accession, max_terms=None, source=None) -> SequenceFixture:
    """Parse b-file text (lines "index value"; '#' comments and blank lines skipped).

    Args:
        text (str or bytes): file contents, LF or CRLF line endings; bytes must be UTF-8
        accession (str)
        max_terms (int or None): keep only the first max_terms terms
        source (str or None): name used in error messages, defaults to accession

    Returns:
        (SequenceFixture)
    """
    source = source or accession
    if isinstance(text, bytes):
        text = decode_bfile(text, source)
    offset = None
    terms = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(source, line_number, raw)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(source, line_number, raw)
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise BFileParseError(source, line_number, raw, reason="non-consecutive index in")
        terms.append(value)
        if max_terms is not None and len(terms) >= max_terms:
            break
    if not terms:
        raise BFileParseError(source, 0, "", reason="no terms found")
    return SequenceFixture(accession, tuple(terms), offset)


def load_bundled_fixture(accession, max_terms=None, fixtures_dir=None):
    """Fixture shipped with the package, or None if the accession is not bundled."""
    validate_accession(accession)
    path = Path(fixtures_dir or FIXTURES_DIR) / f"{accession}.bfile"
    if not path.exists():
        return None
    return parse_bfile(path.read_bytes(), accession, max_terms, source=str(path))


def family_table(which, k_range, n_range):
    """Table of a family sequence: one row per k, one column per matrix order n.

    Args:
        which (str): "det", "trace" or "lambda2"
        k_range (iterable of int)
        n_range (iterable of int)

    Returns:
        (pandas.DataFrame): exact Python ints (object dtype), index named "k"
    """
    kind = SequenceId(which, 1).kind
    if kind not in FAMILY_KINDS:
        raise InvalidParameterError(f"no table for sequence kind {which!r}")
    ks, ns = list(k_range), list(n_range)
    rows = [[term_at(SequenceId(kind, k), n) for n in ns] for k in ks]
    return pd.DataFrame(
        rows,
        index=pd.Index(ks, name="k"),
        columns=[f"n={n}" for n in ns],
        dtype=object,
    )
