"""
fiblucas-matrix command line.
Sequences, matrix invariants, closed-form verification, family tables and OEIS checks for the
matrices A_{k,n} built from products of k-Fibonacci and k-Lucas numbers.

Exit codes: 0 success/match, 1 verification or match failure, 2 usage error,
3 OEIS data unavailable (offline with cold cache, or unknown accession).
"""

# standard library
import argparse
import configparser
import dataclasses
import json
import logging
import re
import sys
from fractions import Fraction
from pathlib import Path

# third party
import pandas as pd
import requests

# current project
from fiblucas_matrix.catalog import OEIS_COUNTERPARTS
from fiblucas_matrix.catalog import SequenceId
from fiblucas_matrix.catalog import check_fixture
from fiblucas_matrix.catalog import family_table
from fiblucas_matrix.catalog import load_bundled_fixture
from fiblucas_matrix.catalog import term_at
from fiblucas_matrix.catalog import validate_accession
from fiblucas_matrix.custom_logger import get_custom_logger
from fiblucas_matrix.errors import AccessionError
from fiblucas_matrix.errors import FibLucasError
from fiblucas_matrix.errors import InvalidParameterError
from fiblucas_matrix.errors import OeisNotFoundError
from fiblucas_matrix.errors import OeisOfflineError
from fiblucas_matrix.linalg import to_lists
from fiblucas_matrix.matrix_family import FamilyParams
from fiblucas_matrix.matrix_family import build_matrix
from fiblucas_matrix.matrix_family import closed_charpoly
from fiblucas_matrix.matrix_family import closed_det
from fiblucas_matrix.matrix_family import closed_inverse
from fiblucas_matrix.matrix_family import closed_power
from fiblucas_matrix.matrix_family import closed_trace
from fiblucas_matrix.matrix_family import spectrum
from fiblucas_matrix.oeis import fetch_oeis
from fiblucas_matrix.oeis import resolve_oeis_settings
from fiblucas_matrix.verification import verify_grid

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_UNAVAILABLE = 3

FORMATS = ("plain", "json", "csv", "markdown")
SEQ_KINDS = {"fib": "kfib", "lucas": "klucas", "det": "det", "trace": "trace", "lambda2": "lambda2"}
INVARIANTS = ("det", "trace", "eigs", "radius", "energy", "inverse", "charpoly", "matrix")
RANGE_PATTERN = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")

DEFAULT_CONFIG = {
    "verify": {"k_range": "1..6", "n_range": "1..8", "power_max": "6", "workers": "1"},
    "logging": {"level": "INFO", "log_file": ""},
}


def inclusive_range(text):
    """Parse "a..b" into range(a, b + 1); inverted ranges are rejected."""
    match = RANGE_PATTERN.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected a range 'a..b', got {text!r}")
    start, stop = int(match.group(1)), int(match.group(2))
    if start > stop:
        raise argparse.ArgumentTypeError(f"inverted range {text!r}")
    return range(start, stop + 1)


def positive_range(text):
    """Parse "a..b" like inclusive_range, additionally requiring a >= 1."""
    values = inclusive_range(text)
    if values.start < 1:
        raise argparse.ArgumentTypeError(f"range must start at 1 or above, got {text!r}")
    return values


def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text!r}")
    return value


def nonnegative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {text!r}")
    return value


def invariant_list(text):
    """Parse "det,trace,power:3" into [("det", None), ("trace", None), ("power", 3)]."""
    items = []
    for name in (item.strip() for item in text.split(",")):
        if name.startswith("power:"):
            exponent = name.split(":", 1)[1]
            if not exponent.isdigit():
                raise argparse.ArgumentTypeError(f"bad power exponent in {name!r}")
            items.append(("power", int(exponent)))
        elif name in INVARIANTS:
            items.append((name, None))
        else:
            raise argparse.ArgumentTypeError(f"unknown invariant {name!r}")
    return items


def format_value(value):
    """Plain text of an int, a Fraction (always "num/den") or nested lists of them."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(item) for item in value) + "]"
    return str(value)


def json_value(value):
    """Json-ready copy: big integers and fractions become strings, lists stay lists."""
    if isinstance(value, (list, tuple)):
        return [json_value(item) for item in value]
    if isinstance(value, dict):
        return {key: json_value(item) for key, item in value.items()}
    if value is None or isinstance(value, (bool, str)):
        return value
    return format_value(value)


def render_frame(frame, output_format):
    if output_format == "csv":
        return frame.to_csv(index=False)
    return frame.to_markdown(index=False, disable_numparse=True) + "\n"


def cmd_seq(args, out):
    """Terms of a sequence for indices args.start..args.stop."""
    seq_id = SequenceId(SEQ_KINDS[args.kind], args.k)
    indices = list(range(args.start, args.stop + 1))
    terms = [term_at(seq_id, index) for index in indices]

    if args.format == "plain":
        out.write(" ".join(str(term) for term in terms) + "\n")
    elif args.format == "json":
        payload = {
            "kind": args.kind,
            "k": args.k,
            "terms": [{"index": index, "value": str(term)} for index, term in zip(indices, terms)],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        frame = pd.DataFrame(
            {"index": [str(index) for index in indices], "value": [str(term) for term in terms]}
        )
        out.write(render_frame(frame, args.format))
    return EXIT_OK


def _eigs(report):
    eigs = [(report.lambda1, report.mult1), (report.lambda2, report.mult2)]
    return [(value, mult) for value, mult in eigs if mult > 0]


def compute_invariants(p, requested):
    """Ordered list of (label, value) for the requested invariants."""
    results = []
    for name, argument in requested:
        if name == "det":
            results.append(("det", closed_det(p)))
        elif name == "trace":
            results.append(("trace", closed_trace(p)))
        elif name == "eigs":
            results.append(("eigs", _eigs(spectrum(p))))
        elif name == "radius":
            results.append(("radius", spectrum(p).spectral_radius))
        elif name == "energy":
            results.append(("energy", spectrum(p).energy))
        elif name == "inverse":
            results.append(("inverse", to_lists(closed_inverse(p))))
        elif name == "charpoly":
            results.append(("charpoly", closed_charpoly(p).integer_coeffs()))
        elif name == "matrix":
            results.append(("matrix", to_lists(build_matrix(p))))
        elif name == "power":
            results.append((f"power:{argument}", to_lists(closed_power(p, argument))))
    return results


def cmd_invariants(args, out):
    p = FamilyParams(args.k, args.n)
    results = compute_invariants(p, args.what)

    def plain(label, value):
        if label == "eigs":
            return "(" + ", ".join(f"{ev}×{mult}" for ev, mult in value) + ")"
        return format_value(value)

    if args.format == "plain":
        for label, value in results:
            out.write(f"{label}={plain(label, value)}\n")
    elif args.format == "json":
        payload = {"k": p.k, "n": p.n}
        for label, value in results:
            if label == "eigs":
                value = [{"value": str(ev), "multiplicity": mult} for ev, mult in value]
            payload[label] = json_value(value)
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        frame = pd.DataFrame(
            {
                "invariant": [label for label, _ in results],
                "value": [plain(label, value) for label, value in results],
            }
        )
        out.write(render_frame(frame, args.format))
    return EXIT_OK


def cmd_verify(args, out):
    logger = logging.getLogger()
    logger.info(
        f"Verifying k in {args.k_range.start}..{args.k_range.stop - 1}, "
        f"n in {args.n_range.start}..{args.n_range.stop - 1}, m <= {args.power_max}"
    )
    report = verify_grid(args.k_range, args.n_range, args.power_max, workers=args.workers)
    first = report.first_failure

    if args.format == "plain":
        if report.passed:
            out.write(f"PASS: {report.total} checks, 0 failures\n")
        else:
            out.write(f"FAIL: {report.total} checks, {len(report.failures)} failures\n")
            out.write(f"first counterexample: k={first.k} n={first.n} {first.check}: ")
            out.write(f"{first.witness}\n")
    elif args.format == "json":
        payload = {
            "passed": report.passed,
            "checks": report.total,
            "failures": len(report.failures),
            "records": report.as_rows(),
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        frame = pd.DataFrame(report.as_rows(), columns=["k", "n", "check", "status", "witness"])
        out.write(render_frame(frame.fillna(""), args.format))

    if not report.passed:
        logger.error(f"Verification failed: k={first.k} n={first.n} {first.check}")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_tables(args, out):
    table = family_table(args.which, args.k_range, args.n_range)

    if args.format == "plain":
        for k, row in table.iterrows():
            out.write(f"k={k}: " + ", ".join(str(value) for value in row) + "\n")
    elif args.format == "json":
        payload = {
            "which": args.which,
            "n": list(args.n_range),
            "rows": [
                {"k": int(k), "terms": [str(value) for value in row]} for k, row in table.iterrows()
            ],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        frame = table.astype(str).reset_index()
        out.write(render_frame(frame, args.format))
    return EXIT_OK


def cmd_oeis(args, out, settings):
    """Compare an OEIS sequence (bundled, cached or fetched) with its local counterpart."""
    logger = logging.getLogger()
    accession = validate_accession(args.check)
    offline = args.offline or settings.offline
    if offline and not settings.offline:
        settings = dataclasses.replace(settings, offline=True)

    seq_id = OEIS_COUNTERPARTS.get(accession)
    if seq_id is None:
        if offline:
            # only the cache is consulted; a cold cache means the data is unavailable
            fetch_oeis(accession, args.terms, settings)
        raise InvalidParameterError(f"{accession} has no local counterpart sequence")

    fixture = None
    if offline:
        fixture = load_bundled_fixture(accession, args.terms, fixtures_dir=args.fixtures_dir)
    if fixture is None:
        fixture = fetch_oeis(accession, args.terms, settings)
    report = check_fixture(seq_id, fixture, max_terms=args.terms)

    if args.format == "json":
        payload = {
            "accession": accession,
            "kind": seq_id.kind.value,
            "k": seq_id.k,
            "matched": report.matched,
            "compared": report.compared,
            "index": report.index,
            "expected": json_value(report.expected),
            "actual": json_value(report.actual),
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    elif report.matched:
        out.write(f"{accession}: match ({report.compared} terms)\n")
    else:
        out.write(
            f"{accession}: mismatch at index {report.index}: "
            f"expected {report.expected}, got {report.actual}\n"
        )

    if not report.matched:
        logger.error(f"{accession} differs from {seq_id.kind.value} k={seq_id.k}")
        return EXIT_FAILURE
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="fiblucas-matrix", description=__doc__.split("\n")[1])
    parser.add_argument(
        "-cf",
        "--config_file",
        help="Default: 'config/config.ini' file in project's development folder",
    )
    parser.add_argument("-lf", "--log_file", help="Default: no log file, diagnostics on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_format(subparser):
        subparser.add_argument("--format", choices=FORMATS, default="plain")

    seq = subparsers.add_parser("seq", help="terms of a sequence")
    seq.add_argument("--kind", choices=sorted(SEQ_KINDS), required=True)
    seq.add_argument("--k", type=positive_int, required=True)
    seq.add_argument("--from", dest="start", type=int, default=0)
    seq.add_argument("--to", dest="stop", type=int, required=True)
    add_format(seq)

    invariants = subparsers.add_parser("invariants", help="closed-form invariants of A_{k,n}")
    invariants.add_argument("--k", type=positive_int, required=True)
    invariants.add_argument("--n", type=positive_int, required=True)
    invariants.add_argument(
        "--what",
        type=invariant_list,
        default=invariant_list("det,trace,eigs"),
        help=f"comma list from {', '.join(INVARIANTS)}, power:m",
    )
    add_format(invariants)

    verify = subparsers.add_parser("verify", help="check closed forms against oracles")
    verify.add_argument("--k-range", dest="k_range", type=positive_range)
    verify.add_argument("--n-range", dest="n_range", type=positive_range)
    verify.add_argument("--power-max", dest="power_max", type=nonnegative_int)
    verify.add_argument("--workers", type=positive_int)
    add_format(verify)

    tables = subparsers.add_parser("tables", help="det / trace / lambda2 family tables")
    tables.add_argument("--which", choices=("det", "trace", "lambda2"), required=True)
    tables.add_argument("--k-range", dest="k_range", type=positive_range, default="2..6")
    tables.add_argument("--n-range", dest="n_range", type=positive_range, default="1..5")
    add_format(tables)

    oeis = subparsers.add_parser("oeis", help="compare an OEIS sequence with its counterpart")
    oeis.add_argument("--check", required=True, metavar="ACCESSION")
    oeis.add_argument("--terms", type=positive_int, default=20)
    oeis.add_argument("--offline", action="store_true", help="bundled fixtures and cache only")
    oeis.add_argument("--fixtures_dir", help="Default: b-files bundled with the package")
    oeis.add_argument("--format", choices=("plain", "json"), default="plain")

    return parser


def read_config(config_file):
    config = configparser.ConfigParser()
    config.read_dict(DEFAULT_CONFIG)
    if config_file is not None and Path(config_file).exists():
        config.read(config_file)
    return config


def apply_verify_defaults(args, config):
    section = config["verify"]
    if args.k_range is None:
        args.k_range = positive_range(section.get("k_range"))
    if args.n_range is None:
        args.n_range = positive_range(section.get("n_range"))
    if args.power_max is None:
        args.power_max = section.getint("power_max")
    if args.workers is None:
        args.workers = section.getint("workers")


def main(argv=None, out=None):
    """Run the command line; returns the exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return exit_request.code

    project_path = Path(__file__).parents[1]

    # read config
    config_file = (
        project_path / "config" / "config.ini"
        if args.config_file is None
        else Path(args.config_file)
    )
    config = read_config(config_file)

    # create logger
    log_file = args.log_file or config.get("logging", "log_file")
    level = logging.getLevelName(config.get("logging", "level").upper())
    logger = get_custom_logger(Path(log_file) if log_file else None, level)
    logger.debug(f"Read config from {config_file}")

    try:
        if args.command == "seq":
            if args.start > args.stop:
                parser.error(f"--from {args.start} is greater than --to {args.stop}")
            return cmd_seq(args, out)
        if args.command == "invariants":
            return cmd_invariants(args, out)
        if args.command == "verify":
            apply_verify_defaults(args, config)
            return cmd_verify(args, out)
        if args.command == "tables":
            return cmd_tables(args, out)
        return cmd_oeis(args, out, resolve_oeis_settings(config))
    except SystemExit as exit_request:
        return exit_request.code
    except (InvalidParameterError, AccessionError, argparse.ArgumentTypeError) as error_msg:
        logger.error(f"Invalid arguments: {error_msg}")
        return EXIT_USAGE
    except (OeisOfflineError, OeisNotFoundError, requests.exceptions.RequestException) as error_msg:
        logger.error(f"OEIS data unavailable: {error_msg}")
        return EXIT_UNAVAILABLE
    except FibLucasError as error_msg:
        logger.error(f"Error: {error_msg}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
