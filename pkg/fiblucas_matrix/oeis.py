"""Fetch OEIS b-files, with an on-disk cache."""

# standard library
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

# third party
import backoff
import requests

# current project
from fiblucas_matrix.catalog import parse_bfile
from fiblucas_matrix.catalog import validate_accession
from fiblucas_matrix.errors import OeisNotFoundError
from fiblucas_matrix.errors import OeisOfflineError

logger = logging.getLogger()

DEFAULT_BASE_URL = "https://oeis.org"
DEFAULT_TIMEOUT = 30.0


@dataclass(frozen=True)
class OeisSettings:
    base_url: str
    cache_dir: Path
    offline: bool = False
    timeout: float = DEFAULT_TIMEOUT


def default_cache_dir(environ):
    cache_root = environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(cache_root) / "fiblucas-matrix" / "oeis"


def resolve_oeis_settings(config=None, environ=None) -> OeisSettings:
    """Resolve OEIS settings: environment over config file over defaults.

    Args:
        config (configparser.ConfigParser or None): optional [oeis] section with
            base_url, cache_dir, offline, timeout
        environ (mapping or None): defaults to os.environ; reads OEIS_BASE_URL,
            OEIS_CACHE_DIR and NO_NETWORK

    Returns:
        (OeisSettings)
    """
    environ = os.environ if environ is None else environ
    section = config["oeis"] if config is not None and config.has_section("oeis") else {}

    base_url = environ.get("OEIS_BASE_URL") or section.get("base_url") or DEFAULT_BASE_URL
    cache_dir = environ.get("OEIS_CACHE_DIR") or section.get("cache_dir")
    cache_dir = Path(cache_dir) if cache_dir else default_cache_dir(environ)
    offline = environ.get("NO_NETWORK") == "1"
    if not offline and section.get("offline"):
        offline = section.getboolean("offline")
    timeout = float(section.get("timeout") or DEFAULT_TIMEOUT)

    return OeisSettings(base_url.rstrip("/"), cache_dir, offline, timeout)


def bfile_url(accession, base_url=DEFAULT_BASE_URL):
    """URL of the b-file, e.g. https://oeis.org/A000045/b000045.txt"""
    return f"{base_url}/{accession}/b{accession[1:]}.txt"


@backoff.on_exception(backoff.expo, requests.exceptions.RequestException, max_tries=5)
def get_url(url, timeout=DEFAULT_TIMEOUT):
    return requests.get(url, timeout=timeout)


def _write_cache(cache_file, content):
    # write next to the target then rename, so readers never see a partial file
    cache_file.parent.mkdir(exist_ok=True, parents=True)
    with tempfile.NamedTemporaryFile(
        dir=cache_file.parent, prefix=f".{cache_file.name}.", delete=False
    ) as tmp_file:
        tmp_file.write(content)
    os.replace(tmp_file.name, cache_file)


def fetch_oeis(accession, max_terms, settings=None):
    """Terms of an OEIS sequence from its b-file, cached on disk by accession.

    A cache hit never touches the network.

    Args:
        accession (str): e.g. "A000045"
        max_terms (int)
        settings (OeisSettings or None): defaults to resolve_oeis_settings()

    Returns:
        (SequenceFixture)

    Raises:
        AccessionError, OeisOfflineError, OeisNotFoundError, BFileParseError,
        requests.exceptions.RequestException
    """
    validate_accession(accession)
    settings = settings or resolve_oeis_settings()
    cache_file = settings.cache_dir / f"{accession}.bfile"

    if cache_file.exists():
        logger.debug(f"Reading cached b-file {cache_file}")
        return parse_bfile(cache_file.read_bytes(), accession, max_terms, source=str(cache_file))

    if settings.offline:
        raise OeisOfflineError(f"network disabled and no cached b-file for {accession}")

    url = bfile_url(accession, settings.base_url)
    logger.info(f"Fetching b-file {url}")
    response = get_url(url, timeout=settings.timeout)
    if response.status_code == 404:
        raise OeisNotFoundError(f"OEIS has no b-file for {accession}")
    response.raise_for_status()

    fixture = parse_bfile(response.content, accession, max_terms, source=url)
    _write_cache(cache_file, response.content)
    return fixture
