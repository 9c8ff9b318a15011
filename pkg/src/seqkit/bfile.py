"""OEIS b-file reading, and optional download into a fixtures directory."""

from __future__ import annotations

import re
import urllib.request
from dataclasses import dataclass
from pathlib import Path


class BFileError(ValueError):
    """Malformed b-file text."""


_OEIS_ID = re.compile(r"A\d{6}")


@dataclass(frozen=True)
class SequenceFixture:
    oeis_id: str
    offset: int
    terms: tuple
    source_path: str = ""

    def term(self, index: int) -> int:
        return self.terms[index - self.offset]


def bfile_parse(text, oeis_id: str = "", source_path: str = "") -> SequenceFixture:
    """Parse ``index value`` lines; ``#`` lines and blank lines are ignored.

    Indices must be consecutive; the first one becomes the offset.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    offset = None
    terms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"{source_path or '<b-file>'}:{lineno}: expected 'index value', got {line!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"{source_path or '<b-file>'}:{lineno}: non-integer field in {line!r}") from None
        if offset is None:
            offset = index
        expected = offset + len(terms)
        if index != expected:
            raise BFileError(
                f"{source_path or '<b-file>'}:{lineno}: index {index} follows {expected - 1}; gap at {expected}")
        terms.append(value)
    if not terms:
        raise BFileError(f"{source_path or '<b-file>'}: no terms")
    return SequenceFixture(oeis_id, offset, tuple(terms), source_path)


def fixture_path(fixtures_dir, oeis_id: str) -> Path:
    return Path(fixtures_dir) / f"b{oeis_id[1:]}.txt"


def load_fixture(fixtures_dir, oeis_id: str) -> SequenceFixture | None:
    """The fixture for ``oeis_id``, or None when no file is present."""
    path = fixture_path(fixtures_dir, oeis_id)
    if not path.exists():
        return None
    return bfile_parse(path.read_bytes(), oeis_id, str(path))


def fetch_bfile(oeis_id: str, fixtures_dir, timeout: float = 30.0) -> Path:
    """Download ``b??????.txt`` from oeis.org into ``fixtures_dir``."""
    if not _OEIS_ID.fullmatch(oeis_id):
        raise ValueError(f"not an OEIS id: {oeis_id!r}")
    url = f"https://oeis.org/{oeis_id}/b{oeis_id[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        data = resp.read()
    bfile_parse(data, oeis_id, url)  # refuse to store anything unparsable
    path = fixture_path(fixtures_dir, oeis_id)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)
    return path
