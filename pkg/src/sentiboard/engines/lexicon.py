"""Lexicon container and file loaders.

File formats (all UTF-8, ``#`` starts a comment line):
  * valence / polarity files: one ``token<TAB>value`` per line;
  * booster file: one ``token<TAB>increment`` per line;
  * negator file: one token per line.

Duplicate tokens keep the last occurrence. Tokens are lowercased on load.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import IO, Iterable

from ..errors import LexiconParseError, LexiconRangeError

VALENCE_RULE = "valence-rule"
PATTERN_AVERAGE = "pattern-average"

#: Allowed token-value range per engine kind.
VALUE_RANGES = {
    VALENCE_RULE: (-4.0, 4.0),
    PATTERN_AVERAGE: (-1.0, 1.0),
}
BOOSTER_RANGE = (-1.0, 1.0)


@dataclass(frozen=True)
class Lexicon:
    """Immutable token tables for one engine; shareable across threads."""

    entries: dict[str, float]
    boosters: dict[str, float] = field(default_factory=dict)
    negators: frozenset[str] = frozenset()

    def __len__(self) -> int:
        return len(self.entries)


def _lines(source: IO[bytes] | IO[str] | Iterable[str]) -> Iterable[str]:
    for raw in source:
        yield raw.decode("utf-8") if isinstance(raw, bytes) else raw


def _parse_pairs(source, lo: float, hi: float, what: str) -> dict[str, float]:
    table: dict[str, float] = {}
    for line_no, line in enumerate(_lines(source), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconParseError(f"expected 'token<TAB>value', got {line!r}", line_no)
        token, raw_value = parts[0].strip().lower(), parts[1].strip()
        if not token:
            raise LexiconParseError("empty token", line_no)
        try:
            value = float(raw_value)
        except ValueError:
            raise LexiconParseError(f"non-numeric {what} {raw_value!r}", line_no) from None
        if not lo <= value <= hi:
            raise LexiconRangeError(f"{what} {value} for {token!r} outside [{lo}, {hi}]", line_no)
        table[token] = value
    return table


def load_lexicon(source, kind: str) -> Lexicon:
    """Parse a token-valence stream for the given engine kind."""
    if kind not in VALUE_RANGES:
        raise LexiconRangeError(f"unknown lexicon kind {kind!r}")
    lo, hi = VALUE_RANGES[kind]
    return Lexicon(entries=_parse_pairs(source, lo, hi, "valence"))


def load_boosters(source) -> dict[str, float]:
    lo, hi = BOOSTER_RANGE
    return _parse_pairs(source, lo, hi, "booster increment")


def load_negators(source) -> frozenset[str]:
    negators = set()
    for line_no, line in enumerate(_lines(source), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" in line:
            raise LexiconParseError("negator lines carry a single token", line_no)
        negators.add(line.lower())
    return frozenset(negators)


_KIND_FILES = {VALENCE_RULE: "valence.tsv", PATTERN_AVERAGE: "polarity.tsv"}


def load_lexicon_dir(directory: str | Path, kind: str) -> Lexicon:
    """Assemble a full Lexicon from the documented per-file layout."""
    directory = Path(directory)
    with open(directory / _KIND_FILES[kind], "rb") as f:
        lex = load_lexicon(f, kind)
    boosters: dict[str, float] = {}
    negators: frozenset[str] = frozenset()
    boosters_path = directory / "boosters.tsv"
    if boosters_path.exists():
        with open(boosters_path, "rb") as f:
            boosters = load_boosters(f)
    negators_path = directory / "negators.txt"
    if negators_path.exists():
        with open(negators_path, "rb") as f:
            negators = load_negators(f)
    return Lexicon(entries=lex.entries, boosters=boosters, negators=negators)


def bundled_lexicon(kind: str) -> Lexicon:
    """Load the lexicon files shipped inside the package."""
    data = resources.files("sentiboard.engines") / "data"
    with resources.as_file(data) as directory:
        return load_lexicon_dir(directory, kind)
