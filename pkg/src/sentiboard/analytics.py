"""Dashboard aggregations over classified posts.

Everything here is a pure function of its inputs, so the four widget
payloads for one result set can safely be computed in parallel.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ContractError
from .models import (
    LABELS,
    NEGATIVE,
    NEUTRAL,
    POSITIVE,
    UNKNOWN_COUNTRY,
    ClassifiedPost,
    Post,
    format_timestamp,
)

HOUR = 3600
DAY = 86400

CSV_HEADER = ["id", "created_at", "author", "lang", "country", "text",
              "algorithm", "compound", "label"]

_URL_RE = re.compile(r"(?:https?://|www\.)\S+")
_MENTION_RE = re.compile(r"@\w+")
_WORD_RE = re.compile(r"[a-z0-9_]+")


@dataclass(frozen=True)
class Distribution:
    counts: dict[str, int]
    fractions: dict[str, float]
    total: int


@dataclass(frozen=True)
class TimeBin:
    bin_start: datetime
    counts: dict[str, int]
    mean_compound: float


@dataclass(frozen=True)
class TermWeight:
    term: str
    weight: int


@dataclass(frozen=True)
class CountrySentiment:
    country: str
    counts: dict[str, int]
    mean_compound: float
    total: int


def _label_counts(posts: Iterable[ClassifiedPost]) -> dict[str, int]:
    counts = {POSITIVE: 0, NEGATIVE: 0, NEUTRAL: 0}
    for item in posts:
        counts[item.score.label] += 1
    return counts


def polarity_distribution(posts: Sequence[ClassifiedPost]) -> Distribution:
    counts = _label_counts(posts)
    total = len(posts)
    if total:
        fractions = {label: counts[label] / total for label in LABELS}
    else:
        fractions = {label: 0.0 for label in LABELS}
    return Distribution(counts=counts, fractions=fractions, total=total)


def default_bin_width(posts: Sequence[ClassifiedPost]) -> int:
    """1-hour bins for ranges up to 2 days, daily bins beyond."""
    if not posts:
        return HOUR
    times = [c.post.created_at for c in posts]
    span = (max(times) - min(times)).total_seconds()
    return HOUR if span <= 2 * DAY else DAY


def timeline(posts: Sequence[ClassifiedPost], bin_width: int) -> list[TimeBin]:
    """Fixed-width, contiguous bins spanning min..max created_at.

    Empty bins are present with zero counts and mean_compound 0.0;
    bin_start = floor(epoch / width) * width.
    """
    if bin_width <= 0:
        raise ContractError(f"bin_width must be positive, got {bin_width}")
    if not posts:
        return []
    epochs = [int(c.post.created_at.timestamp()) for c in posts]
    first = (min(epochs) // bin_width) * bin_width
    last = (max(epochs) // bin_width) * bin_width

    by_bin: dict[int, list[ClassifiedPost]] = {}
    for item, epoch in zip(posts, epochs):
        by_bin.setdefault((epoch // bin_width) * bin_width, []).append(item)

    bins = []
    for start in range(first, last + bin_width, bin_width):
        members = by_bin.get(start, [])
        mean = sum(c.score.compound for c in members) / len(members) if members else 0.0
        bins.append(TimeBin(
            bin_start=datetime.fromtimestamp(start, tz=timezone.utc),
            counts=_label_counts(members),
            mean_compound=mean,
        ))
    return bins


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    if path is None:
        source = (resources.files("sentiboard") / "data" / "stopwords.txt").read_text("utf-8")
    else:
        source = Path(path).read_text("utf-8")
    return frozenset(
        line.strip().lower() for line in source.splitlines()
        if line.strip() and not line.startswith("#")
    )


def tag_cloud(posts: Sequence[Post], k: int, stopwords: frozenset[str] | set[str]) -> list[TermWeight]:
    """Top-k term frequencies; URLs and mentions removed, '#' stripped,
    stopwords and single-character tokens dropped. Ties break by term."""
    if k < 1:
        raise ContractError(f"k must be at least 1, got {k}")
    counts: dict[str, int] = {}
    for post in posts:
        text = _MENTION_RE.sub(" ", _URL_RE.sub(" ", post.text.lower()))
        for term in _WORD_RE.findall(text):
            if len(term) < 2 or term in stopwords:
                continue
            counts[term] = counts.get(term, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [TermWeight(term=t, weight=n) for t, n in ranked[:k]]


def geo_summary(posts: Sequence[ClassifiedPost]) -> list[CountrySentiment]:
    """Per-country label counts and mean compound, largest group first.

    Posts without a country aggregate under the "??" bucket so totals
    stay conserved.
    """
    groups: dict[str, list[ClassifiedPost]] = {}
    for item in posts:
        country = item.post.country.upper() if item.post.country else UNKNOWN_COUNTRY
        groups.setdefault(country, []).append(item)
    summary = [
        CountrySentiment(
            country=country,
            counts=_label_counts(members),
            mean_compound=sum(c.score.compound for c in members) / len(members),
            total=len(members),
        )
        for country, members in groups.items()
    ]
    summary.sort(key=lambda cs: (-cs.total, cs.country))
    return summary


def to_csv(posts: Sequence[ClassifiedPost]) -> bytes:
    """RFC-4180 CSV of the raw result set, UTF-8, compound at 4 d.p."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for item in posts:
        post = item.post
        writer.writerow([
            post.id,
            format_timestamp(post.created_at),
            post.author,
            post.language,
            post.country or "",
            post.text,
            item.score.algorithm,
            f"{item.score.compound:.4f}",
            item.score.label,
        ])
    return buffer.getvalue().encode("utf-8")
