"""Core datatypes passed between ingestion, engines and analytics."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"
LABELS = (POSITIVE, NEGATIVE, NEUTRAL)

#: Bucket used by the map aggregation for posts without a country.
UNKNOWN_COUNTRY = "??"


def parse_timestamp(value: str) -> datetime:
    """Parse an ISO-8601 timestamp into an aware UTC datetime.

    Naive inputs are taken to be UTC; a trailing ``Z`` is accepted.
    """
    dt = datetime.fromisoformat(value.replace("Z", "+00:00"))
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def format_timestamp(dt: datetime) -> str:
    """Render an aware datetime as ISO-8601 UTC with a ``Z`` suffix."""
    dt = dt.astimezone(timezone.utc).replace(tzinfo=None)
    return dt.isoformat() + "Z"


@dataclass(frozen=True)
class Post:
    """One social-media post as returned by a post source."""

    id: str
    text: str
    author: str
    created_at: datetime
    language: str = "und"
    country: str | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("post id must be non-empty")
        if self.created_at.tzinfo is None:
            object.__setattr__(self, "created_at", self.created_at.replace(tzinfo=timezone.utc))


@dataclass(frozen=True)
class SentimentScore:
    """Document-level polarity: normalized compound in [-1, 1] plus label."""

    compound: float
    label: str
    algorithm: str
    truncated: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not -1.0 <= self.compound <= 1.0:
            raise ValueError(f"compound out of range: {self.compound}")
        if self.label not in LABELS:
            raise ValueError(f"bad label: {self.label}")


@dataclass(frozen=True)
class ClassifiedPost:
    """A post paired with the score the selected algorithm produced."""

    post: Post
    score: SentimentScore
