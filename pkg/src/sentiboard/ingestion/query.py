"""Search-query normalization and validation.

Raw user fields come in as strings; everything is validated here before
any upstream work happens. Invalid input always raises, it is never
silently dropped (the one sanctioned mutation is clamping max_results to
the hard limit, which sets a flag on the query).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from datetime import datetime
from typing import Iterable

from ..errors import ValidationError
from ..models import parse_timestamp
from .codes import COUNTRY_CODES, LANGUAGE_CODES

KEYWORD = "keyword"
HASHTAG = "hashtag"
USERNAME = "username"

DEFAULT_MAX_RESULTS = 100
HARD_RESULT_LIMIT = 1000


@dataclass(frozen=True)
class Term:
    kind: str
    value: str  # lowercased; keeps its '#'/'@' prefix for hashtag/username


@dataclass(frozen=True)
class Query:
    terms: tuple[Term, ...]
    algorithm: str
    language: str | None = None
    time_from: datetime | None = None
    time_to: datetime | None = None
    origin: str | None = None
    max_results: int = DEFAULT_MAX_RESULTS
    clamped: bool = field(default=False, compare=False)

    def with_max_results(self, n: int) -> "Query":
        return replace(self, max_results=n)


def _parse_term(raw: str) -> Term:
    trimmed = raw.strip().lower()
    if not trimmed:
        raise ValidationError("blank search term", field="terms")
    if trimmed.startswith("#"):
        if len(trimmed) < 2:
            raise ValidationError("hashtag term needs a tag body", field="terms")
        return Term(HASHTAG, trimmed)
    if trimmed.startswith("@"):
        if len(trimmed) < 2:
            raise ValidationError("username term needs a name", field="terms")
        return Term(USERNAME, trimmed)
    return Term(KEYWORD, trimmed)


def _parse_time(value, field_name: str) -> datetime | None:
    if value is None or value == "":
        return None
    if isinstance(value, datetime):
        return parse_timestamp(value.isoformat())
    try:
        return parse_timestamp(str(value))
    except ValueError:
        raise ValidationError(f"unparseable timestamp {value!r}", field=field_name) from None


def normalize_query(
    terms: Iterable[str],
    algorithm: str,
    *,
    language: str | None = None,
    time_from=None,
    time_to=None,
    origin: str | None = None,
    max_results: int | None = None,
    known_algorithms: Iterable[str] | None = None,
    hard_limit: int = HARD_RESULT_LIMIT,
) -> Query:
    parsed_terms: list[Term] = []
    for raw in terms:
        term = _parse_term(raw)
        if term not in parsed_terms:
            parsed_terms.append(term)
    if not parsed_terms:
        raise ValidationError("at least one search term is required", field="terms")

    if known_algorithms is not None and algorithm not in set(known_algorithms):
        raise ValidationError(f"unknown algorithm {algorithm!r}", field="algorithm")

    if language is not None and language != "":
        language = language.strip().lower()
        if language not in LANGUAGE_CODES:
            raise ValidationError(f"unknown language code {language!r}", field="language")
    else:
        language = None

    if origin is not None and origin != "":
        origin = origin.strip().upper()
        if origin.lower() not in COUNTRY_CODES:
            raise ValidationError(f"unknown country code {origin!r}", field="origin")
    else:
        origin = None

    t_from = _parse_time(time_from, "time_from")
    t_to = _parse_time(time_to, "time_to")
    if t_from and t_to and t_from > t_to:
        raise ValidationError("time_from is after time_to", field="time_from")

    if max_results is None:
        max_results = DEFAULT_MAX_RESULTS
    try:
        max_results = int(max_results)
    except (TypeError, ValueError):
        raise ValidationError(f"max_results must be an integer, got {max_results!r}",
                              field="max_results") from None
    if max_results < 1:
        raise ValidationError("max_results must be at least 1", field="max_results")
    clamped = max_results > hard_limit
    if clamped:
        max_results = hard_limit

    return Query(
        terms=tuple(parsed_terms),
        algorithm=algorithm,
        language=language,
        time_from=t_from,
        time_to=t_to,
        origin=origin,
        max_results=max_results,
        clamped=clamped,
    )
