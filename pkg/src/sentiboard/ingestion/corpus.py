"""Offline corpus replay: a JSONL file standing in for the live API.

Corpus line format: one JSON object per line with fields
``id, text, author, created_at`` (ISO-8601), ``lang`` and optional
``country``. Replay is deterministic: same file + same query always
yields the same posts in the same order (newest first, id breaks ties).
"""

from __future__ import annotations

import json
import re
import threading
from pathlib import Path

from ..errors import SourceError
from ..models import Post, parse_timestamp
from .query import HASHTAG, KEYWORD, USERNAME, Query

_HASHTAG_RE = re.compile(r"#\w+")


def _term_matches(post: Post, term) -> bool:
    if term.kind == KEYWORD:
        text = post.text.lower()
        if " " in term.value:
            return term.value in text
        return any(term.value in token for token in text.split())
    if term.kind == HASHTAG:
        return term.value in _HASHTAG_RE.findall(post.text.lower())
    if term.kind == USERNAME:
        return post.author.lower() == term.value[1:]
    return False


def replay_match(post: Post, query: Query) -> bool:
    """True iff the post satisfies every query filter.

    Terms form one OR group; language/time/origin are AND filters. A post
    without a country never passes an origin filter.
    """
    if not any(_term_matches(post, term) for term in query.terms):
        return False
    if query.language is not None and post.language.lower() != query.language:
        return False
    if query.time_from is not None and post.created_at < query.time_from:
        return False
    if query.time_to is not None and post.created_at > query.time_to:
        return False
    if query.origin is not None:
        if post.country is None or post.country.upper() != query.origin:
            return False
    return True


def parse_corpus_line(line: str, line_no: int) -> Post:
    try:
        record = json.loads(line)
        return Post(
            id=str(record["id"]),
            text=record["text"],
            author=record["author"],
            created_at=parse_timestamp(record["created_at"]),
            language=record.get("lang", "und") or "und",
            country=record.get("country"),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise SourceError(f"corpus line {line_no}: {exc}") from exc


class _Prepared:
    """Post plus the precomputed views the match predicate needs."""

    __slots__ = ("post", "lower_text", "hashtags", "author")

    def __init__(self, post: Post):
        self.post = post
        self.lower_text = post.text.lower()
        self.hashtags = frozenset(_HASHTAG_RE.findall(self.lower_text))
        self.author = post.author.lower()


def _match_prepared(prepared: _Prepared, query: Query) -> bool:
    """replay_match over precomputed views; must stay semantically
    identical to replay_match (the test suite cross-checks them).

    A whitespace-free keyword matching as a substring of the whole text
    is equivalent to matching as a substring of some whitespace token,
    so one C-level scan replaces the per-token loop.
    """
    for term in query.terms:
        if term.kind == KEYWORD:
            if term.value in prepared.lower_text:
                break
        elif term.kind == HASHTAG:
            if term.value in prepared.hashtags:
                break
        elif prepared.author == term.value[1:]:
            break
    else:
        return False
    post = prepared.post
    if query.language is not None and post.language.lower() != query.language:
        return False
    if query.time_from is not None and post.created_at < query.time_from:
        return False
    if query.time_to is not None and post.created_at > query.time_to:
        return False
    if query.origin is not None:
        if post.country is None or post.country.upper() != query.origin:
            return False
    return True


class CorpusSource:
    """Read-only post source over a JSONL corpus file.

    The parsed corpus is cached per (mtime, size) so concurrent searches
    share one in-memory copy; the file itself is never written.
    """

    page_size = 100

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._cache_stamp: tuple[int, int] | None = None
        self._cache: list[_Prepared] = []

    def _prepared(self) -> list[_Prepared]:
        try:
            stat = self.path.stat()
        except OSError as exc:
            raise SourceError(f"corpus file unavailable: {self.path}") from exc
        stamp = (stat.st_mtime_ns, stat.st_size)
        with self._lock:
            if stamp == self._cache_stamp:
                return self._cache
        with open(self.path, encoding="utf-8") as f:
            posts = [parse_corpus_line(line, i)
                     for i, line in enumerate(f, start=1) if line.strip()]
        posts.sort(key=lambda p: (p.created_at, p.id), reverse=True)
        prepared = [_Prepared(p) for p in posts]
        with self._lock:
            self._cache_stamp = stamp
            self._cache = prepared
        return prepared

    def fetch_page(self, query: Query, page_token: str | None = None,
                   page_size: int | None = None) -> tuple[list[Post], str | None]:
        size = min(page_size or self.page_size, self.page_size)
        matching = [p.post for p in self._prepared() if _match_prepared(p, query)]
        start = int(page_token) if page_token else 0
        page = matching[start:start + size]
        next_start = start + len(page)
        next_token = str(next_start) if next_start < len(matching) and page else None
        return page, next_token
