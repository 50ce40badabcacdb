"""Post ingestion: query normalization, fetching, rate limiting."""

from __future__ import annotations

from typing import Protocol

from ..models import Post
from .corpus import CorpusSource, replay_match
from .query import (
    DEFAULT_MAX_RESULTS,
    HARD_RESULT_LIMIT,
    HASHTAG,
    KEYWORD,
    USERNAME,
    Query,
    Term,
    normalize_query,
)
from .ratelimit import PermitDecision, WindowRateLimiter
from .upstream import UpstreamRequest, UpstreamSource, build_upstream_request

__all__ = [
    "CorpusSource",
    "DEFAULT_MAX_RESULTS",
    "HARD_RESULT_LIMIT",
    "HASHTAG",
    "KEYWORD",
    "USERNAME",
    "PermitDecision",
    "PostSource",
    "Query",
    "Term",
    "UpstreamRequest",
    "UpstreamSource",
    "WindowRateLimiter",
    "build_upstream_request",
    "fetch_posts",
    "normalize_query",
    "replay_match",
]


class PostSource(Protocol):
    page_size: int

    def fetch_page(self, query: Query, page_token: str | None = None,
                   page_size: int | None = None) -> tuple[list[Post], str | None]: ...


def fetch_posts(query: Query, source: PostSource) -> list[Post]:
    """Collect up to query.max_results posts from the source, newest first.

    Paginates until the quota is met or the source is exhausted. Source
    errors (auth, rate limit, transient network) propagate unchanged; a
    partial result is never returned silently.
    """
    collected: list[Post] = []
    token: str | None = None
    while len(collected) < query.max_results:
        page, token = source.fetch_page(
            query, page_token=token,
            page_size=min(query.max_results - len(collected), source.page_size),
        )
        collected.extend(page)
        if token is None or not page:
            break
    collected.sort(key=lambda p: (p.created_at, p.id), reverse=True)
    return collected[:query.max_results]
