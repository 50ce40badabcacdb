"""Live upstream client for a Twitter-compatible recent-search API.

Wire contract (a local mock can stand in via `base_url`):
  GET {base_url}/2/tweets/search/recent
      ?query=...&max_results=N[&start_time=...][&end_time=...][&next_token=...]
  Authorization: Bearer <token>
  200 body: {"data": [{"id", "text", "author", "created_at",
                       "lang"?, "country"?}, ...],
             "meta": {"next_token"?: "..."}}
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import httpx

from ..errors import (
    RateLimitedError,
    TransientUpstreamError,
    UpstreamAuthError,
    UpstreamError,
)
from ..models import Post, format_timestamp, parse_timestamp
from .query import HASHTAG, USERNAME, Query
from .ratelimit import WindowRateLimiter

SEARCH_PATH = "/2/tweets/search/recent"
PAGE_MAX = 100
RETRY_DELAYS = (0.25, 1.0)  # transient network failures only, never 4xx


@dataclass(frozen=True)
class UpstreamRequest:
    path: str
    params: dict[str, str] = field(default_factory=dict)


def _render_term(term) -> str:
    if term.kind == HASHTAG:
        return term.value
    if term.kind == USERNAME:
        return "from:" + term.value[1:]
    if " " in term.value:
        return f'"{term.value}"'
    return term.value


def build_upstream_request(query: Query, page_token: str | None = None,
                           remaining: int | None = None) -> UpstreamRequest:
    """Deterministic query -> request mapping.

    Terms become one OR group; language/origin ride along as query-string
    operators, the time window as request parameters. Page size is
    min(remaining needed, upstream page maximum).
    """
    rendered = [_render_term(t) for t in query.terms]
    q = rendered[0] if len(rendered) == 1 else "(" + " OR ".join(rendered) + ")"
    if query.language:
        q += f" lang:{query.language}"
    if query.origin:
        q += f" place_country:{query.origin}"

    if remaining is None:
        remaining = query.max_results
    params: dict[str, str] = {
        "query": q,
        "max_results": str(min(remaining, PAGE_MAX)),
    }
    if query.time_from:
        params["start_time"] = format_timestamp(query.time_from)
    if query.time_to:
        params["end_time"] = format_timestamp(query.time_to)
    if page_token:
        params["next_token"] = page_token
    return UpstreamRequest(path=SEARCH_PATH, params=params)


def _parse_post(record: dict) -> Post:
    try:
        return Post(
            id=str(record["id"]),
            text=record["text"],
            author=record.get("author", ""),
            created_at=parse_timestamp(record["created_at"]),
            language=record.get("lang", "und") or "und",
            country=record.get("country"),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise UpstreamError(f"malformed upstream post record: {exc}") from exc


class UpstreamSource:
    """HTTP post source with bearer auth, retries and local rate limiting."""

    page_size = PAGE_MAX

    def __init__(self, base_url: str, bearer_token: str,
                 limiter: WindowRateLimiter | None = None,
                 transport: httpx.BaseTransport | None = None,
                 timeout: float = 10.0,
                 sleep=time.sleep):
        self._client = httpx.Client(base_url=base_url.rstrip("/"), timeout=timeout,
                                    transport=transport)
        self._auth_header = {"Authorization": f"Bearer {bearer_token}"}
        self._limiter = limiter
        self._sleep = sleep

    def close(self) -> None:
        self._client.close()

    def _send(self, request: UpstreamRequest) -> httpx.Response:
        last_error: Exception | None = None
        for attempt in range(len(RETRY_DELAYS) + 1):
            if attempt:
                self._sleep(RETRY_DELAYS[attempt - 1])
            try:
                return self._client.get(request.path, params=request.params,
                                        headers=self._auth_header)
            except httpx.TransportError as exc:
                last_error = exc
        raise TransientUpstreamError(f"upstream unreachable after retries: {last_error}")

    def fetch_page(self, query: Query, page_token: str | None = None,
                   page_size: int | None = None) -> tuple[list[Post], str | None]:
        if self._limiter is not None:
            decision = self._limiter.acquire()
            if not decision:
                raise RateLimitedError("upstream request budget exhausted",
                                       retry_after=decision.retry_after)
        request = build_upstream_request(query, page_token,
                                         remaining=page_size or query.max_results)
        response = self._send(request)
        if response.status_code in (401, 403):
            raise UpstreamAuthError(f"upstream rejected credentials ({response.status_code})")
        if response.status_code == 429:
            retry_after = float(response.headers.get("retry-after", 60))
            raise RateLimitedError("upstream rate limit hit", retry_after=retry_after)
        if response.status_code != 200:
            raise UpstreamError(f"upstream returned status {response.status_code}")
        try:
            body = response.json()
            records = body.get("data", [])
            next_token = (body.get("meta") or {}).get("next_token")
        except ValueError as exc:
            raise UpstreamError("upstream returned unparseable JSON") from exc
        return [_parse_post(r) for r in records], next_token
