"""Search orchestration: cache -> fetch -> classify -> cache."""

from __future__ import annotations

import time

from ..cache import MISS, ResultCache, cache_key
from ..engines import EngineRegistry
from ..ingestion import PostSource, Query, fetch_posts
from ..models import ClassifiedPost


class SearchService:
    """Runs one search end to end; all widgets derive from its result.

    A TTL-fresh cache entry is returned verbatim, so identical queries
    within the TTL are answered from one upstream fetch and stay
    mutually consistent across widgets.
    """

    def __init__(self, registry: EngineRegistry, source: PostSource,
                 cache: ResultCache, clock=time.monotonic):
        self.registry = registry
        self.source = source
        self.cache = cache
        self._clock = clock

    def run_search(self, query: Query) -> list[ClassifiedPost]:
        key = cache_key(query)
        cached = self.cache.get(key, now=self._clock())
        if cached is not MISS:
            return cached
        posts = fetch_posts(query, self.source)
        classified = self.registry.analyze_batch(query.algorithm, posts)
        self.cache.put(key, classified, now=self._clock())
        return classified
