"""Pluggable document-polarity engines behind one registry.

Two lexicon engines ship by default; more can be registered at runtime
as long as they expose ``algorithm``, ``description`` and ``score``.
"""

from __future__ import annotations

import threading
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import UnknownAlgorithmError
from ..models import ClassifiedPost, Post, SentimentScore
from ._kernel import KERNEL_NAME
from .base import NEG_THRESHOLD, POS_THRESHOLD, SentimentEngine, classify, normalize
from .lexicon import (
    PATTERN_AVERAGE,
    VALENCE_RULE,
    Lexicon,
    bundled_lexicon,
    load_boosters,
    load_lexicon,
    load_lexicon_dir,
    load_negators,
)
from .pattern_average import PatternAverageEngine
from .valence_rule import ValenceRuleEngine

__all__ = [
    "KERNEL_NAME",
    "Lexicon",
    "PATTERN_AVERAGE",
    "VALENCE_RULE",
    "EngineRegistry",
    "PatternAverageEngine",
    "SentimentEngine",
    "ValenceRuleEngine",
    "analyze_batch",
    "build_registry",
    "classify",
    "default_registry",
    "list_algorithms",
    "load_boosters",
    "load_lexicon",
    "load_lexicon_dir",
    "load_negators",
    "normalize",
    "score_text",
]

_ENGINE_CLASSES = {
    VALENCE_RULE: ValenceRuleEngine,
    PATTERN_AVERAGE: PatternAverageEngine,
}


class EngineRegistry:
    """Ordered collection of engines; registration order is listing order."""

    def __init__(self, engines: Iterable[SentimentEngine] = ()):
        self._engines: dict[str, SentimentEngine] = {}
        for engine in engines:
            self.register(engine)

    def register(self, engine: SentimentEngine) -> None:
        self._engines[engine.algorithm] = engine

    def get(self, algorithm: str) -> SentimentEngine:
        try:
            return self._engines[algorithm]
        except KeyError:
            raise UnknownAlgorithmError(algorithm) from None

    def algorithms(self) -> list[str]:
        return list(self._engines)

    def list_algorithms(self) -> list[tuple[str, str]]:
        return [(e.algorithm, e.description) for e in self._engines.values()]

    def analyze_batch(self, algorithm: str, posts: Sequence[Post]) -> list[ClassifiedPost]:
        """Score each post; output order mirrors input order."""
        engine = self.get(algorithm)
        return [ClassifiedPost(post=post, score=engine.score(post.text)) for post in posts]


def build_registry(lexicon_dir: str | Path | None = None,
                   pos_threshold: float = POS_THRESHOLD,
                   neg_threshold: float = NEG_THRESHOLD) -> EngineRegistry:
    """Registry with both bundled engines, from `lexicon_dir` or package data."""
    def lex(kind: str) -> Lexicon:
        if lexicon_dir is not None:
            return load_lexicon_dir(lexicon_dir, kind)
        return bundled_lexicon(kind)

    return EngineRegistry([
        ValenceRuleEngine(lex(VALENCE_RULE), pos_threshold, neg_threshold),
        PatternAverageEngine(lex(PATTERN_AVERAGE), pos_threshold, neg_threshold),
    ])


_default_registry: EngineRegistry | None = None
_default_lock = threading.Lock()


def default_registry() -> EngineRegistry:
    """Process-wide registry over the bundled lexicons, built lazily."""
    global _default_registry
    if _default_registry is None:
        with _default_lock:
            if _default_registry is None:
                _default_registry = build_registry()
    return _default_registry


def score_text(algorithm: str, lexicon: Lexicon, text: str) -> SentimentScore:
    """Score one text with an explicit lexicon (library entry point)."""
    try:
        engine_cls = _ENGINE_CLASSES[algorithm]
    except KeyError:
        raise UnknownAlgorithmError(algorithm) from None
    return engine_cls(lexicon).score(text)


def list_algorithms() -> list[tuple[str, str]]:
    return default_registry().list_algorithms()


def analyze_batch(algorithm: str, posts: Sequence[Post]) -> list[ClassifiedPost]:
    return default_registry().analyze_batch(algorithm, posts)
