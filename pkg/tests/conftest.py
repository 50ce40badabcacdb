from __future__ import annotations

import datetime as dt

import pytest

from sentiboard.engines import EngineRegistry, default_registry
from sentiboard.engines.lexicon import Lexicon
from sentiboard.models import Post


@pytest.fixture(scope="session")
def registry() -> EngineRegistry:
    return default_registry()


@pytest.fixture
def tiny_lexicon() -> Lexicon:
    """Small hand-checked lexicon used by the worked examples."""
    return Lexicon(
        entries={"good": 1.9, "great": 3.1, "bad": -2.5, "horrible": -2.9},
        boosters={"very": 0.293, "slightly": -0.293},
        negators=frozenset({"not", "never", "no"}),
    )


@pytest.fixture
def tiny_pattern_lexicon() -> Lexicon:
    return Lexicon(
        entries={"great": 0.8, "good": 0.6, "bad": -0.7, "horrible": -1.0},
        negators=frozenset({"not", "never", "no"}),
    )


def make_post(text: str, *, id: str = "1", author: str = "alice",
              created_at: str = "2022-03-01T12:00:00Z", language: str = "en",
              country: str | None = None) -> Post:
    return Post(
        id=id,
        text=text,
        author=author,
        created_at=dt.datetime.fromisoformat(created_at.replace("Z", "+00:00")),
        language=language,
        country=country,
    )
