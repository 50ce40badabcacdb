"""Service configuration. Every field maps to a CLI flag on `serve`."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

UPSTREAM_TOKEN_ENV = "SENTIBOARD_UPSTREAM_TOKEN"


@dataclass
class Settings:
    bind: str = "127.0.0.1"
    port: int = 8000
    offline_corpus: Path | None = None
    upstream_url: str | None = None
    upstream_token_env: str = UPSTREAM_TOKEN_ENV
    lexicon_dir: Path | None = None
    cache_ttl: float = 60.0
    cache_capacity: int = 1024
    max_results: int = 1000
    tokens_file: Path | None = None
    audit_log: Path | None = None
    allow_cidrs: tuple[str, ...] = field(default_factory=tuple)
    rate_capacity: int = 450
    rate_window: float = 900.0
    stopwords_file: Path | None = None
