"""Shared helpers for gateway-level tests."""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from sentiboard.gateway import Settings, create_app, make_token_record, record_to_json
from sentiboard.ingestion import CorpusSource


class FakeClock:
    def __init__(self, start: float = 1000.0):
        self.now = start

    def __call__(self) -> float:
        return self.now

    def advance(self, seconds: float) -> None:
        self.now += seconds


class CountingSource:
    """Wraps a post source and counts page fetches."""

    def __init__(self, inner):
        self.inner = inner
        self.pages = 0

    @property
    def page_size(self) -> int:
        return self.inner.page_size

    def fetch_page(self, query, page_token=None, page_size=None):
        self.pages += 1
        return self.inner.fetch_page(query, page_token=page_token, page_size=page_size)


DEFAULT_ROWS = [
    {"id": "p1", "text": "solar grid is good", "author": "ana",
     "created_at": "2022-03-01T10:00:00Z", "lang": "en", "country": "NO"},
    {"id": "p2", "text": "wind grid is great", "author": "bo",
     "created_at": "2022-03-01T11:00:00Z", "lang": "en", "country": "SE"},
    {"id": "p3", "text": "fossil grid is terrible", "author": "cy",
     "created_at": "2022-03-01T12:00:00Z", "lang": "en"},
    {"id": "p4", "text": "grid exists here", "author": "di",
     "created_at": "2022-03-01T13:00:00Z", "lang": "en"},
]

TOKEN_SPECS = {
    "searcher": {"search"},
    "exporter": {"export"},
    "operator": {"search", "export"},
    "admin-only": {"admin"},
}


def write_corpus(path: Path, rows=None) -> Path:
    rows = DEFAULT_ROWS if rows is None else rows
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n", encoding="utf-8")
    return path


def write_tokens(path: Path, specs=None, disabled=()) -> dict[str, str]:
    """Create a token file; returns {token_id: bearer credential}."""
    specs = TOKEN_SPECS if specs is None else specs
    records, secrets = [], {}
    for token_id, scopes in specs.items():
        record, secret = make_token_record(token_id, scopes)
        if token_id in disabled:
            record = type(record)(record.token_id, record.salt, record.secret_hash,
                                  record.scopes, disabled=True)
        records.append(record_to_json(record))
        secrets[token_id] = f"{token_id}.{secret}"
    path.write_text(json.dumps({"tokens": records}), encoding="utf-8")
    return secrets


def build_app(tmp_path: Path, rows=None, *, settings_kwargs=None, disabled=()):
    """App over a counting corpus source plus ready-to-use credentials."""
    corpus = write_corpus(tmp_path / "corpus.jsonl", rows)
    secrets = write_tokens(tmp_path / "tokens.json", disabled=disabled)
    clock = FakeClock()
    settings = Settings(
        offline_corpus=corpus,
        tokens_file=tmp_path / "tokens.json",
        audit_log=tmp_path / "audit.jsonl",
        **(settings_kwargs or {}),
    )
    source = CountingSource(CorpusSource(corpus))
    app = create_app(settings, source=source, clock=clock)
    return app, secrets, source, clock


def auth(secrets: dict[str, str], token_id: str) -> dict[str, str]:
    return {"Authorization": f"Bearer {secrets[token_id]}"}


def client_for(app) -> TestClient:
    return TestClient(app)
