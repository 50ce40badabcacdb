"""Bearer-token authentication with scoped, salted-hash credentials.

Token file (JSON):
    {"tokens": [{"token_id": "...", "salt": "...", "secret_hash": "...",
                 "scopes": ["search", "export"], "disabled": false}, ...]}

The wire credential is ``Authorization: Bearer <token_id>.<secret>``;
secrets are never stored or logged, only sha256(salt + secret) is kept.
"""

from __future__ import annotations

import hashlib
import hmac
import json
import secrets as secrets_module
from dataclasses import dataclass
from pathlib import Path

SCOPES = frozenset({"search", "export", "admin"})
ANONYMOUS = "anonymous"


class AuthError(Exception):
    def __init__(self, message: str):
        super().__init__(message)


@dataclass(frozen=True)
class TokenIdentity:
    token_id: str
    scopes: frozenset[str]


@dataclass(frozen=True)
class TokenRecord:
    token_id: str
    salt: str
    secret_hash: str
    scopes: frozenset[str]
    disabled: bool = False


def _hash_secret(salt: str, secret: str) -> str:
    return hashlib.sha256((salt + secret).encode("utf-8")).hexdigest()


def make_token_record(token_id: str, scopes, secret: str | None = None):
    """Create a record plus the cleartext secret (shown once, never stored)."""
    bad = set(scopes) - SCOPES
    if bad:
        raise ValueError(f"unknown scopes: {sorted(bad)}")
    if secret is None:
        secret = secrets_module.token_urlsafe(24)
    salt = secrets_module.token_hex(8)
    record = TokenRecord(token_id=token_id, salt=salt,
                         secret_hash=_hash_secret(salt, secret),
                         scopes=frozenset(scopes))
    return record, secret


def record_to_json(record: TokenRecord) -> dict:
    return {
        "token_id": record.token_id,
        "salt": record.salt,
        "secret_hash": record.secret_hash,
        "scopes": sorted(record.scopes),
        "disabled": record.disabled,
    }


class TokenStore:
    def __init__(self, records=()):
        self._records = {r.token_id: r for r in records}

    @classmethod
    def from_file(cls, path: str | Path) -> "TokenStore":
        data = json.loads(Path(path).read_text("utf-8"))
        records = [
            TokenRecord(
                token_id=item["token_id"],
                salt=item["salt"],
                secret_hash=item["secret_hash"],
                scopes=frozenset(item.get("scopes", [])),
                disabled=bool(item.get("disabled", False)),
            )
            for item in data.get("tokens", [])
        ]
        return cls(records)

    def authenticate(self, authorization: str | None) -> TokenIdentity:
        """Resolve a bearer header to an identity or raise AuthError.

        The failure message never distinguishes unknown ids from wrong
        secrets, and the hash comparison is constant-time.
        """
        if not authorization:
            raise AuthError("missing bearer token")
        scheme, _, credential = authorization.partition(" ")
        if scheme.lower() != "bearer" or not credential:
            raise AuthError("malformed authorization header")
        token_id, _, secret = credential.partition(".")
        record = self._records.get(token_id)
        if record is None or record.disabled or not secret:
            # burn a comparison anyway so lookup failures stay uniform
            hmac.compare_digest(_hash_secret("x", secret or ""), "0" * 64)
            raise AuthError("unknown or disabled token")
        if not hmac.compare_digest(_hash_secret(record.salt, secret), record.secret_hash):
            raise AuthError("unknown or disabled token")
        return TokenIdentity(token_id=record.token_id, scopes=record.scopes)
