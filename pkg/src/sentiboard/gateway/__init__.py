"""Authenticated HTTP gateway in front of the analysis pipeline."""

from .app import ApiError, client_allowed, create_app
from .audit import AuditLog, AuditRecord
from .auth import TokenIdentity, TokenRecord, TokenStore, make_token_record, record_to_json
from .config import Settings
from .service import SearchService

__all__ = [
    "ApiError",
    "AuditLog",
    "AuditRecord",
    "SearchService",
    "Settings",
    "TokenIdentity",
    "TokenRecord",
    "TokenStore",
    "client_allowed",
    "create_app",
    "make_token_record",
    "record_to_json",
]
