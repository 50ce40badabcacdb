"""Exception hierarchy shared across the service."""

from __future__ import annotations


class SentiboardError(Exception):
    """Base class for all service errors."""

    code = "internal_error"


class LexiconParseError(SentiboardError):
    """A lexicon file line could not be parsed."""

    code = "lexicon_parse_error"

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class LexiconRangeError(SentiboardError):
    """A lexicon value lies outside the engine's allowed range."""

    code = "lexicon_range_error"

    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(message if line_no is None else f"line {line_no}: {message}")
        self.line_no = line_no


class UnknownAlgorithmError(SentiboardError):
    code = "unknown_algorithm"

    def __init__(self, algorithm: str):
        super().__init__(f"no such sentiment algorithm: {algorithm!r}")
        self.algorithm = algorithm


class ValidationError(SentiboardError):
    """User-supplied query field rejected. `field` names the offender."""

    code = "validation_error"

    def __init__(self, message: str, field: str):
        super().__init__(message)
        self.field = field


class ContractError(SentiboardError, ValueError):
    """A caller violated an argument precondition."""

    code = "contract_error"


class SourceError(SentiboardError):
    """Post source unusable (missing corpus file, bad configuration)."""

    code = "source_error"


class UpstreamAuthError(SentiboardError):
    """Upstream rejected our credentials (401/403)."""

    code = "upstream_auth"


class RateLimitedError(SentiboardError):
    """Local or upstream rate limit hit; retry after `retry_after` seconds."""

    code = "rate_limited"

    def __init__(self, message: str, retry_after: float):
        super().__init__(message)
        self.retry_after = retry_after


class TransientUpstreamError(SentiboardError):
    """Network-level failure that persisted through retries."""

    code = "upstream_unreachable"


class UpstreamError(SentiboardError):
    """Upstream returned an unusable response."""

    code = "upstream_error"
