"""HTTP facade: authenticated per-widget endpoints over one search core.

Endpoint map (all JSON unless noted):
    GET /api/v1/health                 unauthenticated
    GET /api/v1/openapi.json, /docs    unauthenticated API description
    GET /api/v1/algorithms             any valid token
    GET /api/v1/analysis/summary       scope: search
    GET /api/v1/analysis/timeline      scope: search
    GET /api/v1/analysis/tagcloud      scope: search
    GET /api/v1/analysis/map           scope: search
    GET /api/v1/analysis/posts         scope: search
    GET /api/v1/analysis/export.csv    scope: export (text/csv)
"""

from __future__ import annotations

import ipaddress
import os
import time
from datetime import datetime, timezone
from typing import Iterator

from fastapi import Depends, FastAPI, Request
from fastapi import Query as FastAPIQuery
from fastapi.exceptions import RequestValidationError
from fastapi.openapi.utils import get_openapi
from fastapi.responses import JSONResponse, StreamingResponse

from .. import analytics
from ..cache import ResultCache, cache_key
from ..engines import KERNEL_NAME, EngineRegistry, build_registry
from ..errors import (
    ContractError,
    RateLimitedError,
    SentiboardError,
    SourceError,
    TransientUpstreamError,
    UnknownAlgorithmError,
    UpstreamAuthError,
    UpstreamError,
    ValidationError,
)
from ..ingestion import CorpusSource, UpstreamSource, WindowRateLimiter, normalize_query
from ..models import ClassifiedPost, format_timestamp
from .audit import AuditLog, AuditRecord, utc_now
from .auth import ANONYMOUS, AuthError, TokenIdentity, TokenStore
from .config import Settings
from .service import SearchService

API_PREFIX = "/api/v1"
CSV_CHUNK = 64 * 1024


class ApiError(Exception):
    """Error with a stable machine-readable code and HTTP status."""

    def __init__(self, status: int, code: str, message: str,
                 detail: str | None = None, headers: dict | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail
        self.headers = headers or {}


def _error_response(error: ApiError) -> JSONResponse:
    body = {"code": error.code, "message": error.message}
    if error.detail is not None:
        body["detail"] = error.detail
    return JSONResponse(body, status_code=error.status, headers=error.headers)


def client_allowed(host: str | None, cidrs: tuple[str, ...]) -> bool:
    """Bind-time network restriction; an empty CIDR list allows everyone."""
    if not cidrs:
        return True
    if not host:
        return False
    try:
        address = ipaddress.ip_address(host)
    except ValueError:
        return False
    return any(address in ipaddress.ip_network(c, strict=False) for c in cidrs)


def _round4(value: float) -> float:
    return round(value, 4)


def _build_source(settings: Settings):
    if settings.offline_corpus is not None:
        return CorpusSource(settings.offline_corpus)
    if settings.upstream_url:
        bearer = os.environ.get(settings.upstream_token_env, "")
        limiter = WindowRateLimiter(settings.rate_capacity, settings.rate_window)
        return UpstreamSource(settings.upstream_url, bearer, limiter=limiter)
    raise ValueError("configure either an offline corpus or an upstream URL")


def create_app(settings: Settings | None = None, *,
               registry: EngineRegistry | None = None,
               source=None,
               clock=time.monotonic) -> FastAPI:
    settings = settings or Settings()
    registry = registry or build_registry(settings.lexicon_dir)
    source = source if source is not None else _build_source(settings)
    cache = ResultCache(ttl=settings.cache_ttl, capacity=settings.cache_capacity)
    service = SearchService(registry, source, cache, clock=clock)
    tokens = TokenStore.from_file(settings.tokens_file) if settings.tokens_file else TokenStore()
    audit = AuditLog(settings.audit_log)
    stopwords = analytics.load_stopwords(settings.stopwords_file)

    app = FastAPI(
        title="sentiboard gateway",
        version="1.0",
        description="Sentiment analytics over social posts: search, classify, aggregate.",
        openapi_url=f"{API_PREFIX}/openapi.json",
        docs_url=f"{API_PREFIX}/docs",
        redoc_url=None,
    )
    app.state.settings = settings
    app.state.service = service
    app.state.audit = audit
    app.state.tokens = tokens

    # ----- auth dependencies ------------------------------------------------

    def current_identity(request: Request) -> TokenIdentity:
        try:
            identity = tokens.authenticate(request.headers.get("authorization"))
        except AuthError as exc:
            raise ApiError(401, "unauthenticated", str(exc)) from None
        request.state.token_id = identity.token_id
        return identity

    def require_scope(scope: str):
        def dependency(request: Request,
                       identity: TokenIdentity = Depends(current_identity)) -> TokenIdentity:
            if scope not in identity.scopes:
                raise ApiError(403, "forbidden", f"token lacks the {scope!r} scope")
            return identity
        return dependency

    # ----- request plumbing -------------------------------------------------

    @app.middleware("http")
    async def audit_every_request(request: Request, call_next):
        started = time.perf_counter()
        if not client_allowed(request.client.host if request.client else None,
                              settings.allow_cidrs):
            response = _error_response(ApiError(
                403, "network_forbidden", "caller network is not allowed"))
        else:
            try:
                response = await call_next(request)
            except Exception:
                audit.append(_record(request, 500, started))
                raise
        audit.append(_record(request, response.status_code, started))
        return response

    def _record(request: Request, status: int, started: float) -> AuditRecord:
        return AuditRecord(
            timestamp=utc_now(),
            token_id=getattr(request.state, "token_id", ANONYMOUS),
            endpoint=request.url.path,
            query_digest=getattr(request.state, "query_digest", None),
            result_count=getattr(request.state, "result_count", None),
            status=status,
            latency_ms=int((time.perf_counter() - started) * 1000),
        )

    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError):
        return _error_response(exc)

    @app.exception_handler(RequestValidationError)
    async def on_request_validation(request: Request, exc: RequestValidationError):
        return _error_response(ApiError(
            400, "validation_error", "invalid request parameters", detail=str(exc.errors())))

    @app.exception_handler(SentiboardError)
    async def on_domain_error(request: Request, exc: SentiboardError):
        return _error_response(_map_domain_error(exc))

    def _map_domain_error(exc: SentiboardError) -> ApiError:
        if isinstance(exc, (ValidationError, UnknownAlgorithmError, ContractError)):
            detail = getattr(exc, "field", None)
            return ApiError(400, exc.code, str(exc), detail=detail)
        if isinstance(exc, RateLimitedError):
            return ApiError(429, exc.code, str(exc),
                            detail=f"retry after {exc.retry_after:.0f}s",
                            headers={"Retry-After": str(int(max(1, exc.retry_after)))})
        if isinstance(exc, (UpstreamAuthError, UpstreamError, TransientUpstreamError, SourceError)):
            return ApiError(502, exc.code, str(exc))
        return ApiError(500, exc.code, str(exc))

    # ----- search plumbing --------------------------------------------------

    def _query_from_params(request: Request, term: list[str], algorithm: str,
                           lang: str | None, time_from: str | None, time_to: str | None,
                           origin: str | None, max_results: str | None):
        query = normalize_query(
            term,
            algorithm,
            language=lang,
            time_from=time_from,
            time_to=time_to,
            origin=origin,
            max_results=max_results,
            known_algorithms=registry.algorithms(),
            hard_limit=settings.max_results,
        )
        request.state.query_digest = cache_key(query)
        return query

    def _search(request: Request, term: list[str], algorithm: str, lang, time_from,
                time_to, origin, max_results) -> tuple[list[ClassifiedPost], str, str]:
        query = _query_from_params(request, term, algorithm, lang, time_from,
                                   time_to, origin, max_results)
        results = service.run_search(query)
        request.state.result_count = len(results)
        return results, request.state.query_digest, query.algorithm

    def _post_payload(item: ClassifiedPost) -> dict:
        return {
            "id": item.post.id,
            "created_at": format_timestamp(item.post.created_at),
            "author": item.post.author,
            "lang": item.post.language,
            "country": item.post.country,
            "text": item.post.text,
            "algorithm": item.score.algorithm,
            "compound": _round4(item.score.compound),
            "label": item.score.label,
            "truncated": item.score.truncated,
        }

    # ----- routes -------------------------------------------------------

    @app.get(f"{API_PREFIX}/health", tags=["meta"])
    def health() -> dict:
        return {"status": "ok", "kernel": KERNEL_NAME, "audit_failures": audit.failures}

    @app.get(f"{API_PREFIX}/algorithms", tags=["meta"])
    def algorithms(identity: TokenIdentity = Depends(current_identity)) -> dict:
        return {"algorithms": [
            {"id": algorithm, "description": description}
            for algorithm, description in registry.list_algorithms()
        ]}

    @app.get(f"{API_PREFIX}/analysis/summary", tags=["analysis"])
    def summary(request: Request, term: list[str] = FastAPIQuery(...),
                algorithm: str = "valence-rule", lang: str | None = None,
                time_from: str | None = None, time_to: str | None = None,
                origin: str | None = None, max_results: str | None = None,
                identity: TokenIdentity = Depends(require_scope("search"))):
        results, digest, algo = _search(request, term, algorithm, lang, time_from,
                                        time_to, origin, max_results)
        dist = analytics.polarity_distribution(results)
        return JSONResponse({
            "algorithm": algo,
            "query_digest": digest,
            "total": dist.total,
            "counts": dist.counts,
            "fractions": {k: _round4(v) for k, v in dist.fractions.items()},
        })

    @app.get(f"{API_PREFIX}/analysis/timeline", tags=["analysis"])
    def timeline_widget(request: Request, term: list[str] = FastAPIQuery(...),
                        algorithm: str = "valence-rule", lang: str | None = None,
                        time_from: str | None = None, time_to: str | None = None,
                        origin: str | None = None, max_results: str | None = None,
                        bin_seconds: int | None = None,
                        identity: TokenIdentity = Depends(require_scope("search"))):
        results, digest, algo = _search(request, term, algorithm, lang, time_from,
                                        time_to, origin, max_results)
        width = bin_seconds or analytics.default_bin_width(results)
        bins = analytics.timeline(results, width)
        return JSONResponse({
            "algorithm": algo,
            "query_digest": digest,
            "bin_seconds": width,
            "bins": [
                {
                    "bin_start": format_timestamp(b.bin_start),
                    "counts": b.counts,
                    "mean_compound": _round4(b.mean_compound),
                }
                for b in bins
            ],
        })

    @app.get(f"{API_PREFIX}/analysis/tagcloud", tags=["analysis"])
    def tagcloud(request: Request, term: list[str] = FastAPIQuery(...),
                 algorithm: str = "valence-rule", lang: str | None = None,
                 time_from: str | None = None, time_to: str | None = None,
                 origin: str | None = None, max_results: str | None = None,
                 k: int = 50,
                 identity: TokenIdentity = Depends(require_scope("search"))):
        results, digest, algo = _search(request, term, algorithm, lang, time_from,
                                        time_to, origin, max_results)
        terms = analytics.tag_cloud([c.post for c in results], k, stopwords)
        return JSONResponse({
            "algorithm": algo,
            "query_digest": digest,
            "terms": [{"term": t.term, "weight": t.weight} for t in terms],
        })

    @app.get(f"{API_PREFIX}/analysis/map", tags=["analysis"])
    def map_widget(request: Request, term: list[str] = FastAPIQuery(...),
                   algorithm: str = "valence-rule", lang: str | None = None,
                   time_from: str | None = None, time_to: str | None = None,
                   origin: str | None = None, max_results: str | None = None,
                   identity: TokenIdentity = Depends(require_scope("search"))):
        results, digest, algo = _search(request, term, algorithm, lang, time_from,
                                        time_to, origin, max_results)
        return JSONResponse({
            "algorithm": algo,
            "query_digest": digest,
            "countries": [
                {
                    "country": c.country,
                    "counts": c.counts,
                    "mean_compound": _round4(c.mean_compound),
                    "total": c.total,
                }
                for c in analytics.geo_summary(results)
            ],
        })

    @app.get(f"{API_PREFIX}/analysis/posts", tags=["analysis"])
    def posts(request: Request, term: list[str] = FastAPIQuery(...),
              algorithm: str = "valence-rule", lang: str | None = None,
              time_from: str | None = None, time_to: str | None = None,
              origin: str | None = None, max_results: str | None = None,
              identity: TokenIdentity = Depends(require_scope("search"))):
        results, digest, algo = _search(request, term, algorithm, lang, time_from,
                                        time_to, origin, max_results)
        return JSONResponse({
            "algorithm": algo,
            "query_digest": digest,
            "posts": [_post_payload(c) for c in results],
        })

    @app.get(f"{API_PREFIX}/analysis/export.csv", tags=["analysis"],
             response_class=StreamingResponse)
    def export_csv(request: Request, term: list[str] = FastAPIQuery(...),
                   algorithm: str = "valence-rule", lang: str | None = None,
                   time_from: str | None = None, time_to: str | None = None,
                   origin: str | None = None, max_results: str | None = None,
                   identity: TokenIdentity = Depends(require_scope("export"))):
        results, digest, _ = _search(request, term, algorithm, lang, time_from,
                                     time_to, origin, max_results)
        body = analytics.to_csv(results)
        date = datetime.now(timezone.utc).strftime("%Y%m%d")
        filename = f"sentiboard-{digest[:12]}-{date}.csv"

        def chunks() -> Iterator[bytes]:
            for offset in range(0, len(body), CSV_CHUNK):
                yield body[offset:offset + CSV_CHUNK]

        return StreamingResponse(
            chunks(),
            media_type="text/csv; charset=utf-8",
            headers={"Content-Disposition": f'attachment; filename="{filename}"'},
        )

    # ----- machine-readable API description ----------------------------------

    def describe_api() -> dict:
        if app.openapi_schema:
            return app.openapi_schema
        schema = get_openapi(title=app.title, version=app.version,
                             description=app.description, routes=app.routes)
        algorithm_ids = registry.algorithms()
        schema.setdefault("components", {}).setdefault("schemas", {})["AlgorithmId"] = {
            "type": "string",
            "enum": algorithm_ids,
            "description": "registered sentiment algorithms",
        }
        for path_item in schema.get("paths", {}).values():
            for operation in path_item.values():
                for parameter in operation.get("parameters", []):
                    if parameter.get("name") == "algorithm":
                        parameter["schema"] = {
                            "type": "string",
                            "enum": algorithm_ids,
                            "default": "valence-rule",
                        }
        app.openapi_schema = schema
        return schema

    app.openapi = describe_api  # type: ignore[method-assign]
    return app
