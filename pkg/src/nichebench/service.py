"""Read-only HTTP facade over the rating and benchmark engines.

Every response body is exactly the engine's own serialization, so the
service adds no math of its own. The corpus loads once at startup and the
process serves it immutably; reloading data means restarting.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

from fastapi import FastAPI, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .benchmark import benchmark
from .corpus import (
    ALL_REGIONS,
    DEFAULT_YEAR_MAX,
    DEFAULT_YEAR_MIN,
    Corpus,
    load_corpus_dir,
)
from .errors import EmptyScope, InvalidQuery, NichebenchError
from .rating import DEFAULT_MIN_PUBS, RatingQuery, rate_overall, rate_subject, resolve_weights
from .serialize import overall_json, profile_json, rating_rows_json, to_json

SLIDER_MAX = 100.0  # public inputs keep weights on the 0-100 slider scale


@dataclass(frozen=True)
class ServiceConfig:
    data_dir: str
    host: str = "127.0.0.1"
    port: int = 8080
    year_min: int = DEFAULT_YEAR_MIN
    year_max: int = DEFAULT_YEAR_MAX
    default_min_pubs: int = DEFAULT_MIN_PUBS
    cors: bool = True

    @classmethod
    def from_file(cls, path: str | Path, **overrides) -> "ServiceConfig":
        """JSON key-value config; unknown keys rejected."""
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
        known = set(cls.__dataclass_fields__)
        unknown = set(raw) - known
        if unknown:
            raise InvalidQuery(f"unknown config keys: {sorted(unknown)}")
        raw.update(overrides)
        if "data_dir" not in raw:
            raise InvalidQuery("config must set data_dir")
        return cls(**raw)

    def with_env_overrides(self, env=os.environ) -> "ServiceConfig":
        cfg = self
        if env.get("NICHEBENCH_DATA"):
            cfg = replace(cfg, data_dir=env["NICHEBENCH_DATA"])
        if env.get("NICHEBENCH_PORT"):
            cfg = replace(cfg, port=int(env["NICHEBENCH_PORT"]))
        return cfg


class RateRequest(BaseModel):
    subject: int
    level: int
    years: tuple[int, int] | None = None
    region: str = ALL_REGIONS
    weights: str | list[float] = "equal"
    min_pubs: int | None = None


class BenchmarkRequest(BaseModel):
    institutions: list[str]
    subject: int
    level: int
    years: tuple[int, int] | None = None


def _check_slider_range(weights) -> None:
    if any(w > SLIDER_MAX for w in weights.as_tuple()):
        raise InvalidQuery(f"weights must be within 0-{SLIDER_MAX:g}, got {weights.as_tuple()}")


def _json_response(body: str, status_code: int = 200, headers: dict | None = None) -> Response:
    return Response(
        content=body, status_code=status_code, media_type="application/json", headers=headers
    )


def _taxonomy_tree(corpus: Corpus) -> list[dict]:
    def subtree(code: int) -> dict:
        node = corpus.taxonomy.nodes[code]
        children = sorted(corpus.taxonomy.children.get(code, ()))
        out = {"code": node.code, "name": node.name, "level": node.level}
        if children:
            out["children"] = [subtree(c) for c in children]
        return out

    return [subtree(code) for code in corpus.taxonomy.level_codes(1)]


def create_app(config: ServiceConfig, corpus: Corpus | None = None, defer_load: bool = False) -> FastAPI:
    """Build the service; the corpus loads eagerly unless defer_load is set
    (endpoints answer 503 until app.state.corpus is populated)."""
    app = FastAPI(title="nichebench", docs_url=None, redoc_url=None)
    if config.cors:
        app.add_middleware(
            CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
        )

    if corpus is None and not defer_load:
        corpus = load_corpus_dir(config.data_dir, config.year_min, config.year_max)
    app.state.corpus = corpus
    app.state.config = config
    app.state.taxonomy_body = None
    app.state.taxonomy_etag = None

    @app.exception_handler(RequestValidationError)
    async def bad_request(request, exc):
        return _json_response(to_json({"error": "ValidationError", "detail": str(exc)}), 400)

    @app.exception_handler(NichebenchError)
    async def engine_error(request, exc):
        status = 422 if isinstance(exc, EmptyScope) else 400
        return _json_response(to_json({"error": type(exc).__name__, "detail": str(exc)}), status)

    def ready() -> Corpus:
        if app.state.corpus is None:
            raise _NotReady()
        return app.state.corpus

    class _NotReady(Exception):
        pass

    @app.exception_handler(_NotReady)
    async def not_ready(request, exc):
        return _json_response(to_json({"error": "NotReady", "detail": "corpus not loaded"}), 503)

    @app.get("/api/health")
    async def health():
        body = to_json({"status": "ok", "counts": ready().summary()})
        return _json_response(body)

    @app.get("/api/taxonomy")
    async def taxonomy():
        corpus = ready()
        if app.state.taxonomy_body is None:
            body = to_json(_taxonomy_tree(corpus))
            app.state.taxonomy_body = body
            app.state.taxonomy_etag = '"' + hashlib.sha256(body.encode()).hexdigest() + '"'
        return _json_response(app.state.taxonomy_body, headers={"ETag": app.state.taxonomy_etag})

    @app.get("/api/institutions")
    async def institutions(region: str = ALL_REGIONS):
        corpus = ready()
        listing = [
            {"institution": inst.institution_id, "name": inst.name, "region": inst.region}
            for inst in corpus.institutions_in_region(region)
        ]
        return _json_response(to_json(listing))

    @app.post("/api/rate")
    async def rate(request: RateRequest):
        corpus = ready()
        weights = resolve_weights(request.weights)
        _check_slider_range(weights)
        query = RatingQuery(
            subject_code=request.subject,
            level=request.level,
            year_window=request.years or (config.year_min, config.year_max),
            region=request.region,
            weights=weights,
            min_pubs=config.default_min_pubs if request.min_pubs is None else request.min_pubs,
        )
        return _json_response(rating_rows_json(rate_subject(corpus, query)))

    @app.post("/api/benchmark")
    async def bench(request: BenchmarkRequest):
        corpus = ready()
        profile = benchmark(
            corpus,
            request.institutions,
            request.subject,
            request.level,
            request.years or (config.year_min, config.year_max),
        )
        return _json_response(profile_json(profile))

    @app.get("/api/overall")
    async def overall(region: str = ALL_REGIONS, preset: str = "equal", min_pubs: int | None = None):
        corpus = ready()
        matrix = rate_overall(
            corpus,
            region=region,
            preset=preset,
            min_pubs=config.default_min_pubs if min_pubs is None else min_pubs,
        )
        return _json_response(overall_json(matrix))

    return app
