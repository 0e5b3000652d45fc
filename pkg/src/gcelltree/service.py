"""Read-only HTTP API over the generator pipeline, plus static assets for
the browser explorer.

Every endpoint is a pure function of its request, so responses are
cacheable and repeated identical requests produce byte-identical bodies.
Invalid parameters return 400 with a machine-readable reason; requests that
are well-formed but outside the supported envelope (ceilings, overflow,
width underflow) return 422.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import JSONResponse, Response

from .errors import IterationCapError, ValueOverflowError, WidthUnderflowError
from .collatz import U64_MAX, trajectory
from .gcell import generate_network
from .interchange import emit_interchange
from .layout import DEFAULT_BASE_WIDTH, layout_network
from .scene import emit_vrml

API_PREFIX = "/api/v1"

MAX_VALUE_CEILING = 10**7
MAX_GENERATION_CEILING = 64

FORMATS = {
    "interchange": "application/json",
    "wrl": "model/vrml",
}


@dataclass(frozen=True)
class RegionRequest:
    """A validated region query."""

    seed: int
    max_value: int
    max_generation: int | None
    format: str


class BadRequest(ValueError):
    """Parameter validation failure (400-class)."""


class Unprocessable(ValueError):
    """Well-formed but unsupportable request (422-class)."""


def _parse_int(raw: str, name: str) -> int:
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise BadRequest(f"{name} must be an integer, got {raw!r}") from None


def parse_region_request(
    seed: str | None,
    max_value: str | None,
    max_gen: str | None,
    fmt: str | None,
) -> RegionRequest:
    """Validate raw query parameters into a RegionRequest."""
    if max_value is None:
        raise BadRequest("max_value is required")
    mv = _parse_int(max_value, "max_value")
    s = _parse_int(seed, "seed") if seed is not None else 1
    if s < 1:
        raise BadRequest(f"seed must be >= 1, got {s}")
    if mv < 1:
        raise BadRequest(f"max_value must be >= 1, got {mv}")
    if s > mv:
        raise BadRequest(f"seed {s} exceeds max_value {mv}")
    mg = None
    if max_gen is not None:
        mg = _parse_int(max_gen, "max_gen")
        if mg < 0:
            raise BadRequest(f"max_gen must be >= 0, got {mg}")
    f = fmt if fmt is not None else "interchange"
    if f not in FORMATS:
        raise BadRequest(f"format must be one of {sorted(FORMATS)}, got {f!r}")
    if mv > MAX_VALUE_CEILING:
        raise Unprocessable(f"max_value {mv} exceeds the ceiling {MAX_VALUE_CEILING}")
    if mg is not None and mg > MAX_GENERATION_CEILING:
        raise Unprocessable(f"max_gen {mg} exceeds the ceiling {MAX_GENERATION_CEILING}")
    return RegionRequest(seed=s, max_value=mv, max_generation=mg, format=f)


@functools.lru_cache(maxsize=64)
def _region_bytes(seed: int, max_value: int, max_generation: int | None,
                  fmt: str) -> bytes:
    net = generate_network(seed, max_value, max_generation)
    if not net.nodes:
        raise Unprocessable(
            f"region is empty: no values <= {max_value} reachable from seed {seed}"
        )
    placed = layout_network(net, DEFAULT_BASE_WIDTH)
    if fmt == "wrl":
        return emit_vrml(placed).encode("utf-8")
    return emit_interchange(placed).encode("utf-8")


def region_document(req: RegionRequest) -> tuple[bytes, str]:
    """Run generate -> layout -> emit; identical requests yield identical
    bytes.  Raises Unprocessable on width underflow or overflow."""
    try:
        body = _region_bytes(req.seed, req.max_value, req.max_generation, req.format)
    except (WidthUnderflowError, ValueOverflowError) as exc:
        raise Unprocessable(str(exc)) from exc
    return body, FORMATS[req.format]


def trajectory_body(n: int) -> dict:
    """Structured trajectory payload; raises Unprocessable on overflow/cap."""
    if n < 1:
        raise BadRequest(f"start must be >= 1, got {n}")
    if n > U64_MAX:
        raise BadRequest(f"start {n} exceeds the 64-bit unsigned range")
    try:
        t = trajectory(n)
    except (ValueOverflowError, IterationCapError) as exc:
        raise Unprocessable(str(exc)) from exc
    return {"start": t.start, "steps": list(t.steps), "length": t.length, "peak": t.peak}


def create_app(assets_dir: str | Path | None = None) -> FastAPI:
    """Build the API app; static explorer assets are mounted only when the
    directory exists, so the service runs with no frontend built."""
    app = FastAPI(title="gcelltree", docs_url=None, redoc_url=None)

    @app.exception_handler(BadRequest)
    async def _bad_request(request, exc):
        return JSONResponse(status_code=400, content={"reason": str(exc)})

    @app.exception_handler(Unprocessable)
    async def _unprocessable(request, exc):
        return JSONResponse(status_code=422, content={"reason": str(exc)})

    @app.get(API_PREFIX + "/health")
    def health():
        return {"status": "ok"}

    @app.get(API_PREFIX + "/trajectory/{n}")
    def get_trajectory(n: str):
        try:
            value = int(n)
        except ValueError:
            raise BadRequest(f"start must be an integer, got {n!r}") from None
        return trajectory_body(value)

    @app.get(API_PREFIX + "/region")
    def get_region(seed: str | None = None, max_value: str | None = None,
                   max_gen: str | None = None, format: str | None = None):
        req = parse_region_request(seed, max_value, max_gen, format)
        body, media_type = region_document(req)
        return Response(
            content=body,
            media_type=media_type,
            headers={"Cache-Control": "public, max-age=3600"},
        )

    if assets_dir is not None:
        path = Path(assets_dir)
        if path.is_dir():
            from fastapi.staticfiles import StaticFiles

            app.mount("/", StaticFiles(directory=path, html=True), name="assets")

    return app
