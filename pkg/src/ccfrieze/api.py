"""Stateless HTTP/JSON facade over the library.

Every request carries a full triangulation, so identical requests give
identical responses.  Big integers are serialized as decimal strings.
Malformed inputs get a 400 with the offending field named; syntactically
valid but non-flippable targets get a 422.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .frieze import Frieze, frieze_from_cc
from .mutation import delta_map, mutate_frieze, region_map
from .polygon import (
    Triangulation,
    TriangulationError,
    chord,
    parse_triangulation,
    triangulation_from_dict,
)
from .strings import parse_shape, parse_walk, s_bruteforce, s_recursive

MAX_POLYGON = int(os.environ.get("FRIEZE_MAX_N", "40"))
MAX_SHAPE_LEGS = 64
MAX_LEG_LENGTH = 10**12

app = FastAPI(title="ccfrieze", version=__version__)
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


class ApiError(Exception):
    def __init__(self, status: int, field: str, message: str):
        self.status = status
        self.field = field
        self.message = message


@app.exception_handler(ApiError)
async def api_error_handler(_request: Request, exc: ApiError):
    return JSONResponse(
        status_code=exc.status,
        content={"error": {"field": exc.field, "message": exc.message}},
    )


def _read_triangulation(body: dict) -> Triangulation:
    raw = body.get("triangulation")
    if raw is None:
        raise ApiError(400, "triangulation", "missing field")
    try:
        if isinstance(raw, str):
            t = parse_triangulation(raw)
        elif isinstance(raw, dict):
            t = triangulation_from_dict(raw)
        else:
            raise TriangulationError("expected a string or an object")
    except (TriangulationError, ValueError) as exc:
        raise ApiError(400, "triangulation", str(exc)) from exc
    if t.n > MAX_POLYGON:
        raise ApiError(400, "triangulation", f"polygon size capped at {MAX_POLYGON}")
    return t


def _read_at(body: dict, t: Triangulation):
    raw = body.get("at")
    if raw is None:
        raise ApiError(400, "at", "missing field")
    try:
        if isinstance(raw, str):
            i, j = (int(p) for p in raw.split("-"))
        else:
            i, j = (int(v) for v in raw)
        a = chord(i, j, t.n)
    except (TypeError, ValueError) as exc:
        raise ApiError(400, "at", str(exc)) from exc
    if a not in t.diagonals:
        raise ApiError(422, "at", f"{a} is not a flippable diagonal")
    return a


def _frieze_payload(f: Frieze) -> dict:
    return {
        "n": f.n,
        "entries": {str(c): str(f.entries[c]) for c in sorted(f.entries)},
    }


def _triangulation_payload(t: Triangulation) -> dict:
    return {"n": t.n, "diagonals": [[c.a, c.b] for c in sorted(t.diagonals)]}


@app.get("/api/health")
async def health():
    return {"status": "ok", "version": __version__}


@app.post("/api/frieze")
async def frieze_endpoint(request: Request):
    body = await _json_body(request)
    t = _read_triangulation(body)
    f = frieze_from_cc(t)
    return {
        "frieze": _frieze_payload(f),
        "quiddity": list(t.quiddity()),
        "unit_positions": [str(c) for c in sorted(t.diagonals)],
    }


@app.post("/api/flip")
async def flip_endpoint(request: Request):
    body = await _json_body(request)
    t = _read_triangulation(body)
    a = _read_at(body, t)
    flipped, new_diag = t.flip(a)
    return {
        "triangulation": _triangulation_payload(flipped),
        "new_diagonal": str(new_diag),
    }


@app.post("/api/mutate")
async def mutate_endpoint(request: Request):
    body = await _json_body(request)
    t = _read_triangulation(body)
    a = _read_at(body, t)
    f = frieze_from_cc(t)
    mutated, flipped = mutate_frieze(f, t, a)
    deltas = delta_map(f, t, a)
    regions = region_map(t, a)
    return {
        "frieze_before": _frieze_payload(f),
        "frieze_after": _frieze_payload(mutated),
        "delta": {str(c): deltas[c] for c in sorted(deltas)},
        "regions": {str(c): regions[c].value for c in sorted(regions)},
        "flip": {
            "at": str(a),
            "new_diagonal": str(next(iter(flipped.diagonals - t.diagonals))),
            "triangulation": _triangulation_payload(flipped),
        },
    }


@app.post("/api/submodules")
async def submodules_endpoint(request: Request):
    body = await _json_body(request)
    sh = body.get("shape")
    wk = body.get("walk")
    if sh is not None:
        try:
            parsed = (
                parse_shape(sh) if isinstance(sh, str)
                else parse_shape(",".join(str(int(k)) for k in sh))
            )
        except (TypeError, ValueError) as exc:
            raise ApiError(400, "shape", str(exc)) from exc
        if parsed.m > MAX_SHAPE_LEGS or any(k > MAX_LEG_LENGTH for k in parsed.legs):
            raise ApiError(400, "shape", f"shape capped at {MAX_SHAPE_LEGS} legs "
                                         f"of length {MAX_LEG_LENGTH}")
        return {"count": str(s_recursive(parsed))}
    if wk is not None:
        try:
            parsed_walk = parse_walk(wk)
            count = s_bruteforce(parsed_walk)
        except (TypeError, ValueError) as exc:
            raise ApiError(400, "walk", str(exc)) from exc
        return {"count": str(count)}
    raise ApiError(400, "shape", "provide either a shape or a walk")


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except Exception as exc:
        raise ApiError(400, "body", f"invalid JSON: {exc}") from exc
    if not isinstance(body, dict):
        raise ApiError(400, "body", "expected a JSON object")
    return body
