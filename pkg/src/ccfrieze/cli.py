"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage error.  Results go
to stdout, diagnostics as JSON objects to stderr.  ANSI coloring of the
ASCII renderer is disabled by FRIEZE_NO_COLOR.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import viz
from .frieze import (
    FriezeDecodeError,
    frieze_from_cc,
    frieze_from_dict,
    frieze_to_dict,
    render_ascii,
    validate_frieze,
)
from .mutation import delta_report, mutate_frieze
from .polygon import (
    Triangulation,
    TriangulationError,
    parse_chord,
    parse_triangulation,
    format_triangulation,
    triangulation_from_dict,
    triangulation_to_dict,
)
from .quiver import mutate_quiver, quiver_from_dict, quiver_to_dict
from .strings import parse_shape, parse_walk, s_bruteforce, s_formula
from .sweep import random_sweep, sweep


def _fail(message: str, code: int = 1):
    print(json.dumps({"error": message}), file=sys.stderr)
    sys.exit(code)


def _load_triangulation(spec_text: str) -> Triangulation:
    """Accept an inline 'N; i-j, ...' string, a JSON object, or a file path."""
    path = Path(spec_text)
    try:
        if path.is_file():
            spec_text = path.read_text().strip()
        if spec_text.lstrip().startswith("{"):
            return triangulation_from_dict(json.loads(spec_text))
        return parse_triangulation(spec_text)
    except (TriangulationError, ValueError, json.JSONDecodeError) as exc:
        _fail(str(exc))


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("FRIEZE_NO_COLOR")


@click.group()
def main():
    """Friezes from triangulations, submodule counts, and frieze mutation."""


@main.command("frieze-gen")
@click.option("--triangulation", "tri", required=True,
              help="inline 'N; i-j, ...' or JSON or a file path")
@click.option("--format", "fmt", type=click.Choice(["ascii", "data"]),
              default="ascii", show_default=True)
@click.option("--periods", default=1, show_default=True,
              help="repetitions of the fundamental period in ascii output")
@click.option("--report", "report_dir", default=None,
              help="directory for figures and CSV output")
def frieze_gen(tri, fmt, periods, report_dir):
    """Build the frieze of a triangulation."""
    t = _load_triangulation(tri)
    f = frieze_from_cc(t)
    if fmt == "data":
        print(json.dumps(frieze_to_dict(f)))
    else:
        print(render_ascii(f, periods=periods, color=_color_enabled()))
    if report_dir:
        written = viz.write_frieze_report(report_dir, f, t)
        print(json.dumps({"report": report_dir, "files": written}), file=sys.stderr)


@main.command("frieze-mutate")
@click.option("--triangulation", "tri", required=True)
@click.option("--at", "at_", required=True, help="diagonal i-j to mutate at")
@click.option("--show-regions", is_flag=True)
@click.option("--show-delta", is_flag=True)
@click.option("--format", "fmt", type=click.Choice(["ascii", "data"]),
              default="ascii", show_default=True)
@click.option("--report", "report_dir", default=None)
def frieze_mutate(tri, at_, show_regions, show_delta, fmt, report_dir):
    """Mutate the frieze of a triangulation at one diagonal."""
    t = _load_triangulation(tri)
    try:
        a = parse_chord(at_, t.n)
    except ValueError as exc:
        _fail(str(exc), code=2)
    if a not in t.diagonals:
        _fail(f"{a} is not a diagonal of the triangulation")
    f = frieze_from_cc(t)
    mutated, flipped = mutate_frieze(f, t, a)
    report = delta_report(f, t, a)
    if fmt == "data":
        payload = {
            "at": report["at"],
            "flip": report["flip"],
            "triangulation": triangulation_to_dict(flipped),
            "frieze": frieze_to_dict(mutated),
        }
        if show_regions:
            payload["regions"] = report["regions"]
        if show_delta:
            payload["delta"] = report["delta"]
        print(json.dumps(payload))
    else:
        print(render_ascii(mutated, color=_color_enabled()))
        print(f"flip: {report['at']} -> {report['flip']}")
        if show_regions:
            print("regions:", json.dumps(report["regions"]))
        if show_delta:
            print("delta:", json.dumps(report["delta"]))
    if report_dir:
        written = viz.write_mutation_report(report_dir, f, t, a, mutated, flipped)
        print(json.dumps({"report": report_dir, "files": written}), file=sys.stderr)


@main.command("frieze-check")
@click.option("--frieze", "frieze_src", required=True,
              help="JSON frieze object or a file path")
def frieze_check(frieze_src):
    """Validate the frieze rule; exit 1 on violation."""
    path = Path(frieze_src)
    text = path.read_text() if path.is_file() else frieze_src
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        _fail(f"not valid JSON: {exc}", code=2)
    try:
        f = frieze_from_dict(data)
    except FriezeDecodeError as exc:
        _fail(str(exc))
    report = validate_frieze(f)
    print(report.summary())
    sys.exit(0 if report.ok else 1)


@main.command("submod-count")
@click.option("--shape", "shape_text", required=True,
              help="comma list like 1,3,1; 'simple' for the empty shape")
def submod_count(shape_text):
    """Number of submodules of a string module of the given shape."""
    try:
        sh = parse_shape(shape_text)
    except ValueError as exc:
        _fail(str(exc), code=2)
    print(s_formula(sh))


@main.command("submod-oracle")
@click.option("--walk", "walk_text", required=True,
              help="walk like '1<2>3>4>5<6'")
def submod_oracle(walk_text):
    """Submodule count by exhaustive enumeration over a concrete walk."""
    try:
        w = parse_walk(walk_text)
    except ValueError as exc:
        _fail(str(exc), code=2)
    print(s_bruteforce(w))


@main.command("triang-flip")
@click.option("--triangulation", "tri", required=True)
@click.option("--at", "at_", required=True)
def triang_flip(tri, at_):
    """Flip one diagonal; prints the new triangulation and diagonal."""
    t = _load_triangulation(tri)
    try:
        a = parse_chord(at_, t.n)
    except ValueError as exc:
        _fail(str(exc), code=2)
    if a not in t.diagonals:
        _fail(f"{a} is not a diagonal of the triangulation")
    flipped, new_diag = t.flip(a)
    print(format_triangulation(flipped))
    print(f"flip: {a} -> {new_diag}")


@main.command("quiver-mutate")
@click.option("--quiver", "quiver_src", required=True,
              help="JSON quiver object or a file path")
@click.option("--at", "at_", required=True, help="vertex label")
def quiver_mutate(quiver_src, at_):
    """Fomin-Zelevinsky mutation of a quiver at a vertex."""
    path = Path(quiver_src)
    text = path.read_text() if path.is_file() else quiver_src
    try:
        q = quiver_from_dict(json.loads(text))
    except (ValueError, json.JSONDecodeError) as exc:
        _fail(str(exc), code=2)
    label = int(at_) if at_.lstrip("-").isdigit() else at_
    if label not in q.vertices:
        _fail(f"{at_} is not a vertex of the quiver")
    print(json.dumps(quiver_to_dict(mutate_quiver(q, label))))


@main.command("sweep-verify")
@click.option("--n-max", default=9, show_default=True)
@click.option("--n-min", default=5, show_default=True)
@click.option("--random-n", default=0,
              help="additionally run seeded random checks at this polygon size")
@click.option("--samples", default=5, show_default=True)
@click.option("--seed", default=0, show_default=True)
def sweep_verify(n_max, n_min, random_n, samples, seed):
    """Exhaustive mutation-soundness sweep; exit 1 on any mismatch."""
    def progress(n, total):
        print(f"  up to {n}-gon: {total.triangulations} triangulations, "
              f"{total.mutations} mutations, {total.seconds:.1f}s")

    result = sweep(n_min, n_max, progress=progress)
    if random_n:
        result.merge(random_sweep([random_n], samples=samples, seed=seed))
    status = "ok" if result.ok else "FAILED"
    print(f"checked {result.triangulations} triangulations, "
          f"{result.mutations} mutations in {result.seconds:.1f}s: {status}")
    if not result.ok:
        for line in result.failures[:20]:
            print(line, file=sys.stderr)
        sys.exit(1)


@main.command("serve")
@click.option("--port", default=None, type=int,
              help="port (default: FRIEZE_PORT or 8000)")
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port, host):
    """Run the HTTP/JSON API."""
    import uvicorn

    from .api import app

    if port is None:
        port = int(os.environ.get("FRIEZE_PORT", "8000"))
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
