"""Quivers of triangulations and Fomin-Zelevinsky mutation.

Vertices are diagonal chords (or opaque labels for quivers read from
files); arrows are a multiset of ordered pairs.  Comparison is
label-preserving equality, not abstract graph isomorphism.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .polygon import Chord, Triangulation, chord


@dataclass(frozen=True)
class Quiver:
    vertices: frozenset
    arrows: tuple = field(default=())

    def __post_init__(self):
        for u, v in self.arrows:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"arrow {u}->{v} uses unknown vertices")

    def arrow_counter(self) -> Counter:
        return Counter(tuple(a) for a in self.arrows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.arrow_counter() == other.arrow_counter()
        )

    def __hash__(self):
        return hash((self.vertices, frozenset(self.arrow_counter().items())))

    def has_loop_or_two_cycle(self) -> bool:
        counts = self.arrow_counter()
        for u, v in counts:
            if u == v or counts.get((v, u)):
                return True
        return False

    def relabel(self, mapping: dict) -> "Quiver":
        f = lambda x: mapping.get(x, x)
        return Quiver(
            frozenset(f(v) for v in self.vertices),
            tuple((f(u), f(v)) for u, v in self.arrows),
        )


def quiver(vertices, arrows) -> Quiver:
    return Quiver(frozenset(vertices), tuple(tuple(a) for a in arrows))


def quiver_of(t: Triangulation) -> Quiver:
    """Quiver of a triangulation: arrows by clockwise rotation.

    There is an arrow x -> y when x and y share an endpoint v and x can be
    rotated clockwise about v onto y without sweeping past another diagonal
    incident with v.
    """
    arrows = []
    for v in range(1, t.n + 1):
        incident = [c for c in t.diagonals if v in c.endpoints]
        # Clockwise angular order about v = far endpoint sorted by (w-v) mod n.
        incident.sort(key=lambda c: (other_end(c, v) - v) % t.n)
        for x, y in zip(incident, incident[1:]):
            arrows.append((x, y))
    return Quiver(frozenset(t.diagonals), tuple(arrows))


def other_end(c: Chord, v: int) -> int:
    if c.a == v:
        return c.b
    if c.b == v:
        return c.a
    raise ValueError(f"{v} is not an endpoint of {c}")


def mutate_quiver(q: Quiver, k) -> Quiver:
    """Fomin-Zelevinsky mutation at vertex k with 2-cycle cancellation."""
    if k not in q.vertices:
        raise ValueError(f"{k} is not a vertex of the quiver")
    if q.has_loop_or_two_cycle():
        raise ValueError("mutation input must have no loops or 2-cycles")
    counts = q.arrow_counter()
    new = Counter()
    into_k = Counter()
    out_of_k = Counter()
    for (u, v), m in counts.items():
        if v == k:
            into_k[u] += m
        elif u == k:
            out_of_k[v] += m
        else:
            new[(u, v)] += m
    # Composites i -> j for every path i -> k -> j.
    for i, mi in into_k.items():
        for j, mj in out_of_k.items():
            new[(i, j)] += mi * mj
    # Reverse every arrow at k.
    for u, m in into_k.items():
        new[(k, u)] += m
    for v, m in out_of_k.items():
        new[(v, k)] += m
    # Cancel 2-cycles maximally (each unordered pair settles on first visit).
    for u, v in list(new):
        m = min(new[(u, v)], new.get((v, u), 0))
        if m:
            new[(u, v)] -= m
            new[(v, u)] -= m
    arrows = []
    for (u, v), m in sorted(new.items(), key=lambda item: repr(item[0])):
        arrows.extend([(u, v)] * m)
    return Quiver(q.vertices, tuple(arrows))


def quiver_to_dict(q: Quiver) -> dict:
    lab = lambda x: str(x) if isinstance(x, Chord) else x
    return {
        "vertices": sorted((lab(v) for v in q.vertices), key=repr),
        "arrows": [[lab(u), lab(v)] for u, v in q.arrows],
    }


def quiver_from_dict(data: dict, n: int | None = None) -> Quiver:
    """Read {"vertices": [...], "arrows": [[u,v],...]}.

    When n is given, labels of the form "i-j" are parsed as chords of the
    n-gon; otherwise labels stay opaque.
    """

    def lab(x):
        if n is not None and isinstance(x, str) and "-" in x:
            i, j = x.split("-")
            return chord(int(i), int(j), n)
        return x

    try:
        vertices = [lab(v) for v in data["vertices"]]
        arrows = [(lab(u), lab(v)) for u, v in data["arrows"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed quiver object: {exc}") from exc
    return Quiver(frozenset(vertices), tuple(arrows))
