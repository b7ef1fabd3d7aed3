"""Convex polygon combinatorics: chords, triangulations, flips, crossing walks.

Vertices of the N-gon are labelled 1..N clockwise and reduced modulo N on
input.  Everything downstream (quivers, friezes, mutation regions) is built
on the two primitives here: the strict-interleaving crossing test and the
ordered crossing walk of a chord through a triangulation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field


class TriangulationError(ValueError):
    """Raised when a set of diagonals is not a triangulation."""


def _norm_vertex(v: int, n: int) -> int:
    """Reduce a vertex label into 1..n."""
    return (int(v) - 1) % n + 1


@dataclass(frozen=True, order=True)
class Chord:
    """Unordered pair of distinct vertices of a convex n-gon.

    Stored normalized with a < b.  A chord of cyclic distance 1 is a
    boundary segment, anything further is a diagonal.
    """

    a: int
    b: int
    n: int

    @property
    def span(self) -> int:
        """Cyclic distance between the endpoints."""
        d = (self.b - self.a) % self.n
        return min(d, self.n - d)

    @property
    def is_boundary(self) -> bool:
        return self.span == 1

    @property
    def is_diagonal(self) -> bool:
        return self.span >= 2

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.a, self.b)

    def shares_endpoint(self, other: "Chord") -> bool:
        return bool({self.a, self.b} & {other.a, other.b})

    def shift(self, k: int) -> "Chord":
        """Rotate both endpoints by k steps (clockwise for k > 0)."""
        return chord(self.a + k, self.b + k, self.n)

    def crosses(self, other: "Chord") -> bool:
        return chord_crosses(self, other)

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


def chord(i: int, j: int, n: int) -> Chord:
    """Build a chord of the n-gon, reducing labels mod n."""
    if n < 4:
        raise ValueError(f"polygon size must be at least 4, got {n}")
    a, b = _norm_vertex(i, n), _norm_vertex(j, n)
    if a == b:
        raise ValueError(f"degenerate chord {i}-{j} in an {n}-gon")
    if a > b:
        a, b = b, a
    return Chord(a, b, n)


def parse_chord(text: str, n: int) -> Chord:
    """Parse 'i-j' into a chord of the n-gon."""
    try:
        i, j = (int(part) for part in text.strip().split("-"))
    except ValueError as exc:
        raise ValueError(f"cannot parse chord {text!r}, expected 'i-j'") from exc
    return chord(i, j, n)


def chord_crosses(x: Chord, y: Chord) -> bool:
    """True iff the endpoints of x and y strictly interleave cyclically.

    Chords sharing an endpoint never cross; boundary segments never cross
    anything.
    """
    if x.n != y.n:
        raise ValueError(f"polygon size mismatch: {x.n} vs {y.n}")
    if x.shares_endpoint(y):
        return False
    # x is normalized a < b, so "strictly inside" is a plain interval test.
    in_a = x.a < y.a < x.b
    in_b = x.a < y.b < x.b
    return in_a != in_b


@dataclass(frozen=True)
class Quadrilateral:
    """The quadrilateral of a diagonal a in a triangulation.

    Sides b, c share one endpoint of a; d, e share the other.  b is
    opposite d and c is opposite e, and the side labels satisfy the
    rotation-arrow pattern b -> a -> c, d -> a -> e, e -> b, c -> d of the
    triangulation quiver.  The corner vertices are kept as p, q, r, s with
    a = {p, r}, a_flip = {q, s} and the clockwise corner order q, p, s, r.
    """

    a: Chord
    a_flip: Chord
    b: Chord
    c: Chord
    d: Chord
    e: Chord
    p: int
    q: int
    r: int
    s: int

    def sides(self) -> dict[str, Chord]:
        return {"b": self.b, "c": self.c, "d": self.d, "e": self.e}


@dataclass(frozen=True)
class Triangulation:
    """A maximal set of pairwise noncrossing diagonals of an n-gon."""

    n: int
    diagonals: frozenset[Chord]
    _triangles: tuple[tuple[int, int, int], ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self):
        object.__setattr__(self, "_triangles", self._compute_triangles())

    def __contains__(self, c: Chord) -> bool:
        return c in self.diagonals

    def chord(self, i: int, j: int) -> Chord:
        return chord(i, j, self.n)

    def is_edge(self, c: Chord) -> bool:
        return c.is_boundary or c in self.diagonals

    def _compute_triangles(self) -> tuple[tuple[int, int, int], ...]:
        # In a triangulated convex polygon every pairwise-adjacent vertex
        # triple bounds a face, so the face list is exactly these triples.
        tris = []
        for u, v, w in itertools.combinations(range(1, self.n + 1), 3):
            if (
                self.is_edge(chord(u, v, self.n))
                and self.is_edge(chord(v, w, self.n))
                and self.is_edge(chord(u, w, self.n))
            ):
                tris.append((u, v, w))
        return tuple(tris)

    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        return self._triangles

    def quiddity(self) -> tuple[int, ...]:
        """Number of triangles incident with each vertex, in vertex order."""
        counts = [0] * (self.n + 1)
        for tri in self._triangles:
            for v in tri:
                counts[v] += 1
        return tuple(counts[1:])

    def quadrilateral(self, a: Chord) -> Quadrilateral:
        """Sides and corners of the quadrilateral framing the diagonal a."""
        if a not in self.diagonals:
            raise ValueError(f"diagonal {a} is not in the triangulation")
        p, r = a.a, a.b  # normalized: p < r
        s = self._apex(p, r, inside=True)
        q = self._apex(p, r, inside=False)
        mk = lambda u, v: chord(u, v, self.n)
        return Quadrilateral(
            a=a,
            a_flip=mk(q, s),
            b=mk(r, q),
            c=mk(s, r),
            d=mk(p, s),
            e=mk(q, p),
            p=p,
            q=q,
            r=r,
            s=s,
        )

    def _apex(self, p: int, r: int, inside: bool) -> int:
        """Apex of the triangle on chord {p,r}, on the chosen side.

        inside=True looks at vertices strictly between p and r (as plain
        integers, p < r), inside=False at the complementary arc.
        """
        if inside:
            candidates = range(p + 1, r)
        else:
            candidates = itertools.chain(range(r + 1, self.n + 1), range(1, p))
        for z in candidates:
            if self.is_edge(chord(p, z, self.n)) and self.is_edge(chord(z, r, self.n)):
                return z
        raise RuntimeError(f"no apex for {p}-{r}; triangulation is broken")

    def flip(self, a: Chord) -> tuple["Triangulation", Chord]:
        """Replace a by the other diagonal of its quadrilateral."""
        quad = self.quadrilateral(a)
        new = triangulation(
            self.n, [c for c in self.diagonals if c != a] + [quad.a_flip]
        )
        return new, quad.a_flip

    def crossing_walk(self, d: Chord) -> tuple[Chord, ...]:
        """Diagonals of the triangulation crossed by d, in traversal order.

        The walk is oriented from the lower-numbered endpoint of d.
        Consecutive entries share an endpoint (they bound a triangle crossed
        by d); the walk is empty iff d crosses nothing.
        """
        if d in self.diagonals:
            raise ValueError(f"{d} is a diagonal of the triangulation")
        if not d.is_diagonal:
            raise ValueError(f"{d} is not a diagonal")
        crossed = [x for x in self.diagonals if chord_crosses(d, x)]
        u = d.a
        return tuple(sorted(crossed, key=lambda x: self._separation_key(u, x, crossed)))

    def _separation_key(self, u: int, x: Chord, crossed: list[Chord]) -> int:
        """Number of crossed diagonals separating vertex u from x."""
        return sum(1 for z in crossed if z != x and _separates(z, u, x))


def _separates(z: Chord, u: int, x: Chord) -> bool:
    """Does chord z separate vertex u from chord x (noncrossing with z)?"""
    # Side of z containing u, as an open arc test; x is on the far side
    # when neither endpoint of x lies strictly on u's side.
    def on_u_side(w: int) -> bool:
        inside = z.a < w < z.b
        u_inside = z.a < u < z.b
        return inside == u_inside

    if w_in_chord := ({x.a, x.b} & {z.a, z.b}):
        # Shared endpoints sit on the boundary between the sides.
        other = ({x.a, x.b} - w_in_chord) or {x.a}
        return all(not on_u_side(w) for w in other)
    return not on_u_side(x.a) and not on_u_side(x.b)


def triangulation(n: int, diagonals) -> Triangulation:
    """Validate and build a triangulation of the n-gon.

    Accepts chords or (i, j) pairs.  Rejects non-triangulations with a
    diagnostic naming the first crossing pair or the cardinality defect.
    """
    if n < 4:
        raise TriangulationError(f"polygon size must be at least 4, got {n}")
    chords = []
    for item in diagonals:
        c = item if isinstance(item, Chord) else chord(item[0], item[1], n)
        if c.n != n:
            raise TriangulationError(f"chord {c} belongs to a {c.n}-gon, not {n}-gon")
        if not c.is_diagonal:
            raise TriangulationError(f"{c} is a boundary segment, not a diagonal")
        chords.append(c)
    for x, y in itertools.combinations(sorted(set(chords)), 2):
        if chord_crosses(x, y):
            raise TriangulationError(f"diagonals cross: {x} and {y}")
    uniq = frozenset(chords)
    if len(uniq) != n - 3:
        raise TriangulationError(
            f"expected {n - 3} diagonals for an {n}-gon, got {len(uniq)}"
        )
    return Triangulation(n, uniq)


def parse_triangulation(text: str) -> Triangulation:
    """Parse the text encoding 'N; i1-j1, i2-j2, ...'."""
    try:
        head, _, tail = text.partition(";")
        n = int(head.strip())
    except ValueError as exc:
        raise TriangulationError(f"cannot parse polygon size in {text!r}") from exc
    parts = [p for p in (s.strip() for s in tail.split(",")) if p]
    return triangulation(n, [parse_chord(p, n) for p in parts])


def format_triangulation(t: Triangulation) -> str:
    return f"{t.n}; " + ", ".join(str(c) for c in sorted(t.diagonals))


def triangulation_from_dict(data: dict) -> Triangulation:
    """Build from the structured encoding {"n": N, "diagonals": [[i,j],...]}."""
    try:
        n = int(data["n"])
        pairs = data["diagonals"]
    except (KeyError, TypeError, ValueError) as exc:
        raise TriangulationError(f"malformed triangulation object: {exc}") from exc
    return triangulation(n, pairs)


def triangulation_to_dict(t: Triangulation) -> dict:
    return {"n": t.n, "diagonals": [[c.a, c.b] for c in sorted(t.diagonals)]}


def all_diagonals(n: int) -> list[Chord]:
    return [
        chord(i, j, n)
        for i, j in itertools.combinations(range(1, n + 1), 2)
        if chord(i, j, n).is_diagonal
    ]


def all_triangulations(n: int) -> list[Triangulation]:
    """Every triangulation of the n-gon (Catalan(n-2) of them)."""

    def rec(verts: tuple[int, ...]):
        if len(verts) < 3:
            yield []
            return
        first, last = verts[0], verts[-1]
        for k in range(1, len(verts) - 1):
            apex = verts[k]
            for left in rec(verts[: k + 1]):
                for right in rec(verts[k:]):
                    extra = []
                    for u, v in ((first, apex), (apex, last)):
                        c = chord(u, v, n)
                        if c.is_diagonal:
                            extra.append(c)
                    yield left + right + extra

    out = []
    seen = set()
    for diags in rec(tuple(range(1, n + 1))):
        key = frozenset(diags)
        if key not in seen:
            seen.add(key)
            out.append(Triangulation(n, key))
    return out


def random_triangulation(n: int, rng: random.Random) -> Triangulation:
    """A seeded random triangulation (not uniform, just well scrambled)."""
    diags: list[Chord] = []

    def split(verts: tuple[int, ...]):
        if len(verts) < 3:
            return
        first, last = verts[0], verts[-1]
        apex = verts[rng.randrange(1, len(verts) - 1)]
        for u, v in ((first, apex), (apex, last)):
            c = chord(u, v, n)
            if c.is_diagonal:
                diags.append(c)
        k = verts.index(apex)
        split(verts[: k + 1])
        split(verts[k:])

    split(tuple(range(1, n + 1)))
    return triangulation(n, diags)
