"""Auslander-Reiten combinatorics on chords.

Positions of indecomposables are chords of the polygon: diagonals for
objects of the cluster category, boundary segments for the
projective-injective boundary objects.  The translation shifts both
endpoints by one; arrows run along the two pencils of chords through a
vertex, with both coordinates decreasing.  Everything here works modulo
the covering, i.e. directly on chords.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polygon import Chord, Triangulation, chord, chord_crosses
from .quiver import quiver_of
from .strings import LEFT, RIGHT, StringShape, StringWalk


@lru_cache(maxsize=256)
def _arrow_set(t: Triangulation) -> frozenset[tuple[Chord, Chord]]:
    return frozenset(quiver_of(t).arrows)


def tau(p: Chord) -> Chord:
    """AR translation: shift both endpoints by +1."""
    if p.is_boundary:
        raise ValueError("boundary objects are projective-injective; no translation")
    return p.shift(1)


def tau_inv(p: Chord) -> Chord:
    if p.is_boundary:
        raise ValueError("boundary objects are projective-injective; no translation")
    return p.shift(-1)


def hom_nonzero(x: Chord, m: Chord) -> bool:
    """Is Hom(X, M) nonzero?  M must sit in the rectangle starting at X."""
    if x.is_boundary or m.is_boundary:
        raise ValueError("hom support is defined for diagonal positions")
    return x == m or chord_crosses(m, tau(x))


def ext_nonzero(x: Chord, y: Chord) -> bool:
    """Is Ext^1(X, Y) nonzero?  Exactly when the chords cross."""
    return chord_crosses(x, y)


def _ray(start: int, fixed: int, step: int, n: int) -> list[int]:
    """Endpoints reachable from start while {i, fixed} stays a diagonal."""
    out = []
    i = start
    while True:
        d = (i - fixed) % n
        if d in (0, 1, n - 1):
            break
        out.append((i - 1) % n + 1)
        i += step
    return out


def rectangle_from(x: Chord) -> set[Chord]:
    """Maximal rectangle starting at X, enumerated by sectional walking.

    Both rays out of X are walked with coordinates decreasing until they
    hit the rim; the rectangle is their box, with far corner tau^2 X.
    Used as the oracle against the crossing-rule shortcut in hom_nonzero.
    """
    if x.is_boundary:
        raise ValueError("rectangles start at diagonal positions")
    n = x.n
    ivals = _ray(x.a, x.b, -1, n)
    jvals = _ray(x.b, x.a, -1, n)
    far = chord(ivals[-1], jvals[-1], n)
    assert far == tau(tau(x)), "rectangle must close up at tau^2 X"
    return {chord(i, j, n) for i in ivals for j in jvals}


def rectangle_ending_at(m: Chord) -> set[Chord]:
    """Maximal rectangle ending at M (support of Hom(-, M))."""
    if m.is_boundary:
        raise ValueError("rectangles end at diagonal positions")
    n = m.n
    ivals = _ray(m.a, m.b, 1, n)
    jvals = _ray(m.b, m.a, 1, n)
    far = chord(ivals[-1], jvals[-1], n)
    assert far == tau_inv(tau_inv(m)), "rectangle must close up at tau^-2 M"
    return {chord(i, j, n) for i in ivals for j in jvals}


@dataclass(frozen=True)
class ModuleDescriptor:
    """What lives at an AR position relative to a triangulation."""

    kind: str  # "shifted_projective" | "boundary_unit" | "string"
    position: Chord
    walk: StringWalk | None = None


def projective_position(x: Chord) -> Chord:
    """Position of the projective P_x for a triangulation diagonal x."""
    return tau_inv(x)


def module_of(t: Triangulation, p: Chord) -> ModuleDescriptor:
    """Module description of the object at position p.

    Members of the triangulation carry shifted projectives, boundary
    segments the boundary units, and every other diagonal the string
    module over its crossing walk, with arrow directions read from the
    triangulation quiver.
    """
    if p.is_boundary:
        return ModuleDescriptor("boundary_unit", p)
    if p in t.diagonals:
        return ModuleDescriptor("shifted_projective", p)
    crossed = t.crossing_walk(p)
    arrows = _arrow_set(t)
    dirs = []
    for x, y in zip(crossed, crossed[1:]):
        if (x, y) in arrows:
            dirs.append(RIGHT)
        elif (y, x) in arrows:
            dirs.append(LEFT)
        else:
            raise RuntimeError(f"consecutive crossed diagonals {x},{y} not adjacent")
    return ModuleDescriptor("string", p, StringWalk(crossed, tuple(dirs)))


def shape_via_construction(t: Triangulation, p: Chord) -> StringShape:
    """Shape of the module at p read off the AR rectangle directly.

    Executes the projective-staircase procedure: take the rectangle ending
    at p, locate the positions of the projectives inside it, pick the
    first projective-bearing sectional path (minimal translation distance,
    ties toward the constant-first-coordinate ray) and read the leg
    lengths off the alternating maximal runs of projectives.  Independent
    of the crossing-walk route except for the final orientation, which is
    pinned to the walk traversal order.
    """
    if p.is_boundary or p in t.diagonals:
        raise ValueError("construction applies to non-triangulation diagonals")
    n = t.n
    k, l = p.a, p.b
    a_max = (l - k - 2) % n
    b_max = (k - l - 2) % n

    proj_positions = {projective_position(x): x for x in t.diagonals}
    cells: dict[tuple[int, int], Chord] = {}
    for alpha in range(a_max + 1):
        for beta in range(b_max + 1):
            c = chord(k + alpha, l + beta, n)
            if c in proj_positions:
                cells[(alpha, beta)] = proj_positions[c]
    if not cells:
        raise RuntimeError(f"no projectives in the rectangle ending at {p}")

    t_alpha = min(a for a, _ in cells)
    t_beta = min(b for _, b in cells)
    axis = "alpha" if t_alpha <= t_beta else "beta"

    order = _staircase(cells, axis, t_alpha if axis == "alpha" else t_beta)
    legs = _leg_lengths(order)

    # Orient to the crossing-walk traversal (lower endpoint of p first).
    first_diag = cells[order[0]]
    walk = t.crossing_walk(p)
    if len(order) > 1 and first_diag != walk[0]:
        legs = list(reversed(legs))
    return StringShape(tuple(legs))


def _staircase(cells: dict[tuple[int, int], Chord], axis: str, t0: int):
    """Zigzag through the projective cells, alternating sectional lines.

    Odd legs collect downstream along the arrows (coordinate decreasing),
    even legs upstream, switching between the two line directions at every
    turning point.
    """
    remaining = dict(cells)
    order: list[tuple[int, int]] = []
    fixed = 0 if axis == "alpha" else 1
    free = 1 - fixed

    line = sorted((c for c in remaining if c[fixed] == t0), key=lambda c: -c[free])
    for c in line:
        order.append(c)
        del remaining[c]

    downstream = False  # the second leg walks upstream to its sources
    while remaining:
        pivot = order[-1]
        fixed, free = free, fixed
        if downstream:
            line = [
                c for c in remaining
                if c[fixed] == pivot[fixed] and c[free] < pivot[free]
            ]
            line.sort(key=lambda c: -c[free])
        else:
            line = [
                c for c in remaining
                if c[fixed] == pivot[fixed] and c[free] > pivot[free]
            ]
            line.sort(key=lambda c: c[free])
        if not line:
            raise RuntimeError("projective staircase is disconnected")
        for c in line:
            order.append(c)
            del remaining[c]
        downstream = not downstream
    return order


def _leg_lengths(order: list[tuple[int, int]]) -> list[int]:
    """Run lengths of the zigzag: constant-alpha runs alternate constant-beta."""
    if len(order) <= 1:
        return []
    legs = []
    prev_axis = None
    for c1, c2 in zip(order, order[1:]):
        axis = "alpha" if c1[0] == c2[0] else "beta"
        if axis == prev_axis:
            legs[-1] += 1
        else:
            legs.append(1)
        prev_axis = axis
    return legs
