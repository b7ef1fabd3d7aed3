"""Frieze mutation: regions, ray projections, and the entrywise difference.

Relative to a diagonal a of the triangulation, every chord falls into
exactly one region read off its crossing signature against the
quadrilateral of a.  The frieze difference delta_a is computed from
frieze entries at projected positions alone: projections onto the eight
bounding rays for the four product regions, and onto the box edges of
the two Hom-hammock closures for everything between P_a[1] and S_a.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .frieze import Frieze
from .polygon import Chord, Quadrilateral, Triangulation, all_diagonals, chord


class RegionTag(str, Enum):
    PA_SHIFT = "PaShift"
    SA = "Sa"
    BC = "BC"
    DE = "DE"
    BE = "BE"
    CD = "CD"
    BD_INTERIOR = "BDInterior"
    CE_INTERIOR = "CEInterior"
    RAY_B = "RayB"
    RAY_C = "RayC"
    RAY_D = "RayD"
    RAY_E = "RayE"
    RAY_BA = "RayBa"
    RAY_CA = "RayCa"
    RAY_DA = "RayDa"
    RAY_EA = "RayEa"
    F = "F"


# Tags whose delta formula runs through a closure box.
CE_CLOSURE_TAGS = frozenset(
    {RegionTag.CE_INTERIOR, RegionTag.RAY_C, RegionTag.RAY_E, RegionTag.RAY_CA,
     RegionTag.RAY_EA, RegionTag.PA_SHIFT, RegionTag.SA}
)
BD_CLOSURE_TAGS = frozenset(
    {RegionTag.BD_INTERIOR, RegionTag.RAY_B, RegionTag.RAY_D, RegionTag.RAY_BA,
     RegionTag.RAY_DA}
)

_SIGNATURE_TABLE = {
    frozenset("abc"): RegionTag.BC,
    frozenset("ade"): RegionTag.DE,
    frozenset("be"): RegionTag.BE,
    frozenset("cd"): RegionTag.CD,
    frozenset("abd"): RegionTag.BD_INTERIOR,
    frozenset("ace"): RegionTag.CE_INTERIOR,
    frozenset("ab"): RegionTag.RAY_BA,
    frozenset("ac"): RegionTag.RAY_CA,
    frozenset("ad"): RegionTag.RAY_DA,
    frozenset("ae"): RegionTag.RAY_EA,
    frozenset("b"): RegionTag.RAY_B,
    frozenset("c"): RegionTag.RAY_C,
    frozenset("d"): RegionTag.RAY_D,
    frozenset("e"): RegionTag.RAY_E,
    frozenset(): RegionTag.F,
}


class Zero:
    """Marker for a projection with no sectional path onto the ray."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"


ZERO = Zero()


def crossing_signature(quad: Quadrilateral, d: Chord) -> frozenset[str]:
    sig = set()
    for name, side in [("a", quad.a), ("b", quad.b), ("c", quad.c),
                       ("d", quad.d), ("e", quad.e)]:
        if side.is_diagonal and d.crosses(side):
            sig.add(name)
    return frozenset(sig)


def classify(t: Triangulation, a: Chord, d: Chord,
             quad: Quadrilateral | None = None) -> RegionTag:
    """Region of the chord d relative to mutation at a."""
    if a not in t.diagonals:
        raise ValueError(f"{a} is not a diagonal of the triangulation")
    quad = quad or t.quadrilateral(a)
    if d.is_boundary:
        return RegionTag.F
    if d == a:
        return RegionTag.PA_SHIFT
    if d == quad.a_flip:
        return RegionTag.SA
    if d in t.diagonals:
        return RegionTag.F
    sig = crossing_signature(quad, d)
    try:
        tag = _SIGNATURE_TABLE[sig]
    except KeyError:
        raise RuntimeError(
            f"impossible crossing signature {sorted(sig)} for {d} at {a}"
        ) from None
    if tag in (RegionTag.PA_SHIFT, RegionTag.SA):
        raise RuntimeError(f"signature {sorted(sig)} should have been caught earlier")
    return tag


RAY_NAMES = ("b", "c", "d", "e", "ba", "ca", "da", "ea")


@dataclass(frozen=True)
class Rays:
    """The eight sectional segments framing a mutation, cut at unit entries.

    Each list is ordered along the arrow direction of its pencil.  The
    segments b, c lie on the pencil through the quadrilateral corner p
    (before and after a), d, e on the pencil through r; ca, da on the
    pencil through q and ea, ba on the pencil through s (before and after
    the flip diagonal).
    """

    quad: Quadrilateral
    b: tuple[Chord, ...]
    c: tuple[Chord, ...]
    d: tuple[Chord, ...]
    e: tuple[Chord, ...]
    ba: tuple[Chord, ...]
    ca: tuple[Chord, ...]
    da: tuple[Chord, ...]
    ea: tuple[Chord, ...]

    def get(self, name: str) -> tuple[Chord, ...]:
        if name not in RAY_NAMES:
            raise ValueError(f"unknown ray {name!r}")
        return getattr(self, name)

    def pencil_vertex(self, name: str) -> int:
        return {
            "b": self.quad.p, "c": self.quad.p,
            "d": self.quad.r, "e": self.quad.r,
            "ca": self.quad.q, "da": self.quad.q,
            "ea": self.quad.s, "ba": self.quad.s,
        }[name]


def _segment(v: int, hi: int, lo: int, n: int) -> tuple[Chord, ...]:
    """Chords {v, z} for z strictly between hi and lo, walking downward."""
    out = []
    z = (hi - 2) % n + 1
    while z != lo:
        out.append(chord(v, z, n))
        z = (z - 2) % n + 1
    return tuple(out)


def rays(t: Triangulation, a: Chord) -> Rays:
    """Compute the eight rays around a in its triangulation."""
    quad = t.quadrilateral(a)
    n = t.n
    p, q, r, s = quad.p, quad.q, quad.r, quad.s
    return Rays(
        quad=quad,
        b=_segment(p, q, r, n),
        c=_segment(p, r, s, n),
        d=_segment(r, s, p, n),
        e=_segment(r, p, q, n),
        ca=_segment(q, r, s, n),
        da=_segment(q, s, p, n),
        ea=_segment(s, p, q, n),
        ba=_segment(s, q, r, n),
    )


_REGION_RAYS = {
    RegionTag.BC: ("ba", "b", "ca", "c"),
    RegionTag.DE: ("da", "d", "ea", "e"),
    RegionTag.BE: ("ea", "e", "ba", "b"),
    RegionTag.CD: ("ca", "c", "da", "d"),
}


def project(t: Triangulation, a: Chord, d: Chord, ray_name: str,
            ray_data: Rays | None = None):
    """Projection of the position d onto the named ray.

    Walks the sectional line from d toward the ray and returns the
    intersection position when it lies within the ray's extent.  For
    positions inside the two closures the projection may land on a corner
    unit position or on the flip diagonal; outside any sectional reach the
    Zero marker is returned (evaluating to 1).
    """
    ray_data = ray_data or rays(t, a)
    tag = classify(t, a, d, ray_data.quad)
    if tag in CE_CLOSURE_TAGS or tag in BD_CLOSURE_TAGS:
        box = _closure_box(ray_data.quad, ce=tag in CE_CLOSURE_TAGS)
        uv = box.locate(d)
        if uv is None or ray_name not in box.edges:
            raise ValueError(f"ray {ray_name!r} does not apply to region {tag.value}")
        return box.edge_cell(ray_name, uv)
    if tag not in _REGION_RAYS or ray_name not in _REGION_RAYS[tag]:
        raise ValueError(f"ray {ray_name!r} does not apply to region {tag.value}")
    return _strict_projection(d, ray_name, ray_data)


def _strict_projection(d: Chord, ray_name: str, ray_data: Rays):
    segment = ray_data.get(ray_name)
    if d in segment:
        return d
    v = ray_data.pencil_vertex(ray_name)
    if v in d.endpoints:
        return ZERO
    hits = []
    for x in d.endpoints:
        c = chord(x, v, d.n) if x != v else None
        if c is not None and c in segment:
            hits.append(c)
    if len(hits) > 1:
        raise RuntimeError(f"ambiguous projection of {d} onto {ray_name}")
    return hits[0] if hits else ZERO


@dataclass(frozen=True)
class _ClosureBox:
    """Coordinate box of a Hom-hammock closure between P_a[1] and S_a.

    Cells are chords {c1 - u, c2 - v} for 0 <= u <= umax, 0 <= v <= vmax.
    The four edges are named by the rays running along them.
    """

    c1: int
    c2: int
    umax: int
    vmax: int
    n: int
    edges: dict[str, str]  # ray name -> edge id among u0/uU/v0/vV

    def cell(self, u: int, v: int) -> Chord:
        return chord(self.c1 - u, self.c2 - v, self.n)

    def locate(self, d: Chord) -> tuple[int, int] | None:
        for x, y in (d.endpoints, d.endpoints[::-1]):
            u = (self.c1 - x) % self.n
            v = (self.c2 - y) % self.n
            if u <= self.umax and v <= self.vmax:
                return u, v
        return None

    def edge_cell(self, ray_name: str, uv: tuple[int, int]) -> Chord:
        u, v = uv
        edge = self.edges[ray_name]
        if edge == "v0":
            return self.cell(u, 0)
        if edge == "vV":
            return self.cell(u, self.vmax)
        if edge == "u0":
            return self.cell(0, v)
        return self.cell(self.umax, v)


def _closure_box(quad: Quadrilateral, ce: bool) -> _ClosureBox:
    n = quad.a.n
    p, q, r, s = quad.p, quad.q, quad.r, quad.s
    if ce:
        # From P_a[1] at {p, r} to S_a at {q, s}: u toward b, v toward d.
        return _ClosureBox(
            c1=p, c2=r,
            umax=(p - q) % n, vmax=(r - s) % n, n=n,
            edges={"e": "v0", "ea": "vV", "c": "u0", "ca": "uU"},
        )
    # From S_a at {q, s} to P_a[1] at {p, r}: u toward c, v toward e.
    return _ClosureBox(
        c1=q, c2=s,
        umax=(q - r) % n, vmax=(s - p) % n, n=n,
        edges={"ba": "v0", "b": "vV", "da": "u0", "d": "uU"},
    )


class MutationContext:
    """Shared geometry for evaluating delta at many positions."""

    def __init__(self, f: Frieze, t: Triangulation, a: Chord):
        if f.n != t.n:
            raise ValueError("frieze and triangulation orders differ")
        for c in t.diagonals:
            if f.value(c) != 1:
                raise ValueError(
                    f"frieze is inconsistent with the triangulation: entry {c} != 1"
                )
        self.frieze = f
        self.t = t
        self.a = a
        self.rays = rays(t, a)
        self.quad = self.rays.quad
        self.ce_box = _closure_box(self.quad, ce=True)
        self.bd_box = _closure_box(self.quad, ce=False)

    def entry(self, pos) -> int:
        """Frieze entry at a projected position; Zero and units read 1."""
        if pos is ZERO:
            return 1
        if pos.is_boundary:
            return 1
        return self.frieze.value(pos)

    def delta(self, d: Chord) -> int:
        tag = classify(self.t, self.a, d, self.quad)
        return self._delta_tagged(d, tag)

    def _delta_tagged(self, d: Chord, tag: RegionTag) -> int:
        if tag is RegionTag.F:
            return 0
        if tag in CE_CLOSURE_TAGS:
            return self._closure_delta(self.ce_box, d, down=("ea", "c"), up=("ca", "e"))
        if tag in BD_CLOSURE_TAGS:
            return self._closure_delta(self.bd_box, d, down=("da", "b"), up=("ba", "d"))
        ev = lambda name: self.entry(_strict_projection(d, name, self.rays))
        if tag is RegionTag.BC:
            return (ev("ba") - ev("b")) * (ev("ca") - ev("c"))
        if tag is RegionTag.DE:
            return (ev("da") - ev("d")) * (ev("ea") - ev("e"))
        if tag is RegionTag.BE:
            return -(ev("ea") - 2 * ev("e")) * (ev("ba") - 2 * ev("b"))
        if tag is RegionTag.CD:
            return -(ev("ca") - 2 * ev("c")) * (ev("da") - 2 * ev("d"))
        raise RuntimeError(f"unhandled tag {tag}")

    def _closure_delta(self, box: _ClosureBox, d: Chord,
                       down: tuple[str, str], up: tuple[str, str]) -> int:
        uv = box.locate(d)
        if uv is None:
            raise RuntimeError(f"{d} is not inside the closure box")
        s_down = self.entry(box.edge_cell(down[0], uv))
        p_down = self.entry(box.edge_cell(down[1], uv))
        s_up = self.entry(box.edge_cell(up[0], uv))
        p_up = self.entry(box.edge_cell(up[1], uv))
        return s_down * p_down + s_up * p_up - 3 * p_down * p_up


def delta(f: Frieze, t: Triangulation, a: Chord, d: Chord) -> int:
    """Frieze difference at a single position."""
    return MutationContext(f, t, a).delta(d)


def delta_map(f: Frieze, t: Triangulation, a: Chord) -> dict[Chord, int]:
    """Frieze difference at every diagonal position."""
    ctx = MutationContext(f, t, a)
    return {d: ctx.delta(d) for d in all_diagonals(t.n)}


def region_map(t: Triangulation, a: Chord) -> dict[Chord, RegionTag]:
    quad = t.quadrilateral(a)
    return {d: classify(t, a, d, quad) for d in all_diagonals(t.n)}


def mutate_frieze(f: Frieze, t: Triangulation, a: Chord) -> tuple[Frieze, Triangulation]:
    """Mutate the frieze at a: subtract delta_a entrywise and flip a."""
    ctx = MutationContext(f, t, a)
    flipped, _ = t.flip(a)
    entries = {d: f.value(d) - ctx.delta(d) for d in all_diagonals(t.n)}
    return Frieze(t.n, entries, source=flipped), flipped


def delta_report(f: Frieze, t: Triangulation, a: Chord) -> dict:
    """Structured mutation report: {"at", "flip", "regions", "delta"}."""
    ctx = MutationContext(f, t, a)
    _, new_diag = t.flip(a)
    regions = region_map(t, a)
    deltas = {d: ctx.delta(d) for d in sorted(regions)}
    return {
        "at": str(a),
        "flip": str(new_diag),
        "regions": {str(d): regions[d].value for d in sorted(regions)},
        "delta": {str(d): deltas[d] for d in sorted(deltas)},
    }
