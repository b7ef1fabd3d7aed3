"""Friezes: construction (two routes), validation, matching oracle, rendering.

Entries are indexed by unordered chords, which bakes the glide symmetry
and N-periodicity into the data structure; the renderer reconstructs the
doubled staggered presentation.  The coordinate convention of the
renderer: the entry of chord {i, j} appears in row j-i of the grid, rows
counted downward from the top row of 0s.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ar import module_of
from .polygon import Chord, Triangulation, all_diagonals, chord
from .strings import s_recursive, shape_of


class NonPositiveEntryError(ValueError):
    """The continuant propagation left the positive cone: not a quiddity."""


class FriezeDecodeError(ValueError):
    """Encoded frieze data is malformed or violates the frieze rule."""


@dataclass(frozen=True)
class Frieze:
    """Finite mapping diagonal -> positive integer of order n.

    Boundary segments implicitly carry the entry 1 and the two trivial
    rows of 1s and 0s are implicit.
    """

    n: int
    entries: dict[Chord, int]
    source: Triangulation | None = field(default=None, compare=False)

    def value(self, c: Chord) -> int:
        if c.n != self.n:
            raise ValueError(f"chord of a {c.n}-gon in an order-{self.n} frieze")
        if c.is_boundary:
            return 1
        return self.entries[c]

    def value_at(self, i: int, j: int) -> int:
        """Grid accessor m(i, j) including the trivial rows."""
        d = (j - i) % self.n
        if d == 0:
            return 0
        if d in (1, self.n - 1):
            return 1
        return self.value(chord(i, j, self.n))

    def unit_positions(self) -> frozenset[Chord]:
        return frozenset(c for c, v in self.entries.items() if v == 1)

    def strip_source(self) -> "Frieze":
        return Frieze(self.n, dict(self.entries))


def frieze_from_quiddity(quiddity) -> Frieze:
    """Propagate a quiddity sequence by the continuant recurrence.

    m(i,i) = 0, m(i,i+1) = 1, m(i,j+1) = q(j) m(i,j) - m(i,j-1).  Fails
    with NonPositiveEntryError when the input is not the quiddity of a
    triangulation; a consistency defect across the period is reported the
    same way.
    """
    q = tuple(int(v) for v in quiddity)
    n = len(q)
    if n < 4:
        raise ValueError(f"need at least 4 quiddity entries, got {n}")

    def qv(vertex: int) -> int:  # vertices are 1-based mod n
        return q[(vertex - 1) % n]

    entries: dict[Chord, int] = {}
    for i in range(1, n + 1):
        prev, cur = 0, 1  # m(i, i) and m(i, i+1)
        for j in range(i + 1, i + n):
            nxt = qv(j) * cur - prev
            prev, cur = cur, nxt
            d = (j + 1 - i) % n
            if d in (0, 1, n - 1):
                continue
            if cur <= 0:
                raise NonPositiveEntryError(
                    f"entry m({i},{j + 1}) = {cur} is not positive; "
                    "input is not a quiddity sequence"
                )
            c = chord(i, j + 1, n)
            if entries.setdefault(c, cur) != cur:
                raise NonPositiveEntryError(
                    f"inconsistent propagation at {c}: {entries[c]} vs {cur}"
                )
        # closing values of the period: m(i, i+n-1) = 1 and m(i, i+n) = 0
        if cur != 0 or prev != 1:
            raise NonPositiveEntryError(
                f"row {i} does not close up (got {prev}, {cur}); "
                "input is not a quiddity sequence"
            )
    return Frieze(n, entries)


def frieze_from_cc(t: Triangulation) -> Frieze:
    """Frieze of a triangulation via the specialized cluster character.

    Diagonals of the triangulation get entry 1; every other diagonal gets
    the submodule count of the string module at its position.
    """
    entries: dict[Chord, int] = {}
    for c in all_diagonals(t.n):
        if c in t.diagonals:
            entries[c] = 1
        else:
            entries[c] = s_recursive(shape_of(module_of(t, c).walk))
    return Frieze(t.n, entries, source=t)


@dataclass
class FriezeReport:
    """Validation report; empty lists mean a valid frieze."""

    diamond_violations: list[tuple[int, int, int]] = field(default_factory=list)
    nonpositive: list[tuple[Chord, int]] = field(default_factory=list)
    unit_mismatches: list[Chord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.diamond_violations or self.nonpositive or self.unit_mismatches)

    def summary(self) -> str:
        if self.ok:
            return "frieze valid"
        lines = []
        for i, j, det in self.diamond_violations:
            lines.append(f"diamond at ({i},{j}) has determinant {det}")
        for c, v in self.nonpositive:
            lines.append(f"entry {c} = {v} is not positive")
        for c in self.unit_mismatches:
            lines.append(f"unit position mismatch at {c}")
        return "\n".join(lines)


def validate_frieze(f: Frieze) -> FriezeReport:
    """Check every diamond, positivity, and source unit positions."""
    report = FriezeReport()
    for c, v in f.entries.items():
        if v <= 0:
            report.nonpositive.append((c, v))
    for i in range(1, f.n + 1):
        for d in range(1, f.n - 1):
            j = i + d
            det = f.value_at(i, j) * f.value_at(i + 1, j + 1) - f.value_at(
                i + 1, j
            ) * f.value_at(i, j + 1)
            if det != 1:
                report.diamond_violations.append((i, j, det))
    if f.source is not None:
        units = f.unit_positions()
        expected = frozenset(f.source.diagonals)
        for c in units.symmetric_difference(expected):
            report.unit_mismatches.append(c)
    return report


def matching_number(t: Triangulation, d: Chord) -> int:
    """Count injective assignments of the vertices under d to triangles.

    The vertices strictly between d's endpoints (along the arc below the
    normalized chord) are matched to pairwise distinct incident
    triangles.  Serves as an independent oracle for frieze entries.
    """
    verts = list(range(d.a + 1, d.b))
    tris = t.triangles()
    incident = [[idx for idx, tri in enumerate(tris) if v in tri] for v in verts]

    def count(k: int, used: frozenset[int]) -> int:
        if k == len(incident):
            return 1
        return sum(
            count(k + 1, used | {idx}) for idx in incident[k] if idx not in used
        )

    return count(0, frozenset())


# --- rendering and data encoding -------------------------------------------

CYAN = "\x1b[36m"
RESET = "\x1b[0m"


def render_ascii(f: Frieze, periods: int = 1, color: bool = False) -> str:
    """Staggered diamond layout over `periods` fundamental periods.

    Includes the trivial rows of 0s and 1s; an order-n frieze renders as
    n+1 rows.  With color=True the unit entries sitting at source
    triangulation diagonals are highlighted.
    """
    if periods < 1:
        raise ValueError("periods must be at least 1")
    width = max(
        (len(str(v)) for v in f.entries.values()), default=1
    )
    cell = width + (width % 2) + 2
    half = cell // 2
    ncols = f.n * periods + 1
    lines = []
    for d in range(f.n + 1):
        row: list[str] = []
        for i in range(1, ncols + 1):
            v = f.value_at(i, i + d)
            text = str(v).center(width)
            if (
                color
                and f.source is not None
                and d not in (0, 1, f.n - 1, f.n)
                and chord(i, i + d, f.n) in f.source.diagonals
            ):
                text = CYAN + text + RESET
            row.append((d * half + (i - 1) * cell, text))
        line = ""
        for pos, text in row:
            line += " " * (pos - _visible_len(line)) + text
        lines.append(line.rstrip())
    return "\n".join(lines)


def _visible_len(s: str) -> int:
    n = len(s)
    for token in (CYAN, RESET):
        n -= s.count(token) * len(token)
    return n


def frieze_to_dict(f: Frieze) -> dict:
    return {
        "n": f.n,
        "entries": {str(c): f.entries[c] for c in sorted(f.entries)},
    }


def frieze_from_dict(data: dict) -> Frieze:
    """Decode {"n": N, "entries": {"i-j": v}}; rejects non-friezes."""
    try:
        n = int(data["n"])
        raw = data["entries"]
        entries = {
            chord(*(int(p) for p in key.split("-")), n): int(v)
            for key, v in raw.items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise FriezeDecodeError(f"malformed frieze object: {exc}") from exc
    missing = set(all_diagonals(n)) - set(entries)
    if missing:
        raise FriezeDecodeError(f"missing entries: {sorted(missing)[:3]}...")
    f = Frieze(n, entries)
    report = validate_frieze(f)
    if not report.ok:
        raise FriezeDecodeError(f"not a frieze:\n{report.summary()}")
    return f
