"""String walks, shapes, and the three submodule-counting routes.

A multiplicity-free string is a walk of distinct labels with an arrow
between consecutive positions; 'L' at slot p means the arrow points from
position p+1 to position p, 'R' the other way.  The number of submodules
depends only on the shape, the tuple of maximal constant-direction run
lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

LEFT = "L"
RIGHT = "R"

# Full subset enumeration beyond this walk length is pointless to wait for.
BRUTEFORCE_MAX_LEN = 22


@dataclass(frozen=True)
class StringWalk:
    """A walk of pairwise distinct labels with arrow directions."""

    support: tuple
    directions: tuple[str, ...]

    def __post_init__(self):
        if len(self.support) != len(set(self.support)):
            raise ValueError("string walk labels must be pairwise distinct")
        if self.directions and len(self.directions) != len(self.support) - 1:
            raise ValueError("need exactly len(support)-1 direction tokens")
        if len(self.support) <= 1 and self.directions:
            raise ValueError("too many direction tokens")
        bad = set(self.directions) - {LEFT, RIGHT}
        if bad:
            raise ValueError(f"unknown direction tokens {bad}")

    def __len__(self) -> int:
        return len(self.support)

    @property
    def is_zero(self) -> bool:
        return len(self.support) == 0

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        out = [str(self.support[0])]
        for tok, lab in zip(self.directions, self.support[1:]):
            out.append("<" if tok == LEFT else ">")
            out.append(str(lab))
        return "".join(out)


ZERO_WALK = StringWalk((), ())


def walk(labels, directions) -> StringWalk:
    return StringWalk(tuple(labels), tuple(directions))


def parse_walk(text: str) -> StringWalk:
    """Parse '1<2>3>4>5<6' (labels separated by < or > arrow tokens)."""
    text = text.strip()
    if not text or text == "0":
        return ZERO_WALK
    labels: list[str] = []
    dirs: list[str] = []
    current = ""
    for ch in text:
        if ch in "<>":
            if not current:
                raise ValueError(f"misplaced {ch!r} in walk {text!r}")
            labels.append(current)
            current = ""
            dirs.append(LEFT if ch == "<" else RIGHT)
        elif not ch.isspace():
            current += ch
    if not current:
        raise ValueError(f"walk {text!r} ends with a dangling arrow")
    labels.append(current)
    parsed = [int(lab) if lab.isdigit() else lab for lab in labels]
    return walk(parsed, dirs)


@dataclass(frozen=True)
class StringShape:
    """Leg lengths (k_1, ..., k_m) of a string; () is a simple module."""

    legs: tuple[int, ...]

    def __post_init__(self):
        if any(k < 1 for k in self.legs):
            raise ValueError(f"legs must be positive in normalized form: {self.legs}")

    @property
    def m(self) -> int:
        return len(self.legs)

    def reverse(self) -> "StringShape":
        return StringShape(tuple(reversed(self.legs)))

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.legs) if self.legs else "simple"


def shape(*legs: int) -> StringShape:
    return StringShape(tuple(legs))


def parse_shape(text: str) -> StringShape:
    text = text.strip()
    if text in ("", "simple"):
        return StringShape(())
    return StringShape(tuple(int(p) for p in text.split(",")))


def shape_of(w: StringWalk) -> StringShape:
    """Run lengths of the direction sequence; a single vertex has shape ()."""
    if w.is_zero:
        raise ValueError("the zero module has no shape")
    legs: list[int] = []
    prev = None
    for tok in w.directions:
        if tok == prev:
            legs[-1] += 1
        else:
            legs.append(1)
        prev = tok
    return StringShape(tuple(legs))


def reverse(w: StringWalk) -> StringWalk:
    """Reverse the support and flip every arrow."""
    flipped = tuple(LEFT if tok == RIGHT else RIGHT for tok in reversed(w.directions))
    return StringWalk(tuple(reversed(w.support)), flipped)


def admissible_subsets(m: int) -> list[tuple[int, ...]]:
    """All admissible subsets of {1..m}, largest first then lexicographic.

    A subset is admissible when any two consecutive members skip an even
    number of integers (equivalently, consecutive members have opposite
    parity).  The empty set and all singletons qualify.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], last: int):
        out.append(tuple(prefix))
        for nxt in range(last + 1, m + 1):
            if (nxt - last) % 2 == 1:
                prefix.append(nxt)
                extend(prefix, nxt)
                prefix.pop()

    out.append(())
    for start in range(1, m + 1):
        extend([start], start)
    out.sort(key=lambda s: (-len(s), s))
    return out


def s_formula(sh: StringShape) -> int:
    """Submodule count by the explicit admissible-subset formula."""
    total = 1
    for subset in admissible_subsets(sh.m):
        prod = 1
        for i in subset:
            prod *= sh.legs[i - 1]
        total += prod
    return total


def s_recursive(sh: StringShape) -> int:
    """Submodule count by the two-term recursion on leg tuples."""
    return _s_rec(sh.legs)


def _drop_leading_zero(ks: tuple[int, ...]) -> tuple[int, ...]:
    return ks[1:] if ks and ks[0] == 0 else ks


@lru_cache(maxsize=1 << 17)
def _s_rec(ks: tuple[int, ...]) -> int:
    ks = _drop_leading_zero(ks)
    if len(ks) == 0:
        return 2
    if len(ks) == 1:
        return ks[0] + 2
    k1, k2, rest = ks[0], ks[1], ks[2:]
    if k2 > 1:
        return (k1 + 2) * _s_rec((k2 - 1,) + rest) - _s_rec(
            _drop_leading_zero((k2 - 2,) + rest)
        )
    # k2 == 1: the two truncations lose the whole second leg.
    first = _s_rec(rest)
    if len(rest) <= 1:
        second = 1  # truncation reaches the zero module
    else:
        second = _s_rec(_drop_leading_zero((rest[1] - 1,) + rest[2:]))
    return (k1 + 2) * first - second


def s_bruteforce(w: StringWalk) -> int:
    """Submodule count by enumerating every arrow-closed subset.

    A subset S of positions is closed when every arrow leaving S lands in
    S; the empty set and the full support always count.  Vectorized over
    all 2^len(w) bitmasks, so the caller keeps walks short.
    """
    ell = len(w)
    if ell == 0:
        return 1
    if ell > BRUTEFORCE_MAX_LEN:
        raise ValueError(f"walk too long for brute force: {ell}")
    masks = np.arange(1 << ell, dtype=np.uint64)
    ok = np.ones(1 << ell, dtype=bool)
    for i, tok in enumerate(w.directions):
        src, dst = (i + 1, i) if tok == LEFT else (i, i + 1)
        has_src = (masks >> np.uint64(src)) & np.uint64(1)
        has_dst = (masks >> np.uint64(dst)) & np.uint64(1)
        ok &= ~((has_src == 1) & (has_dst == 0))
    return int(np.count_nonzero(ok))


def walk_of_shape(sh: StringShape, start: str = RIGHT, labels=None) -> StringWalk:
    """Any walk realizing the given shape (used by tests and the CLI)."""
    dirs: list[str] = []
    tok = start
    for k in sh.legs:
        dirs.extend([tok] * k)
        tok = LEFT if tok == RIGHT else RIGHT
    n = len(dirs) + 1
    if labels is None:
        labels = range(1, n + 1)
    return walk(labels, dirs)
