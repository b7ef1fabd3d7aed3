import random
from functools import lru_cache

import pytest

from ccfrieze.polygon import all_triangulations, parse_chord, triangulation
from ccfrieze.strings import LEFT, RIGHT, StringShape, walk_of_shape

from _refdata import QVERTEX_TO_DIAGONAL, T13_DIAGONALS


@lru_cache(maxsize=None)
def triangulations_of(n):
    return tuple(all_triangulations(n))


@pytest.fixture(scope="session")
def hexagon_fan():
    return triangulation(6, [(1, 5), (2, 5), (3, 5)])


@pytest.fixture(scope="session")
def t13():
    return triangulation(13, [parse_chord(s, 13) for s in T13_DIAGONALS])


@pytest.fixture(scope="session")
def phi13():
    """Quiver vertex label -> diagonal of the reference 13-gon."""
    return {k: parse_chord(v, 13) for k, v in QVERTEX_TO_DIAGONAL.items()}


def random_shape(rng: random.Random, max_m=8, max_k=5, max_total=15) -> StringShape:
    m = rng.randint(0, max_m)
    legs = []
    total = 0
    for _ in range(m):
        k = rng.randint(1, max_k)
        if total + k > max_total:
            break
        legs.append(k)
        total += k
    return StringShape(tuple(legs))


def random_walk(rng: random.Random, **kwargs):
    sh = random_shape(rng, **kwargs)
    w = walk_of_shape(sh, start=rng.choice((LEFT, RIGHT)))
    return w


def find_window_reading(friezes, rows, distances):
    """Match a printed staggered window against friezes, absorbing symmetry.

    rows[r] is a list of (column, v1, ..., vk) cells, one value per frieze;
    distances[r] is the chord distance of row r.  Tries every horizontal
    translation, the mirror reading, and the glide (upside-down) reading;
    returns the successful (offset, mirror, flipped) triple or None.
    """
    n = friezes[0].n
    for flipped in (False, True):
        ds = distances if not flipped else [n - d for d in distances]
        for mirror in (1, -1):
            for offset in range(2 * n):
                if _window_matches(friezes, rows, ds, mirror, offset):
                    return offset, mirror, flipped
    return None


def _window_matches(friezes, rows, ds, mirror, offset):
    for row, d in zip(rows, ds):
        for cell in row:
            x, values = cell[0], cell[1:]
            xx = mirror * x + offset
            if (xx - d) % 2 != 0:
                return False
            i = (xx - d) // 2
            for f, v in zip(friezes, values):
                if f.value_at(i, i + d) != v:
                    return False
    return True
