"""Counting identities for splits, extensions, and special cases, each
side evaluated by brute-force enumeration on concrete walks."""

import random

from ccfrieze.strings import LEFT, RIGHT, reverse, s_bruteforce

from conftest import random_walk
from walk_ops import (
    append,
    peak_positions,
    prepend,
    split_at,
    strip_left,
    strip_right,
    subwalk,
    valley_positions,
)


def check_peak_split(w, i) -> bool:
    """Split at an interior peak x: (.. z <- x -> y ..)."""
    m_z, m_y = split_at(w, i)
    lhs = s_bruteforce(w)
    rhs = s_bruteforce(m_z) * s_bruteforce(m_y) + s_bruteforce(
        strip_right(m_z, LEFT)
    ) * s_bruteforce(strip_left(m_y, RIGHT))
    return lhs == rhs


def check_valley_split(w, i) -> bool:
    """Split at an interior valley x: (.. z -> x <- y ..)."""
    m_z, m_y = split_at(w, i)
    lhs = s_bruteforce(w)
    rhs = s_bruteforce(m_z) * s_bruteforce(m_y) + s_bruteforce(
        strip_right(m_z, RIGHT)
    ) * s_bruteforce(strip_left(m_y, LEFT))
    return lhs == rhs


def check_edge_split(w, i) -> bool:
    """Split along an arrow x -> y at slot i (token RIGHT)."""
    m_x = subwalk(w, 0, i + 1)
    m_y = subwalk(w, i + 1, len(w))
    lhs = s_bruteforce(w)
    rhs = s_bruteforce(m_y) * s_bruteforce(m_x) - s_bruteforce(
        strip_right(m_x, LEFT)
    ) * s_bruteforce(strip_left(m_y, LEFT))
    return lhs == rhs


def check_simple_extensions(w) -> bool:
    """Extending by a simple below vs above the same end vertex."""
    below = prepend(w, LEFT)   # 0 -> S_new -> ext -> w -> 0
    above = prepend(w, RIGHT)  # 0 -> w -> ext -> S_new -> 0
    return s_bruteforce(below) - s_bruteforce(w) == 2 * s_bruteforce(w) - s_bruteforce(
        above
    )


def check_sink_extension(w) -> bool:
    """Appending a sink grows the count by the ancestor-free part."""
    grown = append(w, RIGHT)
    return s_bruteforce(grown) - s_bruteforce(w) == s_bruteforce(
        strip_right(w, RIGHT)
    )


def run_split_checks(seed: int, rounds: int) -> int:
    """Random walks and split points; returns the number of checks done."""
    rng = random.Random(seed)
    done = 0
    while done < rounds:
        w = random_walk(rng)
        if len(w) < 2:
            continue
        for i in peak_positions(w):
            assert check_peak_split(w, i), (str(w), i)
            done += 1
        for i in valley_positions(w):
            assert check_valley_split(w, i), (str(w), i)
            done += 1
        edges = [i for i, tok in enumerate(w.directions) if tok == RIGHT]
        if edges:
            i = rng.choice(edges)
            assert check_edge_split(w, i), (str(w), i)
            done += 1
        assert check_simple_extensions(w), str(w)
        assert check_sink_extension(w), str(w)
        assert check_sink_extension(reverse(w)), str(w)
        done += 3
    return done


def test_split_identities_seeded():
    assert run_split_checks(seed=1302, rounds=200) >= 200


def test_peak_split_reference_walk():
    from ccfrieze.strings import parse_walk

    w = parse_walk("1<2>3>4>5<6")
    for i in peak_positions(w):
        assert check_peak_split(w, i)
    for i in valley_positions(w):
        assert check_valley_split(w, i)
