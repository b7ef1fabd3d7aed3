import random

import pytest

from ccfrieze.strings import (
    LEFT,
    RIGHT,
    StringShape,
    admissible_subsets,
    parse_shape,
    parse_walk,
    reverse,
    s_bruteforce,
    s_formula,
    s_recursive,
    shape,
    shape_of,
    walk,
    walk_of_shape,
)

from conftest import random_walk


def test_shape_of_examples():
    w = parse_walk("1<2>3>4>5<6")
    assert shape_of(w) == shape(1, 3, 1)
    assert shape_of(walk([7], [])) == shape()
    uniserial = walk_of_shape(shape(4))
    assert shape_of(uniserial) == shape(4)
    assert s_formula(shape(4)) == len(uniserial) + 1


def test_walk_validation():
    with pytest.raises(ValueError):
        walk([1, 1], [LEFT])
    with pytest.raises(ValueError):
        walk([1, 2, 3], [LEFT])
    with pytest.raises(ValueError):
        shape_of(walk([], []))
    with pytest.raises(ValueError):
        StringShape((1, 0, 2))


def test_walk_parse_round_trip():
    for text in ("1<2>3>4>5<6", "3>1", "5", "10<11"):
        assert str(parse_walk(text)) == text
    with pytest.raises(ValueError):
        parse_walk("<1")
    with pytest.raises(ValueError):
        parse_walk("1>")


def test_admissible_m5_matches_reference():
    expected = {
        (1, 2, 3, 4, 5), (1, 2, 3, 4), (2, 3, 4, 5), (1, 2, 3), (1, 2, 5),
        (1, 4, 5), (3, 4, 5), (2, 3, 4), (1, 2), (1, 4), (3, 4), (2, 3),
        (2, 5), (4, 5), (1,), (2,), (3,), (4,), (5,), (),
    }
    got = admissible_subsets(5)
    assert set(got) == expected
    assert len(got) == 20
    assert got == admissible_subsets(5)  # deterministic order


def test_admissible_small():
    assert set(admissible_subsets(0)) == {()}
    assert set(admissible_subsets(1)) == {(), (1,)}
    assert set(admissible_subsets(3)) == {
        (), (1,), (2,), (3,), (1, 2), (2, 3), (1, 2, 3),
    }  # everything except {1,3}


def test_admissible_gap_parity():
    for subset in admissible_subsets(7):
        for a, b in zip(subset, subset[1:]):
            assert (b - a - 1) % 2 == 0


def test_s_formula_examples():
    assert s_formula(shape(1, 3, 1)) == 16
    assert s_formula(shape()) == 2
    for k in range(1, 30):
        assert s_formula(shape(k)) == k + 2
    for k1 in range(1, 6):
        for k2 in range(1, 6):
            assert s_formula(shape(k1, k2)) == k1 * k2 + k1 + k2 + 2
    assert s_formula(shape(1, 1, 1)) == 8
    assert s_formula(shape(1, 1, 1, 1)) == 13
    assert s_formula(shape(1, 2, 1)) == 12
    assert s_formula(shape(1, 2, 1, 1)) == 19


def test_s_recursive_examples():
    assert s_recursive(shape(1, 3, 1)) == 16
    assert s_recursive(shape(1, 2)) == 7
    assert s_recursive(shape(1, 1, 1, 1)) == 13


def test_s_bruteforce_examples():
    assert s_bruteforce(parse_walk("1<2>3>4>5<6")) == 16
    assert s_bruteforce(walk([9], [])) == 2
    assert s_bruteforce(walk([], [])) == 1
    assert s_bruteforce(parse_walk("a<b>c<d>e")) == 13
    assert s_bruteforce(parse_walk("1<2>3>4")) == 7


def test_bruteforce_guards_length():
    with pytest.raises(ValueError):
        s_bruteforce(walk_of_shape(shape(23)))


def test_reverse():
    w = parse_walk("1<2>3")
    assert str(reverse(w)) == "3<2>1"
    assert reverse(walk([], [])) == walk([], [])
    w2 = parse_walk("1<2>3>4")
    assert shape_of(reverse(w2)) == shape(2, 1)
    assert s_bruteforce(reverse(w2)) == s_bruteforce(w2) == 7


def test_triple_agreement_seeded():
    rng = random.Random(20240811)
    for _ in range(250):
        w = random_walk(rng)
        sh = shape_of(w) if len(w) else None
        if sh is None:
            continue
        assert s_formula(sh) == s_recursive(sh) == s_bruteforce(w)


def test_reversal_properties_seeded():
    rng = random.Random(555)
    for _ in range(150):
        w = random_walk(rng)
        if not len(w):
            continue
        r = reverse(w)
        assert s_bruteforce(r) == s_bruteforce(w)
        assert shape_of(r).legs == tuple(reversed(shape_of(w).legs))


def test_monotonicity_appending_vertex():
    rng = random.Random(99)
    for _ in range(80):
        w = random_walk(rng, max_total=10)
        if not len(w):
            continue
        for tok in (LEFT, RIGHT):
            grown = walk(w.support + (max(map(_as_int, w.support)) + 1,),
                         w.directions + (tok,))
            assert s_bruteforce(grown) > s_bruteforce(w)


def _as_int(lab):
    return lab if isinstance(lab, int) else 0


def test_shape_parse():
    assert parse_shape("1,3,1") == shape(1, 3, 1)
    assert parse_shape("simple") == shape()
    assert str(shape(1, 3, 1)) == "1,3,1"
    assert str(shape()) == "simple"
