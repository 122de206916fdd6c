from itertools import combinations

import pytest

from curvelab.curves import (
    BASE_CURVES,
    BASE_CURVE_PAIRS,
    NormalCurve,
    disjoint,
    intersection_number,
)
from curvelab.mcg import apply_word


def test_base_curves_are_five_distinct():
    assert len({c.coords for c in BASE_CURVES}) == 5


def test_base_pentagon_intersections():
    # consecutive pairs (sharing no punctures) disjoint, the rest meet twice
    for (i, a), (j, b) in combinations(enumerate(BASE_CURVES), 2):
        shared = set(BASE_CURVE_PAIRS[i]) & set(BASE_CURVE_PAIRS[j])
        expected = 0 if not shared else 2
        assert intersection_number(a, b) == expected


def test_intersection_symmetric():
    a, b = BASE_CURVES[0], BASE_CURVES[1]
    assert intersection_number(a, b) == intersection_number(b, a)


def test_self_intersection_zero():
    for c in BASE_CURVES:
        assert intersection_number(c, c) == 0
        assert not disjoint(c, c)


def test_intersection_invariant_under_action():
    words = ["a", "ab", "rC", "abcd", "Dr", "bdA"]
    pairs = list(combinations(BASE_CURVES, 2))[:5]
    for w in words:
        for a, b in pairs:
            ia = apply_word(w, a.coords)
            ib = apply_word(w, b.coords)
            assert intersection_number(ia, ib) == intersection_number(a, b)


def test_half_twist_moves_transverse_curve():
    c1, c4 = BASE_CURVES[0], BASE_CURVES[3]
    img = apply_word("a", c4.coords)
    assert img != c4.coords
    assert intersection_number(img, c4.coords) == 2


def test_inessential_coords_rejected():
    with pytest.raises(ValueError):
        NormalCurve((0,) * 9)
    with pytest.raises(ValueError):
        NormalCurve((1, 0, 0, 0, 0, 0, 0, 0, 0))


def test_curve_json_roundtrip():
    c = BASE_CURVES[2]
    assert NormalCurve.from_json(c.to_json()) == c
    assert NormalCurve.from_json(c.to_json()).witness == c.witness


def test_intersection_accepts_raw_coords():
    a, b = BASE_CURVES[0], BASE_CURVES[3]
    assert intersection_number(a.coords, b.coords) == 2
    with pytest.raises(ValueError):
        intersection_number((1, 0, 0, 0, 0, 0, 0, 0, 0), a.coords)
