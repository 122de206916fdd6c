import pytest

from curvelab import farey, quotient, s5windows, suites
from curvelab.curves import BASE_CURVES
from curvelab.mcg import act

BASE = farey.IntMatrix(2, 1, 1, 1)


@pytest.fixture(scope="module")
def fcontract():
    return quotient.farey_contract(BASE)


@pytest.fixture(scope="module")
def w30():
    return farey.farey_window(30)


@pytest.fixture(scope="module")
def q30(w30, fcontract):
    sample = farey.sample_closure(farey.FareyClosureSpec(BASE, 8, 1))
    return quotient.build_quotient(w30, sample, fcontract)


@pytest.fixture(scope="module")
def q30_small(w30, fcontract):
    sample = farey.sample_closure(farey.FareyClosureSpec(BASE, 1, 1))
    return quotient.build_quotient(w30, sample, fcontract)


@pytest.fixture(scope="module")
def scontract():
    return quotient.s5_contract()


@pytest.fixture(scope="module")
def sq2(w2, scontract):
    return quotient.build_quotient(w2, quotient.s5_sample(), scontract)


def test_simplicial_passes(q30, fcontract):
    r = suites.check_simplicial(q30, fcontract)
    assert r["status"] == "pass"
    assert r["witnesses"] == []
    assert r["eligible"] == len(q30)


def test_simplicial_out_of_hypothesis(q30_small, fcontract):
    assert q30_small.min_displacement < suites.SIMPLICIAL_THRESHOLD
    r = suites.check_simplicial(q30_small, fcontract)
    assert r["status"] == "out-of-hypothesis"
    assert any(wt["kind"] == "loop" for wt in r["witnesses"])


def test_lipschitz_lifting_passes(w30, q30, fcontract):
    r = suites.verify_lipschitz_lifting(w30, q30, fcontract)
    assert r["status"] == "pass"
    assert r["witnesses"] == []
    assert r["eligible"] > 0


def test_ball2_isometry_passes(w30, q30, fcontract):
    r = suites.verify_ball2_isometry(w30, q30, fcontract)
    assert r["status"] == "pass"
    assert r["witnesses"] == []


def test_ball2_isometry_out_of_hypothesis(w30, q30_small, fcontract):
    r = suites.verify_ball2_isometry(w30, q30_small, fcontract)
    assert r["status"] == "out-of-hypothesis"


def test_local_covering_passes(w30, q30, fcontract):
    r = suites.verify_local_covering(w30, q30, fcontract)
    assert r["status"] == "pass"
    assert r["witnesses"] == []
    assert r["eligible"] == len(w30)


def test_unique_lift_orbit_edge(w30, q30, fcontract):
    r = suites.verify_unique_lift_orbit(w30, q30, fcontract, q30.edges[0])
    assert r["status"] == "pass"
    assert r["lifts"] >= 1


def test_unique_lift_orbit_rejects_repeats(w30, q30, fcontract):
    with pytest.raises(ValueError):
        suites.verify_unique_lift_orbit(w30, q30, fcontract, (0, 0))


def test_unique_lift_orbit_pentagon(w2, sq2, scontract):
    qw = sq2.as_window(scontract)
    pent = s5windows.enumerate_pentagons(qw)[0]
    classes = tuple(
        sq2.class_of[sq2.window.index[qw.vertices[i]]] for i in pent
    )
    r = suites.verify_unique_lift_orbit(w2, sq2, scontract, classes)
    assert r["status"] == "pass"
    assert r["orbits"] == 1 and r["lifts"] == 1


def test_transfer_pentagons_empty_sample(w2, sq2, scontract):
    r = suites.transfer_pentagons(w2, sq2, scontract)
    assert r["status"] == "pass"
    assert r["upstairs"] == r["downstairs"] == r["lifted"]
    assert r["witnesses"] == []


def test_quotient_detection_matches_upstairs(w2, sq2, scontract):
    c1, c3 = BASE_CURVES[0], BASE_CURVES[2]
    a_cls = sq2.class_of[w2.index[c1.coords]]
    b_cls = sq2.class_of[w2.index[c3.coords]]
    detected = suites.detect_half_twists_quotient(a_cls, b_cls, sq2, scontract)
    upstairs = s5windows.detect_half_twists(c1, c3, w2)
    projected = {sq2.class_of[w2.index[g.coords]] for g in upstairs}
    assert detected == projected
    assert len(detected) == 2


def _cls(sq2, w2, coords):
    return sq2.class_of[w2.index[coords]]


def test_propagate_identity_seed(w2, sq2, scontract):
    seed = {_cls(sq2, w2, x.coords): _cls(sq2, w2, x.coords) for x in BASE_CURVES}
    out = suites.propagate_pentagon_map(sq2, scontract, seed)
    assert out["witnesses"] == []
    assert all(k == v for k, v in out["map"].items())
    assert len(out["map"]) == len(sq2)


def test_propagate_agrees_with_group_element(w2, sq2, scontract):
    g = "ab"
    seed = {
        _cls(sq2, w2, x.coords): _cls(sq2, w2, act(g, x).coords)
        for x in BASE_CURVES
    }

    def disagreeing(out):
        bad = []
        for k, v in out["map"].items():
            img = act(g, s5windows.window_curve(w2, sq2.representative(k))).coords
            if img in w2.index and _cls(sq2, w2, img) != v:
                bad.append(k)
        return bad

    first = suites.propagate_pentagon_map(sq2, scontract, dict(seed))
    assert first["witnesses"] == []
    bad = disagreeing(first)
    if bad:  # wrong global orientation: the hint flips it
        k0 = bad[0]
        img = act(g, s5windows.window_curve(w2, sq2.representative(k0))).coords
        hinted = suites.propagate_pentagon_map(
            sq2, scontract, dict(seed), first_choice=(k0, _cls(sq2, w2, img))
        )
        assert hinted["witnesses"] == []
        assert disagreeing(hinted) == []


def test_propagate_reflection_swaps_detected_pair(w2, sq2, scontract):
    c1, c3 = BASE_CURVES[0], BASE_CURVES[2]
    seed = {_cls(sq2, w2, x.coords): _cls(sq2, w2, x.coords) for x in BASE_CURVES}
    det = sorted(
        suites.detect_half_twists_quotient(
            _cls(sq2, w2, c1.coords), _cls(sq2, w2, c3.coords), sq2, scontract
        )
    )
    swapped = suites.propagate_pentagon_map(
        sq2, scontract, dict(seed), first_choice=(det[0], det[1])
    )
    assert swapped["witnesses"] == []
    assert swapped["map"][det[0]] == det[1]
    assert swapped["map"][det[1]] == det[0]
    # the swapped extension is the reflection's action
    for k, v in swapped["map"].items():
        img = act("r", s5windows.window_curve(w2, sq2.representative(k))).coords
        assert _cls(sq2, w2, img) == v


def test_support_sets_pass(w2, w3, sq2, scontract):
    r = suites.check_support_sets(w2, sq2, scontract)
    assert r["status"] == "pass"
    assert r["witnesses"] == []
    r3 = suites.check_support_sets(w3)
    assert r3["status"] == "pass"


def test_report_shape(q30, fcontract):
    r = suites.check_simplicial(q30, fcontract)
    assert set(r) >= {"suite", "status", "eligible", "truncated", "witnesses"}
    assert r["status"] in ("pass", "fail", "out-of-hypothesis")
