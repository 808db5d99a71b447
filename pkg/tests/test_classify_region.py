import numpy as np
import pytest

from lsl import families as fam
from lsl.classify import VERDICTS, GridSpec, aggregate, classify_region, track_field


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(1, 5)
    us, vs = GridSpec(3, 4).axes(((0, 1), (2, 5)))
    assert list(us) == [0.0, 0.5, 1.0] and list(vs) == [2.0, 3.0, 4.0, 5.0]


def test_example_1_1_region():
    r = classify_region(fam.make_example_1_1(), (32, 32))
    assert r.census_histogram["One"] == 1024
    assert r.verdicts["pseudo_planar"]["value"]
    assert not r.verdicts["pseudo_umbilic"]["value"]
    assert not r.verdicts["umbilic"]["value"]
    assert not r.verdicts["planar"]["value"]


def test_rs_c_region_is_zero_everywhere():
    r = classify_region(fam.rs_example_c(), (16, 16))
    assert r.census_histogram == {"Zero": 256, "One": 0, "Two": 0, "All": 0, "error": 0}
    assert not r.verdicts["pseudo_planar"]["value"]
    assert r.verdicts["pseudo_planar"]["counterexample"] is not None


def test_planar_when_meridian_is_line_through_origin():
    r = classify_region(fam.rs_line_through_origin(1.5), (12, 12))
    assert r.verdicts["planar"]["value"] and r.verdicts["pseudo_planar"]["value"]
    assert all(not rec["warnings"] for rec in r.records)


def test_rh_region_is_pseudo_umbilic():
    r = classify_region(fam.default_rh(), (12, 12))
    assert r.census_histogram["Two"] == 144
    assert r.verdicts["pseudo_umbilic"]["value"]
    assert r.verdicts["pseudo_planar"]["value"]


def test_verdicts_recomputable_from_records():
    for ch in (fam.make_example_1_2(), fam.default_rh(), fam.rs_example_b()):
        r = classify_region(ch, (8, 9))
        assert aggregate(r.records, 8, 9) == r.verdicts
        assert list(r.verdicts) == list(VERDICTS)


def test_region_errors_are_collected_with_coordinates():
    # alpha^2 f^2 - beta^2 g^2 changes sign at u = 1 for f = u, g = 1
    ch = fam.rs_example_b(domain=((1.1, 3.0), (0.1, 1.0))).with_domain(((0.5, 2.0), (0.1, 1.0)))
    r = classify_region(ch, (6, 3))
    assert r.census_histogram["error"] > 0
    e = r.errors[0]
    assert {"i", "j", "u", "v", "error"} <= set(e)
    assert "NotSpacelike" in e["error"]
    assert not r.verdicts["pseudo_planar"]["value"]


def test_track_field_continuous_and_wildcards():
    nu, nv = 4, 5
    cands = [[[np.array([np.cos(0.05 * (i + j)), np.sin(0.05 * (i + j))])] for j in range(nv)] for i in range(nu)]
    cands[1][2] = None
    assert track_field(cands, nu, nv) == (True, None)


def test_track_field_picks_nearest_root_and_sign():
    a, b = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    cands = [[[a, b], [b, -a]], [[0.99 * a + 0.1 * b, b], [-a, b]]]
    ok, info = track_field(cands, 2, 2)
    assert ok, info


def test_track_field_reports_discontinuity():
    a, b = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    ok, info = track_field([[[a], [b]], [[a], [a]]], 2, 2)
    assert not ok and info["reason"] == "discontinuous field"
    ok, info = track_field([[[a], []], [[a], [a]]], 2, 2)
    assert not ok and info["reason"] == "no admissible direction"


def test_track_field_reports_sign_obstruction():
    # a direction that turns by pi around a loop of four cells
    th = [[0.0, np.pi / 4], [3 * np.pi / 4, np.pi / 2]]
    cands = [[[np.array([np.cos(t), np.sin(t)])] for t in row] for row in th]
    ok, info = track_field(cands, 2, 2, max_jump=np.pi / 3)
    assert not ok and info["reason"] == "sign obstruction"


def test_report_is_deterministic():
    a = classify_region(fam.make_example_1_2(), (5, 5)).to_dict()
    b = classify_region(fam.make_example_1_2(), (5, 5)).to_dict()
    assert a == b
