import numpy as np
import pytest

from lsl import families as fam
from lsl.classify import CensusKind, classify_point
from lsl.errors import DegeneratePlane, InvalidProfile
from lsl.forms import first_form, gauss_curvature, normal_frame, second_form
from lsl.jets import eval_jet2
from lsl.minkowski import Causal, causal_character, mink_dot
from lsl.profiles import CurveProfile, Profile
from oracles import parallel_error, unit_timelike


def _samples(chart, nu=6, nv=6):
    (u0, u1), (v0, v1) = chart.domain
    for u in np.linspace(u0, u1, nu):
        for v in np.linspace(v0, v1, nv):
            yield u, v


def test_example_1_1_unique_binormal():
    ch = fam.make_example_1_1()
    for u, v in _samples(ch):
        pc = classify_point(eval_jet2(ch, u, v))
        assert pc.census.kind is CensusKind.ONE
        B = np.array([0.0, 0.0, np.sinh(u), np.cosh(u)])
        assert parallel_error(unit_timelike(pc.root_vectors[0]), B) < 1e-8


def test_example_1_2_tables_and_census():
    ch = fam.make_example_1_2()
    for u, v in _samples(ch):
        j = eval_jet2(ch, u, v)
        n1, n2 = ch.extras["frame"](u, v)
        b1, b2 = second_form(j, n1), second_form(j, n2)
        assert abs(b1.b12) < 1e-9
        assert abs(b2.b11) < 1e-9 and abs(b2.b22) < 1e-9
        assert np.allclose(b1.coeffs, ch.extras["tables"](u)["n1"], atol=1e-9)
        pc = classify_point(j)
        assert pc.census.kind is CensusKind.TWO and pc.witness is None


def test_example_1_2_requires_u_above_one():
    with pytest.raises(InvalidProfile):
        fam.make_example_1_2(((0.5, 2.0), (0.1, 6.2)))


def test_example_1_2_equals_rs_d_pointwise():
    a, b = fam.make_example_1_2(), fam.rs_example_d()
    for u, v in _samples(a):
        pa, pb = classify_point(eval_jet2(a, u, v)), classify_point(eval_jet2(b, u, v))
        assert pa.census.kind is pb.census.kind
        assert np.allclose(eval_jet2(a, u, v).X, eval_jet2(b, u, v).X)


# -- ruled


def test_ruled_first_and_second_forms():
    ch = fam.default_ruled()
    for t, s in _samples(ch):
        j = eval_jet2(ch, t, s)
        g = first_form(j)
        # X_s = W is the ruling direction
        assert g.g22 == pytest.approx(1.0) and abs(g.g12) < 1e-12
        assert all(second_form(j, n).b22 == 0.0 for n in (normal_frame(j).n_s, normal_frame(j).n_t))


def test_ruled_profile_validation():
    bad_speed = CurveProfile.from_exprs(["0", "0", "2*sinh(u)", "2*cosh(u)"])
    W = CurveProfile.from_exprs(["cos(u)", "sin(u)", "0", "0"])
    with pytest.raises(InvalidProfile):
        fam.make_ruled(bad_speed, W)
    not_unit = CurveProfile.from_exprs(["2*cos(u)", "2*sin(u)", "0", "0"])
    alpha = CurveProfile.from_exprs(["0", "0", "sinh(u)", "cosh(u)"])
    with pytest.raises(InvalidProfile):
        fam.make_ruled(alpha, not_unit)


def test_ruled_generic_has_timelike_closed_form_binormal(rng):
    for _ in range(5):
        ch = fam.random_ruled(rng)
        alpha, W = ch.extras["alpha"], ch.extras["W"]
        for t, s in _samples(ch, 5, 3):
            assert not fam.ruled_dependency_test(alpha, W, t)
            pc = classify_point(eval_jet2(ch, t, s))
            assert pc.census.kind is CensusKind.ONE
            n = fam.ruled_binormal_closed_form(alpha, W, t)
            assert causal_character(n).kind is Causal.TIMELIKE
            assert mink_dot(n, n) == pytest.approx(-1.0)
            assert parallel_error(unit_timelike(pc.root_vectors[0]), n) < 1e-8


def test_ruled_developable_is_planar_with_zero_curvature(rng):
    for _ in range(5):
        ch = fam.random_ruled(rng, developable=True)
        alpha, W = ch.extras["alpha"], ch.extras["W"]
        for t, s in _samples(ch, 5, 3):
            assert fam.ruled_dependency_test(alpha, W, t)
            j = eval_jet2(ch, t, s)
            pc = classify_point(j)
            assert pc.census.kind is CensusKind.ALL
            assert abs(gauss_curvature(j, normal_frame(j))) < 1e-9
            with pytest.raises(DegeneratePlane):
                fam.ruled_binormal_closed_form(alpha, W, t)


def test_ruled_developable_iff_gauss_curvature_vanishes(rng):
    for developable in (False, True):
        ch = fam.random_ruled(rng, developable=developable)
        for t, s in _samples(ch, 4, 3):
            j = eval_jet2(ch, t, s)
            K = gauss_curvature(j, normal_frame(j))
            assert (abs(K) < 1e-9) == fam.ruled_dependency_test(ch.extras["alpha"], ch.extras["W"], t)


def test_ruled_gauss_curvature_from_frame_members():
    ch = fam.default_ruled()
    for t, s in _samples(ch):
        j = eval_jet2(ch, t, s)
        fr, g = normal_frame(j), first_form(j)
        bs, bt = second_form(j, fr.n_s), second_form(j, fr.n_t)
        closed = -(bs.b12**2) / g.g11 + (bt.b12**2) / g.g11
        # g22 = 1, g12 = 0 so det g = g11
        assert gauss_curvature(j, fr) == pytest.approx(closed, abs=1e-12)


# -- rh


def test_rh_profile_validation():
    with pytest.raises(InvalidProfile):
        fam.make_rh(Profile.from_expr("u"), Profile.from_expr("2*u"), Profile.from_expr("1 + u"))
    with pytest.raises(InvalidProfile):
        fam.make_rh(Profile.from_expr("u"), Profile.from_expr("0"), Profile.from_expr("2"))


def test_rh_closed_form_fields(rng):
    for ch in [fam.default_rh()] + [fam.random_rh(rng) for _ in range(3)]:
        f, g, rho = ch.extras["f"], ch.extras["g"], ch.extras["rho"]
        for u, v in _samples(ch, 4, 4):
            j = eval_jet2(ch, u, v)
            B1, B2, nu = fam.rh_closed_form_fields(f, g, rho, u, v)
            scale = np.linalg.norm(B1)
            assert abs(second_form(j, B1).b11) < 1e-10 * scale
            assert abs(second_form(j, B2).b22) < 1e-10
            pc = classify_point(j)
            assert pc.census.kind is CensusKind.TWO
            fr = pc.frame
            w = pc.witness
            assert parallel_error(fr.vector(w.direction.lam, w.direction.mu), nu) < 1e-8


# -- rs


@pytest.mark.parametrize(
    "factory, kind",
    [(fam.rs_example_b, CensusKind.ONE), (fam.rs_example_c, CensusKind.ZERO), (fam.rs_example_d, CensusKind.TWO)],
)
def test_rs_examples_census_matches_predicate(factory, kind):
    ch = factory()
    ex = ch.extras
    for u, v in _samples(ch):
        assert fam.rs_census_predicate(ex["f"], ex["g"], ex["alpha"], ex["beta"], u) is kind
        assert classify_point(eval_jet2(ch, u, v)).census.kind is kind


def test_rs_line_through_origin_is_all(rng):
    for c in rng.uniform(1.2, 3.0, size=3):
        ch = fam.rs_line_through_origin(c)
        ex = ch.extras
        for u, v in _samples(ch, 4, 4):
            assert fam.rs_census_predicate(ex["f"], ex["g"], ex["alpha"], ex["beta"], u) is CensusKind.ALL
            assert classify_point(eval_jet2(ch, u, v)).census.kind is CensusKind.ALL


def test_rs_inadmissible_line_rejected():
    with pytest.raises(InvalidProfile):
        fam.rs_line_through_origin(0.9)


def test_rs_frame_is_orthonormal_and_tables_match():
    for ch in (fam.rs_example_b(), fam.rs_example_c(), fam.rs_example_d()):
        for u, v in _samples(ch, 4, 4):
            j = eval_jet2(ch, u, v)
            n1, n2 = ch.extras["frame"](u, v)
            assert mink_dot(n1, n1) == pytest.approx(1.0, abs=1e-9)
            assert mink_dot(n2, n2) == pytest.approx(-1.0, abs=1e-9)
            t = ch.extras["tables"](u)
            assert np.allclose(second_form(j, n1).coeffs, t["n1"], atol=1e-9)
            assert np.allclose(second_form(j, n2).coeffs, t["n2"], atol=1e-9)


def test_rs_gauss_curvature_of_mixed_field(rng):
    ch = fam.rs_example_d()
    for u, v in _samples(ch, 3, 3):
        j = eval_jet2(ch, u, v)
        g = first_form(j)
        n1, n2 = ch.extras["frame"](u, v)
        t = ch.extras["tables"](u)
        for lam, mu in rng.normal(size=(3, 2)):
            b = second_form(j, lam * n1 + mu * n2)
            closed = (lam**2 * t["n1"][0] * t["n1"][2] - mu**2 * t["n2"][1] ** 2) / (g.g11 * g.g22)
            assert b.det / g.det == pytest.approx(closed, rel=1e-9)


def test_rs_predicate_cases():
    one = Profile.constant(1.0)
    u_ = Profile.from_expr("u")
    # g constant and f linear: T1 = 0 so n1 is bi-normal, T3 != 0
    assert fam.rs_census_predicate(u_, one, 1.0, 1.0, 2.0) is CensusKind.ONE
    # f = c g: T3 = 0 and T1 = 0
    assert fam.rs_census_predicate(Profile.from_expr("2*u"), u_, 1.0, 1.0, 2.0) is CensusKind.ALL


def test_builtin_registry_matches_descriptions():
    assert set(fam.BUILTINS) == set(fam.DESCRIPTIONS)
    assert set(fam.BUILTINS) == {"example-1.1", "example-1.2", "ruled", "rh", "rs", "rs-4b", "rs-4c", "rs-4d"}
    for name, factory in fam.BUILTINS.items():
        ch = factory()
        (u0, u1), (v0, v1) = ch.domain
        classify_point(eval_jet2(ch, 0.5 * (u0 + u1), 0.5 * (v0 + v1)))
