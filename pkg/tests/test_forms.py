import numpy as np
import pytest

from lsl import families as fam
from lsl.errors import NotNormal, NotSpacelike
from lsl.forms import (
    FirstForm,
    SecondForm,
    align_frame,
    first_form,
    gauss_curvature,
    mean_curvature_vector,
    normal_frame,
    nu_gauss,
    nu_mean,
    principal_curvatures,
    second_form,
    shape_operator,
)
from lsl.jets import Jet2, eval_jet2
from lsl.minkowski import mink_dot, random_lorentz
from oracles import random_spd, random_sym, sym_to_coeffs
from conftest import builtin_charts


def _grid(chart, n=5):
    (u0, u1), (v0, v1) = chart.domain
    for u in np.linspace(u0, u1, n):
        for v in np.linspace(v0, v1, n):
            yield eval_jet2(chart, u, v)


def _random_spacelike_jet(rng):
    L = random_lorentz(rng, 0.6)
    Xu = L @ np.array([1.0, 0.2, 0.0, 0.0])
    Xv = L @ np.array([0.1, 1.0, 0.0, 0.0])
    sec = rng.normal(size=(3, 4))
    return Jet2(0.0, 0.0, rng.normal(size=4), Xu, Xv, *sec)


def test_example_1_1_first_form():
    ch = fam.make_example_1_1()
    for j in _grid(ch):
        g = first_form(j)
        assert abs(g.g12) < 1e-14
        assert g.g22 == 1.0
        assert g.g11 == pytest.approx((1 + j.v) ** 2 + 1, rel=1e-14)


def test_rs_first_form_g22():
    ch = fam.rs_example_c()
    for j in _grid(ch):
        f, g = ch.extras["f"].f(j.u), ch.extras["g"].f(j.u)
        assert first_form(j).g22 == pytest.approx(f * f - g * g, rel=1e-9)


def test_first_form_rejects_timelike_plane():
    j = Jet2(0.0, 0.0, np.zeros(4), np.array([1.0, 0, 0, 0]), np.array([0.0, 0, 0, 1]),
             np.zeros(4), np.zeros(4), np.zeros(4))
    with pytest.raises(NotSpacelike):
        first_form(j)


def _assert_frame(j, fr, tol=1e-10):
    scale = max(np.linalg.norm(j.Xu), np.linalg.norm(j.Xv)) * max(np.linalg.norm(fr.n_s), np.linalg.norm(fr.n_t))
    assert mink_dot(fr.n_s, fr.n_s) == pytest.approx(1.0, abs=tol)
    assert mink_dot(fr.n_t, fr.n_t) == pytest.approx(-1.0, abs=tol)
    assert abs(mink_dot(fr.n_s, fr.n_t)) < tol * max(1.0, scale)
    for t in (j.Xu, j.Xv):
        for n in (fr.n_s, fr.n_t):
            assert abs(mink_dot(t, n)) < tol * scale


def test_normal_frame_invariants_random(rng):
    for _ in range(100):
        j = _random_spacelike_jet(rng)
        _assert_frame(j, normal_frame(j))


@pytest.mark.parametrize("chart", builtin_charts(), ids=lambda c: c.name)
def test_normal_frame_invariants_builtins(chart):
    for j in _grid(chart):
        fr = normal_frame(j)
        _assert_frame(j, fr, 1e-8)
        assert fr.n_t[3] > 0


def test_normal_frame_spans_closed_form_frame():
    for ch in (fam.rs_example_b(), fam.rs_example_c(), fam.rs_example_d(), fam.make_example_1_2()):
        for j in _grid(ch, 4):
            fr = normal_frame(j)
            for n in ch.extras["frame"](j.u, j.v):
                lam, mu = fr.coordinates(n)
                assert np.allclose(fr.vector(lam, mu), n, atol=1e-9 * np.linalg.norm(n))


def test_example_1_1_frame_contains_binormal():
    ch = fam.make_example_1_1()
    for j in _grid(ch):
        fr = normal_frame(j)
        B = np.array([0.0, 0.0, np.sinh(j.u), np.cosh(j.u)])
        lam, mu = fr.coordinates(B)
        assert np.allclose(fr.vector(lam, mu), B, atol=1e-12)


def test_align_frame_flips_to_previous(rng):
    j = _random_spacelike_jet(rng)
    fr = normal_frame(j)
    flipped = fr.boosted(0.0, flip_s=True, flip_t=True)
    again = align_frame(flipped, fr)
    assert np.allclose(again.n_s, fr.n_s) and np.allclose(again.n_t, fr.n_t)


def test_second_form_tables():
    ch = fam.rs_example_d()
    for j in _grid(ch, 4):
        n1, n2 = ch.extras["frame"](j.u, j.v)
        t = ch.extras["tables"](j.u)
        b1, b2 = second_form(j, n1), second_form(j, n2)
        assert np.allclose(b1.coeffs, t["n1"], atol=1e-9)
        assert np.allclose(b2.coeffs, t["n2"], atol=1e-9)


def test_ruled_second_forms_have_b22_zero():
    ch = fam.default_ruled()
    for j in _grid(ch):
        fr = normal_frame(j)
        for n in (fr.n_s, fr.n_t, fr.vector(0.3, -1.2)):
            assert second_form(j, n).b22 == 0.0


def test_second_form_rejects_tangent_vector():
    j = eval_jet2(fam.make_example_1_1(), 0.2, 0.1)
    with pytest.raises(NotNormal):
        second_form(j, j.Xu)


def test_second_form_is_linear(rng):
    for _ in range(50):
        j = _random_spacelike_jet(rng)
        fr = normal_frame(j)
        lam, mu = rng.normal(size=2)
        mix = second_form(j, lam * fr.n_s + mu * fr.n_t).coeffs
        lin = lam * second_form(j, fr.n_s).coeffs + mu * second_form(j, fr.n_t).coeffs
        assert np.max(np.abs(mix - lin)) < 1e-12 * max(1.0, np.max(np.abs(lin)))


def test_example_1_1_shape_operator_along_binormal():
    ch = fam.make_example_1_1()
    for j in _grid(ch):
        B = np.array([0.0, 0.0, np.sinh(j.u), np.cosh(j.u)])
        g, b = first_form(j), second_form(j, B)
        assert (b.b11, b.b12, b.b22) == pytest.approx((-1.0, 0.0, 0.0), abs=1e-12)
        S = shape_operator(g, b)
        # the tangent coordinates carry g11 = (1+v)^2 + 1, so S = diag(-1/g11, 0)
        assert np.allclose(S, [[-1.0 / g.g11, 0.0], [0.0, 0.0]], atol=1e-12)


def test_shape_operator_trivial_cases(rng):
    m = random_spd(rng)
    g = FirstForm(*sym_to_coeffs(m))
    assert np.allclose(shape_operator(g, SecondForm(*sym_to_coeffs(m))), np.eye(2))
    assert np.allclose(shape_operator(g, SecondForm(0.0, 0.0, 0.0)), 0.0)
    assert nu_mean(g, SecondForm(*sym_to_coeffs(m))) == pytest.approx(1.0)
    assert nu_gauss(g, SecondForm(0.0, 0.0, 0.0)) == 0.0


def test_nu_mean_of_diag_minus_one_zero():
    g = FirstForm(1.0, 0.0, 1.0)
    assert nu_mean(g, SecondForm(-1.0, 0.0, 0.0)) == -0.5
    assert principal_curvatures(g, SecondForm(-1.0, 0.0, 0.0)) == pytest.approx((-1.0, 0.0))
    assert principal_curvatures(FirstForm(2.0, 0.5, 1.0), SecondForm(6.0, 1.5, 3.0)) == pytest.approx((3.0, 3.0))


def test_shape_operator_self_adjoint_and_vieta(rng):
    for _ in range(200):
        g = FirstForm(*sym_to_coeffs(random_spd(rng)))
        b = SecondForm(*sym_to_coeffs(random_sym(rng, 3.0)))
        S = shape_operator(g, b)
        gs = g.matrix @ S
        assert abs(gs[0, 1] - gs[1, 0]) < 1e-10 * max(1.0, np.max(np.abs(gs)))
        k1, k2 = principal_curvatures(g, b)
        assert k1 <= k2
        assert abs(k1 * k2 - nu_gauss(g, b)) < 1e-10 * max(1.0, k1 * k1, k2 * k2)
        assert abs(k1 + k2 - 2 * nu_mean(g, b)) < 1e-10 * max(1.0, abs(k1), abs(k2))


def test_ruled_gauss_curvature_closed_form():
    ch = fam.default_ruled()
    for j in _grid(ch):
        g = first_form(j)
        fr = normal_frame(j)
        for n in (fr.n_s, fr.n_t):
            b = second_form(j, n)
            assert nu_gauss(g, b) == pytest.approx(-(b.b12**2) / g.g11, abs=1e-12)


def test_gauss_equation_consistency(rng):
    charts = builtin_charts() + [fam.random_ruled(rng), fam.random_rh(rng)]
    for ch in charts:
        for j in _grid(ch, 4):
            fr = normal_frame(j)
            g = first_form(j)
            K = gauss_curvature(j, fr)
            Ks = nu_gauss(g, second_form(j, fr.n_s))
            Kt = nu_gauss(g, second_form(j, fr.n_t))
            assert abs(K - (Ks - Kt)) < 1e-8 * max(1.0, abs(Ks), abs(Kt))


def test_gauss_equation_is_frame_independent(rng):
    ch = fam.make_example_1_2()
    for j in _grid(ch, 3):
        fr = normal_frame(j)
        K0 = gauss_curvature(j, fr)
        for phi in rng.uniform(-2, 2, size=3):
            assert gauss_curvature(j, fr.boosted(phi)) == pytest.approx(K0, rel=1e-8, abs=1e-10)


def test_mean_curvature_vector_matches_normal_projection(rng):
    for _ in range(30):
        j = _random_spacelike_jet(rng)
        fr = normal_frame(j)
        g = first_form(j)
        H = mean_curvature_vector(g, second_form(j, fr.n_s), second_form(j, fr.n_t), fr)
        gi = np.linalg.inv(g.matrix)
        lap = 0.5 * (gi[0, 0] * j.Xuu + 2 * gi[0, 1] * j.Xuv + gi[1, 1] * j.Xvv)
        proj = mink_dot(lap, fr.n_s) * fr.n_s - mink_dot(lap, fr.n_t) * fr.n_t
        assert np.allclose(H, proj, atol=1e-9 * max(1.0, np.linalg.norm(proj)))


def test_balanced_frame_ignores_input_boost(rng):
    from lsl.forms import balance_frame, euclidean_normal_frame

    for ch in (fam.make_example_1_2(), fam.rs_example_c(), fam.default_rh()):
        for j in _grid(ch, 3):
            ref = normal_frame(j)
            for phi in rng.uniform(-4, 4, size=3):
                fr = balance_frame(j, euclidean_normal_frame(j).boosted(phi))
                assert np.allclose(fr.n_s, ref.n_s, atol=1e-7 * np.linalg.norm(ref.n_s))
                assert np.allclose(fr.n_t, ref.n_t, atol=1e-7 * np.linalg.norm(ref.n_t))


def test_normal_frame_is_lorentz_covariant(rng):
    ch = fam.make_example_1_2()
    for j in _grid(ch, 3):
        L = random_lorentz(rng, 0.8)
        moved = Jet2(j.u, j.v, *[L @ s for s in (j.X, j.Xu, j.Xv, j.Xuu, j.Xuv, j.Xvv)])
        a, b = normal_frame(j), normal_frame(moved)
        for x, y in ((a.n_s, b.n_s), (a.n_t, b.n_t)):
            z = L @ x
            assert min(np.linalg.norm(z - y), np.linalg.norm(z + y)) < 1e-8 * np.linalg.norm(z)
