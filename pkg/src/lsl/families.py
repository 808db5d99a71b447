"""Surface families with analytic jets and their closed-form invariants.

Every chart returns the six jet slots ``X, Xu, Xv, Xuu, Xuv, Xvv``.
Closed-form frames, fields and predicates live here so that tests can
compare them against the generic pipeline in :mod:`lsl.forms` and
:mod:`lsl.classify`.
"""

import math

import numpy as np

from .classify.point import CensusKind
from .errors import DegeneratePlane, InvalidProfile
from .jets import SurfaceChart
from .minkowski import mink_dot, random_lorentz, wedge3
from .profiles import CurveProfile, Profile

TAU_PROFILE = 1e-8
N_CHECK = 9


def _samples(interval, n=N_CHECK):
    return np.linspace(interval[0], interval[1], n)


def _unit(v):
    return v / math.sqrt(abs(mink_dot(v, v)))


# -- single examples -------------------------------------------------------


def make_example_1_1(domain=((-1.0, 1.0), (-1.0, 1.0))):
    """``X(u, v) = ((1+v) cos u, (1+v) sin u, sinh u, cosh u)``.

    Admits one bi-normal field, ``(0, 0, sinh u, cosh u)``.
    """

    def jet(u, v):
        c, s, ch, sh = math.cos(u), math.sin(u), math.cosh(u), math.sinh(u)
        r = 1.0 + v
        return (
            np.array([r * c, r * s, sh, ch]),
            np.array([-r * s, r * c, ch, sh]),
            np.array([c, s, 0.0, 0.0]),
            np.array([-r * c, -r * s, sh, ch]),
            np.array([-s, c, 0.0, 0.0]),
            np.zeros(4),
        )

    def binormal(u, v):
        return np.array([0.0, 0.0, math.sinh(u), math.cosh(u)])

    return SurfaceChart("example-1.1", "example-1.1", domain, jet, {"binormal": binormal})


def make_example_1_2(domain=((1.1, 2.0), (0.1, 6.2))):
    """``X(u, v) = (e^{2u} cos v, e^{2u} sin v, e^{-u} cosh v, e^{-u} sinh v)``, u > 1.

    Hand-coded separately from :func:`make_rs` so the two paths can be
    compared.  ``extras`` exposes the closed-form frame and coefficient tables.
    """
    if domain[0][0] <= 1.0:
        raise InvalidProfile("example-1.2 requires u > 1")

    def jet(u, v):
        a, b = math.exp(2 * u), math.exp(-u)
        c, s, ch, sh = math.cos(v), math.sin(v), math.cosh(v), math.sinh(v)
        return (
            np.array([a * c, a * s, b * ch, b * sh]),
            np.array([2 * a * c, 2 * a * s, -b * ch, -b * sh]),
            np.array([-a * s, a * c, b * sh, b * ch]),
            np.array([4 * a * c, 4 * a * s, b * ch, b * sh]),
            np.array([-2 * a * s, 2 * a * c, -b * sh, -b * ch]),
            np.array([-a * c, -a * s, b * ch, b * sh]),
        )

    def frame(u, v):
        a, b = math.exp(2 * u), math.exp(-u)
        c, s, ch, sh = math.cos(v), math.sin(v), math.cosh(v), math.sinh(v)
        n1 = -np.array([b * c, b * s, 2 * a * ch, 2 * a * sh])
        n2 = np.array([-b * s, b * c, a * sh, a * ch])
        return _unit(n1), _unit(n2)

    def tables(u):
        g11 = 4 * math.exp(4 * u) + math.exp(-2 * u)
        g22 = math.exp(4 * u) - math.exp(-2 * u)
        e = math.exp(u)
        return {
            "n1": (-6 * e / math.sqrt(g11), 0.0, -e / math.sqrt(g11)),
            "n2": (0.0, 3 * e / math.sqrt(g22), 0.0),
        }

    return SurfaceChart("example-1.2", "example-1.2", domain, jet, {"frame": frame, "tables": tables})


# -- ruled surfaces ----------------------------------------------------------


def check_ruled_profiles(alpha, W, t_interval, tol=TAU_PROFILE):
    for t in _samples(t_interval):
        _, da, _ = alpha(t)
        w, dw, _ = W(t)
        checks = {
            "|W| = 1": mink_dot(w, w) - 1.0,
            "|alpha'| = 1": mink_dot(da, da) - 1.0,
            "<W, alpha'> = 0": mink_dot(w, da),
        }
        for name, err in checks.items():
            if abs(err) > tol:
                raise InvalidProfile(f"ruled profile violates {name} at t={t:g} (error {err:.2e})")
        if mink_dot(dw, dw) <= 0:
            raise InvalidProfile(f"ruled profile needs <W', W'> > 0 at t={t:g}")


def make_ruled(alpha, W, domain=((0.0, 2.0), (-1.0, 1.0)), name="ruled", check=True):
    """Ruled surface ``X(t, s) = alpha(t) + s W(t)``.

    The first chart parameter runs along the base curve and the second
    along the rulings, so ``g22 = 1``, ``g12 = 0`` and ``b22 = 0``.
    """
    if check:
        check_ruled_profiles(alpha, W, domain[0])

    def jet(t, s):
        a, da, d2a = alpha(t)
        w, dw, d2w = W(t)
        return (a + s * w, da + s * dw, w, d2a + s * d2w, dw, np.zeros(4))

    return SurfaceChart(name, "ruled", domain, jet, {"alpha": alpha, "W": W})


def ruled_dependency_test(alpha, W, t, tau=1e-9):
    """True iff ``{alpha'(t), W(t), W'(t)}`` is numerically rank-deficient."""
    _, da, _ = alpha(t)
    w, dw, _ = W(t)
    sv = np.linalg.svd(np.array([da, w, dw]), compute_uv=False)
    return bool(sv[2] <= tau * sv[0])


def ruled_binormal_closed_form(alpha, W, t):
    """Unit future-pointing normalization of ``alpha' ^ W ^ W'``."""
    _, da, _ = alpha(t)
    w, dw, _ = W(t)
    b = wedge3(da, w, dw)
    scale = np.linalg.norm(da) * np.linalg.norm(w) * np.linalg.norm(dw)
    if np.linalg.norm(b) <= 1e-10 * scale:
        raise DegeneratePlane(f"alpha', W, W' dependent at t={t:g}")
    b = _unit(b)
    return -b if b[3] < 0 else b


def random_ruled(rng, developable=False, boost=0.5):
    """A random ruled surface in a random Lorentz frame.

    Generic case: ``W`` turns in a spacelike plane while ``alpha'`` sweeps a
    hyperbola in the complementary Lorentzian plane, so ``{alpha', W, W'}``
    is independent everywhere.  Developable case: a cone ``alpha = W / |W'|``
    over a unit-speed curve on de Sitter space, so ``W'`` is parallel to
    ``alpha'``.
    """
    L = random_lorentz(rng, boost)
    ea, eb, ec, ed = L.T
    p0 = rng.normal(size=4)
    om = rng.uniform(0.5, 2.0)
    ph = rng.uniform(0, 2 * np.pi)

    if not developable:
        ka = rng.uniform(0.3, 1.5)

        def w_pos(t):
            return math.cos(om * t + ph) * ea + math.sin(om * t + ph) * eb

        def w_d1(t):
            return om * (-math.sin(om * t + ph) * ea + math.cos(om * t + ph) * eb)

        W = CurveProfile(w_pos, w_d1, lambda t: -om * om * w_pos(t), text="random W")
        alpha = CurveProfile(
            lambda t: (math.sinh(ka * t) * ec + math.cosh(ka * t) * ed) / ka + p0,
            lambda t: math.cosh(ka * t) * ec + math.sinh(ka * t) * ed,
            lambda t: ka * (math.sinh(ka * t) * ec + math.cosh(ka * t) * ed),
            text="random alpha",
        )
        return make_ruled(alpha, W, ((0.0, 2.0), (-1.0, 1.0)), name="random-ruled")

    c1 = rng.uniform(0.5, 1.0)
    c3 = rng.uniform(0.0, 1.0)
    c2 = math.sqrt(1.0 - c1 * c1 + c3 * c3)
    speed = c1 * om

    def w_pos(t):
        return c1 * (math.cos(om * t + ph) * ea + math.sin(om * t + ph) * eb) + c2 * ec + c3 * ed

    def w_d1(t):
        return speed * (-math.sin(om * t + ph) * ea + math.cos(om * t + ph) * eb)

    def w_d2(t):
        return -speed * om * (math.cos(om * t + ph) * ea + math.sin(om * t + ph) * eb)

    W = CurveProfile(w_pos, w_d1, w_d2, text="random cone W")
    alpha = CurveProfile(
        lambda t: w_pos(t) / speed + p0,
        lambda t: w_d1(t) / speed,
        lambda t: w_d2(t) / speed,
        text="random cone alpha",
    )
    return make_ruled(alpha, W, ((0.0, 2.0), (0.0, 1.0)), name="random-developable")


def default_ruled():
    """Base curve ``(0, 0, sinh t, cosh t)`` with director ``(cos t, sin t, 0, 0)``.

    This is the example-1.1 surface reparametrized by ``s = 1 + v``.
    """
    W = CurveProfile.from_exprs(["cos(u)", "sin(u)", "0", "0"])
    alpha = CurveProfile.from_exprs(["0", "0", "sinh(u)", "cosh(u)"])
    return make_ruled(alpha, W, ((-1.0, 1.0), (-1.0, 1.0)))


# -- revolution surfaces of hyperbolic type ------------------------------------


def check_rh_profiles(f, g, rho, u_interval, tol=TAU_PROFILE):
    for u in _samples(u_interval):
        r, dr, _ = rho(u)
        df, dg = f.df(u), g.df(u)
        if r <= 0:
            raise InvalidProfile(f"rh needs rho > 0 (rho({u:g}) = {r:g})")
        speed = df * df + dg * dg - dr * dr
        if abs(speed - 1.0) > tol:
            raise InvalidProfile(f"rh profile must be unit speed: f'^2+g'^2-rho'^2 = {speed:.12g} at u={u:g}")
        for name, d in (("f'", df), ("g'", dg), ("rho'", dr)):
            if d == 0.0:
                raise InvalidProfile(f"rh needs {name} != 0 at u={u:g}")


def make_rh(f, g, rho, domain=((0.0, 1.0), (-1.0, 1.0)), name="rh", check=True):
    """``X(u, v) = (f(u), g(u), rho(u) sinh v, rho(u) cosh v)``."""
    if check:
        check_rh_profiles(f, g, rho, domain[0])

    def jet(u, v):
        f0, f1, f2 = f(u)
        g0, g1, g2 = g(u)
        r0, r1, r2 = rho(u)
        ch, sh = math.cosh(v), math.sinh(v)
        return (
            np.array([f0, g0, r0 * sh, r0 * ch]),
            np.array([f1, g1, r1 * sh, r1 * ch]),
            np.array([0.0, 0.0, r0 * ch, r0 * sh]),
            np.array([f2, g2, r2 * sh, r2 * ch]),
            np.array([0.0, 0.0, r1 * ch, r1 * sh]),
            np.array([0.0, 0.0, r0 * sh, r0 * ch]),
        )

    return SurfaceChart(name, "rh", domain, jet, {"f": f, "g": g, "rho": rho})


def rh_closed_form_fields(f, g, rho, u, v):
    """The bi-normal fields ``B1, B2`` of an rh surface and ``nu = B1 - B2``.

    ``B1`` spans the normals with ``b11 = 0``; it is oriented so that its
    shape operator is ``diag(0, -(f'g'' - f''g'))``, which makes ``B1 - B2``
    the umbilic field.
    """
    _, Xu, Xv, Xuu, _, _ = make_rh(f, g, rho, check=False).jet(u, v)
    B1 = wedge3(Xv, Xu, Xuu)
    B2 = np.array([-g.df(u), f.df(u), 0.0, 0.0])
    return B1, B2, B1 - B2


def random_rh(rng):
    """A random unit-speed rh profile with ``f'g'' - f''g' != 0``.

    ``rho`` is affine with slope ``c`` and ``(f', g')`` turns at rate
    ``kappa`` on a circle of radius ``sqrt(1 + c^2)``; the domain keeps
    the turning angle inside ``(0, pi/2)`` so ``f', g' != 0``.
    """
    c = float(rng.uniform(0.3, 1.0) * rng.choice([-1.0, 1.0]))
    ka = float(rng.uniform(0.5, 1.5))
    th0 = float(rng.uniform(0.1, 0.2))
    length = 1.2 / ka
    r0 = 1.0 + abs(c) * length + float(rng.uniform(0.0, 1.0))
    s = math.sqrt(1.0 + c * c)
    f = Profile.from_expr(f"{s / ka!r}*sin({ka!r}*u + {th0!r})")
    g = Profile.from_expr(f"-{s / ka!r}*cos({ka!r}*u + {th0!r})")
    rho = Profile.from_expr(f"{r0!r} + {c!r}*u")
    return make_rh(f, g, rho, ((0.0, length), (-1.0, 1.0)), name="random-rh")


def default_rh():
    return make_rh(
        Profile.from_expr("sqrt(1.25)*sin(u + 0.15)"),
        Profile.from_expr("-sqrt(1.25)*cos(u + 0.15)"),
        Profile.from_expr("2 + 0.5*u"),
        ((0.0, 1.2), (-1.0, 1.0)),
    )


# -- rotational surfaces of type I -----------------------------------------------


def check_rs_profiles(f, g, alpha, beta, u_interval):
    if alpha <= 0 or beta <= 0:
        raise InvalidProfile("rs needs alpha, beta > 0")
    for u in _samples(u_interval):
        f0, g0 = f.f(u), g.f(u)
        if alpha**2 * f0**2 - beta**2 * g0**2 <= 0:
            raise InvalidProfile(f"rs needs alpha^2 f^2 - beta^2 g^2 > 0 at u={u:g}")
        if f.df(u) ** 2 + g.df(u) ** 2 <= 0:
            raise InvalidProfile(f"rs profile is singular at u={u:g}")


def make_rs(f, g, alpha=1.0, beta=1.0, domain=((1.1, 3.0), (0.1, 6.2)), name="rs", check=True):
    """``X(u, v) = (f cos(alpha v), f sin(alpha v), g cosh(beta v), g sinh(beta v))``.

    ``extras["frame"]`` gives the orthonormal frame ``(n1, n2)`` built from
    the profile and ``extras["tables"]`` the closed-form coefficient tables.
    """
    al, be = float(alpha), float(beta)
    if check:
        check_rs_profiles(f, g, al, be, domain[0])

    def jet(u, v):
        f0, f1, f2 = f(u)
        g0, g1, g2 = g(u)
        c, s = math.cos(al * v), math.sin(al * v)
        ch, sh = math.cosh(be * v), math.sinh(be * v)
        return (
            np.array([f0 * c, f0 * s, g0 * ch, g0 * sh]),
            np.array([f1 * c, f1 * s, g1 * ch, g1 * sh]),
            np.array([-al * f0 * s, al * f0 * c, be * g0 * sh, be * g0 * ch]),
            np.array([f2 * c, f2 * s, g2 * ch, g2 * sh]),
            np.array([-al * f1 * s, al * f1 * c, be * g1 * sh, be * g1 * ch]),
            np.array([-al * al * f0 * c, -al * al * f0 * s, be * be * g0 * ch, be * be * g0 * sh]),
        )

    def frame(u, v):
        f0, f1 = f.f(u), f.df(u)
        g0, g1 = g.f(u), g.df(u)
        c, s = math.cos(al * v), math.sin(al * v)
        ch, sh = math.cosh(be * v), math.sinh(be * v)
        n1 = np.array([g1 * c, g1 * s, -f1 * ch, -f1 * sh]) / math.sqrt(f1 * f1 + g1 * g1)
        n2 = np.array([-be * g0 * s, be * g0 * c, al * f0 * sh, al * f0 * ch]) / math.sqrt(
            al * al * f0 * f0 - be * be * g0 * g0
        )
        return n1, n2

    def tables(u):
        f0, f1, f2 = f(u)
        g0, g1, g2 = g(u)
        e = math.sqrt(f1 * f1 + g1 * g1)
        h = math.sqrt(al * al * f0 * f0 - be * be * g0 * g0)
        return {
            "n1": ((f2 * g1 - f1 * g2) / e, 0.0, -(be * be * f1 * g0 + al * al * f0 * g1) / e),
            "n2": (0.0, al * be * (f1 * g0 - f0 * g1) / h, 0.0),
        }

    return SurfaceChart(
        name, "rs", domain, jet, {"frame": frame, "tables": tables, "f": f, "g": g, "alpha": al, "beta": be}
    )


def rs_census_terms(f, g, alpha, beta, u):
    """Sign-bearing terms ``(T1, T2, T3)`` and their magnitudes.

    ``T1 = f''g' - f'g''`` (meridian curvature), ``T2 = beta^2 f'g + alpha^2 f g'``
    and ``T3 = alpha beta (f'g - f g')``.
    """
    f0, f1, f2 = f(u)
    g0, g1, g2 = g(u)
    t1 = (f2 * g1 - f1 * g2, abs(f2 * g1) + abs(f1 * g2))
    t2 = (beta**2 * f1 * g0 + alpha**2 * f0 * g1, abs(beta**2 * f1 * g0) + abs(alpha**2 * f0 * g1))
    t3 = (alpha * beta * (f1 * g0 - f0 * g1), alpha * beta * (abs(f1 * g0) + abs(f0 * g1)))
    return t1, t2, t3


def rs_census_predicate(f, g, alpha, beta, u, tau=1e-9):
    """Bi-normal census of an rs surface from the profile sign conditions.

    With ``lam n1 + mu n2`` the Gauss curvature is proportional to
    ``-T1 T2 lam^2 - T3^2 mu^2``: two directions when ``-T1 T2 > 0``, none
    when ``< 0``, one when exactly one coefficient vanishes and every
    direction when ``T3 = 0`` and ``T1 T2 = 0``.
    """
    (t1, m1), (t2, m2), (t3, m3) = rs_census_terms(f, g, alpha, beta, u)
    z1 = abs(t1) <= tau * m1
    z2 = abs(t2) <= tau * m2
    z3 = abs(t3) <= tau * m3
    a_zero = z1 or z2
    if z3:
        return CensusKind.ALL if a_zero else CensusKind.ONE
    if a_zero:
        return CensusKind.ONE
    return CensusKind.TWO if -t1 * t2 > 0 else CensusKind.ZERO


def rs_example_b(domain=((1.1, 3.0), (0.1, 6.2))):
    """``(u cos v, u sin v, cosh v, sinh v)``: one bi-normal field."""
    return make_rs(Profile.from_expr("u"), Profile.from_expr("1"), 1.0, 1.0, domain, name="rs-4b")


def rs_example_c(domain=((1.1, 3.0), (0.1, 6.2))):
    """``(u^2 cos v, u^2 sin v, u cosh v, u sinh v)``: no bi-normal field."""
    return make_rs(Profile.from_expr("u^2"), Profile.from_expr("u"), 1.0, 1.0, domain, name="rs-4c")


def rs_example_d(domain=((1.1, 2.0), (0.1, 6.2))):
    """``(e^{2u} cos v, e^{2u} sin v, e^{-u} cosh v, e^{-u} sinh v)``: two fields."""
    return make_rs(Profile.from_expr("exp(2*u)"), Profile.from_expr("exp(-u)"), 1.0, 1.0, domain, name="rs-4d")


def rs_line_through_origin(c, alpha=1.0, beta=1.0, domain=((1.1, 3.0), (0.1, 6.2))):
    """Meridian ``f = c g`` with ``g = u``; spacelike iff ``c^2 alpha^2 > beta^2``."""
    return make_rs(Profile.from_expr(f"{float(c)!r}*u"), Profile.from_expr("u"), alpha, beta, domain, name="rs-line")


BUILTINS = {
    "example-1.1": make_example_1_1,
    "example-1.2": make_example_1_2,
    "ruled": default_ruled,
    "rh": default_rh,
    "rs": rs_example_d,
    "rs-4b": rs_example_b,
    "rs-4c": rs_example_c,
    "rs-4d": rs_example_d,
}

DESCRIPTIONS = {
    "example-1.1": "((1+v)cos u, (1+v)sin u, sinh u, cosh u): one bi-normal field, not pseudo-umbilic",
    "example-1.2": "(e^2u cos v, e^2u sin v, e^-u cosh v, e^-u sinh v): two bi-normal fields, not pseudo-umbilic",
    "ruled": "alpha(t) + s W(t); flags --curve/--director (4 comma-separated expressions each)",
    "rh": "(f, g, rho sinh v, rho cosh v) with unit-speed profile; flags --f/--g/--rho",
    "rs": "(f cos av, f sin av, g cosh bv, g sinh bv); flags --f/--g/--alpha/--beta",
    "rs-4b": "rs with f = u, g = 1: one bi-normal field",
    "rs-4c": "rs with f = u^2, g = u: no bi-normal field",
    "rs-4d": "rs with f = e^2u, g = e^-u: two bi-normal fields",
}
