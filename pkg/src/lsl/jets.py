"""Second-order jets of surface charts and a finite-difference cross-check."""

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import OutOfDomain
from .minkowski import mink_dot


@dataclass(frozen=True)
class Jet2:
    """Position and all first and second partials of a chart at ``(u, v)``."""

    u: float
    v: float
    X: np.ndarray
    Xu: np.ndarray
    Xv: np.ndarray
    Xuu: np.ndarray
    Xuv: np.ndarray
    Xvv: np.ndarray

    SLOTS = ("X", "Xu", "Xv", "Xuu", "Xuv", "Xvv")

    def slots(self):
        return {name: getattr(self, name) for name in self.SLOTS}

    def second_slots(self):
        return self.Xuu, self.Xuv, self.Xvv

    def scale(self):
        """Largest absolute component over all slots."""
        return max(float(np.max(np.abs(getattr(self, s)))) for s in self.SLOTS)


Domain = tuple[tuple[float, float], tuple[float, float]]


@dataclass(frozen=True)
class SurfaceChart:
    """A parametrized surface ``(u, v) -> R^4_1`` with analytic jets.

    ``jet`` returns the six slots of a :class:`Jet2` as a tuple of arrays;
    positions for the finite-difference oracle come from the same callable.
    ``extras`` carries family-specific closed forms for cross-validation.
    """

    name: str
    family: str
    domain: Domain
    jet: Callable[[float, float], tuple]
    extras: dict = field(default_factory=dict, compare=False)

    def contains(self, u, v, margin=0.0):
        (u0, u1), (v0, v1) = self.domain
        return (u0 + margin <= u <= u1 - margin) and (v0 + margin <= v <= v1 - margin)

    def position(self, u, v):
        return np.asarray(self.jet(u, v)[0], dtype=float)

    def with_domain(self, domain):
        return SurfaceChart(self.name, self.family, domain, self.jet, self.extras)


def eval_jet2(chart, u, v):
    """Analytic jet of ``chart`` at ``(u, v)``; the domain is closed."""
    u = float(u)
    v = float(v)
    if not chart.contains(u, v):
        raise OutOfDomain(f"({u}, {v}) outside {chart.domain} of {chart.name}")
    slots = [np.asarray(s, dtype=float) for s in chart.jet(u, v)]
    return Jet2(u, v, *slots)


def fd_steps(u, v, h=None):
    if h is not None:
        return h, h
    return 1e-4 * (1.0 + abs(u)), 1e-4 * (1.0 + abs(v))


def fd_jet2(chart, u, v, h=None):
    """Central-difference jet built from position evaluations only.

    The default steps are ``1e-4 * (1 + |u|)`` and ``1e-4 * (1 + |v|)``:
    second-order truncation error near ``h**2`` and rounding near
    ``eps / h**2`` both sit around ``1e-8`` relative to the jet scale.
    """
    hu, hv = fd_steps(u, v, h)
    if not (chart.contains(u - 2 * hu, v - 2 * hv) and chart.contains(u + 2 * hu, v + 2 * hv)):
        raise OutOfDomain(f"({u}, {v}) within 2h of the boundary of {chart.name}")
    X = chart.position

    x0 = X(u, v)
    xp0, xm0 = X(u + hu, v), X(u - hu, v)
    x0p, x0m = X(u, v + hv), X(u, v - hv)
    xpp, xpm = X(u + hu, v + hv), X(u + hu, v - hv)
    xmp, xmm = X(u - hu, v + hv), X(u - hu, v - hv)

    return Jet2(
        float(u),
        float(v),
        x0,
        (xp0 - xm0) / (2 * hu),
        (x0p - x0m) / (2 * hv),
        (xp0 - 2 * x0 + xm0) / hu**2,
        (xpp - xpm - xmp + xmm) / (4 * hu * hv),
        (x0p - 2 * x0 + x0m) / hv**2,
    )


def check_spacelike(jet, tau=1e-9):
    """True iff the tangent plane spanned by ``Xu, Xv`` is positive definite.

    The diagonal entries are compared with the squared Euclidean size of
    their tangent vectors, and the determinant with ``g11 * g22``, so the
    test is independent of the parametrization speed.
    """
    g11 = mink_dot(jet.Xu, jet.Xu)
    g12 = mink_dot(jet.Xu, jet.Xv)
    g22 = mink_dot(jet.Xv, jet.Xv)
    su, sv = float(jet.Xu @ jet.Xu), float(jet.Xv @ jet.Xv)
    if su == 0.0 or sv == 0.0:
        return False
    return g11 > tau * su and g22 > tau * sv and g11 * g22 - g12 * g12 > tau * g11 * g22
