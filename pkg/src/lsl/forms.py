"""Fundamental forms, normal frames and shape operators of spacelike surfaces."""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh

from .errors import DegeneratePlane, NotNormal, NotSpacelike
from .jets import check_spacelike
from .minkowski import SIGNATURE, mink_dot, orthonormalize_pair

TAU_NORMAL = 1e-8


@dataclass(frozen=True)
class FirstForm:
    g11: float
    g12: float
    g22: float

    @property
    def matrix(self):
        return np.array([[self.g11, self.g12], [self.g12, self.g22]])

    @property
    def det(self):
        return self.g11 * self.g22 - self.g12 * self.g12

    def inner(self, a, b):
        """g-inner product of two tangent coefficient vectors."""
        return float(np.asarray(a) @ self.matrix @ np.asarray(b))


@dataclass(frozen=True)
class SecondForm:
    b11: float
    b12: float
    b22: float
    normal: np.ndarray | None = None

    @property
    def matrix(self):
        return np.array([[self.b11, self.b12], [self.b12, self.b22]])

    @property
    def det(self):
        return self.b11 * self.b22 - self.b12 * self.b12

    @property
    def coeffs(self):
        return np.array([self.b11, self.b12, self.b22])

    def scale(self):
        return float(np.max(np.abs(self.coeffs)))

    @classmethod
    def from_matrix(cls, m, normal=None):
        m = np.asarray(m, dtype=float)
        return cls(float(m[0, 0]), float(0.5 * (m[0, 1] + m[1, 0])), float(m[1, 1]), normal)


def combine(lam, b1, mu, b2):
    """Second form of ``lam * n1 + mu * n2`` from those of ``n1`` and ``n2``."""
    normal = None
    if b1.normal is not None and b2.normal is not None:
        normal = lam * b1.normal + mu * b2.normal
    return SecondForm(
        lam * b1.b11 + mu * b2.b11,
        lam * b1.b12 + mu * b2.b12,
        lam * b1.b22 + mu * b2.b22,
        normal,
    )


@dataclass(frozen=True)
class NormalFrame:
    """Orthonormal Lorentzian basis of the normal plane, spacelike member first."""

    n_s: np.ndarray
    n_t: np.ndarray

    def vector(self, lam, mu):
        return lam * self.n_s + mu * self.n_t

    def coordinates(self, nu):
        """Frame coordinates ``(lam, mu)`` of a normal vector ``nu``."""
        return mink_dot(nu, self.n_s), -mink_dot(nu, self.n_t)

    def boosted(self, phi, flip_s=False, flip_t=False):
        """Frame rotated by a hyperbolic angle ``phi`` inside the normal plane."""
        ch, sh = np.cosh(phi), np.sinh(phi)
        s = ch * self.n_s + sh * self.n_t
        t = sh * self.n_s + ch * self.n_t
        return NormalFrame(-s if flip_s else s, -t if flip_t else t)


def first_form(jet, tau=1e-9):
    if not check_spacelike(jet, tau):
        raise NotSpacelike(f"tangent plane not spacelike at ({jet.u}, {jet.v})")
    return FirstForm(mink_dot(jet.Xu, jet.Xu), mink_dot(jet.Xu, jet.Xv), mink_dot(jet.Xv, jet.Xv))


def euclidean_normal_frame(jet):
    """Orthonormal frame ``(n_s, n_t)`` of the normal plane from Euclidean data.

    The Minkowski Gram matrix of a Euclidean basis of the normal plane is
    diagonalized; its eigenvectors do not depend on which Euclidean basis
    was used.  ``n_t`` is made future-pointing and ``n_s`` is oriented so
    that ``det[Xu, Xv, n_s, n_t] > 0``, which makes the frame continuous in
    ``(u, v)`` on any connected chart.
    """
    rows = np.array([SIGNATURE * jet.Xu, SIGNATURE * jet.Xv])
    _, sv, vt = np.linalg.svd(rows)
    if sv[-1] <= 1e-14 * sv[0]:
        raise DegeneratePlane(f"tangent vectors dependent at ({jet.u}, {jet.v})")
    basis = vt[2:]
    gram = basis @ np.diag(SIGNATURE) @ basis.T
    w, vecs = np.linalg.eigh(gram)
    if not (w[0] < 0 < w[1]):
        raise DegeneratePlane(f"normal plane not Lorentzian at ({jet.u}, {jet.v})")
    n_t = basis.T @ vecs[:, 0] / np.sqrt(-w[0])
    n_s = basis.T @ vecs[:, 1] / np.sqrt(w[1])
    if n_t[3] < 0:
        n_t = -n_t
    if np.linalg.det(np.array([jet.Xu, jet.Xv, n_s, n_t])) < 0:
        n_s = -n_s
    return NormalFrame(n_s, n_t)


def balance_frame(jet, frame, g=None):
    """Boost ``frame`` so that its two shape operators are as small as possible.

    Minimizes ``tr(S_s^2) + tr(S_t^2)`` over hyperbolic rotations of the
    normal plane, which has the closed form
    ``tanh(2 phi) = -2 tr(S_s S_t) / (tr(S_s^2) + tr(S_t^2))``.  The result
    is unique up to the signs of ``n_s, n_t`` and commutes with sign flips,
    so any boost of the input gives the same balanced frame.  Without this
    step a frame far from balanced squeezes both bi-normal roots towards one
    null direction and the discriminant test loses all its precision.
    """
    if g is None:
        g = FirstForm(mink_dot(jet.Xu, jet.Xu), mink_dot(jet.Xu, jet.Xv), mink_dot(jet.Xv, jet.Xv))
    gi = np.linalg.inv(g.matrix)
    for _ in range(2):  # the second pass only mops up rounding
        S_s = gi @ _form_matrix(jet, frame.n_s)
        S_t = gi @ _form_matrix(jet, frame.n_t)
        ss, tt, st = np.trace(S_s @ S_s), np.trace(S_t @ S_t), np.trace(S_s @ S_t)
        total = ss + tt
        if total <= 0.0:
            return frame
        t = float(np.clip(-2.0 * st / total, -1.0 + 1e-12, 1.0 - 1e-12))
        frame = frame.boosted(0.5 * np.arctanh(t))
    return frame


def _form_matrix(jet, n):
    b12 = mink_dot(jet.Xuv, n)
    return np.array([[mink_dot(jet.Xuu, n), b12], [b12, mink_dot(jet.Xvv, n)]])


def normal_frame(jet):
    """Canonical orthonormal frame ``(n_s, n_t)`` of the normal plane.

    The Euclidean frame of :func:`euclidean_normal_frame` boosted by
    :func:`balance_frame`.  It keeps the orientation conventions of the
    former (future-pointing ``n_t``, positive ``det[Xu, Xv, n_s, n_t]``) and
    is covariant under Lorentz transformations of the ambient space.
    """
    return balance_frame(jet, euclidean_normal_frame(jet))


def align_frame(frame, previous):
    """Flip signs of ``frame`` members to agree with ``previous``."""
    s, t = frame.n_s, frame.n_t
    if float(s @ previous.n_s) < 0:
        s = -s
    if float(t @ previous.n_t) < 0:
        t = -t
    return NormalFrame(s, t)


def second_form(jet, nu, tol=TAU_NORMAL):
    """Second fundamental form ``b_ij = <X_ij, nu>`` along a normal ``nu``."""
    nu = np.asarray(nu, dtype=float)
    nn = float(np.linalg.norm(nu))
    for name, t in (("Xu", jet.Xu), ("Xv", jet.Xv)):
        if abs(mink_dot(t, nu)) > tol * max(nn * float(np.linalg.norm(t)), 1e-300):
            raise NotNormal(f"<{name}, nu> = {mink_dot(t, nu):.3e} at ({jet.u}, {jet.v})")
    return SecondForm(mink_dot(jet.Xuu, nu), mink_dot(jet.Xuv, nu), mink_dot(jet.Xvv, nu), nu)


def shape_operator(g, b):
    """Weingarten map ``g^-1 b`` in the ``{Xu, Xv}`` basis."""
    return np.linalg.solve(g.matrix, b.matrix)


def nu_gauss(g, b):
    return b.det / g.det


def nu_mean(g, b):
    return (g.g22 * b.b11 - 2.0 * g.g12 * b.b12 + g.g11 * b.b22) / (2.0 * g.det)


def principal_curvatures(g, b):
    """Roots of ``det(b - k g) = 0`` in ascending order."""
    k = eigh(b.matrix, g.matrix, eigvals_only=True)
    return float(k[0]), float(k[1])


def tangent_orthonormal(jet):
    """Orthonormal tangent frame from ``Xu, Xv`` and its coefficient vectors.

    Returns ``(e1, e2, c1, c2)`` where ``e_i = c_i[0] Xu + c_i[1] Xv``.
    """
    e1, e2 = orthonormalize_pair(jet.Xu, jet.Xv)
    basis = np.column_stack([jet.Xu, jet.Xv])
    c1 = np.linalg.lstsq(basis, e1, rcond=None)[0]
    c2 = np.linalg.lstsq(basis, e2, rcond=None)[0]
    return e1, e2, c1, c2


def _second_derivative(jet, a, b):
    return a[0] * b[0] * jet.Xuu + (a[0] * b[1] + a[1] * b[0]) * jet.Xuv + a[1] * b[1] * jet.Xvv


def vector_second_form(jet, frame, a, b):
    """Normal part of the second derivative along tangent coefficients ``a, b``."""
    x = _second_derivative(jet, a, b)
    return mink_dot(x, frame.n_s) * frame.n_s - mink_dot(x, frame.n_t) * frame.n_t


def gauss_curvature(jet, frame):
    """Intrinsic curvature from the Gauss equation in an orthonormal tangent frame."""
    _, _, c1, c2 = tangent_orthonormal(jet)
    ii11 = vector_second_form(jet, frame, c1, c1)
    ii22 = vector_second_form(jet, frame, c2, c2)
    ii12 = vector_second_form(jet, frame, c1, c2)
    return mink_dot(ii11, ii22) - mink_dot(ii12, ii12)


def mean_curvature_vector(g, b_s, b_t, frame):
    return nu_mean(g, b_s) * frame.n_s - nu_mean(g, b_t) * frame.n_t
