"""Pointwise bi-normal census, asymptotic directions and umbilicity flags.

A normal direction is written projectively as ``(lam : mu)`` in a normal
frame ``(n_s, n_t)``.  Its Gauss curvature is ``Q(lam, mu) / det g`` with
``Q(lam, mu) = det(lam b_s + mu b_t) = A lam^2 + B lam mu + C mu^2``, so the
bi-normal directions at a point are the projective roots of ``Q``.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..errors import NotBinormal
from ..forms import (
    FirstForm,
    SecondForm,
    balance_frame,
    combine,
    first_form,
    mean_curvature_vector,
    normal_frame,
    nu_gauss,
    nu_mean,
    second_form,
    tangent_orthonormal,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Tolerances:
    """Relative tolerances shared by every test of a classification run.

    Thresholds multiply a second-form reference scale ``ref`` (``ref**2``
    for quadratic quantities such as the discriminant).
    """

    root: float = 1e-10
    disc: float = 1e-9
    near_double: float = 1e-6
    umbilic: float = 1e-8
    pseudo_umbilic: float = 1e-8
    semi_umbilic: float = 1e-8
    maximal: float = 1e-9
    binormal: float = 1e-7
    flat: float = 1e-10
    orthogonal: float = 1e-8
    spacelike: float = 1e-9

    def as_dict(self):
        return dict(self.__dict__)


DEFAULT_TOLERANCES = Tolerances()


class CensusKind(str, Enum):
    ZERO = "Zero"
    ONE = "One"
    TWO = "Two"
    ALL = "All"


@dataclass(frozen=True)
class NormalDirection:
    """Unit projective coordinates with the first nonzero entry positive."""

    lam: float
    mu: float

    @classmethod
    def canonical(cls, lam, mu):
        n = float(np.hypot(lam, mu))
        if n == 0.0:
            raise ValueError("zero normal direction")
        if abs(n - 1.0) > 4 * np.finfo(float).eps:  # leave unit input untouched so this is idempotent
            lam, mu = lam / n, mu / n
        if lam < 0 or (lam == 0 and mu < 0):
            lam, mu = -lam, -mu
        return cls(float(lam) + 0.0, float(mu) + 0.0)

    def as_array(self):
        return np.array([self.lam, self.mu])


@dataclass(frozen=True)
class BinormalCensus:
    kind: CensusKind
    roots: tuple
    coeffs: tuple
    discriminant: float
    near_double: bool = False


@dataclass(frozen=True)
class AsymptoticDirection:
    """Kernel of a bi-normal shape operator.

    ``coeffs`` are tangent coordinates in ``{Xu, Xv}`` with unit g-norm;
    ``whole_plane`` marks a vanishing shape operator.
    """

    coeffs: np.ndarray | None
    whole_plane: bool = False
    vector: np.ndarray | None = None


@dataclass(frozen=True)
class PseudoUmbilicWitness:
    direction: NormalDirection
    k: float
    residual: float


@dataclass(frozen=True)
class CurvatureEllipse:
    """Center ``H`` and axes ``P, Q`` in normal-frame coordinates."""

    H: np.ndarray
    P: np.ndarray
    Q: np.ndarray

    def point(self, theta):
        return self.H + np.cos(2 * theta) * self.P + np.sin(2 * theta) * self.Q


@dataclass
class PointClassification:
    u: float
    v: float
    census: BinormalCensus
    root_vectors: list
    root_residuals: list
    asymptotics: list
    is_umbilic: bool
    witness: PseudoUmbilicWitness | None
    is_flat_witnessed: bool
    is_semi_umbilic: bool
    is_flat: bool
    is_maximal: bool
    orthogonal_asymptotics: bool
    normal_curvature: float
    mean_curvature: np.ndarray
    g: FirstForm | None = None
    b_s: SecondForm | None = None
    b_t: SecondForm | None = None
    frame: object = None
    warnings: list = field(default_factory=list)


def binormal_quadratic(b1, b2, g=None):
    """Coefficients ``(A, B, C)`` of ``det(lam b1 + mu b2)``."""
    A = b1.det
    C = b2.det
    B = b1.b11 * b2.b22 + b2.b11 * b1.b22 - 2.0 * b1.b12 * b2.b12
    return A, B, C


def solve_binormals(A, B, C, tau_root=DEFAULT_TOLERANCES.root, tau_disc=DEFAULT_TOLERANCES.disc,
                    near_double=DEFAULT_TOLERANCES.near_double):
    """Projective roots of ``A lam^2 + B lam mu + C mu^2``.

    ``tau_root`` is absolute: callers scale it by the squared second-form
    size.  The discriminant test is relative to ``s**2`` with
    ``s = max(|A|, |B|, |C|)``.
    """
    coeffs = (float(A), float(B), float(C))
    s = max(abs(A), abs(B), abs(C))
    disc = B * B - 4.0 * A * C
    if s <= tau_root:
        return BinormalCensus(CensusKind.ALL, (), coeffs, disc)
    band = tau_disc * s * s
    near = abs(disc) < near_double * s * s
    if disc > band:
        r = np.sqrt(disc)
        q = -0.5 * (B + np.copysign(r, B))
        # q/A and C/q are the two roots of A t^2 + B t + C in t = lam/mu
        roots = (NormalDirection.canonical(q, A), NormalDirection.canonical(C, q))
        return BinormalCensus(CensusKind.TWO, roots, coeffs, disc, near)
    if disc >= -band:
        if abs(A) >= abs(C):
            root = NormalDirection.canonical(-B, 2.0 * A)
        else:
            root = NormalDirection.canonical(2.0 * C, -B)
        return BinormalCensus(CensusKind.ONE, (root,), coeffs, disc, near)
    return BinormalCensus(CensusKind.ZERO, (), coeffs, disc, near)


def asymptotic_direction(g, b, tau=DEFAULT_TOLERANCES.binormal, scale=None, tau_flat=DEFAULT_TOLERANCES.flat):
    """Unit tangent spanning the kernel of ``g^-1 b`` for a bi-normal ``b``."""
    ref = b.scale() if scale is None else scale
    if abs(b.det) > tau * ref * ref:
        raise NotBinormal(f"det b = {b.det:.3e} is not zero")
    if b.scale() <= tau_flat * ref:
        return AsymptoticDirection(None, True)
    r1 = np.hypot(b.b11, b.b12)
    r2 = np.hypot(b.b12, b.b22)
    c = np.array([-b.b12, b.b11]) if r1 >= r2 else np.array([-b.b22, b.b12])
    c = c / np.sqrt(g.inner(c, c))
    return AsymptoticDirection(c)


def _traceless(g, b):
    return b.coeffs - nu_mean(g, b) * np.array([g.g11, g.g12, g.g22])


def _default_scale(*forms):
    return max(b.scale() for b in forms)


def umbilic_point_test(g, b_s, b_t, tau=DEFAULT_TOLERANCES.umbilic, scale=None):
    """Both frame second forms proportional to ``g``."""
    ref = _default_scale(b_s, b_t) if scale is None else scale
    return all(np.max(np.abs(_traceless(g, b))) <= tau * ref for b in (b_s, b_t))


def pseudo_umbilic_solve(g, b_s, b_t, tau=DEFAULT_TOLERANCES.pseudo_umbilic, scale=None):
    """Find ``(lam : mu)`` and ``k`` with ``lam b_s + mu b_t = k g``.

    The g-traceless parts of both forms must be linearly dependent; the
    direction minimizing the traceless residual is the smallest right
    singular vector of the 3x2 matrix of traceless coefficients.
    """
    ref = _default_scale(b_s, b_t) if scale is None else scale
    m = np.column_stack([_traceless(g, b_s), _traceless(g, b_t)])
    _, sv, vt = np.linalg.svd(m)
    if sv[-1] > tau * ref:
        return None
    lam, mu = vt[-1]
    d = NormalDirection.canonical(lam, mu)
    b = combine(d.lam, b_s, d.mu, b_t)
    k = nu_mean(g, b)
    residual = float(np.max(np.abs(b.coeffs - k * np.array([g.g11, g.g12, g.g22]))))
    return PseudoUmbilicWitness(d, float(k), residual)


def _orthonormal_second_form(b, c1, c2):
    m = b.matrix
    return c1 @ m @ c1, c1 @ m @ c2, c2 @ m @ c2


def curvature_ellipse(jet, frame, b_s=None, b_t=None):
    """Center and axes of the curvature ellipse in ``(n_s, n_t)`` coordinates."""
    if b_s is None:
        b_s = second_form(jet, frame.n_s)
    if b_t is None:
        b_t = second_form(jet, frame.n_t)
    _, _, c1, c2 = tangent_orthonormal(jet)
    s11, s12, s22 = _orthonormal_second_form(b_s, c1, c2)
    t11, t12, t22 = _orthonormal_second_form(b_t, c1, c2)
    # coordinates of II along n_s and n_t: <II, n_s> and -<II, n_t>
    ii11 = np.array([s11, -t11])
    ii22 = np.array([s22, -t22])
    ii12 = np.array([s12, -t12])
    return CurvatureEllipse(0.5 * (ii11 + ii22), 0.5 * (ii11 - ii22), ii12)


def normal_curvature(P, Q):
    return float(2.0 * (P[0] * Q[1] - P[1] * Q[0]))


def semi_umbilic_test(P, Q, tau=DEFAULT_TOLERANCES.semi_umbilic, scale=None):
    if scale is None:
        scale = float(max(np.max(np.abs(P)), np.max(np.abs(Q))))
    return abs(normal_curvature(P, Q)) <= tau * scale * scale


def maximal_test(g, b_s, b_t, tau=DEFAULT_TOLERANCES.maximal, scale=None):
    ref = _default_scale(b_s, b_t) if scale is None else scale
    s_ref = ref * float(np.max(np.abs(np.linalg.inv(g.matrix))))
    return all(abs(nu_mean(g, b)) <= tau * s_ref for b in (b_s, b_t))


def _orthogonal_pair(g, census, asymptotics, tau):
    if census.kind is CensusKind.ALL or any(a.whole_plane for a in asymptotics):
        return True
    if census.kind is not CensusKind.TWO:
        return False
    a1, a2 = asymptotics
    return abs(g.inner(a1.coeffs, a2.coeffs)) <= tau


def classify_forms(g, b_s, b_t, tol=DEFAULT_TOLERANCES, floor=0.0):
    """Census and umbilicity flags from forms alone (no jet needed).

    Thresholds are relative to ``max(size of the forms, floor)``; a point
    whose forms are below ``floor`` is flat.  Returns ``(census, witness,
    is_umbilic, is_flat, is_maximal, scale)``.
    """
    size = _default_scale(b_s, b_t)
    ref = max(size, floor)
    A, B, C = binormal_quadratic(b_s, b_t, g)
    census = solve_binormals(A, B, C, tol.root * ref * ref, tol.disc, tol.near_double)
    witness = pseudo_umbilic_solve(g, b_s, b_t, tol.pseudo_umbilic, ref)
    is_umbilic = umbilic_point_test(g, b_s, b_t, tol.umbilic, ref)
    is_flat = size <= floor
    is_maximal = maximal_test(g, b_s, b_t, tol.maximal, ref)
    return census, witness, is_umbilic, is_flat, is_maximal, ref


def witness_is_flat(g, witness, scale, tau=DEFAULT_TOLERANCES.pseudo_umbilic):
    """True when a pseudo-umbilic witness has ``k g`` negligible against ``scale``."""
    gmax = max(abs(g.g11), abs(g.g12), abs(g.g22))
    return abs(witness.k) * gmax <= tau * scale


def jet_reference_scale(jet, frame):
    """Natural size of second-form coefficients at a jet.

    ``|<X_ij, n>| <= |X_ij| |n|`` in Euclidean norms, so this bounds every
    coefficient without being fooled by a form that happens to vanish.
    """
    xs = max(float(np.linalg.norm(x)) for x in jet.second_slots())
    ns = max(float(np.linalg.norm(frame.n_s)), float(np.linalg.norm(frame.n_t)))
    return xs * ns


def classify_point(jet, tol=DEFAULT_TOLERANCES, frame=None):
    """Full classification of one jet.

    ``frame`` may be supplied to reuse a sweep-aligned normal frame.
    """
    g = first_form(jet, tol.spacelike)
    frame = normal_frame(jet) if frame is None else balance_frame(jet, frame, g)
    b_s = second_form(jet, frame.n_s)
    b_t = second_form(jet, frame.n_t)
    floor = tol.flat * jet_reference_scale(jet, frame)
    census, witness, is_umbilic, is_flat, is_maximal, ref = classify_forms(g, b_s, b_t, tol, floor)
    flat_witness = witness is not None and witness_is_flat(g, witness, ref, tol.pseudo_umbilic)

    root_vectors, residuals, asymptotics = [], [], []
    A, B, C = census.coeffs
    for root in census.roots:
        nu = frame.vector(root.lam, root.mu)
        b = second_form(jet, nu)
        residuals.append(abs(nu_gauss(g, b)))
        a = asymptotic_direction(g, b, tol.binormal, ref, tol.flat)
        if a.coeffs is not None:
            a = AsymptoticDirection(a.coeffs, False, a.coeffs[0] * jet.Xu + a.coeffs[1] * jet.Xv)
        root_vectors.append(nu)
        asymptotics.append(a)

    ellipse = curvature_ellipse(jet, frame, b_s, b_t)
    nc = normal_curvature(ellipse.P, ellipse.Q)
    # P, Q live in an orthonormal tangent frame: rescale the floor by g
    lam_min = float(np.linalg.eigvalsh(g.matrix)[0])
    pq = max(float(np.max(np.abs(ellipse.P))), float(np.max(np.abs(ellipse.Q))), tol.flat * ref / lam_min)
    is_semi = semi_umbilic_test(ellipse.P, ellipse.Q, tol.semi_umbilic, pq)
    ortho = _orthogonal_pair(g, census, asymptotics, tol.orthogonal)

    pc = PointClassification(
        u=jet.u,
        v=jet.v,
        census=census,
        root_vectors=root_vectors,
        root_residuals=residuals,
        asymptotics=asymptotics,
        is_umbilic=is_umbilic,
        witness=witness,
        is_flat_witnessed=flat_witness,
        is_semi_umbilic=is_semi,
        is_flat=is_flat,
        is_maximal=is_maximal,
        orthogonal_asymptotics=ortho,
        normal_curvature=nc,
        mean_curvature=mean_curvature_vector(g, b_s, b_t, frame),
        g=g,
        b_s=b_s,
        b_t=b_t,
        frame=frame,
    )
    _check_consistency(pc, 1e-7 * (1.0 + abs(A) + abs(B) + abs(C)) / g.det)
    return pc


def _check_consistency(pc, residual_bound):
    kind = pc.census.kind
    w = pc.witness
    nonflat = w is not None and not pc.is_flat_witnessed
    if nonflat and kind not in (CensusKind.ONE, CensusKind.TWO):
        pc.warnings.append(f"non-flat pseudo-umbilic witness with census {kind.value}")
    if kind is CensusKind.ONE and nonflat and not pc.is_umbilic:
        pc.warnings.append("census One with a pseudo-umbilic witness but not umbilic")
    if kind is CensusKind.ALL and not pc.is_semi_umbilic:
        pc.warnings.append("census All at a point that is not semi-umbilic")
    for r in pc.root_residuals:
        if r > residual_bound:
            pc.warnings.append(f"bi-normal root residual {r:.3e} exceeds {residual_bound:.3e}")
    for msg in pc.warnings:
        log.warning("(%g, %g): %s", pc.u, pc.v, msg)
