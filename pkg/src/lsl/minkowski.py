"""Linear algebra of Minkowski 4-space with signature (+, +, +, -).

Vectors are plain ``numpy`` arrays of shape ``(4,)``; the fourth slot is the
timelike axis.  Every function here is pure.
"""

from enum import Enum
from typing import NamedTuple

import numpy as np
from scipy.linalg import expm

from .errors import DegeneratePlane

ETA = np.diag([1.0, 1.0, 1.0, -1.0])
SIGNATURE = np.array([1.0, 1.0, 1.0, -1.0])

TAU_CAUSAL = 1e-9


def as_vec4(a):
    """Return ``a`` as a float array of shape (4,), rejecting NaN and inf."""
    v = np.asarray(a, dtype=float)
    if v.shape != (4,):
        raise ValueError(f"expected a 4-vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"non-finite component in {v}")
    return v


def mink_dot(a, b):
    """Minkowski inner product ``a1 b1 + a2 b2 + a3 b3 - a4 b4``."""
    return float(a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3])


def mink_norm2(a):
    return mink_dot(a, a)


class Causal(str, Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


class CausalCharacter(NamedTuple):
    kind: Causal
    self_product: float


def causal_character(a, tau=TAU_CAUSAL):
    """Classify ``a`` by the sign of its self-product.

    The threshold is ``tau`` times the largest squared component, so the
    verdict does not depend on the overall scale of ``a``.
    """
    a = np.asarray(a, dtype=float)
    s = mink_dot(a, a)
    thresh = tau * float(np.max(a * a))
    if s > thresh:
        kind = Causal.SPACELIKE
    elif s < -thresh:
        kind = Causal.TIMELIKE
    else:
        kind = Causal.LIGHTLIKE
    return CausalCharacter(kind, s)


def wedge3(a, b, c):
    """Triple wedge product of three 4-vectors.

    Returns the unique ``w`` with ``mink_dot(x, w) == det([x; a; b; c])`` for
    every ``x``, so ``w`` is orthogonal to ``a``, ``b`` and ``c``.  The result
    is the zero vector when the inputs are linearly dependent.
    """
    m = np.array([a, b, c], dtype=float)
    # cofactor expansion of det([x; a; b; c]) along the first row
    d = np.array([(-1) ** i * np.linalg.det(np.delete(m, i, axis=1)) for i in range(4)])
    return SIGNATURE * d


def orthonormalize_pair(a, b, tau=TAU_CAUSAL):
    """Minkowski Gram-Schmidt on a spacelike ``a`` and a second vector ``b``.

    Returns ``(e1, e2)`` with ``<e1, e1> = 1``, ``<e2, e2> = +-1`` and
    ``<e1, e2> = 0``.  Raises :class:`DegeneratePlane` when the residue of
    ``b`` is lightlike.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    aa = mink_dot(a, a)
    if aa <= tau * float(np.max(a * a)):
        raise DegeneratePlane("first vector of the pair is not spacelike")
    e1 = a / np.sqrt(aa)
    r = b - mink_dot(b, e1) * e1
    rr = mink_dot(r, r)
    if abs(rr) <= tau * float(np.max(b * b)):
        raise DegeneratePlane("projected residue is lightlike")
    return e1, r / np.sqrt(abs(rr))


def lorentz_exp(generator):
    """Exponentiate an antisymmetric 4x4 matrix into a Lorentz transformation.

    For antisymmetric ``S`` the matrix ``expm(ETA @ S)`` preserves the
    metric: ``L.T @ ETA @ L == ETA``.
    """
    s = np.asarray(generator, dtype=float)
    return expm(ETA @ (s - s.T) / 2.0)


def random_lorentz(rng, scale=1.0):
    """A random orthochronous Lorentz transformation near the identity."""
    return lorentz_exp(scale * rng.normal(size=(4, 4)))
