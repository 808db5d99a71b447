"""Bi-normal fields and umbilicity of spacelike surfaces in Minkowski 4-space.

The package is organised bottom-up:

``minkowski``  signature-aware linear algebra of R^4_1
``jets``       surface charts and their second-order jets
``forms``      fundamental forms, normal frames, shape operators
``classify``   pointwise census and region verdicts
``families``   the surface families with closed-form cross-checks
``cli``        the ``lsl`` command-line front end
"""

from . import classify, families, forms, jets, minkowski
from .classify import DEFAULT_TOLERANCES, Tolerances, classify_point, classify_region
from .errors import (
    DegeneratePlane,
    InvalidProfile,
    LslError,
    NotBinormal,
    NotNormal,
    NotSpacelike,
    OutOfDomain,
    ParseError,
    ValidationError,
)
from .jets import Jet2, SurfaceChart, eval_jet2, fd_jet2

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOLERANCES",
    "DegeneratePlane",
    "InvalidProfile",
    "Jet2",
    "LslError",
    "NotBinormal",
    "NotNormal",
    "NotSpacelike",
    "OutOfDomain",
    "ParseError",
    "SurfaceChart",
    "Tolerances",
    "ValidationError",
    "__version__",
    "classify",
    "classify_point",
    "classify_region",
    "eval_jet2",
    "families",
    "fd_jet2",
    "forms",
    "jets",
    "minkowski",
]
