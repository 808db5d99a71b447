"""Bi-normal census and umbilicity classification, pointwise and over grids."""

from .point import (
    DEFAULT_TOLERANCES,
    AsymptoticDirection,
    BinormalCensus,
    CensusKind,
    CurvatureEllipse,
    NormalDirection,
    PointClassification,
    PseudoUmbilicWitness,
    Tolerances,
    asymptotic_direction,
    binormal_quadratic,
    classify_forms,
    classify_point,
    curvature_ellipse,
    jet_reference_scale,
    maximal_test,
    normal_curvature,
    pseudo_umbilic_solve,
    semi_umbilic_test,
    solve_binormals,
    umbilic_point_test,
)
from .region import VERDICTS, GridSpec, RegionReport, aggregate, classify_region, track_field

__all__ = [
    "DEFAULT_TOLERANCES",
    "AsymptoticDirection",
    "BinormalCensus",
    "CensusKind",
    "CurvatureEllipse",
    "GridSpec",
    "NormalDirection",
    "PointClassification",
    "PseudoUmbilicWitness",
    "RegionReport",
    "Tolerances",
    "VERDICTS",
    "aggregate",
    "asymptotic_direction",
    "binormal_quadratic",
    "classify_forms",
    "classify_point",
    "classify_region",
    "curvature_ellipse",
    "jet_reference_scale",
    "maximal_test",
    "normal_curvature",
    "pseudo_umbilic_solve",
    "semi_umbilic_test",
    "solve_binormals",
    "track_field",
    "umbilic_point_test",
]
