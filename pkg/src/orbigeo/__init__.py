"""Hyperbolic triangle-group orbifolds: generators, geodesic lengths,
classification of the three distinguished short geodesics, and first-
principles self-intersection counting."""

from ._version import __version__
from .halfplane import (
    INF,
    Geodesic,
    IsometryClass,
    MoebiusMap,
    NoCrossing,
    NotDisjoint,
    NotHyperbolic,
    ReflectionMap,
    axis_of,
    classify_isometry,
    common_orthogonal,
    compose_reflections,
    imaginary_axis_crossing,
    intersect_geodesics,
    reflection_in,
    translation_length,
)
from .triangle import (
    InvalidSignature,
    LambdaUndefined,
    MatricesUnavailable,
    TriangleGroup,
    TriangleSignature,
    build_group,
    fundamental_domain,
    lambda_of,
    orbifold_area,
    pair_trace,
    validate_signature,
)
from .classify import (
    ClassificationRecord,
    InconsistentClassification,
    ProjectionDescriptor,
    check_axis_crossing_ba,
    classify_all,
    classify_pair_element,
    conjugacy_witness,
    figure_eight_records,
)
from .selfint import SelfIntersectionResult, self_intersection_count
from .search import (
    ExtremalResult,
    gamma_star_search,
    global_min_figure8,
    min_figure8,
    minimal_nonsimple_summary,
)
from .words import GroupWord, backend_name

__all__ = [
    "__version__",
    "INF",
    "Geodesic",
    "IsometryClass",
    "MoebiusMap",
    "NoCrossing",
    "NotDisjoint",
    "NotHyperbolic",
    "ReflectionMap",
    "axis_of",
    "classify_isometry",
    "common_orthogonal",
    "compose_reflections",
    "imaginary_axis_crossing",
    "intersect_geodesics",
    "reflection_in",
    "translation_length",
    "InvalidSignature",
    "LambdaUndefined",
    "MatricesUnavailable",
    "TriangleGroup",
    "TriangleSignature",
    "build_group",
    "fundamental_domain",
    "lambda_of",
    "orbifold_area",
    "pair_trace",
    "validate_signature",
    "ClassificationRecord",
    "InconsistentClassification",
    "ProjectionDescriptor",
    "check_axis_crossing_ba",
    "classify_all",
    "classify_pair_element",
    "conjugacy_witness",
    "figure_eight_records",
    "SelfIntersectionResult",
    "self_intersection_count",
    "ExtremalResult",
    "gamma_star_search",
    "global_min_figure8",
    "min_figure8",
    "minimal_nonsimple_summary",
    "GroupWord",
    "backend_name",
]
