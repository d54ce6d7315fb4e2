"""Exact-arithmetic approximation operators over fuzzy gamma-covering spaces."""

from .exact import MICRO, format_scaled, parse_degree, parse_scaled
from .model import (
    ApproximationSpace,
    FuzzyCovering,
    FuzzySet,
    Grade,
    MultiGranulationSystem,
    ParameterError,
    StructuralError,
    ThresholdPair,
    Universe,
    ValidationError,
    ValidationReport,
    build_covering_from_reports,
    validate_covering,
)
from .multi import Combinator, mg_dq, mg_grade, mg_prob, vector_leq
from .neighborhood import (
    NeighborhoodTable,
    build_table,
    crisp_neighborhood,
    fuzzy_gamma_neighborhood,
)
from .single import (
    ApproximationResult,
    RegionPartition,
    ResidualMode,
    cond_prob,
    dq_conjunctive,
    dq_disjunctive,
    grade_approx,
    grade_regions,
    prob_approx,
    prob_regions,
    threshold_form_check,
)

__version__ = "0.1.0"

__all__ = [
    "MICRO",
    "format_scaled",
    "parse_degree",
    "parse_scaled",
    "Universe",
    "FuzzySet",
    "FuzzyCovering",
    "ApproximationSpace",
    "MultiGranulationSystem",
    "ThresholdPair",
    "Grade",
    "ValidationReport",
    "ValidationError",
    "StructuralError",
    "ParameterError",
    "validate_covering",
    "build_covering_from_reports",
    "NeighborhoodTable",
    "build_table",
    "crisp_neighborhood",
    "fuzzy_gamma_neighborhood",
    "ApproximationResult",
    "RegionPartition",
    "ResidualMode",
    "cond_prob",
    "prob_approx",
    "prob_regions",
    "grade_approx",
    "grade_regions",
    "dq_disjunctive",
    "dq_conjunctive",
    "threshold_form_check",
    "Combinator",
    "mg_prob",
    "mg_grade",
    "mg_dq",
    "vector_leq",
]
