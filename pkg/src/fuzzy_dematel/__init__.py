"""Fuzzy DEMATEL: cause/effect analysis of multi-expert linguistic judgments.

The pipeline fuzzifies linguistic pairwise-influence judgments, averages them
across experts, derives the total-relation matrix (direct plus all indirect
influence), and condenses it into prominence/relation scores, cause/effect
classes, a ranking and a thresholded influence map.
"""
from .engine import (
    KIND_AGGREGATED,
    KIND_DIRECT,
    KIND_NORMALIZED,
    KIND_TOTAL,
    NET_CAUSE,
    NET_EFFECT,
    NEUTRAL,
    CriterionResult,
    DematelResult,
    FuzzyMatrix,
    InfluenceVectors,
    ProminenceRelation,
    aggregate,
    analyze_total_relation,
    classify,
    crisp_matrix,
    dispatch_receive,
    irm_edges,
    normalize,
    prominence_relation,
    rank_by_prominence,
    run_pipeline,
    total_relation,
)
from .errors import (
    ConvergenceError,
    DegenerateInputError,
    DematelError,
    DiagonalViolationError,
    DimensionError,
    DivergenceError,
    NoSurveysError,
    SingularMatrixError,
    SurveyFormatError,
    UnknownFixtureError,
    UnknownTermError,
)
from .fixtures import (
    FIXTURE_NAMES,
    bundled_survey_path,
    list_fixtures,
    load_criteria_model,
    load_fixture,
)
from .graphs import causal_diagram_csv, to_dot
from .report import (
    RELATION_SCALE_CANONICAL,
    RELATION_SCALE_TABLE5,
    analysis_documents,
    format_value,
    relation_display,
    result_json,
    result_to_dict,
)
from .survey import (
    LEVEL_MAIN,
    LEVEL_SUB,
    CriteriaModel,
    Criterion,
    ExpertSurvey,
    ExpertSurveySet,
    direct_matrices,
    load_survey_set,
    parse_survey_set,
    serialize_survey_set,
    survey_set_from_dict,
    survey_set_to_dict,
    validate_survey_set,
)
from .tfn import (
    INFLUENCE_SCALE,
    TFN,
    LinguisticScale,
    ScaleEntry,
    TriangularFuzzyNumber,
    defuzzify,
    fuzzify,
    subtract_components,
)

__version__ = "0.1.0"

__all__ = [
    # fuzzy numbers and the linguistic scale
    "INFLUENCE_SCALE",
    "TFN",
    "TriangularFuzzyNumber",
    "LinguisticScale",
    "ScaleEntry",
    "defuzzify",
    "fuzzify",
    "subtract_components",
    # pipeline stages and results
    "KIND_DIRECT",
    "KIND_AGGREGATED",
    "KIND_NORMALIZED",
    "KIND_TOTAL",
    "NET_CAUSE",
    "NET_EFFECT",
    "NEUTRAL",
    "FuzzyMatrix",
    "InfluenceVectors",
    "ProminenceRelation",
    "CriterionResult",
    "DematelResult",
    "aggregate",
    "normalize",
    "total_relation",
    "crisp_matrix",
    "dispatch_receive",
    "prominence_relation",
    "classify",
    "rank_by_prominence",
    "irm_edges",
    "run_pipeline",
    "analyze_total_relation",
    # surveys
    "LEVEL_MAIN",
    "LEVEL_SUB",
    "Criterion",
    "CriteriaModel",
    "ExpertSurvey",
    "ExpertSurveySet",
    "parse_survey_set",
    "survey_set_from_dict",
    "survey_set_to_dict",
    "serialize_survey_set",
    "validate_survey_set",
    "direct_matrices",
    "load_survey_set",
    # bundled reference data
    "FIXTURE_NAMES",
    "load_fixture",
    "list_fixtures",
    "load_criteria_model",
    "bundled_survey_path",
    # reporting and graphs
    "RELATION_SCALE_CANONICAL",
    "RELATION_SCALE_TABLE5",
    "format_value",
    "relation_display",
    "result_to_dict",
    "result_json",
    "analysis_documents",
    "causal_diagram_csv",
    "to_dot",
    # errors
    "DematelError",
    "DimensionError",
    "SingularMatrixError",
    "DivergenceError",
    "ConvergenceError",
    "UnknownTermError",
    "UnknownFixtureError",
    "NoSurveysError",
    "DegenerateInputError",
    "SurveyFormatError",
    "DiagonalViolationError",
    # misc
    "__version__",
]
