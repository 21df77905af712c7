"""Python bindings for the prerequisite refinement core."""

from ._core import (
    Course,
    GradeMatrix,
    Model,
    PrereqError,
    Thresholds,
    find_cycle,
    mu_cpr,
    mu_rpr,
    parse_course,
    parse_grades_csv,
    parse_model_json,
    refine,
    sweep,
    topological_levels,
)

__all__ = [
    "Course",
    "GradeMatrix",
    "Model",
    "PrereqError",
    "Thresholds",
    "find_cycle",
    "mu_cpr",
    "mu_rpr",
    "parse_course",
    "parse_grades_csv",
    "parse_model_json",
    "refine",
    "sweep",
    "topological_levels",
]
