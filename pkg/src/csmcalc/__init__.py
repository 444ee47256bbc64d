"""Exact characteristic classes of singular projective hypersurfaces.

Computes Fulton, Chern-Mather and Chern-Schwartz-MacPherson classes in
the rational Chow group of P^n from polar-class and Segre-class data,
entirely in arbitrary-precision rational arithmetic.
"""

from .charclass import (
    BundleData,
    HypersurfaceSpec,
    InvariantData,
    csm_from_interpolation,
    csm_from_polar,
    csm_from_segre,
    exceptional_multiplicities,
    fulton_class,
    interpolated_class,
    mather_double_sum,
    mather_from_polar,
    mather_from_segre,
    segre_from_polar,
    segre_ym_to_yx,
    segre_yx_to_ym,
    solve_invariants,
    solver_lhs,
    total_polar_class,
)
from .chow import (
    GradedClass,
    HSeries,
    LineBundleOnPn,
    Rational,
    as_rational,
    format_rational,
    parse_rational,
    tangent_chern,
)
from .errors import (
    CharClassError,
    DegenerateInvariantsError,
    DimensionMismatchError,
    InconsistentSystemError,
    InputParseError,
    NonUnitError,
    UnderdeterminedSystemError,
    ValidationError,
)
from .scenarios import ScenarioReport, euler_smooth_hypersurface, run_scenario

__version__ = "0.1.0"

__all__ = [
    "BundleData",
    "CharClassError",
    "DegenerateInvariantsError",
    "DimensionMismatchError",
    "GradedClass",
    "HSeries",
    "HypersurfaceSpec",
    "InconsistentSystemError",
    "InputParseError",
    "InvariantData",
    "LineBundleOnPn",
    "NonUnitError",
    "Rational",
    "ScenarioReport",
    "UnderdeterminedSystemError",
    "ValidationError",
    "as_rational",
    "csm_from_interpolation",
    "csm_from_polar",
    "csm_from_segre",
    "euler_smooth_hypersurface",
    "exceptional_multiplicities",
    "format_rational",
    "fulton_class",
    "interpolated_class",
    "mather_double_sum",
    "mather_from_polar",
    "mather_from_segre",
    "parse_rational",
    "run_scenario",
    "segre_from_polar",
    "segre_ym_to_yx",
    "segre_yx_to_ym",
    "solve_invariants",
    "solver_lhs",
    "tangent_chern",
    "total_polar_class",
]
