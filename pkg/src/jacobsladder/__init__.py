"""Numerical Jacob's ladders over the Hardy Z function.

The package evaluates Z(t) to near machine precision, integrates Z^2,
constructs the ladder phi(T) from the second-moment integral, and checks
the tangent law and its chord-geometry consequences at desk scale.
"""

from .errors import (
    BracketError,
    CorruptTableError,
    DigestMismatchError,
    DomainError,
    InflectionNotFoundError,
    LadderError,
    NoCrossingError,
    NoRootError,
    NotAttainedError,
    PrecisionError,
    TableFormatError,
    ToleranceNotMetError,
    VersionMismatchError,
)
from .zeta import (
    DEFAULT_CFG,
    RSConfig,
    hardy_z,
    oracle_theta,
    oracle_z,
    theta,
    z_eval,
    z_eval_vec,
)
from .quadrature import (
    EULER_GAMMA,
    LN_TWO_PI,
    IntegralTable,
    ResidualRecord,
    WeightedMoments,
    build_integral_table,
    build_weighted_moments,
    hl_integral,
    hl_residual,
    integrate_z2,
    main_term,
    weighted_integral,
)
from .tableio import config_digest, load_table, save_table
from .zeros import (
    CountCheck,
    GapReport,
    ZeroRecord,
    ZeroScan,
    gap_statistics,
    mean_gap,
    refine_zero,
    scan_zeros,
    zero_count_check,
)
from .ladder import (
    EqSolution,
    InflectionPoint,
    LadderContext,
    find_inflection,
    phi,
    phi_many,
    phi_prime,
    phi_prime_central,
    solve_integral_equation,
)
from .chords import (
    Chord,
    CrossingPoint,
    Interval,
    ParallelChords,
    chord,
    find_crossing_point,
    find_parallel_chords,
    solve_chord_for_angle,
)
from .verify import (
    SuiteReport,
    VerificationReport,
    asymptotic_tan,
    balasubramanian_rhs,
    microscopic_suite,
    second_class_suite,
    verify_asymptotic_slope,
    verify_interval_formula,
    verify_tangent_law,
)
from .reports import PlotData, PlotSeries, emit_report

__version__ = "0.1.0"

__all__ = [
    "BracketError",
    "Chord",
    "CorruptTableError",
    "CountCheck",
    "CrossingPoint",
    "DEFAULT_CFG",
    "DigestMismatchError",
    "DomainError",
    "EULER_GAMMA",
    "EqSolution",
    "GapReport",
    "InflectionNotFoundError",
    "InflectionPoint",
    "IntegralTable",
    "Interval",
    "LN_TWO_PI",
    "LadderContext",
    "LadderError",
    "NoCrossingError",
    "NoRootError",
    "NotAttainedError",
    "ParallelChords",
    "PlotData",
    "PlotSeries",
    "PrecisionError",
    "RSConfig",
    "ResidualRecord",
    "SuiteReport",
    "TableFormatError",
    "ToleranceNotMetError",
    "VerificationReport",
    "VersionMismatchError",
    "WeightedMoments",
    "ZeroRecord",
    "ZeroScan",
    "asymptotic_tan",
    "balasubramanian_rhs",
    "build_integral_table",
    "build_weighted_moments",
    "chord",
    "config_digest",
    "emit_report",
    "find_crossing_point",
    "find_inflection",
    "find_parallel_chords",
    "gap_statistics",
    "hardy_z",
    "hl_integral",
    "hl_residual",
    "integrate_z2",
    "load_table",
    "main_term",
    "mean_gap",
    "oracle_theta",
    "oracle_z",
    "phi",
    "phi_many",
    "phi_prime",
    "phi_prime_central",
    "refine_zero",
    "save_table",
    "scan_zeros",
    "solve_chord_for_angle",
    "solve_integral_equation",
    "theta",
    "verify_asymptotic_slope",
    "verify_interval_formula",
    "verify_tangent_law",
    "weighted_integral",
    "z_eval",
    "z_eval_vec",
    "zero_count_check",
]
