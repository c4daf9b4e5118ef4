"""Exact interleaving and bottleneck distances for interval-decomposable
persistence modules with decorated endpoints.

Everything is computed in exact rational arithmetic; decorations
(open/closed endpoints) are honored everywhere they matter, which is at
exact thresholds.
"""

from .bottleneck import (
    InfiniteDistanceError,
    MatchingCertificate,
    distance_certificate,
    module_distance,
    modules_eps_interleaved,
    verify_certificate,
)
from .families import (
    ClassMismatchError,
    INCLUSIONS,
    binary_sequence_module,
    cauchy_witness,
    cube_point_module,
    open_subset_witness,
    replicate,
    staircase,
)
from .interleaving import (
    are_eps_interleaved,
    ball_membership,
    distance_to_zero,
    interval_distance,
)
from .intervals import (
    EMPTY,
    Endpoint,
    ExtRational,
    Interval,
    IntervalParseError,
    MalformedIntervalError,
    NEG_INF,
    OrderingError,
    POS_INF,
    format_interval,
    interval,
    make_interval,
    parse_interval,
    residuals,
    singleton,
)
from .maps import CanonicalMapParts, NoNonzeroMapError, canonical_map_parts, has_nonzero_map
from .pmodule import ClassMembership, ModuleFormatError, PModule, parse_module
from .verify import (
    SUITE_NAMES,
    SuiteReport,
    bruteforce_module_distance,
    candidate_scan_interval_distance,
    replay,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalMapParts",
    "ClassMembership",
    "ClassMismatchError",
    "EMPTY",
    "Endpoint",
    "ExtRational",
    "INCLUSIONS",
    "InfiniteDistanceError",
    "Interval",
    "IntervalParseError",
    "MalformedIntervalError",
    "MatchingCertificate",
    "ModuleFormatError",
    "NEG_INF",
    "NoNonzeroMapError",
    "OrderingError",
    "PModule",
    "POS_INF",
    "SUITE_NAMES",
    "SuiteReport",
    "are_eps_interleaved",
    "ball_membership",
    "binary_sequence_module",
    "bruteforce_module_distance",
    "candidate_scan_interval_distance",
    "cauchy_witness",
    "cube_point_module",
    "distance_certificate",
    "distance_to_zero",
    "format_interval",
    "has_nonzero_map",
    "canonical_map_parts",
    "interval",
    "interval_distance",
    "make_interval",
    "module_distance",
    "modules_eps_interleaved",
    "open_subset_witness",
    "parse_interval",
    "parse_module",
    "replay",
    "replicate",
    "residuals",
    "run_suite",
    "singleton",
    "staircase",
    "verify_certificate",
]
