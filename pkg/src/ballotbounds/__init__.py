"""Exact counting, bounds and sampling for the generalized ballot problem."""
from .bounds import (
    BoundPair,
    classical_closed_forms,
    reflection_counting_check,
    theorem1_bounds,
    theorem2_bounds,
    tightness_scan,
    weighted_bounds,
)
from .core import (
    BallotSpec,
    PartialTally,
    Ratio,
    VoteSequence,
    binomial,
    format_ratio,
    parse_ratio,
    partial_tallies,
    ratio_ceil,
    ratio_floor,
)
from .cyclelemma import (
    RotationAnalysis,
    analyze_rotations,
    canonical_cute_rotation,
    cute_rotation_offsets,
    rotation_average_identity_check,
    rotation_count_bounds_check,
)
from .enumeration import (
    ExactCounts,
    WeightedBallotSpec,
    count_exact,
    count_exact_weighted,
    is_cute,
    is_desirable,
)
from .errors import (
    BallotError,
    BudgetExceeded,
    DegenerateRecurrence,
    DomainViolation,
    NotRotatableToCute,
    ParseError,
    PreconditionViolation,
)
from .montecarlo import SampleEstimate, sample_probability
from .takacs import TakacsCoefficients, takacs_coefficients, takacs_probability

__version__ = "0.1.0"
