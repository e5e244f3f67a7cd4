"""Discrete invariants of subcanonical points on algebraic curves."""
from .errors import (
    DataIntegrityError,
    InvariantViolation,
    PreconditionError,
    SubcanonicalError,
    ValidationError,
)
from .sequences import (
    GapSet,
    PointProfile,
    RamificationSequence,
    VanishingSequence,
    classify_component,
    gaps_from_vanishing,
    is_subcanonical,
    parity,
    profile,
    ramification_from_vanishing,
    theta_h0,
    vanishing_from_gaps,
    vanishing_from_ramification,
    weight,
)

__version__ = "0.1.0"
