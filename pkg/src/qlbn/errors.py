"""Exception types raised across the package.

Two families matter to callers: ValidationError for rejected inputs
(bad masses, malformed networks, unusable arguments) and InferenceError
for failures that surface while computing on inputs that validated fine.
The command line maps the families to distinct exit codes.
"""

from __future__ import annotations


class QlbnError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(QlbnError):
    """An input violates its contract."""


class InferenceError(QlbnError):
    """A computation on valid inputs cannot produce a result."""


# --- belief assignments and entropy ---------------------------------------


class EmptySetMassError(ValidationError):
    """The empty set carries nonzero mass."""


class MassOutOfRangeError(ValidationError):
    """A mass or probability lies outside [0, 1]."""


class MassSumMismatchError(ValidationError):
    """Masses or probabilities do not sum to 1 within tolerance."""


class UnknownElementError(ValidationError):
    """A focal set mentions an element missing from the frame."""


class InvalidBaseError(ValidationError):
    """Logarithm base is non-positive or equal to 1."""


# --- networks and classical inference --------------------------------------


class NetworkDefinitionError(ValidationError):
    """A network description is structurally invalid."""


class UnknownVariableError(ValidationError):
    """A query, evidence item, or assignment names no declared variable."""


class IncompleteAssignmentError(ValidationError):
    """A joint-probability request leaves some variable unassigned."""


class QueryInEvidenceError(ValidationError):
    """The query variable also appears in the evidence."""


class InconsistentEvidenceError(InferenceError):
    """The evidence has probability zero, so no posterior exists."""


# --- quantum-like inference -------------------------------------------------


class NonBinaryVariableError(ValidationError):
    """Amplitude networks require every variable to be binary."""


class NegativeUnnormalizedMassError(InferenceError):
    """Interference drove all outcome masses to zero or below."""


class UnsupportedStructureError(InferenceError):
    """The interference heuristic needs exactly one unobserved non-query variable."""


class SingularDenominatorError(InferenceError):
    """Belief-distance denominator |alpha + beta - 1| vanishes for alpha != beta."""


# --- scenarios and reporting ------------------------------------------------


class ZeroObservedError(ValidationError):
    """Relative fit error is undefined for an observed value of zero."""


class GoldenMismatchError(QlbnError):
    """One or more reproduction checks exceeded tolerance."""

    def __init__(self, failures: list[str]):
        self.failures = list(failures)
        super().__init__("golden check failed: " + "; ".join(self.failures))
