"""Exception taxonomy for the toolkit.

Two families matter to callers: ValidationError for rejected inputs
(bad graphs, bad poles, bad parameters) and ComputationError for requests
that are well-formed but cannot be answered on this space (no separating
set exists, region disconnected, instance too large for an exact solver).
The CLI maps them to exit codes 2 and 3 respectively.
"""

from __future__ import annotations


class MmsepError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class ValidationError(MmsepError):
    exit_code = 2


class ComputationError(MmsepError):
    exit_code = 3


# -- input validation -------------------------------------------------------

class BadParam(ValidationError):
    pass


class UnknownVertex(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class NonpositiveLength(ValidationError):
    pass


class NegativeMeasure(ValidationError):
    pass


class DisconnectedGraph(ValidationError):
    pass


class SamePoles(ValidationError):
    pass


class EmptySample(ValidationError):
    pass


class DegenerateRadii(ValidationError):
    pass


class EmptySet(ValidationError):
    pass


class EmptySchedule(ValidationError):
    pass


class DeltaTooSmall(ValidationError):
    pass


class PoleNotInterior(ValidationError):
    pass


class NotSeparating(ValidationError):
    pass


class LevelTooClose(ValidationError):
    pass


class ConstantFunction(ValidationError):
    pass


class EmptyBall(ValidationError):
    pass


class SchemaMismatch(ValidationError):
    pass


# -- computation ------------------------------------------------------------

class NoValidSeparator(ComputationError):
    pass


class NotConnectedInRegion(ComputationError):
    pass


class TooLarge(ComputationError):
    pass
