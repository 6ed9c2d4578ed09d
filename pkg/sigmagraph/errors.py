"""Exceptions raised by sigmagraph. Every refusal is an exception, never a silent False."""

from enum import Enum


class SigmaGraphError(Exception):
    """Base class for every domain refusal raised by the library."""


class SequenceError(SigmaGraphError):
    """Invalid, non-graphical or out-of-range degree sequence input."""


class GraphError(SigmaGraphError):
    """A graph violates simplicity (loop, repeated edge, endpoint out of range)."""


class PatternError(SigmaGraphError):
    """Malformed pattern specification (e.g. a cycle on two vertices)."""


class ParseError(SigmaGraphError):
    """Malformed text for a sequence, a graph or a pattern."""


class PreconditionError(SigmaGraphError):
    """An operation was called outside its precondition."""


class RuleRangeError(SigmaGraphError):
    """A sufficient-condition rule was asked about parameters outside its stated range."""


class FormulaRangeError(SigmaGraphError):
    """A closed-form sigma value was requested outside its validity range."""


class SearchLimitError(SigmaGraphError):
    """An exhaustive enumeration was refused because n exceeds the configured limit."""


class SearchBudgetError(SigmaGraphError):
    """A search ran out of its node or state budget before reaching a verdict."""

    def __init__(self, message, explored=0):
        super().__init__(message)
        self.explored = explored


class SwitchRejection(str, Enum):
    """Reason codes for a refused 2-switch."""
    MISSING_EDGE = "missing_edge"
    REPEATED_VERTEX = "repeated_vertex"
    EXISTING_EDGE = "existing_edge"


class TwoSwitchError(SigmaGraphError):
    """A 2-switch request violated its precondition."""

    def __init__(self, reason: SwitchRejection, message: str):
        super().__init__(f"{reason.value}: {message}")
        self.reason = reason


class ConfigError(SigmaGraphError):
    """A configuration file or environment variable holds an invalid setting."""
