"""
Exception hierarchy for convlab.

Operations that *validate* return violations as data. The errors below are
raised when an operation's precondition fails at call time.
"""

from typing import List, Sequence


class ConvlabError(Exception):
    """Base exception for the toolkit."""
    pass


class InputError(ConvlabError):
    """Symbol outside the alphabet, alphabet mismatch, malformed world or grid."""
    pass


class InvalidModelError(ConvlabError):
    """A problem or method failed validation."""

    def __init__(self, message: str, violations: Sequence = ()):
        super().__init__(message)
        self.violations: List = list(violations)


class UndefinedEstimateError(ConvlabError):
    """Frequency estimate requested for an empty sample."""
    pass


class ConditioningOnNullError(ConvlabError):
    """Conditionalization on evidence every support element rules out."""
    pass


class PriorError(ConvlabError):
    """Prior masses are negative or do not sum to one."""
    pass


class DslError(ConvlabError):
    """Parsing or elaboration of a .cvl document failed."""

    def __init__(self, diagnostics: Sequence):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0] if self.diagnostics else None
        super().__init__(str(first) if first else "invalid document")


class ReportSchemaError(ConvlabError):
    """A report file does not match the report schema, or reports of different kinds were mixed."""
    pass
