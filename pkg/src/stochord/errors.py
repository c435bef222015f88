"""Semantic exception hierarchy for stochord.

Public functions never raise a bare ``ValueError`` for contract violations;
they raise one of the classes below so callers (and the CLI) can map failures
to exit categories.
"""


class StochordError(Exception):
    """Base class for all stochord errors."""


class InvalidParameterError(StochordError, ValueError):
    """Inputs violate a documented contract (domain, shape, sign, length)."""


class DomainError(InvalidParameterError):
    """A point lies outside the domain of a monotone map or generator."""


class DegeneratePointError(StochordError, ArithmeticError):
    """Evaluation requested at a point where the quantity is undefined
    (e.g. a hazard outside the support, or a ratio whose denominator
    underflows past 1e-300)."""


class DegenerateGridError(StochordError, ArithmeticError):
    """More than the allowed fraction of grid points were degenerate,
    so a grid certificate cannot be issued."""


class EvaluationError(StochordError, ArithmeticError):
    """A scalar function handle failed to evaluate on too many grid points."""


class UnsupportedFeatureError(StochordError, NotImplementedError):
    """A structurally valid request outside the implemented scope
    (e.g. the minimum of an Archimedean-coupled sample)."""


class SpecParseError(InvalidParameterError):
    """A textual distribution/model/generator spec could not be parsed."""
