"""Exceptions raised by the rado_numbers package."""


class RadoError(Exception):
    """Base class for all package errors."""


class ComponentRangeError(RadoError, ValueError):
    """A solution component lies outside the colored interval [1, n]."""


class NotApplicableError(RadoError, ValueError):
    """A closed-form predictor was called outside its domain."""


class ConsistencyFault(RadoError):
    """Two applicable exact predictors disagree on the same equation."""


class CacheError(RadoError):
    """The result cache could not be read or written."""
