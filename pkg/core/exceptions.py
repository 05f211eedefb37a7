"""
Domain errors for structured cospans.

Every error is a Django ValidationError whose ``code`` is the stable error name
reported by the CLI (``mismatched-boundary``, ``label-conflict`` and so on).
"""

from django.core.exceptions import ValidationError


class CospanError(ValidationError):
    """Base class; subclasses fix the error code."""

    default_code = 'invalid'

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or self.default_code, params=params)

    def __str__(self):
        return f"{self.code}: {self.message}"


class MismatchedBoundary(CospanError):
    default_code = 'mismatched-boundary'


class NonCommutingCocone(CospanError):
    default_code = 'non-commuting-cocone'


class NonCommutingSquare(CospanError):
    default_code = 'non-commuting-square'


class LabelConflict(CospanError):
    default_code = 'label-conflict'


class RateConflict(CospanError):
    default_code = 'rate-conflict'


class NotInvertible(CospanError):
    default_code = 'not-invertible'


class NonpositiveResistance(CospanError):
    default_code = 'nonpositive-resistance'


class IllTypedCompose(CospanError):
    default_code = 'ill-typed-compose'


class IndexOutOfRange(CospanError):
    default_code = 'index-out-of-range'


class InvalidStructure(CospanError):
    default_code = 'schema-violation'


class DocumentError(CospanError):
    """Raised while reading a network document; ``path`` locates the first violation."""

    default_code = 'schema-violation'

    def __init__(self, message, code=None, path='$'):
        super().__init__(message, code=code)
        self.path = path

    def __str__(self):
        return f"{self.code} at {self.path}: {self.message}"
