"""
Input validation for names, exact numbers and command-line assignments.
"""

import re
import bleach
from fractions import Fraction
import logging

from .exceptions import InvalidStructure, DocumentError

logger = logging.getLogger('core.validation')


class InputValidator:
    """
    Validation of the small textual inputs that reach the library:
    place/node/transition names, rationals such as ``3/2`` or ``0.5``,
    and ``NAME:value`` assignment lists from the command line.
    """

    MAX_NAME_LENGTH = 64

    # Decimal or fraction literal, optionally signed
    NUMBER_PATTERN = re.compile(r'^\s*[+-]?(\d+(\.\d*)?|\.\d+)(\s*/\s*\d+)?\s*$')

    @classmethod
    def sanitize_name(cls, value, max_length=None):
        """
        Validate a human-readable name.

        Args:
            value: Name to validate
            max_length: Maximum allowed length

        Returns:
            The name, stripped of surrounding whitespace

        Raises:
            InvalidStructure: If the name is empty, too long, or carries markup
        """
        max_length = max_length or cls.MAX_NAME_LENGTH
        if not isinstance(value, str):
            raise InvalidStructure("Name must be a string")

        value = value.strip()
        if not value:
            raise InvalidStructure("Name must not be empty")
        if len(value) > max_length:
            raise InvalidStructure(f"Name too long (max {max_length} characters)")

        # Remove null bytes and other control characters
        if any(ord(ch) < 32 for ch in value):
            raise InvalidStructure("Name contains control characters")

        # Names end up in DOT labels, so markup is refused rather than escaped
        if bleach.clean(value, tags=[], strip=True) != value.replace('&', '&amp;'):
            logger.warning(f"Rejected name with markup: {value!r}")
            raise InvalidStructure("Name contains markup")

        return value

    @classmethod
    def validate_fraction(cls, value):
        """
        Parse an exact rational.

        Args:
            value: int, Fraction, or a string such as ``"3"``, ``"3/2"``, ``"0.5"``

        Returns:
            Fraction

        Raises:
            InvalidStructure: If the value is not a rational literal
        """
        if isinstance(value, bool):
            raise InvalidStructure("Booleans are not numbers")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str) and cls.NUMBER_PATTERN.match(value):
            try:
                return Fraction(value.replace(' ', ''))
            except (ValueError, ZeroDivisionError):
                pass
        raise InvalidStructure(f"Invalid rational number: {value!r}")

    @classmethod
    def validate_positive_fraction(cls, value):
        number = cls.validate_fraction(value)
        if number <= 0:
            raise InvalidStructure(f"Expected a positive number, got {number}")
        return number

    @classmethod
    def normalize_label(cls, value):
        """Edge labels that read as rationals become Fractions; other labels stay as given."""
        try:
            return cls.validate_fraction(value)
        except InvalidStructure:
            return value

    @classmethod
    def validate_natural(cls, value):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise InvalidStructure(f"Expected a natural number, got {value!r}")
        return value

    @classmethod
    def parse_assignments(cls, text, names, natural=False):
        """
        Parse ``"H:4,O:2"`` against a list of known names.

        Args:
            text: Comma separated ``NAME:value`` pairs; missing names default to 0
            names: Names in index order
            natural: Require natural-number values (markings) instead of rationals

        Returns:
            List of values in the order of ``names``

        Raises:
            InvalidStructure: On unknown or repeated names and bad values
        """
        index = {name: i for i, name in enumerate(names)}
        values = [0 if natural else Fraction(0)] * len(names)
        seen = set()
        for item in filter(None, (part.strip() for part in (text or '').split(','))):
            name, sep, raw = item.rpartition(':')
            if not sep or not name:
                raise InvalidStructure(f"Expected NAME:value, got {item!r}")
            name = name.strip()
            if name not in index:
                raise InvalidStructure(f"Unknown name {name!r}")
            if name in seen:
                raise InvalidStructure(f"Name {name!r} assigned twice")
            seen.add(name)
            number = cls.validate_fraction(raw.strip())
            if number < 0:
                raise InvalidStructure(f"Value for {name!r} must not be negative")
            if natural:
                if number.denominator != 1:
                    raise InvalidStructure(f"Value for {name!r} must be a whole number")
                number = int(number)
            values[index[name]] = number
        return values


def validate_unique_names(names, path):
    """
    Check a list of optional names for duplicates.

    Raises:
        DocumentError: duplicate-name, located at the second occurrence
    """
    seen = {}
    for i, name in enumerate(names):
        if name is None:
            continue
        if name in seen:
            raise DocumentError(f"Name {name!r} is used twice", code='duplicate-name', path=f"{path}[{i}]")
        seen[name] = i
    return names
