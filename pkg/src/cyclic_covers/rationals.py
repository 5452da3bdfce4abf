"""Strict parsing and canonical printing of exact rationals ("p" or "p/q")."""

import math
import re
from fractions import Fraction

from .errors import CurveFormatError

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text):
    """Parse ``"p"`` or ``"p/q"`` with ``q > 0`` and ``gcd(|p|, q) = 1``."""
    if not isinstance(text, str):
        raise CurveFormatError(f"rational must be a string, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise CurveFormatError(f"malformed rational {text!r}")
    p = int(m.group(1))
    if m.group(2) is None:
        return Fraction(p)
    q = int(m.group(2))
    if q == 0:
        raise CurveFormatError(f"zero denominator in {text!r}")
    if math.gcd(abs(p), q) != 1:
        raise CurveFormatError(f"rational {text!r} is not in lowest terms")
    return Fraction(p, q)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
