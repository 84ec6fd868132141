"""Set-valued neutrosophic logic with exact nonstandard arithmetic."""

from .ordfield import (
    ONE,
    X,
    ZERO,
    Rational,
    RationalFunction,
    compare,
    embed_rational,
    infinitely_close,
    is_finite,
    is_infinitesimal,
    roughly_le,
    sign,
    standard_part,
)

__version__ = "0.1.0"
