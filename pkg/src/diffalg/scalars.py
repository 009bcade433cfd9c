"""Exact rational scalars.

All coefficient arithmetic in this package is exact rational arithmetic.
gmpy2's mpq is used when available (noticeably faster on the dense reduction
loops); the stdlib Fraction is a drop-in fallback with identical semantics.
Both types are canonical (reduced, positive denominator), hash-compatible and
render as "p/q" / "p" under str().
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq  # type: ignore[import-not-found]

    def rational(value=0, denominator=None):
        if denominator is None:
            return _mpq(value)
        return _mpq(value, denominator)

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    def rational(value=0, denominator=None):
        if denominator is None:
            return Fraction(value)
        return Fraction(value, denominator)

    BACKEND = "fractions"

ZERO = rational(0)
ONE = rational(1)


def parse_rational(text: str):
    """Parse "p" or "p/q" (optional leading minus) into a scalar.

    Raises ValueError on malformed input or zero denominator.
    """
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        n = int(num.strip())
        d = int(den.strip())
        if d == 0:
            raise ValueError("zero denominator in rational %r" % text)
        return rational(n, d)
    return rational(int(s))


def format_rational(q) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    return str(q)
