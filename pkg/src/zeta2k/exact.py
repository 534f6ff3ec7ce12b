"""Exact rational plumbing shared by every other module.

All coefficients in this package are `fractions.Fraction` values, which
already maintain the canonical form the cross-backend equality tests rely
on: positive denominator, coprime numerator/denominator, zero stored as
0/1, equality structural.  Values are immutable and safe to share across
threads.  This module adds the pieces the stdlib does not pin down: a
strict ``num/den`` text form and a binomial that rejects out-of-range
arguments instead of returning 0.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "Rational",
    "rational",
    "factorial",
    "binomial",
    "format_rational",
    "parse_rational",
]

# The one rational type used throughout the package.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


def rational(num: int, den: int = 1) -> Fraction:
    """Canonical fraction num/den; raises ZeroDivisionError for den = 0."""
    return Fraction(num, den)


def binomial(n: int, m: int) -> int:
    """Exact C(n, m) for 0 <= m <= n; out-of-range m is an error."""
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if m < 0 or m > n:
        raise ValueError(f"binomial: need 0 <= m <= n, got m={m}, n={n}")
    return comb(n, m)


def format_rational(q: Fraction) -> str:
    """Render as ``num/den``, always including the denominator ("0/1", "-1/30")."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the ``num/den`` form (bare integers allowed); canonicalizes."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)
