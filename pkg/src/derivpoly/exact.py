"""Exact scalar arithmetic: arbitrary-precision integers and rationals.

Python ints are already arbitrary precision and ``fractions.Fraction`` keeps
rationals in reduced canonical form (positive denominator, gcd 1, zero stored
as 0/1), so this module mostly pins down conventions the rest of the package
relies on: the ``p/q`` string encoding and the combinatorial scalars.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

# The universal exact scalar.
Rational = Fraction

# Sign allowed on the numerator only; no decimals, no whitespace inside.
_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or plain ``p``) with optional sign; decimals rejected."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(value: Fraction | int) -> str:
    """Encode as ``p/q``, or just ``p`` when the denominator is 1."""
    return str(Fraction(value))


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)
