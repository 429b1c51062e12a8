"""Dense univariate polynomials over exact rationals, and truncated power
series over one of two coefficient rings (Rational or Poly).

Everything here is exact.  A Series stores exactly ``order + 1`` coefficients
and refuses arithmetic with a series of a different order or ring: silent
truncation mismatches are the main bug class in generating-function checks,
so they are hard errors instead.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Union

from .exact import parse_rational

Scalar = Union[int, Fraction]

RATIONAL_RING = "rational"
POLY_RING = "poly"


class Poly:
    """Immutable dense polynomial; coefficient ``k`` is the degree-k term.

    Canonical form never stores trailing zero coefficients, so equality is
    structural; the zero polynomial is the empty coefficient tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls((value,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of degree k; zero outside the stored range."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    @staticmethod
    def _coerce(value: object) -> Optional["Poly"]:
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction)):
            return Poly((value,))
        return None

    def __add__(self, other: object) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self._coeffs))

    def __sub__(self, other: object) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Poly":
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self._coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def eval(self, x: Scalar) -> Fraction:
        """Horner evaluation at an exact point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def definite_integral(self, a: Scalar, b: Scalar) -> Fraction:
        """Exact integral over [a, b]; swapping the endpoints negates it."""
        a, b = Fraction(a), Fraction(b)
        total = Fraction(0)
        apow, bpow = a, b
        for k, c in enumerate(self._coeffs):
            total += c * (bpow - apow) / (k + 1)
            apow *= a
            bpow *= b
        return total

    def __divmod__(self, other: object) -> tuple["Poly", "Poly"]:
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = len(rem) - len(o._coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = o._coeffs[-1]
        for shift in range(dq, -1, -1):
            coef = rem[shift + len(o._coeffs) - 1] / lead
            if coef:
                quot[shift] = coef
                for j, qc in enumerate(o._coeffs):
                    rem[shift + j] -= coef * qc
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: object) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: object) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: object) -> Optional["Poly"]:
        """Quotient when the division leaves no remainder, else None.

        Division by the zero polynomial still raises; a nonzero remainder is
        an expected outcome, not an error.
        """
        q, r = divmod(self, other)
        return q if r.is_zero() else None

    def to_coeff_strings(self) -> list[str]:
        """Serialized form: coefficient strings, lowest degree first."""
        return [str(c) for c in self._coeffs]

    @classmethod
    def from_coeff_strings(cls, items: Iterable[str]) -> "Poly":
        return cls(parse_rational(s) for s in items)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self._coeffs) + "]"

    def __repr__(self) -> str:
        return f"Poly({self!s})"


#: The polynomial variable (u for derivative polynomials, x for EGF checks).
X = Poly((0, 1))


def _ring_zero(ring: str):
    return Poly() if ring == POLY_RING else Fraction(0)


class Series:
    """Power series truncated at a fixed order over Fraction or Poly."""

    __slots__ = ("_coeffs", "_ring")

    def __init__(self, coeffs: Iterable, ring: str | None = None):
        cs = list(coeffs)
        if not cs:
            raise ValueError("a series stores at least its constant coefficient")
        if ring is None:
            ring = POLY_RING if any(isinstance(c, Poly) for c in cs) else RATIONAL_RING
        if ring == POLY_RING:
            cs = [c if isinstance(c, Poly) else Poly.constant(c) for c in cs]
        elif ring == RATIONAL_RING:
            if any(isinstance(c, Poly) for c in cs):
                raise ValueError("polynomial coefficient in a rational-ring series")
            cs = [c if isinstance(c, Fraction) else Fraction(c) for c in cs]
        else:
            raise ValueError(f"unknown coefficient ring {ring!r}")
        self._coeffs = tuple(cs)
        self._ring = ring

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        """The constant series ``value`` with the given truncation order."""
        if order < 0:
            raise ValueError("series order must be >= 0")
        zero = Poly() if isinstance(value, Poly) else Fraction(0)
        return cls([value] + [zero] * order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def ring(self) -> str:
        return self._ring

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int):
        return self._coeffs[n]

    def _check_compatible(self, other: "Series") -> None:
        if self._ring != other._ring:
            raise ValueError(
                f"coefficient ring mismatch: {self._ring} vs {other._ring}"
            )
        if len(self._coeffs) != len(other._coeffs):
            raise ValueError(
                f"series order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: object) -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._check_compatible(other)
        return Series([a + b for a, b in zip(self._coeffs, other._coeffs)],
                      ring=self._ring)

    def __sub__(self, other: object) -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._check_compatible(other)
        return Series([a - b for a, b in zip(self._coeffs, other._coeffs)],
                      ring=self._ring)

    def __mul__(self, other: object) -> "Series":
        """Truncated convolution at the common order."""
        if not isinstance(other, Series):
            return NotImplemented
        self._check_compatible(other)
        zero = _ring_zero(self._ring)
        out = [zero] * len(self._coeffs)
        for i, a in enumerate(self._coeffs):
            for j in range(len(self._coeffs) - i):
                out[i + j] = out[i + j] + a * other._coeffs[j]
        return Series(out, ring=self._ring)

    def scale(self, factor) -> "Series":
        """Multiply every coefficient by a fixed ring element."""
        return Series([c * factor for c in self._coeffs], ring=self._ring)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._ring == other._ring and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._ring, self._coeffs))

    def to_json_obj(self) -> dict:
        if self._ring == POLY_RING:
            coeffs = [c.to_coeff_strings() for c in self._coeffs]
        else:
            coeffs = [str(c) for c in self._coeffs]
        return {"order": self.order, "coefficients": coeffs}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Series":
        coeffs = obj["coefficients"]
        if len(coeffs) != obj["order"] + 1:
            raise ValueError("series coefficient count does not match order")
        if coeffs and isinstance(coeffs[0], list):
            return cls([Poly.from_coeff_strings(c) for c in coeffs])
        return cls([parse_rational(c) for c in coeffs])

    def __repr__(self) -> str:
        return f"Series(order={self.order}, ring={self._ring!r})"


def series_exp_linear(l, order: int) -> Series:
    """exp(l*t) truncated: coefficient n is l**n / n!.

    The ring is a rational algebra, so dividing the running power by n is
    exact; l may be a Fraction/int (rational ring) or a Poly (poly ring).
    """
    if order < 0:
        raise ValueError("series order must be >= 0")
    if isinstance(l, Poly):
        one = Poly.constant(1)
    else:
        l = Fraction(l)
        one = Fraction(1)
    coeffs = [one]
    term = one
    for n in range(1, order + 1):
        term = term * l * Fraction(1, n)
        coeffs.append(term)
    return Series(coeffs)
