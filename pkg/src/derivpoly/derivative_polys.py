"""Polynomial families attached to the constant-coefficient Riccati equation
u' = r(u-a)(u-b) and its companion equation v' = r v (u - (a+b)/2 + d).

For concrete rational parameters:

* ``build_P(n)``  -- P_n, with P_1 = u - a; the n-th derivative of u equals
  r^n * P_{n+1}(u).  Coefficients come from the Eulerian triangle.
* ``build_Q(n)``  -- Q_n, with Q_0 = 1; the n-th derivative of v (d = 0)
  equals v * (r/2)^n * Q_n(u).  Coefficients come from the MacMahon triangle.
* ``build_S(n)``  -- the d-shifted family, a binomial transform of the Q's.
* ``build_E/A/M`` -- the Eulerian polynomials (both indexings) and the
  MacMahon row polynomials; P and Q collapse onto E and M under the
  substitution x = (u-a)/(u-b).

Parameters are concrete rationals, never indeterminates, so every family
member is an ordinary univariate ``Poly``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial, format_rational
from .polyseries import Poly, X
from .special_numbers import eulerian, eulerian_row, macmahon, macmahon_row

FAMILIES = ("P", "Q", "S", "E", "A", "M")


@dataclass(frozen=True)
class RiccatiParams:
    """(r, a, b) with r != 0 and a != b."""

    r: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.r == 0:
            raise ValueError("r must be nonzero")
        if self.a == self.b:
            raise ValueError("a and b must differ")


@dataclass(frozen=True)
class ShiftedParams:
    """A RiccatiParams plus the companion-equation shift d (unrestricted)."""

    base: RiccatiParams
    d: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "d", Fraction(self.d))

    @property
    def r(self) -> Fraction:
        return self.base.r

    @property
    def a(self) -> Fraction:
        return self.base.a

    @property
    def b(self) -> Fraction:
        return self.base.b


def shifted(r, a, b, d=0) -> ShiftedParams:
    """Convenience constructor from bare scalars."""
    return ShiftedParams(RiccatiParams(r, a, b), d)


def _power_table(p: Poly, n: int) -> list[Poly]:
    """[p^0, p^1, ..., p^n]."""
    out = [Poly.constant(1)]
    for _ in range(n):
        out.append(out[-1] * p)
    return out


def build_P(n: int, params: RiccatiParams) -> Poly:
    """P_n(u; a, b), degree n, independent of r.

    P_1 = u - a; for n >= 2 the coefficients against the factored basis
    (u-a)^(k+1) (u-b)^(n-1-k) are the Eulerian numbers of row n-1.  Every
    summand carries both factors, so P_n vanishes at u = a and, for n >= 2,
    at u = b.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    ua = X - params.a
    if n == 1:
        return ua
    m = n - 1
    ub = X - params.b
    pa = _power_table(ua, m)
    pb = _power_table(ub, m)
    total = Poly()
    for k in range(m):
        total = total + eulerian(m, k) * (pa[k + 1] * pb[m - k])
    return total


def build_Q(n: int, params: RiccatiParams) -> Poly:
    """Q_n(u; a, b), degree n, from MacMahon row n+1; Q_0 = 1."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    pa = _power_table(X - params.a, n)
    pb = _power_table(X - params.b, n)
    total = Poly()
    for k in range(1, n + 2):
        total = total + macmahon(n + 1, k) * (pa[n + 1 - k] * pb[k - 1])
    return total


def build_S(n: int, params: ShiftedParams) -> Poly:
    """S_n(u; a, b, d) = sum_k C(n,k) (2d)^k Q_{n-k}(u; a, b)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    two_d = 2 * params.d
    total = Poly()
    factor = Fraction(1)
    for k in range(n + 1):
        total = total + binomial(n, k) * factor * build_Q(n - k, params.base)
        factor *= two_d
    return total


def build_E(n: int) -> Poly:
    """Eulerian polynomial E_n: sum_k <n,k> x^(k+1) for n >= 1, E_0 = 1."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return Poly.constant(1)
    coeffs = [0] * (n + 1)
    for k in range(n):
        coeffs[k + 1] = eulerian(n, k)
    return Poly(coeffs)


def build_A(n: int) -> Poly:
    """Eulerian polynomial A_n: sum_k <n,k> x^k, so E_n = x*A_n for n >= 1."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n == 0:
        return Poly.constant(1)
    return Poly(eulerian_row(n))


def build_M(n: int) -> Poly:
    """MacMahon polynomial M_n: sum_{k=1..n+1} M_{n+1,k} x^(k-1)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return Poly(macmahon_row(n + 1))


def family_poly(family: str, n: int, *, r=None, a=None, b=None, d=None) -> Poly:
    """Build one member of a named family; raises ValueError on bad input."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family in ("P", "Q", "S"):
        if a is None or b is None:
            raise ValueError(f"family {family} requires parameters a and b")
        base = RiccatiParams(Fraction(1) if r is None else r, a, b)
        if family == "P":
            return build_P(n, base)
        if family == "Q":
            return build_Q(n, base)
        if d is None:
            raise ValueError("family S requires parameter d")
        return build_S(n, ShiftedParams(base, d))
    if family == "E":
        return build_E(n)
    if family == "A":
        return build_A(n)
    return build_M(n)


def family_json_obj(family: str, n: int, poly: Poly, *,
                    r=None, a=None, b=None, d=None) -> dict:
    """CLI-facing JSON: family, index, parameters, coefficient strings."""

    def fmt(v):
        return None if v is None else format_rational(v)

    return {
        "family": family,
        "n": n,
        "params": {"r": fmt(r), "a": fmt(a), "b": fmt(b), "d": fmt(d)},
        "coefficients": poly.to_coeff_strings(),
    }
