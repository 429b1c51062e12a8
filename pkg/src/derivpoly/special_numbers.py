"""Eulerian and MacMahon triangles, Bernoulli numbers and polynomials.

Triangles are memoized row by row behind module-level singletons; lookups
outside the triangular support return 0 because the recurrences implicitly
use zero boundary values.  Bernoulli numbers follow the convention fixed by
the generating function t*e^(w*t)/(e^t - 1), so B_1 = -1/2.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exact import binomial, factorial
from .polyseries import Poly

EULERIAN = "eulerian"
MACMAHON = "macmahon"

TABLE_KINDS = ("eulerian", "macmahon", "bernoulli", "bernoulli-poly")


def _eulerian_next_row(n: int, prev: list[int]) -> list[int]:
    """Row n (entries k = 0..n-1) from row n-1 via the ascent recurrence."""
    row = []
    for k in range(n):
        left = prev[k] if k < n - 1 else 0
        right = prev[k - 1] if k >= 1 else 0
        row.append((k + 1) * left + (n - k) * right)
    return row


def _macmahon_next_row(n: int, prev: list[int]) -> list[int]:
    """Row n (entries k = 1..n) from row n-1; zero outside 1 <= k <= n-1."""
    row = []
    for k in range(1, n + 1):
        left = prev[k - 1] if k <= n - 1 else 0
        right = prev[k - 2] if k >= 2 else 0
        row.append((2 * k - 1) * left + (2 * n - 2 * k + 1) * right)
    return row


class Triangle:
    """Memoized triangular array of exact integers.

    Row 1 is [1] for both kinds; construction is single-writer behind a lock
    so concurrent readers are safe.
    """

    def __init__(self, kind: str):
        if kind not in (EULERIAN, MACMAHON):
            raise ValueError(f"unknown triangle kind {kind!r}")
        self.kind = kind
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        if n < 1:
            raise ValueError(f"triangle rows start at 1, got {n}")
        if n > len(self._rows):
            step = _eulerian_next_row if self.kind == EULERIAN else _macmahon_next_row
            with self._lock:
                while len(self._rows) < n:
                    m = len(self._rows) + 1
                    self._rows.append(step(m, self._rows[-1]))
        return tuple(self._rows[n - 1])

    def value(self, n: int, k: int) -> int:
        """Entry at (n, k); zero outside the triangular support."""
        row = self.row(n)
        if self.kind == EULERIAN:
            return row[k] if 0 <= k <= n - 1 else 0
        return row[k - 1] if 1 <= k <= n else 0


_EULERIAN_TRIANGLE = Triangle(EULERIAN)
_MACMAHON_TRIANGLE = Triangle(MACMAHON)
_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def reset_caches() -> None:
    """Drop all memoized rows and values.

    Only tests that patch a recurrence need this; normal use never does.
    """
    global _EULERIAN_TRIANGLE, _MACMAHON_TRIANGLE, _BERNOULLI
    _EULERIAN_TRIANGLE = Triangle(EULERIAN)
    _MACMAHON_TRIANGLE = Triangle(MACMAHON)
    _BERNOULLI = [Fraction(1)]


def eulerian(n: int, k: int) -> int:
    """Number of permutations of {1..n} with exactly k ascents (n >= 1)."""
    return _EULERIAN_TRIANGLE.value(n, k)


def eulerian_row(n: int) -> tuple[int, ...]:
    return _EULERIAN_TRIANGLE.row(n)


def eulerian_explicit(n: int, k: int) -> int:
    """Alternating binomial sum for the ascent count.

    Independent of the recurrence route above; the two must agree.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k out of range for row {n}: {k}")
    total = 0
    for j in range(k + 1):
        term = binomial(n + 1, j) * (k - j + 1) ** n
        total += -term if j % 2 else term
    return total


def macmahon(n: int, k: int) -> int:
    """MacMahon number at (n, k); support is 1 <= k <= n with M(n,1) = 1."""
    return _MACMAHON_TRIANGLE.value(n, k)


def macmahon_row(n: int) -> tuple[int, ...]:
    return _MACMAHON_TRIANGLE.row(n)


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """B_0..B_n_max by coefficient-wise inversion of (e^t - 1)/t.

    The constant term of (e^t - 1)/t is 1, hence invertible: writing
    beta_n = B_n/n!, each new coefficient satisfies
    beta_n = -sum_{k<n} beta_k / (n-k+1)!.
    """
    if n_max < 0:
        raise ValueError(f"need n_max >= 0, got {n_max}")
    with _BERNOULLI_LOCK:
        cache = _BERNOULLI
        while len(cache) <= n_max:
            n = len(cache)
            acc = Fraction(0)
            for k in range(n):
                acc += cache[k] / (factorial(k) * factorial(n - k + 1))
            cache.append(-acc * factorial(n))
        return list(cache[: n_max + 1])


def bernoulli_number(n: int) -> Fraction:
    return bernoulli_numbers(n)[n]


def bernoulli_poly(n: int) -> Poly:
    """The n-th Bernoulli polynomial, via the addition formula off 0."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    bs = bernoulli_numbers(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = binomial(n, k) * bs[k]
    return Poly(coeffs)


def bernoulli_value(n: int, x) -> Fraction:
    """Exact value of the n-th Bernoulli polynomial at a rational point."""
    return bernoulli_poly(n).eval(x)


def table_rows(kind: str, n_max: int) -> list[list[str]]:
    """Rows of the requested table with every value as an exact string.

    Triangle kinds list rows 1..n_max; the Bernoulli kinds list indices
    0..n_max (single values, respectively coefficient vectors).
    """
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    if kind == EULERIAN:
        return [[str(v) for v in eulerian_row(n)] for n in range(1, n_max + 1)]
    if kind == MACMAHON:
        return [[str(v) for v in macmahon_row(n)] for n in range(1, n_max + 1)]
    if kind == "bernoulli":
        return [[str(b)] for b in bernoulli_numbers(n_max)]
    if kind == "bernoulli-poly":
        return [bernoulli_poly(n).to_coeff_strings() for n in range(n_max + 1)]
    raise ValueError(f"unknown table kind {kind!r}")


def table_json_obj(kind: str, n_max: int) -> dict:
    return {"kind": kind, "rows": table_rows(kind, n_max)}


def parse_table_json_obj(obj: dict) -> tuple[str, list[list[str]]]:
    kind = obj["kind"]
    if kind not in TABLE_KINDS:
        raise ValueError(f"unknown table kind {kind!r}")
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("table rows must be a list of lists")
    return kind, [[str(v) for v in row] for row in rows]
