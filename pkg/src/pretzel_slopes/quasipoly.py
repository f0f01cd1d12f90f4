"""Exact quadratic quasi-polynomial fitting for maximal-degree sequences.

The degree of the colored Jones polynomial is eventually a quadratic
quasi-polynomial: there are a period p, a cutoff C, and one quadratic per
residue class mod p such that the degree at n equals the class quadratic at
n for every n > C.  The fitter recovers the least such (p, C) from an exact
integer/rational sequence, fitting each residue class through its first
three points and verifying every remaining point, so a single corrupted
entry is rejected rather than smoothed over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_PERIOD_CAP = 12
DEFAULT_CUTOFF_CAP = 3


class InsufficientDataError(ValueError):
    """The sequence is too short to certify the candidate periods."""


class NoFitError(ValueError):
    """No (period, cutoff) within the caps fits the sequence exactly."""


@dataclass(frozen=True)
class Quadratic:
    """q(n) = quad*n^2 + lin*n + const with exact rational coefficients."""

    quad: Fraction
    lin: Fraction
    const: Fraction

    def __call__(self, n: int) -> Fraction:
        return self.quad * n * n + self.lin * n + self.const

    def __str__(self) -> str:
        return f"{self.quad}*n^2 + {self.lin}*n + {self.const}"


@dataclass(frozen=True)
class QuasiPolynomial:
    """Period, cutoff, and one quadratic per residue class j = n mod period."""

    period: int
    cutoff: int
    classes: tuple[Quadratic, ...]

    def __post_init__(self):
        if self.period < 1 or len(self.classes) != self.period:
            raise ValueError("need exactly one quadratic per residue class")

    def value_at(self, n: int) -> Fraction:
        return self.classes[n % self.period](n)

    def common_quadratic_coefficient(self) -> Fraction | None:
        """The shared n^2 coefficient, or None if the classes disagree."""
        coeffs = {q.quad for q in self.classes}
        return coeffs.pop() if len(coeffs) == 1 else None

    def common_linear_coefficient(self) -> Fraction | None:
        coeffs = {q.lin for q in self.classes}
        return coeffs.pop() if len(coeffs) == 1 else None


def _quadratic_through(points: Sequence[tuple[int, Fraction]]) -> Quadratic:
    """The unique quadratic through three points with distinct abscissae."""
    (x1, y1), (x2, y2), (x3, y3) = points
    # Divided differences, exact over Fraction.
    d1 = Fraction(y2 - y1, x2 - x1)
    d2 = Fraction(y3 - y2, x3 - x2)
    quad = Fraction(d2 - d1, x3 - x1)
    lin = d1 - quad * (x1 + x2)
    const = y1 - quad * x1 * x1 - lin * x1
    return Quadratic(quad, lin, const)


def fit_quasi_polynomial(
    seq: Sequence[Fraction | int],
    period_cap: int = DEFAULT_PERIOD_CAP,
    cutoff_cap: int = DEFAULT_CUTOFF_CAP,
) -> QuasiPolynomial:
    """Fit seq, interpreted as values at n = 1, 2, ..., len(seq).

    Periods are tried in increasing order and cutoffs in increasing order, so
    the returned (period, cutoff) is lexicographically minimal.  Certifying a
    period p requires at least 3p + 3 data points (three fitting points per
    class plus verification slack); shorter input raises
    InsufficientDataError once the certifiable periods are exhausted.
    NoFitError means every certifiable period up to the cap fails.
    """
    values = [Fraction(v) for v in seq]
    length = len(values)
    if length < 6:
        raise InsufficientDataError(
            f"need at least 6 points to certify period 1, got {length}"
        )
    hit_data_limit = False
    for period in range(1, period_cap + 1):
        if 3 * period + 3 > length:
            hit_data_limit = True
            break
        for cutoff in range(0, cutoff_cap + 1):
            fit = _try_fit(values, period, cutoff)
            if fit is not None:
                return fit
    if hit_data_limit:
        raise InsufficientDataError(
            f"{length} points certify periods up to {(length - 3) // 3} only; "
            f"no fit found there and the period cap is {period_cap}"
        )
    raise NoFitError(
        f"no exact quasi-polynomial with period <= {period_cap} and "
        f"cutoff <= {cutoff_cap}"
    )


def _try_fit(values: list[Fraction], period: int, cutoff: int) -> QuasiPolynomial | None:
    classes: list[Quadratic | None] = [None] * period
    points: list[list[tuple[int, Fraction]]] = [[] for _ in range(period)]
    for n in range(cutoff + 1, len(values) + 1):
        points[n % period].append((n, values[n - 1]))
    if any(len(pts) < 3 for pts in points):
        return None
    for j in range(period):
        quad = _quadratic_through(points[j][:3])
        for n, y in points[j]:
            if quad(n) != y:
                return None
        classes[j] = quad
    return QuasiPolynomial(period, cutoff, tuple(classes))  # type: ignore[arg-type]
