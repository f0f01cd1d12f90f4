"""Quantum-algebra building blocks: quantum integers, factorials, binomial and
multinomial coefficients, colored unknots, theta graphs, framing factors, and
the triangle-move coefficient, together with closed forms for their maximal
degrees in v.

Conventions (variable v, with v = A^(-1) for the Kauffman bracket A):

    [k]      = (v^(2k) - v^(-2k)) / (v^2 - v^(-2)),      [k]! = [1][2]...[k]
    O^k      = (-1)^k [k+1]                               (k-colored unknot)
    f(a)     = i^(-a) v^(-a(a+2)/2)                       (framing twist)
    theta(a,b,c) = O^((a+b+c)/2) * [m; T1, T2, T3]        (m = (a+b+c)/2)

with trinomial parts T1 = (-a+b+c)/2, T2 = (a-b+c)/2, T3 = (a+b-c)/2.
[k]! vanishes for k < 0, and that vanishing is what truncates every
summation range in this package.

All values are exact HalfLaurent polynomials.  Binomials are built by the
balanced q-Pascal recurrence and memoized; the factorial-quotient definition
is kept as an independent cross-check (see tests).
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .laurent import ZERO, GaussInt, HalfLaurent, gauss_unit_power


def qint(k: int) -> HalfLaurent:
    """Quantum integer [k]; [-k] = -[k], [0] = 0."""
    if k == 0:
        return ZERO
    if k < 0:
        return -qint(-k)
    # [k] = v^(2(k-1)) + v^(2(k-3)) + ... + v^(-2(k-1)), doubled exponents step 8
    return HalfLaurent({4 * (k - 1) - 8 * j: 1 for j in range(k)})


@functools.cache
def qfact(k: int) -> HalfLaurent:
    """Quantum factorial [k]!; the empty product for k = 0, ZERO for k < 0."""
    if k < 0:
        return ZERO
    if k == 0:
        return HalfLaurent.one()
    return qfact(k - 1) * qint(k)


@functools.cache
def qbinomial(n: int, k: int) -> HalfLaurent:
    """Balanced quantum binomial [n; k] = [n]! / ([k]! [n-k]!).

    Built by the Pascal recurrence [n;k] = v^(2k) [n-1;k] + v^(2(k-n)) [n-1;k-1],
    which stays in exact integer arithmetic with no division.
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return HalfLaurent.one()
    if 2 * k > n:
        return qbinomial(n, n - k)
    return HalfLaurent.monomial(1, 2 * k) * qbinomial(n - 1, k) + HalfLaurent.monomial(
        1, 2 * (k - n)
    ) * qbinomial(n - 1, k - 1)


def qmultinomial(parts: list[int] | tuple[int, ...]) -> HalfLaurent:
    """[p1 + ... + pr; p1, ..., pr] = [sum]! / ([p1]! ... [pr]!).

    ZERO if any part is negative (vanishing factorial).
    """
    if any(p < 0 for p in parts):
        return ZERO
    result = HalfLaurent.one()
    total = 0
    for p in parts:
        total += p
        result = result * qbinomial(total, p)
    return result


def unknot_value(k: int) -> HalfLaurent:
    """Value O^k = (-1)^k [k+1] of the k-colored 0-framed unknot."""
    if k < 0:
        raise ValueError("colors are non-negative")
    val = qint(k + 1)
    return -val if k % 2 else val


def is_admissible(a: int, b: int, c: int) -> bool:
    """a+b+c even and the triangle inequality |a-b| <= c <= a+b, all colors >= 0."""
    return (
        a >= 0
        and b >= 0
        and c >= 0
        and (a + b + c) % 2 == 0
        and abs(a - b) <= c <= a + b
    )


def theta_value(a: int, b: int, c: int) -> HalfLaurent:
    """Value of the planar theta graph with edge colors a, b, c.

    ZERO for inadmissible colorings, so out-of-range terms of a state sum
    vanish silently.
    """
    if (a + b + c) % 2 or a < 0 or b < 0 or c < 0:
        return ZERO
    m = (a + b + c) // 2
    parts = (m - a, m - b, m - c)
    trinomial = qmultinomial(parts)  # ZERO if the triangle inequality fails
    if trinomial.is_zero:
        return ZERO
    return unknot_value(m) * trinomial


def framing_factor(a: int, power: int = 1) -> HalfLaurent:
    """f(a)^power where f(a) = i^(-a) v^(-a(a+2)/2); always a unit monomial."""
    if a < 0:
        raise ValueError("colors are non-negative")
    unit = gauss_unit_power(-a * power)
    return HalfLaurent.monomial(unit, Fraction(-a * (a + 2) * power, 2))


def _delta_parity_ok(a: int, b: int, c: int, alpha: int, beta: int, gamma: int) -> bool:
    return (
        (a + b + c) % 2 == 0
        and (a + beta + gamma) % 2 == 0
        and (alpha + b + gamma) % 2 == 0
        and (alpha + beta + c) % 2 == 0
    )


def delta_value(a: int, b: int, c: int, alpha: int, beta: int, gamma: int) -> HalfLaurent:
    """Triangle-move coefficient: the quotient of a 6j-symbol by a theta.

    Computed as the alternating z-sum

        sum_z (-1)^(z-m) [z+1; m+1] [T1; z-h1] [T2; z-h2] [T3; z-h3]

    with m = (a+b+c)/2, T1 = (-a+b+c)/2, h1 = (a+beta+gamma)/2 and cyclic.
    The z-range is cut off explicitly by the binomial supports, and the
    binomials themselves vanish outside their range as a second guard.
    ZERO whenever a parity or triangle condition fails.
    """
    if min(a, b, c, alpha, beta, gamma) < 0:
        return ZERO
    if not _delta_parity_ok(a, b, c, alpha, beta, gamma):
        return ZERO
    m = (a + b + c) // 2
    tops = ((-a + b + c) // 2, (a - b + c) // 2, (a + b - c) // 2)
    if min(tops) < 0:
        return ZERO
    lows = ((a + beta + gamma) // 2, (alpha + b + gamma) // 2, (alpha + beta + c) // 2)
    z_min = max(m, *lows)
    z_max = min(t + h for t, h in zip(tops, lows))
    total = ZERO
    for z in range(z_min, z_max + 1):
        term = qbinomial(tops[0], z - lows[0]) * qbinomial(tops[1], z - lows[1])
        term = term * qbinomial(tops[2], z - lows[2])
        term = term * qbinomial(z + 1, m + 1)
        total = total - term if (z - m) % 2 else total + term
    return total


# ---------------------------------------------------------------------------
# Closed-form maximal degrees.  These are equalities, not bounds, on
# admissible inputs; the tests check them against max_degree of the values.
# ---------------------------------------------------------------------------


def unknot_degree(a: int) -> int:
    """Maximal degree of O^a."""
    return 2 * a


def framing_degree(a: int) -> Fraction:
    """Maximal (= only) degree of f(a)."""
    return Fraction(-a * (a + 2), 2)


def theta_degree(a: int, b: int, c: int) -> Fraction:
    """Maximal degree of theta(a, b, c) for admissible colors."""
    if not is_admissible(a, b, c):
        raise ValueError(f"inadmissible triple {(a, b, c)}")
    return Fraction(
        2 * (a * (1 - a) + b * (1 - b) + c * (1 - c)) + (a + b + c) ** 2, 2
    )


def _g(n: Fraction | int, k: Fraction | int) -> Fraction:
    """Degree 2k(n-k) of the quantum binomial [n; k]."""
    return Fraction(2) * k * (n - k)


def delta_degree(a: int, b: int, c: int, alpha: int, beta: int, gamma: int) -> Fraction:
    """Maximal degree of delta_value on admissible inputs.

    The top z-term dominates; its index is
    m = (a+b+c+alpha+beta+gamma - max(a+alpha, b+beta, c+gamma)) / 2.
    """
    two_m = a + b + c + alpha + beta + gamma - max(a + alpha, b + beta, c + gamma)
    m = Fraction(two_m, 2)
    half = Fraction(a + b + c, 2)
    return (
        _g(m + 1, half + 1)
        + _g(Fraction(-a + b + c, 2), m - Fraction(a + beta + gamma, 2))
        + _g(Fraction(a - b + c, 2), m - Fraction(alpha + b + gamma, 2))
        + _g(Fraction(a + b - c, 2), m - Fraction(alpha + beta + c, 2))
    )


def clear_caches() -> None:
    """Drop the memoized factorials and binomials (mainly for tests)."""
    qfact.cache_clear()
    qbinomial.cache_clear()
