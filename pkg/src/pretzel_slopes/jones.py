"""Colored Jones polynomials of 3-string pretzel knots P(1/r, 1/s, 1/t).

The invariant is assembled from a state sum over even lattice triples

    J(N; v) = (-1)^n  sum_{(a,b,c) in D_n}
        O^a O^b O^c f(a)^r f(b)^s f(c)^t theta(a,b,c) delta(a,b,c,n,n,n)^2
        / ( theta(a,n,n) theta(b,n,n) theta(c,n,n) ),          n = N - 1,

where D_n is the set of even triples in [0, 2n]^3 satisfying the triangle
inequality.  Individual terms of the sum are rational functions of v, not
Laurent polynomials (the all-zero triple contributes 1/[n+1] up to sign), so
terms are represented as exact quotients and the sum is cleared to a common
denominator before one final exact division.  Every theta and unknot factor
is a signed monomial times a quotient of quantum factorials, so numerators
and denominators are tracked as exponent vectors over the quantum integers
[2], [3], ... and only the triangle-move coefficients are expanded as
polynomials.

The term polynomials are cached per color n and are independent of (r, s, t):
sweeping over many knots at the same color reuses all of the heavy work.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .laurent import (
    ZERO,
    GaussInt,
    HalfLaurent,
    IntegralityError,
    NonExactDivisionError,
    gauss_unit_power,
)
from .quantum import (
    delta_degree,
    delta_value,
    framing_degree,
    is_admissible,
    qint,
    theta_degree,
    unknot_degree,
    unknot_value,
    framing_factor,
)


class CaseNotCoveredError(ValueError):
    """The knot parameters satisfy neither closed-form degree hypothesis."""


@dataclass(frozen=True)
class PretzelKnot:
    """The pretzel knot P(1/r, 1/s, 1/t) with r, s, t odd."""

    r: int
    s: int
    t: int

    def __post_init__(self):
        for name in ("r", "s", "t"):
            value = getattr(self, name)
            if value % 2 == 0:
                raise ValueError(f"{name} = {value} is even; only odd twist "
                                 "parameters are supported")

    def __str__(self) -> str:
        return f"P(1/{self.r}, 1/{self.s}, 1/{self.t})"

    def case(self) -> str | None:
        """Which closed-form hypothesis holds: 'case1', 'case2', or None.

        Both require r < -1 < 1 < s, t.  Case 1 is 2|r| < s, t; case 2 is
        |r| > s or |r| > t.  The fringe -2r <= s, t with s, t >= -r is not
        covered.
        """
        r, s, t = self.r, self.s, self.t
        if not (r < -1 and s > 1 and t > 1):
            return None
        if 2 * -r < s and 2 * -r < t:
            return "case1"
        if s < -r or t < -r:
            return "case2"
        return None


@dataclass(frozen=True)
class StateTriple:
    """An even lattice point (a, b, c) of the state-sum domain D_n."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if any(x < 0 or x % 2 for x in (self.a, self.b, self.c)):
            raise ValueError(f"state triple {self} must have even non-negative entries")
        if not is_admissible(self.a, self.b, self.c):
            raise ValueError(f"state triple {self} violates the triangle inequality")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def state_domain(n: int) -> Iterator[tuple[int, int, int]]:
    """Even triples 0 <= a, b, c <= 2n satisfying the triangle inequality."""
    for a in range(0, 2 * n + 1, 2):
        for b in range(0, 2 * n + 1, 2):
            for c in range(abs(a - b), min(a + b, 2 * n) + 1, 2):
                yield (a, b, c)


# ---------------------------------------------------------------------------
# Quantum-factorial bookkeeping.
#
# A "qvector" maps j >= 2 to the exponent of the quantum integer [j] in a
# product; [1] = 1 is never stored.  theta and unknot values decompose as
# sign * (product of [j]^e), so the whole non-delta part of a state-sum term
# is a signed qvector.
# ---------------------------------------------------------------------------


def _vec_add_factorial(vec: dict[int, int], k: int, sign: int) -> None:
    """vec *= ([k]!)^sign.  k must be >= 0."""
    for j in range(2, k + 1):
        vec[j] = vec.get(j, 0) + sign


def _vec_add_qint(vec: dict[int, int], k: int, sign: int) -> None:
    if k >= 2:
        vec[k] = vec.get(k, 0) + sign


def _theta_vector(a: int, b: int, c: int) -> tuple[int, dict[int, int]]:
    """theta(a,b,c) as (sign, qvector); requires admissibility."""
    m = (a + b + c) // 2
    sign = -1 if m % 2 else 1
    vec: dict[int, int] = {}
    _vec_add_qint(vec, m + 1, 1)        # O^m = (-1)^m [m+1]
    _vec_add_factorial(vec, m, 1)       # trinomial numerator
    for top in (m - a, m - b, m - c):   # trinomial denominators
        _vec_add_factorial(vec, top, -1)
    return sign, vec


def _unknot_vector(k: int) -> tuple[int, dict[int, int]]:
    vec: dict[int, int] = {}
    _vec_add_qint(vec, k + 1, 1)
    return (-1 if k % 2 else 1), vec


def _bracket_vector(a: int, b: int, c: int, n: int) -> tuple[int, dict[int, int]]:
    """O^a O^b O^c theta(a,b,c) / (theta(a,n,n) theta(b,n,n) theta(c,n,n))."""
    sign = 1
    vec: dict[int, int] = {}
    for x in (a, b, c):
        s_x, v_x = _unknot_vector(x)
        sign *= s_x
        for j, e in v_x.items():
            vec[j] = vec.get(j, 0) + e
    s_abc, v_abc = _theta_vector(a, b, c)
    sign *= s_abc
    for j, e in v_abc.items():
        vec[j] = vec.get(j, 0) + e
    for x in (a, b, c):
        s_x, v_x = _theta_vector(x, n, n)
        sign *= s_x
        for j, e in v_x.items():
            vec[j] = vec.get(j, 0) - e
    return sign, {j: e for j, e in vec.items() if e}


@functools.lru_cache(maxsize=None)
def _qint_power_product(items: tuple[tuple[int, int], ...]) -> HalfLaurent:
    """Product of [j]^e over the (j, e) pairs; exponents must be positive."""
    result = HalfLaurent.one()
    for j, e in items:
        base = qint(j)
        for _ in range(e):
            result = result * base
    return result


def _vector_poly(vec: dict[int, int]) -> HalfLaurent:
    return _qint_power_product(tuple(sorted(vec.items())))


@functools.lru_cache(maxsize=None)
def _delta_nnn(n: int, a: int, b: int, c: int) -> HalfLaurent:
    """delta(a,b,c,n,n,n); symmetric in (a,b,c), cached on the sorted key."""
    return delta_value(a, b, c, n, n, n)


def _delta_squared(n: int, key: tuple[int, int, int]) -> HalfLaurent:
    d = _delta_nnn(n, *key)
    return d * d


class LaurentFraction:
    """An exact quotient of Laurent polynomials.

    State-sum terms live here: their degrees are well defined (degree of the
    numerator minus degree of the denominator, independent of the chosen
    representation) even when the quotient is not itself a polynomial.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: HalfLaurent, denominator: HalfLaurent | None = None):
        if denominator is None:
            denominator = HalfLaurent.one()
        if denominator.is_zero:
            raise ZeroDivisionError("zero denominator")
        self.numerator = numerator
        self.denominator = denominator

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def max_degree(self) -> Fraction | None:
        if self.numerator.is_zero:
            return None
        return self.numerator.max_degree - self.denominator.max_degree

    @property
    def is_polynomial(self) -> bool:
        try:
            self.numerator.exact_div(self.denominator)
            return True
        except NonExactDivisionError:
            return False

    def as_laurent(self) -> HalfLaurent:
        """The quotient as a polynomial; NonExactDivisionError if it is not one."""
        return self.numerator.exact_div(self.denominator)

    def leading_sign(self) -> int:
        """Sign of the leading coefficient (numerator lead over denominator lead)."""
        num = self.numerator.leading_coefficient()
        den = self.denominator.leading_coefficient()
        if num.im or den.im:
            raise ValueError("leading coefficient is not real")
        return 1 if (num.re > 0) == (den.re > 0) else -1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, HalfLaurent)):
            return self.numerator == self.denominator * other
        if isinstance(other, LaurentFraction):
            return self.numerator * other.denominator == other.numerator * self.denominator
        return NotImplemented

    def __repr__(self) -> str:
        return f"LaurentFraction({self.numerator!r}, {self.denominator!r})"

    def __str__(self) -> str:
        if self.denominator == HalfLaurent.one():
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"


def _framing_shift_and_unit(knot: PretzelKnot, a: int, b: int, c: int) -> tuple[int, int]:
    """Doubled exponent shift and i-power of f(a)^r f(b)^s f(c)^t."""
    shift = -(a * (a + 2) * knot.r + b * (b + 2) * knot.s + c * (c + 2) * knot.t)
    ipow = -(a * knot.r + b * knot.s + c * knot.t)
    return shift, ipow


def summand(knot: PretzelKnot, triple: StateTriple | tuple[int, int, int], n: int) -> LaurentFraction:
    """One state-sum term, as an exact quotient of Laurent polynomials.

    Most terms reduce to polynomials, but not all (the all-zero triple is
    a sign over [n+1]), so the quotient form is the honest return type.
    """
    a, b, c = triple.as_tuple() if isinstance(triple, StateTriple) else triple
    if max(a, b, c) > 2 * n or not is_admissible(a, b, c):
        raise ValueError(f"triple {(a, b, c)} is outside the domain for n = {n}")
    sign, vec = _bracket_vector(a, b, c, n)
    pos = {j: e for j, e in vec.items() if e > 0}
    neg = {j: -e for j, e in vec.items() if e < 0}
    key = tuple(sorted((a, b, c)))
    num = _delta_squared(n, key) * _vector_poly(pos)
    shift, ipow = _framing_shift_and_unit(knot, a, b, c)
    unit = gauss_unit_power(ipow) * sign
    num = num * HalfLaurent.monomial(unit, Fraction(shift, 2))
    return LaurentFraction(num, _vector_poly(neg))


# ---------------------------------------------------------------------------
# Cached per-color tables.  For one color n, the knot-independent part of the
# term at (a,b,c) is  sign * delta^2 * pos_part * (L / den_part)  where L is
# the componentwise max of all denominator vectors; summing the table entries
# (shifted by the framing monomials) and dividing once by L gives J exactly.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _CoreTable:
    n: int
    common_denominator: tuple[tuple[int, int], ...]  # (j, exponent) pairs
    signs: dict[tuple[int, int, int], int]
    terms: dict[tuple[int, int, int], HalfLaurent]


@functools.lru_cache(maxsize=None)
def _core_table(n: int) -> _CoreTable:
    # Pass 1: integer bookkeeping only.
    vectors: dict[tuple[int, int, int], tuple[int, dict[int, int]]] = {}
    common: dict[int, int] = {}
    for a, b, c in state_domain(n):
        key = (a, b, c) if a <= b <= c else tuple(sorted((a, b, c)))
        if key in vectors:
            continue
        sign, vec = _bracket_vector(*key, n)
        vectors[key] = (sign, vec)
        for j, e in vec.items():
            if e < 0 and -e > common.get(j, 0):
                common[j] = -e
    # Pass 2: expand polynomials.
    signs: dict[tuple[int, int, int], int] = {}
    terms: dict[tuple[int, int, int], HalfLaurent] = {}
    for key, (sign, vec) in vectors.items():
        pos = {j: e for j, e in vec.items() if e > 0}
        cofactor = dict(common)
        for j, e in vec.items():
            if e < 0:
                cofactor[j] -= -e
        cofactor = {j: e for j, e in cofactor.items() if e}
        poly = _delta_squared(n, key) * _vector_poly(pos)
        poly = poly * _vector_poly(cofactor)
        signs[key] = sign
        terms[key] = poly
    return _CoreTable(n, tuple(sorted(common.items())), signs, terms)


def colored_jones(knot: PretzelKnot, N: int) -> HalfLaurent:
    """J(N; v), normalized so the N-colored unknot would give [N]; J(1) = 1.

    Raises IntegralityError if the assembled value is not an integer Laurent
    polynomial, which would signal a bug rather than a property of the knot.
    """
    if N < 1:
        raise ValueError("the color N must be a positive integer")
    n = N - 1
    table = _core_table(n)
    acc_re: dict[int, int] = {}
    get = acc_re.get
    for a, b, c in state_domain(n):
        key = (a, b, c) if a <= b <= c else tuple(sorted((a, b, c)))
        shift, ipow = _framing_shift_and_unit(knot, a, b, c)
        if ipow % 2:
            raise IntegralityError("odd i-power in a state-sum term")
        sign = table.signs[key] * (-1 if ipow % 4 else 1)
        for e, coeff in table.terms[key]._re.items():
            k = e + shift
            val = get(k, 0) + (coeff if sign == 1 else -coeff)
            if val:
                acc_re[k] = val
            elif k in acc_re:
                del acc_re[k]
        get = acc_re.get
    total = HalfLaurent._raw(acc_re, {})
    for j, e in reversed(table.common_denominator):
        base = qint(j)
        for _ in range(e):
            total = total.exact_div(base)
    if n % 2:
        total = -total
    return total.assert_integral()


def clear_state_sum_caches() -> None:
    """Release the per-color tables (they can hold tens of MB at large colors)."""
    _core_table.cache_clear()
    _delta_nnn.cache_clear()
    _qint_power_product.cache_clear()


# ---------------------------------------------------------------------------
# Hopf link: closed form and an independent fusion-sum cross-check.
# ---------------------------------------------------------------------------


def hopf_colored(a: int, b: int) -> HalfLaurent:
    """Colored Hopf link value (-1)^(a+b) [(a+1)(b+1)] (0-framed, colors a, b)."""
    val = qint((a + 1) * (b + 1))
    return -val if (a + b) % 2 else val


def hopf_colored_sum(a: int, b: int) -> HalfLaurent:
    """The same value from the fusion sum over the middle color.

    Unzipping the doubly twisted theta gives sum_c f(c)^2 O^c over admissible
    c; restoring the zero framing on the two resulting components contributes
    f(a)^(-2) f(b)^(-2).
    """
    total = ZERO
    for c in range(abs(a - b), a + b + 1, 2):
        total = total + framing_factor(c, 2) * unknot_value(c)
    return total * framing_factor(a, -2) * framing_factor(b, -2)


# ---------------------------------------------------------------------------
# Closed-form degrees of state-sum terms and of the whole invariant.
# ---------------------------------------------------------------------------


def summand_sign(knot: PretzelKnot, a: int, b: int, c: int) -> int:
    """(-1)^((ar+bs+ct)/2): the term's leading sign up to a global constant."""
    total = a * knot.r + b * knot.s + c * knot.t
    if total % 2:
        raise ValueError("ar + bs + ct must be even")
    return -1 if (total // 2) % 2 else 1

def summand_degree(knot: PretzelKnot, a: int, b: int, c: int, n: int) -> Fraction:
    """Exact degree of the state-sum term at (a, b, c) for color n."""
    if not is_admissible(a, b, c) or max(a, b, c) > 2 * n:
        raise ValueError(f"triple {(a, b, c)} is outside the domain for n = {n}")
    return (
        Fraction(unknot_degree(a) + unknot_degree(b) + unknot_degree(c))
        + knot.r * framing_degree(a)
        + knot.s * framing_degree(b)
        + knot.t * framing_degree(c)
        + 2 * delta_degree(a, b, c, n, n, n)
        + theta_degree(a, b, c)
        - theta_degree(a, n, n)
        - theta_degree(b, n, n)
        - theta_degree(c, n, n)
    )


def face_quadratic(knot: PretzelKnot, b: int, c: int, n: int) -> Fraction:
    """The term degree on the maximizing face a = b + c, expanded as a quadratic:

    -(r+s) b^2/2 - (1+r) bc - (r+t) c^2/2 + (2-r-s) b + (2-r-t) c - 2n
    """
    r, s, t = knot.r, knot.s, knot.t
    return Fraction(
        -(r + s) * b * b - 2 * (1 + r) * b * c - (r + t) * c * c, 2
    ) + Fraction((2 - r - s) * b + (2 - r - t) * c - 2 * n)


def brute_force_degree_bound(
    knot: PretzelKnot, n: int
) -> tuple[Fraction, list[tuple[int, int, int]]]:
    """Exhaustive max of the term degree over D_n, with all maximizers.

    Multiple maximizers flag potential cancellation between leading terms;
    when they all share the leading sign the bound is attained.
    """
    best: Fraction | None = None
    argmax: list[tuple[int, int, int]] = []
    for a, b, c in state_domain(n):
        value = summand_degree(knot, a, b, c, n)
        if best is None or value > best:
            best = value
            argmax = [(a, b, c)]
        elif value == best:
            argmax.append((a, b, c))
    assert best is not None
    return best, argmax


def nearest_odd_least(x: Fraction) -> int:
    """The odd integer nearest to x; on a tie, the smaller one."""
    x = Fraction(x)
    below = _odd_floor(x)
    above = below + 2
    if x - below < above - x:
        return below
    if above - x < x - below:
        return above
    return below


def _odd_floor(x: Fraction) -> int:
    k = x.numerator // x.denominator  # floor
    return k if k % 2 else k - 1


def quasi_period(knot: PretzelKnot) -> int:
    """Period of the closed-form degree law: 1 in case 1, (s+t-2)/2 in case 2."""
    case = knot.case()
    if case == "case1":
        return 1
    if case == "case2":
        return (knot.s + knot.t - 2) // 2
    raise CaseNotCoveredError(f"{knot} satisfies neither degree-law hypothesis")


def closed_form_constant(knot: PretzelKnot, j: int) -> Fraction:
    """Constant term of the case-2 degree quadratic on the residue class j."""
    s, t = knot.s, knot.t
    p2 = s + t - 2
    v_j = nearest_odd_least(Fraction(2 * (t - 1) * j, p2))
    return (
        Fraction(-6 + s + t, 2)
        - Fraction(2 * j * j * (t - 1) ** 2, p2)
        + 2 * j * (t - 1) * v_j
        + Fraction((2 - s - t) * v_j * v_j, 2)
    )


def closed_form_max_degree(knot: PretzelKnot, n: int) -> Fraction:
    """The degree d+ J(n) from the closed form, for case-1/case-2 knots.

    Case 1 (s, t > 2|r|): -2n + 2.
    Case 2 (s < |r| or t < |r|):
        2((1-st)/(s+t-2) - r) n^2 + 2(2+r) n + c_j,  j = n mod (s+t-2)/2.
    """
    case = knot.case()
    if case is None:
        raise CaseNotCoveredError(f"{knot} satisfies neither degree-law hypothesis")
    if case == "case1":
        return Fraction(-2 * n + 2)
    r, s, t = knot.r, knot.s, knot.t
    p = (s + t - 2) // 2
    j = n % p
    slope = 2 * (Fraction(1 - s * t, s + t - 2) - r)
    return slope * n * n + 2 * (2 + r) * n + closed_form_constant(knot, j)


def degree_sequence(knot: PretzelKnot, n_max: int) -> list[Fraction]:
    """[d+ J(1), ..., d+ J(n_max)] computed from the state sum."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    out = []
    for N in range(1, n_max + 1):
        deg = colored_jones(knot, N).max_degree
        assert deg is not None
        out.append(deg)
    return out
