"""Exact sparse Laurent polynomials in half-integer powers of v over Z[i].

A polynomial is stored as two dicts mapping a *doubled exponent* (the integer
2e for the monomial v^e, so that v^(1/2) is representable) to the real and
imaginary parts of its Gaussian-integer coefficient:

    v^2 - 3*v^(-1/2)   ->   _re = {4: 1, -1: -3},  _im = {}

Zero coefficients are never stored, so equality of dicts is equality of
polynomials.  The imaginary dict is empty for the (overwhelmingly common)
real case and all arithmetic takes a plain-int fast path then.

Values are immutable after construction: every operation returns a fresh
polynomial, which makes them safe to cache and to combine from worker
threads by addition.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator


class NonExactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class GaussInt:
    """Gaussian integer a + b*i with arbitrary-precision components."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussInt is immutable")

    def __add__(self, other: "GaussInt | int") -> "GaussInt":
        other = _as_gauss(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussInt | int") -> "GaussInt":
        other = _as_gauss(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: "GaussInt | int") -> "GaussInt":
        return _as_gauss(other) - self

    def __mul__(self, other: "GaussInt | int") -> "GaussInt":
        other = _as_gauss(other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"

    def __str__(self) -> str:
        return _format_gauss(self.re, self.im)


def _as_gauss(x) -> GaussInt:
    if isinstance(x, GaussInt):
        return x
    if isinstance(x, int):
        return GaussInt(x, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussInt")


IM_UNIT = GaussInt(0, 1)

# i^k for k mod 4, as (re, im) pairs.
_I_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def gauss_unit_power(k: int) -> GaussInt:
    """i^k (k may be negative)."""
    return GaussInt(*_I_POWERS[k % 4])


def _gauss_exact_div(ar: int, ai: int, br: int, bi: int) -> tuple[int, int] | None:
    """(ar + ai*i) / (br + bi*i) as an exact Gaussian integer, else None."""
    if bi == 0:
        # Plain integer divisor: both parts must divide.
        if ar % br or ai % br:
            return None
        return (ar // br, ai // br)
    n = br * br + bi * bi
    qr = ar * br + ai * bi
    qi = ai * br - ar * bi
    if qr % n or qi % n:
        return None
    return (qr // n, qi // n)


def _conv_into(acc: dict, p: dict, q: dict, sign: int) -> None:
    """acc += sign * (p convolved with q), all plain-int dicts."""
    if not p or not q:
        return
    if len(p) > len(q):
        p, q = q, p
    get = acc.get
    for e1, c1 in p.items():
        c1s = c1 if sign == 1 else -c1
        for e2, c2 in q.items():
            k = e1 + e2
            val = get(k, 0) + c1s * c2
            if val:
                acc[k] = val
            elif k in acc:
                del acc[k]


def _add_into(acc: dict, p: dict, sign: int = 1) -> None:
    get = acc.get
    for e, c in p.items():
        val = get(e, 0) + (c if sign == 1 else -c)
        if val:
            acc[e] = val
        elif e in acc:
            del acc[e]


class HalfLaurent:
    """Immutable Laurent polynomial in v^(1/2) with Gaussian-integer coefficients."""

    __slots__ = ("_re", "_im")

    def __init__(self, re_terms: dict | None = None, im_terms: dict | None = None):
        # Copies and canonicalizes; use _raw for trusted pre-canonical dicts.
        self._re = {e: c for e, c in (re_terms or {}).items() if c}
        self._im = {e: c for e, c in (im_terms or {}).items() if c}

    @classmethod
    def _raw(cls, re_terms: dict, im_terms: dict) -> "HalfLaurent":
        """Wrap canonical dicts without copying. Caller must not mutate them."""
        p = object.__new__(cls)
        p._re = re_terms
        p._im = im_terms
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "HalfLaurent":
        return cls._raw({}, {})

    @classmethod
    def one(cls) -> "HalfLaurent":
        return cls._raw({0: 1}, {})

    @classmethod
    def monomial(cls, coeff: GaussInt | int, exponent: Fraction | int) -> "HalfLaurent":
        """coeff * v^exponent.  The exponent must be integer or half-integer."""
        d = _doubled(exponent)
        c = _as_gauss(coeff)
        return cls._raw({d: c.re} if c.re else {}, {d: c.im} if c.im else {})

    @classmethod
    def from_terms(cls, terms: dict[Fraction | int, GaussInt | int]) -> "HalfLaurent":
        re_d: dict[int, int] = {}
        im_d: dict[int, int] = {}
        for exp, coeff in terms.items():
            d = _doubled(exp)
            c = _as_gauss(coeff)
            if c.re:
                re_d[d] = re_d.get(d, 0) + c.re
            if c.im:
                im_d[d] = im_d.get(d, 0) + c.im
        return cls({e: c for e, c in re_d.items()}, {e: c for e, c in im_d.items()})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._re and not self._im

    def __bool__(self) -> bool:
        return not self.is_zero

    def _doubled_support(self):
        if not self._im:
            return self._re.keys()
        if not self._re:
            return self._im.keys()
        return self._re.keys() | self._im.keys()

    @property
    def max_degree(self) -> Fraction | None:
        """Largest exponent with nonzero coefficient; None for the zero polynomial."""
        if self.is_zero:
            return None
        return Fraction(max(self._doubled_support()), 2)

    @property
    def min_degree(self) -> Fraction | None:
        if self.is_zero:
            return None
        return Fraction(min(self._doubled_support()), 2)

    def coefficient(self, exponent: Fraction | int) -> GaussInt:
        d = _doubled(exponent)
        return GaussInt(self._re.get(d, 0), self._im.get(d, 0))

    def leading_coefficient(self) -> GaussInt:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        d = max(self._doubled_support())
        return GaussInt(self._re.get(d, 0), self._im.get(d, 0))

    def terms(self) -> Iterator[tuple[Fraction, GaussInt]]:
        """(exponent, coefficient) pairs in descending exponent order."""
        for d in sorted(self._doubled_support(), reverse=True):
            yield Fraction(d, 2), GaussInt(self._re.get(d, 0), self._im.get(d, 0))

    def term_count(self) -> int:
        return len(self._doubled_support())

    @property
    def is_integral(self) -> bool:
        """True iff all coefficients are rational integers and all exponents integers."""
        if self._im:
            return False
        return all(d % 2 == 0 for d in self._re)

    def assert_integral(self) -> "HalfLaurent":
        if not self.is_integral:
            raise IntegralityError(f"value is not integral: {self}")
        return self

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "HalfLaurent":
        other = _as_poly(other)
        re_d = dict(self._re)
        im_d = dict(self._im)
        _add_into(re_d, other._re)
        _add_into(im_d, other._im)
        return HalfLaurent._raw(re_d, im_d)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfLaurent":
        other = _as_poly(other)
        re_d = dict(self._re)
        im_d = dict(self._im)
        _add_into(re_d, other._re, -1)
        _add_into(im_d, other._im, -1)
        return HalfLaurent._raw(re_d, im_d)

    def __rsub__(self, other) -> "HalfLaurent":
        return _as_poly(other) - self

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent._raw(
            {e: -c for e, c in self._re.items()},
            {e: -c for e, c in self._im.items()},
        )

    def __mul__(self, other) -> "HalfLaurent":
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return HalfLaurent.zero()
        re_d: dict[int, int] = {}
        if not self._im and not other._im:
            _conv_into(re_d, self._re, other._re, 1)
            return HalfLaurent._raw(re_d, {})
        # (R1 + i I1)(R2 + i I2) = (R1 R2 - I1 I2) + i (R1 I2 + I1 R2)
        im_d: dict[int, int] = {}
        _conv_into(re_d, self._re, other._re, 1)
        _conv_into(re_d, self._im, other._im, -1)
        _conv_into(im_d, self._re, other._im, 1)
        _conv_into(im_d, self._im, other._re, 1)
        return HalfLaurent._raw(re_d, im_d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HalfLaurent":
        if k < 0:
            return self._inverse_monomial(-k)
        result = HalfLaurent.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k > 1
            k >>= 1
            if base_needed:
                base = base * base
        return result

    def _inverse_monomial(self, k: int) -> "HalfLaurent":
        if self.term_count() != 1:
            raise NonExactDivisionError("negative powers exist only for unit monomials")
        (exp, coeff), = self.terms()
        if not coeff.is_unit():
            raise NonExactDivisionError("coefficient is not a Gaussian unit")
        inv = coeff.conjugate()  # unit inverse
        return HalfLaurent.monomial(inv, -exp) ** k

    def exact_div(self, divisor) -> "HalfLaurent":
        """Quotient self / divisor; raises NonExactDivisionError unless exact."""
        divisor = _as_poly(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return HalfLaurent.zero()

        rem_re = dict(self._re)
        rem_im = dict(self._im)
        div_re = divisor._re
        div_im = divisor._im
        d_top = max(divisor._doubled_support())
        dr, di = div_re.get(d_top, 0), div_im.get(d_top, 0)
        # Exponents of an exact quotient lie in [min(p)-min(q), max(p)-max(q)].
        q_floor = min(self._doubled_support()) - min(divisor._doubled_support())

        quo_re: dict[int, int] = {}
        quo_im: dict[int, int] = {}
        div_re_items = list(div_re.items())
        div_im_items = list(div_im.items())
        while rem_re or rem_im:
            r_top = max(rem_re.keys() | rem_im.keys()) if rem_im else max(rem_re.keys())
            q_exp = r_top - d_top
            if q_exp < q_floor:
                raise NonExactDivisionError("division is not exact")
            coeff = _gauss_exact_div(rem_re.get(r_top, 0), rem_im.get(r_top, 0), dr, di)
            if coeff is None:
                raise NonExactDivisionError("leading coefficient does not divide")
            qr, qi = coeff
            if qr:
                quo_re[q_exp] = qr
            if qi:
                quo_im[q_exp] = qi
            # remainder -= (qr + i qi) * v^q_exp * divisor
            for e, c in div_re_items:
                k = e + q_exp
                if qr:
                    val = rem_re.get(k, 0) - qr * c
                    if val:
                        rem_re[k] = val
                    elif k in rem_re:
                        del rem_re[k]
                if qi:
                    val = rem_im.get(k, 0) - qi * c
                    if val:
                        rem_im[k] = val
                    elif k in rem_im:
                        del rem_im[k]
            for e, c in div_im_items:
                k = e + q_exp
                if qi:
                    val = rem_re.get(k, 0) + qi * c
                    if val:
                        rem_re[k] = val
                    elif k in rem_re:
                        del rem_re[k]
                if qr:
                    val = rem_im.get(k, 0) - qr * c
                    if val:
                        rem_im[k] = val
                    elif k in rem_im:
                        del rem_im[k]
        return HalfLaurent._raw(quo_re, quo_im)

    # -- comparison and text form -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = HalfLaurent._raw({0: other} if other else {}, {})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self) -> int:
        return hash((frozenset(self._re.items()), frozenset(self._im.items())))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"HalfLaurent.parse({format_poly(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "HalfLaurent":
        return parse_poly(text)


def _doubled(exponent: Fraction | int) -> int:
    e = Fraction(exponent)
    d = e * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not an integer or half-integer")
    return int(d)


def _as_poly(x) -> HalfLaurent:
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, (int, GaussInt)):
        c = _as_gauss(x)
        return HalfLaurent._raw({0: c.re} if c.re else {}, {0: c.im} if c.im else {})
    raise TypeError(f"cannot coerce {type(x).__name__} to HalfLaurent")


# ---------------------------------------------------------------------------
# Text form: signed terms "c*v^e", e printed as "d/2" when half-integral,
# descending by exponent.  parse_poly inverts format_poly exactly.
# ---------------------------------------------------------------------------


def _format_gauss(re_part: int, im_part: int) -> str:
    if im_part == 0:
        return str(re_part)
    if re_part == 0:
        if im_part == 1:
            return "i"
        if im_part == -1:
            return "-i"
        return f"{im_part}i"
    sign = "+" if im_part > 0 else "-"
    mag = abs(im_part)
    i_txt = "i" if mag == 1 else f"{mag}i"
    return f"({re_part}{sign}{i_txt})"


def _format_exponent(d: int) -> str:
    if d % 2 == 0:
        return str(d // 2)
    return f"{d}/2"


def format_poly(p: HalfLaurent) -> str:
    if p.is_zero:
        return "0"
    pieces: list[str] = []
    for exp, coeff in p.terms():
        d = int(exp * 2)
        txt = _format_gauss(coeff.re, coeff.im)
        negative = txt.startswith("-") and not txt.startswith("(")
        if negative:
            txt = txt[1:]
        if d != 0:
            if txt == "1":
                txt = f"v^{_format_exponent(d)}"
            elif txt == "i":
                txt = f"i*v^{_format_exponent(d)}"
            else:
                txt = f"{txt}*v^{_format_exponent(d)}"
        if not pieces:
            pieces.append(f"-{txt}" if negative else txt)
        else:
            pieces.append(f"- {txt}" if negative else f"+ {txt}")
    return " ".join(pieces)


_TERM_RE = re.compile(
    r"""^
    (?:
        \( (?P<cre>-?\d+) (?P<isign>[+-]) (?P<cim>\d*) i \)   # (a+bi)
      | (?P<im>-?\d*) i                                       # bi, i, -i
      | (?P<re>-?\d+)                                         # a
    )?
    (?P<star>\*)?
    (?: v \^ (?P<num>-?\d+) (?: / (?P<den>2) )? )?
    $""",
    re.VERBOSE,
)


def parse_poly(text: str) -> HalfLaurent:
    """Parse the output of format_poly (and light variations of it)."""
    text = text.strip()
    if text == "0":
        return HalfLaurent.zero()
    # Split on top-level " + " / " - " separators; leading sign handled below.
    chunks = re.split(r"\s+([+-])\s+", text)
    terms: list[tuple[str, str]] = []
    first = chunks[0]
    if first.startswith("-") and not first.startswith("(-"):
        terms.append(("-", first[1:]))
    else:
        terms.append(("+", first))
    for i in range(1, len(chunks), 2):
        terms.append((chunks[i], chunks[i + 1]))

    re_d: dict[int, int] = {}
    im_d: dict[int, int] = {}
    for sign_txt, body in terms:
        m = _TERM_RE.match(body.replace(" ", ""))
        if not m or (m.group("cre") is None and m.group("im") is None
                     and m.group("re") is None and m.group("num") is None):
            raise ValueError(f"cannot parse polynomial term {body!r}")
        sign = -1 if sign_txt == "-" else 1
        if m.group("cre") is not None:
            cre = int(m.group("cre"))
            mag = int(m.group("cim")) if m.group("cim") else 1
            cim = mag if m.group("isign") == "+" else -mag
        elif m.group("im") is not None:
            raw = m.group("im")
            cre = 0
            cim = int(raw) if raw not in ("", "-") else (-1 if raw == "-" else 1)
        elif m.group("re") is not None:
            cre, cim = int(m.group("re")), 0
        else:
            cre, cim = 1, 0
        if m.group("num") is not None:
            num = int(m.group("num"))
            d = num if m.group("den") else 2 * num
        else:
            d = 0
        if cre:
            re_d[d] = re_d.get(d, 0) + sign * cre
        if cim:
            im_d[d] = im_d.get(d, 0) + sign * cim
    return HalfLaurent(re_d, im_d)


class IntegralityError(ArithmeticError):
    """A value expected to be an integer Laurent polynomial is not."""


ZERO = HalfLaurent.zero()
ONE = HalfLaurent.one()
