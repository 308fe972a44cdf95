"""Exact real number substrate: rationals, quadratic surds, interval reals.

Three carriers make up a RealValue:

* ``fractions.Fraction`` for elements of Q (stored reduced, positive
  denominator -- the stdlib type already enforces both invariants);
* ``QuadraticSurd`` for (a + b*sqrt(d))/c in canonical form;
* ``PrecisionReal`` for everything else, as a rational interval
  [low, high] with an explicit refinement budget.

Arithmetic between two exact values over the same radicand stays exact.
Mixing distinct radicands, or touching a PrecisionReal, degrades the
result to a PrecisionReal.  Equality of a PrecisionReal with anything is
never affirmed, only refuted or reported as PrecisionExhausted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Callable, Optional, Union

from .errors import (
    NegativeRadicand,
    ParseError,
    PrecisionExhausted,
    ZeroDenominator,
)

Rational = Fraction

# Precision given to values that fall out of the exact world (distinct
# radicands mixed, surd combined with an interval).  Generous on purpose:
# exact operands can be re-evaluated at any precision, so the only cost
# is integer size.
DEGRADE_BITS = 192
DEGRADE_BUDGET = 256

_EXACT_SEPARATION_LIMIT = 1 << 14  # bits; distinct exact reals split long before


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return (s, f) with d = f*f*s and s squarefree."""
    s, f = d, 1
    i = 2
    while i * i <= s:
        while s % (i * i) == 0:
            s //= i * i
            f *= i
        i += 1
    return s, f


def _sign_a_plus_b_sqrt_d(a: int, b: int, d: int) -> int:
    """Exact sign of a + b*sqrt(d), d > 1 squarefree."""
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    t = a * a - b * b * d
    if a > 0:  # b < 0
        return _sign(t)
    return -_sign(t)  # a < 0, b > 0


def _int_nth_root(n: int, k: int) -> int:
    """Largest integer r with r**k <= n (n >= 0, k >= 1)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return isqrt(n)
    x = 1 << (n.bit_length() // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


@dataclass(frozen=True)
class QuadraticSurd:
    """(a + b*sqrt(d))/c in canonical form.

    Invariants: c > 0, d > 1 squarefree, b != 0, gcd(a, b, c) = 1.
    Construct through surd_normalize, which also collapses rational
    cases to Fraction.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.c <= 0:
            raise ZeroDenominator("surd denominator must be positive")
        if self.b == 0:
            raise ValueError("b = 0 must be stored as Rational")
        if gcd(gcd(abs(self.a), abs(self.b)), self.c) != 1:
            raise ValueError("surd not in lowest terms")
        s, f = _squarefree_split(self.d)
        if f != 1 or self.d <= 1:
            raise ValueError("radicand must be squarefree and > 1")

    # -- exact queries ------------------------------------------------

    def sign(self) -> int:
        return _sign_a_plus_b_sqrt_d(self.a, self.b, self.d)

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.a, -self.b, self.c, self.d)

    def floor(self) -> int:
        s = isqrt(self.b * self.b * self.d)  # s <= |b|sqrt(d) < s+1
        if self.b > 0:
            m = (self.a + s) // self.c
        else:
            m = (self.a - s - 1) // self.c
        while _sign_a_plus_b_sqrt_d(self.a - m * self.c, self.b, self.d) < 0:
            m -= 1
        while _sign_a_plus_b_sqrt_d(self.a - (m + 1) * self.c, self.b, self.d) >= 0:
            m += 1
        return m

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational bounds with width <= |b| / (c * 2**bits)."""
        s = isqrt(self.d << (2 * bits))  # s/2^bits <= sqrt(d) < (s+1)/2^bits
        lo_r = Fraction(s, 1 << bits)
        hi_r = Fraction(s + 1, 1 << bits)
        if self.b > 0:
            lo = (self.a + self.b * lo_r) / self.c
            hi = (self.a + self.b * hi_r) / self.c
        else:
            lo = (self.a + self.b * hi_r) / self.c
            hi = (self.a + self.b * lo_r) / self.c
        return lo, hi

    def __float__(self) -> float:
        lo, hi = self.interval(64)
        return float((lo + hi) / 2)

    # -- arithmetic ---------------------------------------------------

    def _as_precision(self) -> "PrecisionReal":
        return PrecisionReal.from_refiner(self.interval, DEGRADE_BUDGET,
                                          start_level=DEGRADE_BITS)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            p, q = _as_ratio(other)
            return surd_normalize(self.a * q + p * self.c, self.b * q,
                                  self.c * q, self.d)
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                return self._as_precision() + other._as_precision()
            return surd_normalize(self.a * other.c + other.a * self.c,
                                  self.b * other.c + other.b * self.c,
                                  self.c * other.c, self.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            p, q = _as_ratio(other)
            if p == 0:
                return Fraction(0)
            return surd_normalize(self.a * p, self.b * p, self.c * q, self.d)
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                return self._as_precision() * other._as_precision()
            return surd_normalize(self.a * other.a + self.b * other.b * self.d,
                                  self.a * other.b + self.b * other.a,
                                  self.c * other.c, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticSurd":
        # c (a - b sqrt(d)) / (a^2 - b^2 d); the norm is nonzero since
        # the value is irrational.
        norm = self.a * self.a - self.b * self.b * self.d
        return surd_normalize(self.c * self.a, -self.c * self.b, norm, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            p, q = _as_ratio(other)
            return surd_normalize(self.a * q, self.b * q, self.c * p, self.d)
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                return self._as_precision() / other._as_precision()
            return self * other.reciprocal()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    # -- order (exact operands only) ----------------------------------

    def _cmp(self, other) -> int:
        diff = self - other
        if isinstance(diff, Fraction):
            return _sign(diff)
        if isinstance(diff, QuadraticSurd):
            return diff.sign()
        return real_compare(self, other)  # distinct radicands

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


def _as_ratio(x) -> tuple[int, int]:
    if isinstance(x, int):
        return x, 1
    return x.numerator, x.denominator


def surd_normalize(a: int, b: int, c: int, d: int):
    """Canonical RealValue equal to (a + b*sqrt(d))/c.

    Collapses to a Fraction when b = 0 or d is a perfect square.
    """
    if c == 0:
        raise ZeroDenominator("c = 0 in (a + b*sqrt(d))/c")
    if d < 0:
        raise NegativeRadicand("negative radicand %d" % d)
    r = isqrt(d)
    if b == 0 or r * r == d:
        return Fraction(a + b * r, c)
    s, f = _squarefree_split(d)
    b = b * f
    if c < 0:
        a, b, c = -a, -b, -c
    g = gcd(gcd(abs(a), abs(b)), c)
    return QuadraticSurd(a // g, b // g, c // g, s)


class PrecisionReal:
    """A real known only as a rational interval [low, high].

    A refiner, when present, maps a refinement level j to an interval of
    width proportional to 2**-j; each unit of budget buys one level.
    Arithmetic saturates the operands (spends their whole budget) and
    yields an unrefinable interval: derived values carry exactly the
    precision their sources could supply.
    """

    __slots__ = ("low", "high", "budget", "_refiner", "_level")

    def __init__(self, low: Fraction, high: Fraction, budget: int = 0,
                 refiner: Optional[Callable[[int], tuple[Fraction, Fraction]]] = None,
                 level: int = 0):
        low = Fraction(low)
        high = Fraction(high)
        if low > high:
            raise ValueError("interval low > high")
        if budget < 0:
            raise ValueError("budget must be non-negative")
        self.low = low
        self.high = high
        self.budget = budget
        self._refiner = refiner
        self._level = level

    # -- constructors --------------------------------------------------

    @classmethod
    def from_refiner(cls, refiner, budget: int, start_level: int = 0):
        lo, hi = refiner(start_level)
        return cls(lo, hi, budget, refiner, start_level)

    @classmethod
    def from_decimal(cls, text: str, budget: int) -> "PrecisionReal":
        """Seed from a decimal literal accurate to half an ulp of its
        last digit; refinement narrows toward the seed value."""
        m = re.fullmatch(r"-?\d+(?:\.(\d+))?", text.strip())
        if not m:
            raise ParseError("bad decimal literal %r" % text)
        seed = Fraction(text.strip())
        frac_digits = len(m.group(1) or "")
        half_width = Fraction(1, 2 * 10 ** frac_digits)

        def refiner(level, _seed=seed, _h=half_width):
            w = _h / (1 << level)
            return _seed - w, _seed + w

        return cls.from_refiner(refiner, budget)

    @classmethod
    def nth_root(cls, value, k: int, budget: int) -> "PrecisionReal":
        """value**(1/k) for a positive rational value, refinable to
        width 1/(q * 2**budget)."""
        p, q = _as_ratio(Fraction(value))
        if p < 0:
            raise NegativeRadicand("nth_root of a negative value")

        def refiner(level, _p=p, _q=q, _k=k):
            # x = (p/q)^(1/k) = (p q^(k-1))^(1/k) / q
            n = _p * _q ** (_k - 1)
            s = _int_nth_root(n << (_k * level), _k)
            return Fraction(s, _q << level), Fraction(s + 1, _q << level)

        return cls.from_refiner(refiner, budget)

    # -- refinement -----------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    @property
    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2

    def refined(self) -> "PrecisionReal":
        """One refinement step; the interval never widens."""
        if self.budget == 0 or self._refiner is None:
            raise PrecisionExhausted("no refinement budget left")
        lo, hi = self._refiner(self._level + 1)
        lo = max(lo, self.low)
        hi = min(hi, self.high)
        return PrecisionReal(lo, hi, self.budget - 1, self._refiner,
                             self._level + 1)

    def saturated(self) -> "PrecisionReal":
        """Spend the whole budget in one refiner call."""
        if self.budget == 0 or self._refiner is None:
            return self
        lo, hi = self._refiner(self._level + self.budget)
        lo = max(lo, self.low)
        hi = min(hi, self.high)
        return PrecisionReal(lo, hi, 0, None, self._level + self.budget)

    def refinable(self) -> bool:
        return self.budget > 0 and self._refiner is not None

    # -- arithmetic ------------------------------------------------------

    def _other_bounds(self, other) -> Optional[tuple[Fraction, Fraction]]:
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return f, f
        if isinstance(other, QuadraticSurd):
            sat = self.saturated()
            bits = max(DEGRADE_BITS, _width_bits(sat.width) + 16)
            return other.interval(bits)
        if isinstance(other, PrecisionReal):
            sat = other.saturated()
            return sat.low, sat.high
        return None

    def _binop(self, other, combine):
        bounds = self._other_bounds(other)
        if bounds is None:
            return NotImplemented
        sat = self.saturated()
        lo, hi = combine((sat.low, sat.high), bounds)
        lo, hi = _round_outward(lo, hi)
        return PrecisionReal(lo, hi)

    def __add__(self, other):
        return self._binop(other, lambda x, y: (x[0] + y[0], x[1] + y[1]))

    __radd__ = __add__

    def __neg__(self):
        return PrecisionReal(-self.high, -self.low, self.budget,
                             None if self._refiner is None else
                             (lambda lvl, _r=self._refiner:
                              tuple(-v for v in reversed(_r(lvl)))),
                             self._level)

    def __sub__(self, other):
        return self._binop(other, lambda x, y: (x[0] - y[1], x[1] - y[0]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        def combine(x, y):
            prods = [a * b for a in x for b in y]
            return min(prods), max(prods)
        return self._binop(other, combine)

    __rmul__ = __mul__

    def reciprocal(self) -> "PrecisionReal":
        sat = self.saturated()
        if sat.low <= 0 <= sat.high:
            raise PrecisionExhausted("interval straddles zero in reciprocal")
        lo, hi = _round_outward(1 / sat.high, 1 / sat.low)
        return PrecisionReal(lo, hi)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            raise ZeroDivisionError("division by zero")
        if isinstance(other, (int, Fraction, QuadraticSurd, PrecisionReal)):
            return self._binop(other, _interval_div)
        return NotImplemented

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __float__(self) -> float:
        return float(self.midpoint)

    def __repr__(self):
        return "PrecisionReal([%s, %s], budget=%d)" % (self.low, self.high,
                                                       self.budget)


def _interval_div(x, y):
    yl, yh = y
    if yl <= 0 <= yh:
        raise PrecisionExhausted("divisor interval straddles zero")
    inv = (1 / yh, 1 / yl)
    prods = [a * b for a in x for b in inv]
    return min(prods), max(prods)


def _round_outward(lo: Fraction, hi: Fraction,
                   guard: int = 64) -> tuple[Fraction, Fraction]:
    """Push endpoints onto a dyadic grid fine enough to keep the width;
    bounds integer growth along long interval computations."""
    w = hi - lo
    if w == 0:
        return lo, hi
    p = _width_bits(w) + guard
    scale = 1 << p
    lo2 = Fraction((lo.numerator * scale) // lo.denominator, scale)
    hi2 = Fraction(-((-hi.numerator * scale) // hi.denominator), scale)
    return lo2, hi2


def _width_bits(w: Fraction) -> int:
    """ceil(-log2 w) for 0 < w, i.e. how many bits of precision w carries."""
    if w == 0:
        return _EXACT_SEPARATION_LIMIT
    return max(0, w.denominator.bit_length() - w.numerator.bit_length() + 1)


RealValue = Union[Fraction, QuadraticSurd, PrecisionReal]

LESS, EQUAL, GREATER = -1, 0, 1


def is_exact(x: RealValue) -> bool:
    return isinstance(x, (int, Fraction, QuadraticSurd))


def real_interval(x: RealValue, bits: int) -> tuple[Fraction, Fraction]:
    if isinstance(x, (int, Fraction)):
        f = Fraction(x)
        return f, f
    if isinstance(x, QuadraticSurd):
        return x.interval(bits)
    sat = x.saturated()
    return sat.low, sat.high


def real_compare(x: RealValue, y: RealValue) -> int:
    """-1, 0 or 1; exact for exact operands, else refines within budget."""
    if is_exact(x) and is_exact(y):
        distinct_surds = (isinstance(x, QuadraticSurd)
                          and isinstance(y, QuadraticSurd) and x.d != y.d)
        if not distinct_surds:
            diff = x - y
            if isinstance(diff, Fraction):
                return _sign(diff)
            return diff.sign()
        # Values in distinct quadratic fields are never equal; widen the
        # common interval until the bounds separate.
        bits = 64
        while bits <= _EXACT_SEPARATION_LIMIT:
            xl, xh = x.interval(bits)
            yl, yh = y.interval(bits)
            if xh < yl:
                return LESS
            if yh < xl:
                return GREATER
            bits *= 2
        raise PrecisionExhausted("exact values failed to separate")

    # At least one interval operand: refine until disjoint or exhausted.
    while True:
        xl, xh = real_interval(x, DEGRADE_BITS)
        yl, yh = real_interval(y, DEGRADE_BITS)
        if xh < yl:
            return LESS
        if yh < xl:
            return GREATER
        refined = False
        for v in (x, y):
            if isinstance(v, PrecisionReal) and v.refinable():
                refined = True
        if not refined:
            raise PrecisionExhausted("intervals overlap at zero budget")
        if isinstance(x, PrecisionReal):
            x = x.saturated()
        if isinstance(y, PrecisionReal):
            y = y.saturated()


def real_sign(x: RealValue) -> int:
    return real_compare(x, Fraction(0))


def real_floor(x: RealValue) -> int:
    """Greatest integer <= x; refines PrecisionReal operands as needed."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator // x.denominator
    if isinstance(x, QuadraticSurd):
        return x.floor()
    cur = x
    while True:
        fl = cur.low.numerator // cur.low.denominator
        fh = cur.high.numerator // cur.high.denominator
        if fl == fh:
            return fl
        if not cur.refinable():
            raise PrecisionExhausted("interval straddles an integer")
        cur = cur.saturated()


def real_is_zero(x: RealValue) -> bool:
    """Exact zero test; PrecisionExhausted when undecidable."""
    if isinstance(x, (int, Fraction)):
        return x == 0
    if isinstance(x, QuadraticSurd):
        return False
    return real_sign(x) == 0  # raises on overlap; a refutation returns False


# -- text syntax -------------------------------------------------------

_SURD_RE = re.compile(
    r"surd:\(\s*(-?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(-?\d+)"
)
_DEC_RE = re.compile(r"dec:(-?\d+(?:\.\d+)?)~(\d+)")
_RAT_RE = re.compile(r"(-?\d+)(?:\s*/\s*(-?\d+))?")


def parse_real(text: str) -> RealValue:
    """Parse `p/q`, `surd:(a+b*sqrt(d))/c` or `dec:<decimal>~<bits>`."""
    s = text.strip()
    m = _SURD_RE.fullmatch(s)
    if m:
        a, op, b, d, c = m.groups()
        b = int(b) if op == "+" else -int(b)
        try:
            return surd_normalize(int(a), b, int(c), int(d))
        except (ZeroDenominator, NegativeRadicand) as exc:
            raise ParseError(str(exc)) from exc
    m = _DEC_RE.fullmatch(s)
    if m:
        return PrecisionReal.from_decimal(m.group(1), int(m.group(2)))
    m = _RAT_RE.fullmatch(s)
    if m:
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ParseError("zero denominator in %r" % text)
        return Fraction(int(num), int(den) if den is not None else 1)
    raise ParseError("cannot parse real value %r" % text)


def format_real(x: RealValue) -> str:
    """Round-trip text form for exact values; interval display otherwise."""
    if isinstance(x, int):
        return "%d/1" % x
    if isinstance(x, Fraction):
        return "%d/%d" % (x.numerator, x.denominator)
    if isinstance(x, QuadraticSurd):
        op = "+" if x.b >= 0 else "-"
        return "surd:(%d%s%d*sqrt(%d))/%d" % (x.a, op, abs(x.b), x.d, x.c)
    return "[%s, %s]~%d" % (x.low, x.high, x.budget)
