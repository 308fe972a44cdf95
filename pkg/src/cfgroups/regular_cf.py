"""Regular continued fractions and GL(2,Z) equivalence of reals.

A CFExpansion stores the partial quotients a0, a1, ... of
x = a0 + 1/(a1 + 1/(a2 + ...)).  Rational inputs give a finite canonical
expansion (never ending in 1 unless it is the single digit [1]);
quadratic surds give a minimal preperiod plus minimal period, detected by
exact repetition of the Gauss-map state; interval reals give digits until
the interval can no longer pin the next one down.

Convergents are tracked both as p/q and as partial products of the
elementary matrices (0 1; 1 a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    NotEnoughDigits,
    NotFactorable,
    PoleAtInput,
    PrecisionExhausted,
)
from .matrices import UniModMatrix
from .realnum import (
    PrecisionReal,
    QuadraticSurd,
    RealValue,
    is_exact,
    real_floor,
)

YES, NO, UNKNOWN = "yes", "no", "unknown"

_SURD_STATE_CAP = 1_000_000  # safety net; Lagrange guarantees repetition


def elementary(a: int) -> UniModMatrix:
    """The factor (0 1; 1 a) of the convergent product."""
    return UniModMatrix(((0, 1), (1, a)))


@dataclass(frozen=True)
class CFExpansion:
    preperiod: tuple[int, ...]
    period: Optional[tuple[int, ...]]  # None: finite or truncated
    truncated: bool = False

    def available(self, count: int) -> bool:
        return self.period is not None or count <= len(self.preperiod)

    def digits(self, count: int) -> list[int]:
        """First `count` partial quotients."""
        if count <= len(self.preperiod):
            return list(self.preperiod[:count])
        if self.period is None:
            raise NotEnoughDigits(
                "expansion provides %d digits, %d requested"
                % (len(self.preperiod), count))
        out = list(self.preperiod)
        p = self.period
        while len(out) < count:
            out.extend(p)
        return out[:count]

    def is_finite(self) -> bool:
        return self.period is None and not self.truncated

    def value(self) -> Fraction:
        """Exact value of a finite expansion."""
        if not self.is_finite():
            raise NotEnoughDigits("only finite expansions have a rational value")
        return cf_eval(list(self.preperiod))

    def to_json(self) -> dict:
        return {"preperiod": list(self.preperiod),
                "period": None if self.period is None else list(self.period),
                "truncated": self.truncated}

    def __str__(self):
        head = str(self.preperiod[0]) if self.preperiod else ""
        tail = [str(a) for a in self.preperiod[1:]]
        if self.period is not None:
            tail.append("(%s)" % ",".join(str(a) for a in self.period))
        if self.truncated:
            tail.append("...")
        if tail:
            return "[%s;%s]" % (head, ",".join(tail))
        return "[%s]" % head


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    T_product: UniModMatrix


def cf_eval(digits: list[int]) -> Fraction:
    """Evaluate a finite digit list bottom-up, exactly."""
    if not digits:
        raise NotEnoughDigits("empty digit list")
    v = Fraction(digits[-1])
    for a in reversed(digits[:-1]):
        v = a + 1 / v
    return v


def _minimal_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    n = len(cycle)
    for p in range(1, n + 1):
        if n % p == 0 and cycle == cycle[:p] * (n // p):
            return cycle[:p]
    return cycle


def _canonical_periodic(digits: list[int], repeat_at: int,
                        first_seen: int) -> CFExpansion:
    pre = tuple(digits[:first_seen])
    period = _minimal_cycle(tuple(digits[first_seen:repeat_at]))
    # pull digits shared with the period end out of the preperiod,
    # keeping at least a0 in front
    while len(pre) > 1 and pre[-1] == period[-1]:
        period = (period[-1],) + period[:-1]
        pre = pre[:-1]
    if not pre:
        pre = (period[0],)
        period = period[1:] + (period[0],)
    return CFExpansion(pre, period, False)


def _expand_rational(x: Fraction, max_depth: int) -> CFExpansion:
    digits: list[int] = []
    while len(digits) < max_depth:
        a = x.numerator // x.denominator
        digits.append(a)
        x = x - a
        if x == 0:
            return CFExpansion(tuple(digits), None, False)
        x = 1 / x
    return CFExpansion(tuple(digits), None, True)


def _expand_surd(x: QuadraticSurd, max_depth: int) -> CFExpansion:
    seen: dict[QuadraticSurd, int] = {}
    digits: list[int] = []
    state = x
    while True:
        if state in seen:
            return _canonical_periodic(digits, len(digits), seen[state])
        if len(digits) >= max_depth:
            return CFExpansion(tuple(digits), None, True)
        seen[state] = len(digits)
        a = state.floor()
        digits.append(a)
        nxt = 1 / (state - a)
        assert isinstance(nxt, QuadraticSurd)
        state = nxt
        if len(seen) > _SURD_STATE_CAP:
            raise NotEnoughDigits("period detection exceeded state cap")


def _expand_interval(x: PrecisionReal, max_depth: int) -> CFExpansion:
    digits: list[int] = []
    cur = x.saturated()
    while len(digits) < max_depth:
        fl = cur.low.numerator // cur.low.denominator
        fh = cur.high.numerator // cur.high.denominator
        if fl != fh:
            if not digits:
                raise PrecisionExhausted("first digit is ambiguous")
            break
        digits.append(fl)
        frac_lo, frac_hi = cur.low - fl, cur.high - fl
        if frac_lo <= 0:  # remainder may be zero: cannot continue
            break
        cur = PrecisionReal(1 / frac_hi, 1 / frac_lo)
    return CFExpansion(tuple(digits), None, True)


def cf_expand(x: RealValue, max_depth: int) -> CFExpansion:
    """Regular continued fraction of x, to at most max_depth digits."""
    if max_depth < 1:
        raise ValueError("max_depth must be positive")
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return _expand_rational(x, max_depth)
    if isinstance(x, QuadraticSurd):
        return _expand_surd(x, max_depth)
    return _expand_interval(x, max_depth)


def cf_convergents(e: CFExpansion, k: int) -> list[Convergent]:
    """Convergents p_0/q_0 ... p_k/q_k with their matrix partial products."""
    if k < 0:
        raise ValueError("k must be non-negative")
    digits = e.digits(k + 1)
    out: list[Convergent] = []
    p_prev, p_prev2 = 1, 0
    q_prev, q_prev2 = 0, 1
    T = None
    for a in digits:
        p = a * p_prev + p_prev2
        q = a * q_prev + q_prev2
        p_prev, p_prev2 = p, p_prev
        q_prev, q_prev2 = q, q_prev
        T = elementary(a) if T is None else T @ elementary(a)
        out.append(Convergent(p, q, T))
    return out


def mobius_apply(M: UniModMatrix, x: RealValue) -> RealValue:
    """(a x + b) / (c x + d) in the tightest representable carrier."""
    if M.n != 2:
        raise NotFactorable("mobius_apply needs a 2x2 matrix")
    a, b, c, d = M.a, M.b, M.c, M.d
    num = a * x + b
    den = c * x + d
    if isinstance(den, Fraction) and den == 0:
        raise PoleAtInput("c*x + d = 0")
    return num / den


def factor_unimodular(M: UniModMatrix, pad_parity: bool = False) -> list[int]:
    """Digits [a0..ak] with (0 1;1 a0)...(0 1;1 ak) = M.

    Requires non-negative entries.  The parity of the factor count is
    forced by det M (each factor has determinant -1), so `pad_parity`
    can only append an inert (0 1;1 0)^2 = I pair: it does so whenever
    the count is even, which makes k even exactly when det M = -1 and
    otherwise yields the nearest convention (identity -> [0, 0]).
    """
    if M.n != 2:
        raise NotFactorable("factorization is for 2x2 matrices")
    if not M.non_negative():
        raise NotFactorable("matrix has negative entries")
    digits: list[int] = []
    cur = M
    guard = sum(abs(v) for r in M.rows for v in r) + 4
    while not cur.is_identity():
        if guard == 0:
            raise NotFactorable("no Euclidean decomposition found")
        guard -= 1
        (A, B), (C, D) = cur.rows
        cand = []
        if A > 0:
            cand.append(C // A)
        if B > 0:
            cand.append(D // B)
        if not cand:
            raise NotFactorable("no Euclidean decomposition found")
        a = min(cand)
        if a < 0:
            raise NotFactorable("no Euclidean decomposition found")
        digits.append(a)
        cur = UniModMatrix(((C - a * A, D - a * B), (A, B)))
    if pad_parity and len(digits) % 2 == 0:
        digits.extend((0, 0))
    return digits


def _tail_cycle(x: RealValue) -> tuple[int, ...]:
    """Minimal period cycle of a quadratic surd's expansion."""
    e = _expand_surd(x, _SURD_STATE_CAP)
    assert e.period is not None
    return _minimal_cycle(e.period)


def _rotations_equal(c1: tuple[int, ...], c2: tuple[int, ...]) -> bool:
    if len(c1) != len(c2):
        return False
    doubled = c2 + c2
    return any(doubled[i:i + len(c1)] == c1 for i in range(len(c2)))


def gl2_equivalent(x: RealValue, y: RealValue, depth_budget: int = 64) -> str:
    """Serret test: yes/no for exact inputs, unknown for interval ones.

    All rationals form a single GL(2,Z) class; a rational is never
    equivalent to an irrational; two surds are equivalent iff the
    minimal period cycles of their expansions are cyclic rotations of
    one another (equal tails).
    """
    x_rat = isinstance(x, (int, Fraction))
    y_rat = isinstance(y, (int, Fraction))
    if x_rat and y_rat:
        return YES
    if not (is_exact(x) and is_exact(y)):
        return UNKNOWN
    if x_rat != y_rat:
        return NO
    # two quadratic surds
    if x.d != y.d:  # equivalent surds generate the same field
        return NO
    return YES if _rotations_equal(_tail_cycle(x), _tail_cycle(y)) else NO
