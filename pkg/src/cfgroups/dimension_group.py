"""Totally ordered dimension groups as Z-modules in the real line.

A ModuleRep holds generators lambda_1 .. lambda_n; the group is Z^n
ordered by the sign of x |-> sum x_i lambda_i.  Exact generator data
(rationals and quadratic surds) is handled symbolically over the basis
{1, sqrt(d_1), sqrt(d_2), ...}, which makes cone signs and rational
dependence decidable; interval generators degrade to interval signs.

The simplicial approximation chain is the regular continued fraction of
the slope for rank 2, and the Jacobi-Perron expansion of
theta = (lambda_2/lambda_1, ..., lambda_n/lambda_1) for higher rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import (
    NonPositiveUnit,
    OutOfRange,
    PrecisionExhausted,
    RankMismatch,
    ZeroLeading,
)
from .jacobi_perron import jp_expand, jp_step_matrix
from .matrices import UniModMatrix
from .realnum import (
    Fraction as Rational,
    PrecisionReal,
    QuadraticSurd,
    RealValue,
    is_exact,
    real_sign,
)
from .regular_cf import NO, UNKNOWN, YES, cf_expand, elementary, gl2_equivalent

GroupElement = tuple[int, ...]

POSITIVE, ZERO, NEGATIVE = "positive", "zero", "negative"

_SIGN_BIT_CAP = 1 << 14


# -- symbolic field components ----------------------------------------

def _components(v: RealValue) -> Optional[dict[int, Fraction]]:
    """Coordinates of an exact value over {1} u {sqrt(d)}; None if interval."""
    if isinstance(v, int):
        return {1: Fraction(v)}
    if isinstance(v, Fraction):
        return {1: v}
    if isinstance(v, QuadraticSurd):
        return {1: Fraction(v.a, v.c), v.d: Fraction(v.b, v.c)}
    return None


def _combination_sign(comp: dict[int, Fraction]) -> int:
    """Exact sign of sum_d comp[d] * sqrt(d) (sqrt(1) = 1).

    Nonzero unless every coefficient is zero: square roots of distinct
    squarefree integers are linearly independent over Q.
    """
    comp = {d: c for d, c in comp.items() if c != 0}
    if not comp:
        return 0
    if len(comp) == 1:
        ((d, c),) = comp.items()
        return 1 if c > 0 else -1  # sqrt(d) > 0
    bits = 32
    while bits <= _SIGN_BIT_CAP:
        lo = hi = Fraction(0)
        for d, c in comp.items():
            s = isqrt(d << (2 * bits))
            rl, rh = Fraction(s, 1 << bits), Fraction(s + 1, 1 << bits)
            if c > 0:
                lo += c * rl
                hi += c * rh
            else:
                lo += c * rh
                hi += c * rl
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
    raise PrecisionExhausted("surd combination failed to separate from zero")


def _rational_rank(vectors: list[dict[int, Fraction]]) -> int:
    keys = sorted({k for v in vectors for k in v})
    rows = [[v.get(k, Fraction(0)) for k in keys] for v in vectors]
    rank = 0
    col = 0
    while rank < len(rows) and col < len(keys):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0),
                   None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


# -- the module representation ----------------------------------------

@dataclass(frozen=True)
class ModuleRep:
    n: int
    lam: tuple[RealValue, ...]
    theta: tuple[RealValue, ...]
    order_unit: GroupElement
    rational_dependence: bool

    def image(self, x: GroupElement) -> RealValue:
        if len(x) != self.n:
            raise RankMismatch("element has length %d, module rank %d"
                               % (len(x), self.n))
        acc: RealValue = Fraction(0)
        for xi, li in zip(x, self.lam):
            if xi != 0:
                acc = acc + xi * li
        return acc

    def image_sign(self, x: GroupElement) -> int:
        """Exact for exact generators; may raise PrecisionExhausted."""
        if len(x) != self.n:
            raise RankMismatch("element has length %d, module rank %d"
                               % (len(x), self.n))
        comps = _image_components(self, x)
        if comps is not None:
            return _combination_sign(comps)
        return real_sign(self.image(x))

    def is_exact(self) -> bool:
        return all(is_exact(l) for l in self.lam)


def _image_components(m: ModuleRep, x: GroupElement) -> Optional[dict]:
    total: dict[int, Fraction] = {}
    for xi, li in zip(x, m.lam):
        comp = _components(li)
        if comp is None:
            return None
        for d, c in comp.items():
            total[d] = total.get(d, Fraction(0)) + xi * c
    return total


def build_module(lam: list[RealValue],
                 order_unit: Optional[GroupElement] = None) -> ModuleRep:
    """Z-module Z*lambda_1 + ... + Z*lambda_n with its slope vector."""
    n = len(lam)
    if n < 2:
        raise RankMismatch("need at least two generators")
    lam = tuple(Fraction(l) if isinstance(l, int) else l for l in lam)
    first = lam[0]
    comp0 = _components(first)
    if comp0 is not None:
        s0 = _combination_sign(comp0)
        if s0 == 0:
            raise ZeroLeading("lambda_1 must be nonzero")
    else:
        s0 = real_sign(first)  # may raise PrecisionExhausted near zero
        if s0 == 0:
            raise ZeroLeading("lambda_1 must be nonzero")
    theta = tuple(li / first for li in lam[1:])
    dependence = False
    vectors = [_components(l) for l in lam]
    if all(v is not None for v in vectors):
        dependence = _rational_rank(vectors) < n
    if order_unit is None:
        unit = tuple([1 if s0 > 0 else -1] + [0] * (n - 1))
    else:
        unit = tuple(int(v) for v in order_unit)
        if len(unit) != n:
            raise RankMismatch("order unit has wrong length")
    m = ModuleRep(n, lam, theta, unit, dependence)
    if m.image_sign(unit) <= 0:
        raise NonPositiveUnit("order unit image must be positive")
    return m


def cone_contains(m: ModuleRep, x: GroupElement) -> str:
    """Sign of the image of x: the positive cone is {x : sign >= 0}."""
    s = m.image_sign(x)
    return POSITIVE if s > 0 else (NEGATIVE if s < 0 else ZERO)


def state_eval(m: ModuleRep, x: GroupElement) -> RealValue:
    """Value of the normalized state f(x) = image(x)/image(order_unit)."""
    if len(x) != m.n:
        raise RankMismatch("element has length %d, module rank %d"
                           % (len(x), m.n))
    num = m.image(x)
    if isinstance(num, Fraction) and num == 0:
        return Fraction(0)
    return num / m.image(m.order_unit)


# -- order isomorphism ------------------------------------------------

def _solve_basis_matrix(a: ModuleRep, b: ModuleRep) -> Optional[UniModMatrix]:
    """Integer unimodular A with b.lam = A . a.lam, if one exists and
    the generators are exact and Q-independent."""
    vecs_a = [_components(l) for l in a.lam]
    vecs_b = [_components(l) for l in b.lam]
    if any(v is None for v in vecs_a + vecs_b):
        return None
    keys = sorted({k for v in vecs_a + vecs_b for k in v})
    cols = [[v.get(k, Fraction(0)) for k in keys] for v in vecs_a]
    if _rational_rank(vecs_a) < a.n:
        return None
    rows_out = []
    for vb in vecs_b:
        target = [vb.get(k, Fraction(0)) for k in keys]
        sol = _solve_linear(cols, target)
        if sol is None or any(s.denominator != 1 for s in sol):
            return None
        rows_out.append([int(s) for s in sol])
    try:
        return UniModMatrix.from_rows(rows_out)
    except Exception:
        return None


def _solve_linear(cols: list[list[Fraction]],
                  target: list[Fraction]) -> Optional[list[Fraction]]:
    """Solve sum_j x_j cols[j] = target when the columns are independent."""
    m = len(target)
    n = len(cols)
    aug = [[cols[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    rank = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(rank, m) if aug[r][col] != 0), None)
        if piv is None:
            return None  # columns assumed independent
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [x / pv for x in aug[rank]]
        for r in range(m):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, m):
        if aug[r][n] != 0:
            return None  # inconsistent
    return [aug[i][n] for i in range(n)]


def _exact_equal(x: RealValue, y: RealValue) -> bool:
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        return Fraction(x) == Fraction(y)
    if isinstance(x, QuadraticSurd) and isinstance(y, QuadraticSurd):
        return x == y
    return False


def order_iso(a: ModuleRep, b: ModuleRep, budget: int = 64) -> str:
    """Decide order isomorphism: exact in rank 2 with exact slopes,
    a budgeted semi-decision in higher rank."""
    if a.n != b.n:
        raise RankMismatch("ranks differ: %d vs %d" % (a.n, b.n))
    if a.rational_dependence != b.rational_dependence:
        return NO
    if a.n == 2:
        if a.rational_dependence:
            # both slopes rational: a single GL(2,Z) class
            return YES
        return gl2_equivalent(a.theta[0], b.theta[0], budget)
    # rank >= 3
    if all(_exact_equal(x, y) for x, y in zip(a.theta, b.theta)):
        return YES  # same slope vector: equal modules up to positive scale
    A = _solve_basis_matrix(a, b)
    if A is not None:
        return YES
    return UNKNOWN


# -- simplicial chains ------------------------------------------------

@dataclass(frozen=True)
class SimplicialChain:
    n: int
    matrices: tuple[UniModMatrix, ...]
    source: str  # "regular_cf" | "jacobi_perron"

    def product(self) -> UniModMatrix:
        acc = UniModMatrix.identity(self.n)
        for m in self.matrices:
            acc = acc @ m
        return acc

    def to_json(self) -> dict:
        return {"n": self.n, "source": self.source,
                "matrices": [m.to_lists() for m in self.matrices]}


def simplicial_chain(m: ModuleRep, depth: int) -> SimplicialChain:
    """Approximation chain of the module to the requested depth; shorter
    when the slope data terminates first (rational input)."""
    if depth < 1:
        raise ValueError("depth must be positive")
    if m.n == 2:
        e = cf_expand(m.theta[0], depth)
        count = min(depth, len(e.preperiod)) if e.period is None else depth
        mats = tuple(elementary(a) for a in e.digits(count))
        return SimplicialChain(2, mats, "regular_cf")
    e = jp_expand(list(m.theta), depth)
    mats = tuple(jp_step_matrix(b, m.n) for b in e.steps)
    return SimplicialChain(m.n, mats, "jacobi_perron")


def rank_from_topology(genus: int, principal_regions: int) -> int:
    """Rank of the module from surface genus and number of principal
    regions of the lamination: 2*genus + regions - 1."""
    if genus < 2:
        raise OutOfRange("genus must be at least 2")
    if principal_regions < 1:
        raise OutOfRange("need at least one principal region")
    return 2 * genus + principal_regions - 1


# -- Riesz axiom audit ------------------------------------------------

@dataclass
class RieszReport:
    samples: int
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    precision_incidents: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"samples": self.samples, "checks": self.checks,
                "violations": self.violations,
                "precision_incidents": self.precision_incidents}


def riesz_audit(m: ModuleRep, sample_count: int, coordinate_bound: int,
                seed: int = 0) -> RieszReport:
    """Sampled audit of the positive-cone axioms.

    Checks cone closure under addition, P intersect -P = {0}, bounded
    unperforation, and interpolation (the larger of u, v interpolates in
    a total order).  A deterministic sweep of the small coordinate box
    complements the random samples so degenerate modules cannot hide a
    zero-image witness.
    """
    rng = random.Random(seed)
    report = RieszReport(samples=sample_count)
    counts = {"closure": 0, "antisymmetry": 0, "unperforation": 0,
              "interpolation": 0}

    def sign_of(x):
        nonlocal report
        try:
            return m.image_sign(x)
        except PrecisionExhausted:
            report.precision_incidents += 1
            return None

    def rand_elem():
        return tuple(rng.randint(-coordinate_bound, coordinate_bound)
                     for _ in range(m.n))

    def check_antisymmetry(x):
        if any(x):
            s = sign_of(x)
            counts["antisymmetry"] += 1
            if s == 0:
                report.violations.append(
                    {"axiom": "antisymmetry", "witness": list(x),
                     "detail": "nonzero element with zero image lies in "
                               "P and -P"})
                return False
        return True

    # deterministic sweep near the origin
    small = min(coordinate_bound, 2 if m.n > 3 else 3)
    box = [()]
    for _ in range(m.n):
        box = [v + (c,) for v in box for c in range(-small, small + 1)]
    for x in box:
        check_antisymmetry(x)

    for _ in range(sample_count):
        x, y = rand_elem(), rand_elem()
        sx, sy = sign_of(x), sign_of(y)
        if sx is None or sy is None:
            continue
        check_antisymmetry(x)
        # closure of P under addition
        if sx >= 0 and sy >= 0:
            z = tuple(a + b for a, b in zip(x, y))
            sz = sign_of(z)
            counts["closure"] += 1
            if sz is not None and sz < 0:
                report.violations.append(
                    {"axiom": "closure", "witness": [list(x), list(y)]})
        # unperforation: n*g >= 0 implies g >= 0, n <= 10
        k = rng.randint(2, 10)
        skx = sign_of(tuple(k * v for v in x))
        counts["unperforation"] += 1
        if skx is not None and skx >= 0 and sx < 0:
            report.violations.append(
                {"axiom": "unperforation", "witness": list(x), "n": k})
        # interpolation: for u,v <= x,y exhibit w with u,v <= w <= x,y
        u, v = x, y
        duv = sign_of(tuple(a - b for a, b in zip(u, v)))
        if duv is None:
            continue
        w = u if duv >= 0 else v
        pos1, pos2 = rand_elem(), rand_elem()
        s1, s2 = sign_of(pos1), sign_of(pos2)
        if s1 is None or s2 is None:
            continue
        if s1 < 0:
            pos1 = tuple(-c for c in pos1)
        if s2 < 0:
            pos2 = tuple(-c for c in pos2)
        xx = tuple(a + b for a, b in zip(w, pos1))
        yy = tuple(a + b for a, b in zip(w, pos2))
        counts["interpolation"] += 1
        ok = True
        for lower in (u, v):
            s = sign_of(tuple(a - b for a, b in zip(w, lower)))
            ok = ok and s is not None and s >= 0
        for upper in (xx, yy):
            s = sign_of(tuple(a - b for a, b in zip(upper, w)))
            ok = ok and s is not None and s >= 0
        if not ok:
            report.violations.append(
                {"axiom": "interpolation",
                 "witness": [list(u), list(v), list(w)]})
    report.checks = counts
    return report
