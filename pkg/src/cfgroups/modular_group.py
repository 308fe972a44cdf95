"""2x2 unimodular matrices as isometries of the hyperbolic plane.

Trace classification, boundary fixed points (exact surds), translation
length along the axis of a hyperbolic element, principal congruence
subgroup membership, and the audit of continued fraction partial
products against a congruence level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

from .errors import (
    EllipticInput,
    IdentityInput,
    NotHyperbolic,
    NotUnimodular,
)
from .matrices import UniModMatrix
from .realnum import PrecisionReal, RealValue, surd_normalize
from .regular_cf import CFExpansion, elementary

ELLIPTIC, PARABOLIC, HYPERBOLIC = "elliptic", "parabolic", "hyperbolic"


class _Infinity:
    """Boundary point at infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "infinity"


INFINITY = _Infinity()

BoundaryPoint = RealValue | _Infinity


def _require_2x2(g: UniModMatrix):
    if g.n != 2:
        raise NotUnimodular("expected a 2x2 matrix")


def classify_element(g: UniModMatrix) -> str:
    """elliptic, parabolic or hyperbolic by |trace| against 2.

    Applied to |trace| regardless of the sign of det g, so GL(2,Z)
    elements of determinant -1 are classified by the same rule.
    """
    _require_2x2(g)
    t = abs(g.trace())
    if t < 2:
        return ELLIPTIC
    if t == 2:
        return PARABOLIC
    return HYPERBOLIC


def fixed_points(g: UniModMatrix) -> list[BoundaryPoint]:
    """Boundary fixed points, i.e. roots of c z^2 + (d - a) z - b = 0."""
    _require_2x2(g)
    a, b, c, d = g.a, g.b, g.c, g.d
    if b == 0 and c == 0 and a == d:
        raise IdentityInput("scalar matrix fixes every point")
    if classify_element(g) == ELLIPTIC:
        raise EllipticInput("elliptic fixed points lie off the boundary")
    if c == 0:
        points: list[BoundaryPoint] = [INFINITY]
        if a != d:
            points.append(Fraction(b, d - a))
        return points
    disc = (d - a) * (d - a) + 4 * b * c
    if disc == 0:
        return [Fraction(a - d, 2 * c)]
    lo = surd_normalize(a - d, -1, 2 * c, disc)
    hi = surd_normalize(a - d, 1, 2 * c, disc)
    return [hi, lo]


def axis_length(g: UniModMatrix, bits: int = 64) -> PrecisionReal:
    """Translation length 2*arccosh(|tr g| / 2) as a verified interval."""
    _require_2x2(g)
    if classify_element(g) != HYPERBOLIC:
        raise NotHyperbolic("axis length needs |trace| > 2")
    t = abs(g.trace())

    def refiner(level, _t=t):
        saved = iv.prec
        iv.prec = level + 16
        try:
            x = iv.mpf(_t) / 2
            y = 2 * iv.log(x + iv.sqrt(x * x - 1))
            lo, hi = y._mpi_
        finally:
            iv.prec = saved
        return _mpf_tuple_to_fraction(lo), _mpf_tuple_to_fraction(hi)

    return PrecisionReal.from_refiner(refiner, budget=bits, start_level=bits)


def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    man = int(man)
    if sign:
        man = -man
    return Fraction(man) * Fraction(2) ** exp


def gamma_membership(g: UniModMatrix, level: int) -> bool:
    """Member of the principal congruence group of the given level:
    determinant +1 and congruent to the identity mod level."""
    _require_2x2(g)
    if level < 1:
        raise NotUnimodular("congruence level must be >= 1")
    if g.det != 1:
        return False
    return _congruent_to_identity(g, level)


def _congruent_to_identity(g: UniModMatrix, level: int) -> bool:
    return (g.a % level == 1 % level and g.d % level == 1 % level
            and g.b % level == 0 and g.c % level == 0)


@dataclass(frozen=True)
class AuditRecord:
    k: int
    T: UniModMatrix
    member: bool

    def to_json(self) -> dict:
        return {"k": self.k, "matrix": self.T.to_lists(),
                "member": self.member}


def legendre_audit(e: CFExpansion, level: int, depth: int) -> list[AuditRecord]:
    """Check the partial products T_k of the expansion against the
    congruence condition, for k = 0 .. depth-1.

    Membership here is the congruence shape alone (T_k = I mod level):
    odd-index products have determinant -1 by construction, and level 1
    must pass trivially, so the determinant gate used by
    gamma_membership is deliberately not applied.
    """
    if level < 1:
        raise NotUnimodular("congruence level must be >= 1")
    digits = e.digits(depth)
    out: list[AuditRecord] = []
    T = None
    for k, a in enumerate(digits):
        T = elementary(a) if T is None else T @ elementary(a)
        out.append(AuditRecord(k, T, _congruent_to_identity(T, level)))
    return out
