"""Jacobi-Perron multidimensional continued fractions.

One step maps theta = (theta_1 .. theta_{n-1}) to the digit vector
b = (floor(theta_1) .. floor(theta_{n-1})) and the successor
theta' = (f_2/f_1, ..., f_{n-1}/f_1, 1/f_1) with f_i = theta_i - b_i.
For n = 2 this is exactly the Gauss map, so the digit stream of a
quadratic surd coincides with its regular continued fraction.

Convergents are ordered products of the n x n step matrices seeded at
the identity; the ratio vector is read off the image of (0,...,0,1)^T,
i.e. the last column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateStep,
    DimensionMismatch,
    NotEnoughSteps,
    PrecisionExhausted,
    ZeroLeadingEntry,
)
from .matrices import UniModMatrix
from .realnum import PrecisionReal, RealValue, real_floor, real_is_zero

JPDigitVector = tuple[int, ...]


@dataclass(frozen=True)
class JPExpansion:
    n: int
    steps: tuple[JPDigitVector, ...]
    terminated: bool = False  # a degenerate step ended extraction
    truncated: bool = False   # depth limit hit first

    def __post_init__(self):
        if self.n < 2:
            raise DimensionMismatch("dimension must be at least 2")
        if any(len(s) != self.n - 1 for s in self.steps):
            raise DimensionMismatch("every step needs n-1 digits")
        if self.terminated and self.truncated:
            raise ValueError("terminated and truncated are exclusive")

    def digit_stream(self) -> list[int]:
        """Flat digit list; for n = 2 this is the regular CF digit list."""
        return [d for step in self.steps for d in step]

    def to_json(self) -> dict:
        return {"n": self.n, "steps": [list(s) for s in self.steps],
                "terminated": self.terminated, "truncated": self.truncated}


@dataclass(frozen=True)
class JPConvergent:
    A: UniModMatrix
    k: int


def jp_step(theta: list[RealValue]) -> tuple[JPDigitVector, list[RealValue]]:
    """One digit-extraction step; DegenerateStep when theta_1 is integral."""
    if len(theta) < 1:
        raise DimensionMismatch("theta must have at least one coordinate")
    b = tuple(real_floor(t) for t in theta)
    f = [t - bi for t, bi in zip(theta, b)]
    if real_is_zero(f[0]):
        raise DegenerateStep("theta_1 is an integer; expansion terminates")
    theta_next = [fi / f[0] for fi in f[1:]]
    theta_next.append(1 / f[0])
    return b, theta_next


def jp_expand(theta: list[RealValue], max_depth: int) -> JPExpansion:
    """Iterate jp_step up to max_depth, recording termination."""
    if max_depth < 1:
        raise ValueError("max_depth must be positive")
    n = len(theta) + 1
    cur = [t.saturated() if isinstance(t, PrecisionReal) else t for t in theta]
    steps: list[JPDigitVector] = []
    while len(steps) < max_depth:
        try:
            b, cur = jp_step(cur)
        except DegenerateStep:
            return JPExpansion(n, tuple(steps), terminated=True)
        except PrecisionExhausted as exc:
            raise PrecisionExhausted(
                "precision exhausted at step %d" % len(steps),
                partial=JPExpansion(n, tuple(steps), truncated=True)) from exc
        steps.append(b)
    return JPExpansion(n, tuple(steps), truncated=True)


def jp_step_matrix(b: JPDigitVector, n: int) -> UniModMatrix:
    """n x n step matrix: first row (0..0 1), identity subdiagonal,
    last column (1, b_1, ..., b_{n-1})^T."""
    if len(b) != n - 1:
        raise DimensionMismatch(
            "digit vector has %d entries, dimension %d needs %d"
            % (len(b), n, n - 1))
    rows = [[0] * (n - 1) + [1]]
    for i in range(1, n):
        row = [0] * n
        row[i - 1] = 1
        row[n - 1] = b[i - 1]
        rows.append(row)
    return UniModMatrix.from_rows(rows)


def jp_convergents(e: JPExpansion, k: int) -> JPConvergent:
    """Ordered product of the first k step matrices (identity at k = 0)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > len(e.steps):
        raise NotEnoughSteps("expansion has %d steps, %d requested"
                             % (len(e.steps), k))
    A = UniModMatrix.identity(e.n)
    for b in e.steps[:k]:
        A = A @ jp_step_matrix(b, e.n)
    return JPConvergent(A, k)


def jp_reconstruct(e: JPExpansion, k: int) -> list[Fraction]:
    """Ratio vector approximating theta at step k, as exact rationals."""
    conv = jp_convergents(e, k)
    col = conv.A.column(e.n - 1)
    if col[0] == 0:
        raise ZeroLeadingEntry("convergent column starts with 0 at k=%d" % k)
    return [Fraction(col[i], col[0]) for i in range(1, e.n)]
