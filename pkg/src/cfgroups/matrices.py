"""Integer matrices of determinant +-1, any square size.

The same type carries 2x2 modular-group elements, elementary continued
fraction factors and n x n Jacobi-Perron step matrices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotUnimodular, ParseError


def int_det(rows: tuple[tuple[int, ...], ...]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class UniModMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise NotUnimodular("matrix must be square and non-empty")
        if any(not isinstance(v, int) for r in self.rows for v in r):
            raise NotUnimodular("matrix entries must be integers")
        if abs(int_det(self.rows)) != 1:
            raise NotUnimodular("determinant must be +1 or -1")

    @classmethod
    def from_rows(cls, rows) -> "UniModMatrix":
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "UniModMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def det(self) -> int:
        return int_det(self.rows)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.rows[i][j]

    # 2x2 shorthand
    @property
    def a(self) -> int:
        return self.rows[0][0]

    @property
    def b(self) -> int:
        return self.rows[0][1]

    @property
    def c(self) -> int:
        return self.rows[1][0]

    @property
    def d(self) -> int:
        return self.rows[1][1]

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def __matmul__(self, other: "UniModMatrix") -> "UniModMatrix":
        if self.n != other.n:
            raise NotUnimodular("size mismatch in product")
        n = self.n
        return UniModMatrix(tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n))
                  for j in range(n))
            for i in range(n)))

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        if len(vec) != self.n:
            raise NotUnimodular("vector length mismatch")
        return tuple(sum(r[j] * vec[j] for j in range(self.n))
                     for r in self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "UniModMatrix":
        return UniModMatrix(tuple(zip(*self.rows)))

    def mod(self, N: int) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(v % N for v in r) for r in self.rows)

    def inverse(self) -> "UniModMatrix":
        """Exact integer inverse (exists since det = +-1)."""
        if self.n == 2:
            (a, b), (c, d) = self.rows
            det = a * d - b * c  # +-1
            return UniModMatrix(((d * det, -b * det), (-c * det, a * det)))
        n = self.n
        aug = [[Fraction(v) for v in row] + [Fraction(1 if i == j else 0)
                                             for j in range(n)]
               for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [v / pv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return UniModMatrix(tuple(
            tuple(int(v) for v in row[n:]) for row in aug))

    def is_identity(self) -> bool:
        return self == UniModMatrix.identity(self.n)

    def non_negative(self) -> bool:
        return all(v >= 0 for r in self.rows for v in r)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return json.dumps(self.to_lists())


def parse_matrix(text: str) -> UniModMatrix:
    """Parse the `[[a,b],[c,d]]` text syntax (any square size)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("cannot parse matrix %r" % text) from exc
    if (not isinstance(data, list)
            or not all(isinstance(r, list) for r in data)
            or not all(isinstance(v, int) for r in data for v in r)):
        raise ParseError("matrix must be a list of integer rows")
    try:
        return UniModMatrix.from_rows(data)
    except NotUnimodular as exc:
        raise ParseError(str(exc)) from exc
