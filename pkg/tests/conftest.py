import random
from fractions import Fraction

import pytest

from cfgroups.matrices import UniModMatrix
from cfgroups.realnum import QuadraticSurd, surd_normalize


def random_surd(rng: random.Random, d_max: int = 61,
                coeff_max: int = 12) -> QuadraticSurd:
    while True:
        d = rng.randint(2, d_max)
        a = rng.randint(-coeff_max, coeff_max)
        b = rng.randint(1, coeff_max)
        c = rng.randint(1, coeff_max)
        v = surd_normalize(a, b, c, d)
        if isinstance(v, QuadraticSurd):
            return v


def random_unimodular_2x2(rng: random.Random, bound: int = 10) -> UniModMatrix:
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(2)]
                for _ in range(2)]
        det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        if abs(det) == 1:
            return UniModMatrix.from_rows(rows)


def random_gamma_member(rng: random.Random, level: int,
                        bound: int = 20) -> UniModMatrix:
    """Random member of the principal congruence group: the congruence
    shape with determinant restored to +1 by rejection sampling."""
    while True:
        p = rng.randint(-bound, bound)
        q = rng.randint(-bound, bound)
        r = rng.randint(-bound, bound)
        den = 1 + level * p
        if den == 0:
            continue
        num = level * q * r - p
        if num % den:
            continue
        s = num // den
        g = UniModMatrix(((1 + level * p, level * q),
                          (level * r, 1 + level * s)))
        if g.det == 1:
            return g


def random_rational(rng: random.Random, num_bound: int = 10 ** 6) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound),
                    rng.randint(1, num_bound))


@pytest.fixture
def rng():
    return random.Random(20260823)
