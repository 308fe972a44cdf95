import random
from fractions import Fraction

import pytest

from cfgroups.errors import (
    DegenerateStep,
    DimensionMismatch,
    NotEnoughSteps,
    ZeroLeadingEntry,
)
from cfgroups.jacobi_perron import (
    JPExpansion,
    jp_convergents,
    jp_expand,
    jp_reconstruct,
    jp_step,
    jp_step_matrix,
)
from cfgroups.matrices import UniModMatrix
from cfgroups.realnum import PrecisionReal, real_interval, surd_normalize
from cfgroups.regular_cf import cf_expand

from conftest import random_surd

SQRT2 = surd_normalize(0, 1, 1, 2)


class TestStep:
    def test_single_step(self):
        b, nxt = jp_step([Fraction(7, 3), Fraction(5, 2)])
        assert b == (2, 2)
        # f = (1/3, 1/2); theta' = (f2/f1, 1/f1) = (3/2, 3)
        assert nxt == [Fraction(3, 2), Fraction(3)]

    def test_degenerate_on_integer_lead(self):
        with pytest.raises(DegenerateStep):
            jp_step([Fraction(4), Fraction(5, 2)])

    def test_n2_is_gauss_map(self):
        x = Fraction(27, 11)
        b, nxt = jp_step([x])
        assert b == (2,)
        assert nxt == [1 / (x - 2)]


class TestExpand:
    def test_n2_matches_regular_cf(self):
        rng = random.Random(11)
        for _ in range(40):
            v = random_surd(rng)
            e = jp_expand([v], 30)
            assert e.digit_stream() == cf_expand(v, 64).digits(30)

    def test_rational_terminates(self):
        # 7/3 = [2;3]; the map stops when the remaining value is the
        # integer 3, so only the digits before the integral tail appear
        e = jp_expand([Fraction(7, 3)], 50)
        assert e.terminated
        assert e.digit_stream() == [2]

    def test_pair_of_rationals(self):
        e = jp_expand([Fraction(7, 5), Fraction(8, 5)], 50)
        assert e.terminated
        # every step must keep theta coordinates consistent
        assert all(len(s) == 2 for s in e.steps)

    def test_truncated_flag(self):
        e = jp_expand([SQRT2], 5)
        assert e.truncated and not e.terminated
        assert len(e.steps) == 5

    def test_interval_input(self):
        cbrt2 = PrecisionReal.nth_root(2, 3, 256)
        cbrt4 = PrecisionReal.nth_root(4, 3, 256)
        e = jp_expand([cbrt2, cbrt4], 20)
        assert len(e.steps) == 20
        assert e.steps[0] == (1, 1)

    def test_dimension_validation(self):
        with pytest.raises(DimensionMismatch):
            JPExpansion(2, ((1, 2),))


class TestMatricesAndConvergents:
    def test_step_matrix_shape(self):
        A = jp_step_matrix((3, 5), 3)
        assert A.rows == ((0, 0, 1), (1, 0, 3), (0, 1, 5))
        assert abs(A.det) == 1

    def test_n2_step_matrix_is_elementary(self):
        assert jp_step_matrix((4,), 2).rows == ((0, 1), (1, 4))

    def test_identity_at_zero(self):
        e = jp_expand([SQRT2], 5)
        assert jp_convergents(e, 0).A == UniModMatrix.identity(2)

    def test_convergent_is_ordered_product(self):
        e = jp_expand([Fraction(19, 7), Fraction(22, 7)], 10)
        n = e.n
        A = UniModMatrix.identity(n)
        for k, b in enumerate(e.steps, start=1):
            A = A @ jp_step_matrix(b, n)
            assert jp_convergents(e, k).A == A

    def test_too_many_steps(self):
        e = jp_expand([SQRT2], 5)
        with pytest.raises(NotEnoughSteps):
            jp_convergents(e, 6)


class TestReconstruct:
    def test_sqrt2_convergent(self):
        e = jp_expand([SQRT2], 10)
        assert jp_reconstruct(e, 4) == [Fraction(17, 12)]

    def test_rational_last_convergent_n2(self):
        # 355/113 = [3;7,16]; the terminated expansion carries [3;7] and
        # its last convergent is the penultimate CF convergent 22/7
        e = jp_expand([Fraction(355, 113)], 50)
        assert e.terminated
        assert e.digit_stream() == [3, 7]
        assert jp_reconstruct(e, len(e.steps)) == [Fraction(22, 7)]

    def test_zero_leading_entry(self):
        e = jp_expand([SQRT2], 5)
        with pytest.raises(ZeroLeadingEntry):
            jp_reconstruct(e, 0)

    def test_cubic_vector_converges(self):
        cbrt2 = PrecisionReal.nth_root(2, 3, 300)
        cbrt4 = PrecisionReal.nth_root(4, 3, 300)
        e = jp_expand([cbrt2, cbrt4], 25)
        prev_err = None
        for k in (5, 10, 15, 20, 25):
            r = jp_reconstruct(e, k)
            errs = []
            for approx, target in (
                    (r[0], PrecisionReal.nth_root(2, 3, 300)),
                    (r[1], PrecisionReal.nth_root(4, 3, 300))):
                lo, hi = real_interval(target, 0)
                errs.append(max(abs(approx - lo), abs(approx - hi)))
            err = max(errs)
            if prev_err is not None:
                assert err <= prev_err
            prev_err = err
        assert prev_err < Fraction(1, 10 ** 6)
