import math
import random
from fractions import Fraction

import pytest

from cfgroups.errors import EllipticInput, IdentityInput, NotHyperbolic
from cfgroups.matrices import UniModMatrix, parse_matrix
from cfgroups.modular_group import (
    ELLIPTIC,
    HYPERBOLIC,
    INFINITY,
    PARABOLIC,
    axis_length,
    classify_element,
    fixed_points,
    gamma_membership,
    legendre_audit,
)
from cfgroups.realnum import QuadraticSurd
from cfgroups.regular_cf import cf_expand, elementary, mobius_apply

from conftest import random_gamma_member, random_unimodular_2x2


class TestClassify:
    @pytest.mark.parametrize("rows,expected", [
        ([[0, -1], [1, 0]], ELLIPTIC),
        ([[1, 1], [0, 1]], PARABOLIC),
        ([[2, 1], [1, 1]], HYPERBOLIC),
        ([[-2, -1], [-1, -1]], HYPERBOLIC),  # trace -3
        ([[0, 1], [1, 0]], ELLIPTIC),        # det -1, trace 0
    ])
    def test_cases(self, rows, expected):
        assert classify_element(UniModMatrix.from_rows(rows)) == expected

    def test_classification_invariant_under_conjugation(self, rng):
        for _ in range(50):
            g = random_unimodular_2x2(rng)
            h = random_unimodular_2x2(rng)
            conj = h @ g @ h.inverse()
            assert classify_element(conj) == classify_element(g)


class TestFixedPoints:
    def test_parabolic_translation(self):
        pts = fixed_points(UniModMatrix(((1, 3), (0, 1))))
        assert pts == [INFINITY]

    def test_hyperbolic_pair_is_fixed(self, rng):
        checked = 0
        while checked < 40:
            g = random_unimodular_2x2(rng)
            if classify_element(g) != HYPERBOLIC or g.c == 0:
                continue
            pts = fixed_points(g)
            assert len(pts) == 2
            for p in pts:
                assert mobius_apply(g, p) == p
            checked += 1

    def test_fixed_points_are_exact(self):
        pts = fixed_points(UniModMatrix(((2, 1), (1, 1))))
        assert all(isinstance(p, (Fraction, QuadraticSurd)) for p in pts)
        # x = (1 + sqrt5)/2 solves z^2 - z - 1 = 0
        assert pts[0] == QuadraticSurd(1, 1, 2, 5)

    def test_elliptic_rejected(self):
        with pytest.raises(EllipticInput):
            fixed_points(UniModMatrix(((0, -1), (1, 0))))

    def test_identity_rejected(self):
        with pytest.raises(IdentityInput):
            fixed_points(UniModMatrix.identity(2))
        with pytest.raises(IdentityInput):
            fixed_points(UniModMatrix(((-1, 0), (0, -1))))


class TestAxisLength:
    def test_matches_float_oracle(self):
        for rows in ([[2, 1], [1, 1]], [[3, 2], [1, 1]], [[5, 2], [2, 1]],
                     [[-2, -1], [-1, -1]]):
            g = UniModMatrix.from_rows(rows)
            val = axis_length(g, bits=80)
            oracle = 2 * math.acosh(abs(g.trace()) / 2)
            assert abs(float(val.midpoint) - oracle) < 1e-12
            assert float(val.low) - 1e-12 <= oracle <= float(val.high) + 1e-12

    def test_interval_is_tight(self):
        val = axis_length(UniModMatrix(((2, 1), (1, 1))), bits=128)
        assert val.width < Fraction(1, 1 << 100)

    def test_refinable(self):
        val = axis_length(UniModMatrix(((2, 1), (1, 1))), bits=32)
        finer = val.refined()
        assert finer.width <= val.width

    def test_non_hyperbolic_rejected(self):
        with pytest.raises(NotHyperbolic):
            axis_length(UniModMatrix(((1, 1), (0, 1))))


class TestGammaMembership:
    def test_identity_in_every_level(self):
        for level in (1, 2, 3, 5, 12):
            assert gamma_membership(UniModMatrix.identity(2), level)

    def test_level_one_needs_det_plus_one(self):
        assert gamma_membership(UniModMatrix(((2, 1), (1, 1))), 1)
        assert not gamma_membership(UniModMatrix(((0, 1), (1, 0))), 1)

    def test_known_member(self):
        g = UniModMatrix(((1, 2), (2, 5)))  # det 1, = I mod 2
        assert gamma_membership(g, 2)
        assert not gamma_membership(g, 4)

    def test_group_closure(self, rng):
        for level in (2, 3, 5):
            for _ in range(50):
                g = random_gamma_member(rng, level)
                h = random_gamma_member(rng, level)
                assert gamma_membership(g @ h, level)
                assert gamma_membership(g.inverse(), level)


class TestLegendreAudit:
    def test_all_twos_level_two(self):
        # digit tail of sqrt(2): T_k = I mod 2 exactly at odd k
        e = cf_expand(QuadraticSurd(1, 1, 1, 2), 8)
        assert e.digits(4) == [2, 2, 2, 2]
        records = legendre_audit(e, 2, 4)
        assert [r.member for r in records] == [False, True, False, True]

    def test_level_one_always_member(self, rng):
        for _ in range(20):
            digits = tuple(rng.randint(1, 9) for _ in range(10))
            from cfgroups.regular_cf import CFExpansion
            records = legendre_audit(CFExpansion(digits, None, True), 1, 10)
            assert all(r.member for r in records)

    def test_products_match_elementary_chain(self, rng):
        digits = tuple(rng.randint(1, 9) for _ in range(8))
        from cfgroups.regular_cf import CFExpansion
        records = legendre_audit(CFExpansion(digits, None, True), 3, 8)
        T = None
        for r, a in zip(records, digits):
            T = elementary(a) if T is None else T @ elementary(a)
            assert r.T == T


class TestMatrixParsing:
    def test_parse(self):
        assert parse_matrix("[[2,1],[1,1]]") == UniModMatrix(((2, 1), (1, 1)))

    def test_rejects_non_unimodular(self):
        from cfgroups.errors import ParseError
        from cfgroups.errors import DomainError
        with pytest.raises((ParseError, DomainError, ValueError)):
            parse_matrix("[[2,0],[0,2]]")
