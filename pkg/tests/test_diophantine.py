import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
"""
Tests for diophantine module
"""

from math import gcd

import pytest
from germlab.core.diophantine import (
    DECORATED_ROOT, DecoratedOrbit, DioSol4, ExtSol8, HGen,
    apply_h, bounded_solution, decorated_action,
    decorated_path_to_root, extend_to_8, extend_to_8_bruteforce,
    lemma_bounds_hold, pr1_inverse, pr_inverse, solve_aux, solve_aux_bruteforce,
)
from germlab.core.pairs_tree import ONE, ROOT, Letter, Orbit, enumerate_to_level, path_to_root
from germlab.utils.errors import InvalidInputError


def coprime_pairs(limit, min_k=1):
    for k1 in range(min_k, limit + 1):
        for k2 in range(min_k, k1 + 1):
            if gcd(k1, k2) == 1:
                yield k1, k2


class TestDioSol4:
    """Test solutions of k1k2 - k1q2 - k2q1 = 1"""

    def test_residual(self):
        assert DioSol4(5, 3, 3, 1).residual == 1
        assert DioSol4(5, 3, 3, 2).residual == -4

    def test_bounded_set(self):
        assert DioSol4(5, 3, 3, 1).in_dp0
        assert DioSol4(2, 1, 1, 0).in_dp
        assert not DioSol4(2, 1, 1, 0).in_dp0
        assert not DioSol4(8, 3, 13, -2).in_dp


class TestGroupAction:
    """Test the generators h1, h1^-1, h2"""

    def test_h1_and_inverse(self):
        s = DioSol4(5, 3, 3, 1)
        up = apply_h(s, HGen.H1)
        assert up == DioSol4(8, 3, 5, 1)
        assert apply_h(up, HGen.H1INV) == s

    def test_h2_is_involution(self):
        s = DioSol4(5, 3, 3, 1)
        assert apply_h(apply_h(s, HGen.H2), HGen.H2) == s

    def test_preserves_equation(self):
        s = DioSol4(3, 2, 1, 1)
        for gen in ["H1", "H2", "H1", "H1", "H2", "H1"]:
            s = apply_h(s, gen)
            assert s.solves

    def test_rejects_non_solution(self):
        with pytest.raises(InvalidInputError, match="does not satisfy"):
            apply_h(DioSol4(5, 3, 1, 1), HGen.H1)

    def test_inverse_needs_k1_above_k2(self):
        with pytest.raises(InvalidInputError, match="H1INV"):
            apply_h(DioSol4(3, 5, 1, 3), HGen.H1INV)


class TestDecoratedOrbit:
    """Test decorated orbits and the decorated tree"""

    def test_root(self):
        assert DECORATED_ROOT.is_root
        assert str(DECORATED_ROOT) == "{1/0,1/0}"
        assert DECORATED_ROOT.pr() == ONE

    def test_rejects_non_solution(self):
        with pytest.raises(InvalidInputError, match="violates"):
            DecoratedOrbit(5, 2, 3, 1)

    def test_rejects_unordered(self):
        with pytest.raises(InvalidInputError, match="k1 >= k2"):
            DecoratedOrbit(3, 1, 5, 3)

    def test_actions(self):
        two = decorated_action(DECORATED_ROOT, Letter.A)
        assert two == DecoratedOrbit(2, 1, 1, 0)
        three = decorated_action(two, Letter.B)
        assert three == DecoratedOrbit(3, 1, 2, 1)
        assert decorated_action(three, Letter.B) == DecoratedOrbit(5, 3, 3, 1)

    def test_path_matches_plain_tree(self):
        for o in enumerate_to_level(8):
            d = pr_inverse(o)
            assert decorated_path_to_root(d) == path_to_root(o)


class TestPrInverse:
    """Test the section of the projection"""

    @pytest.mark.parametrize("k1,k2,expected", [
        (8, 3, DecoratedOrbit(8, 5, 3, 1)),
        (6, 5, DecoratedOrbit(6, 1, 5, 4)),
        (9, 2, DecoratedOrbit(9, 4, 2, 1)),
        (5, 3, DecoratedOrbit(5, 3, 3, 1)),
        (2, 1, DecoratedOrbit(2, 1, 1, 0)),
    ])
    def test_examples(self, k1, k2, expected):
        assert pr_inverse(Orbit(k1, k2)) == expected

    def test_bounded_and_projects_back(self):
        for k1, k2 in coprime_pairs(40):
            d = pr_inverse(Orbit(k1, k2))
            assert d.pr() == Orbit(k1, k2)
            assert d.sol.in_dp
            assert lemma_bounds_hold(d)

    def test_root_sentinel(self):
        with pytest.raises(InvalidInputError, match="root"):
            pr_inverse(ROOT)

    def test_bounded_solution_follows_order(self):
        assert bounded_solution(8, 3) == DioSol4(8, 3, 5, 1)
        assert bounded_solution(3, 8) == DioSol4(3, 8, 1, 5)


class TestPr1Inverse:
    """Test recovery of a decorated orbit from its left fraction"""

    def test_example(self):
        assert pr1_inverse(5, 3) == DecoratedOrbit(5, 3, 3, 1)
        assert pr1_inverse(6, 1) == DecoratedOrbit(6, 1, 5, 4)
        assert pr1_inverse(2, 1) == DecoratedOrbit(2, 1, 1, 0)

    def test_inverts_pr1(self):
        for k1, k2 in coprime_pairs(40, min_k=2):
            d = pr_inverse(Orbit(k1, k2))
            assert pr1_inverse(*d.pr1()) == d

    def test_rejects_bad_input(self):
        with pytest.raises(InvalidInputError, match="k1 > q1 >= 1"):
            pr1_inverse(5, 5)
        with pytest.raises(InvalidInputError, match="coprime"):
            pr1_inverse(6, 4)


class TestAuxiliarySystem:
    """Test the auxiliary system k1*a2 - k2*a1 = q1 - q2"""

    def test_examples(self):
        aux = solve_aux(DioSol4(3, 2, 1, 1))
        assert (aux.a1, aux.a2) == (3, 2)
        aux = solve_aux(DioSol4(5, 3, 3, 1))
        assert (aux.a1, aux.a2) == (1, 1)
        assert aux.residual == 0

    def test_unique_against_bruteforce(self):
        for k1, k2 in coprime_pairs(30, min_k=2):
            s = bounded_solution(k1, k2)
            found = solve_aux_bruteforce(s)
            assert found == [solve_aux(s)]

    def test_needs_min_k_two(self):
        with pytest.raises(InvalidInputError, match="min"):
            solve_aux(DioSol4(2, 1, 1, 0))


class TestExtension:
    """Test extension to the eight-variable system"""

    def test_examples(self):
        assert extend_to_8(DioSol4(3, 2, 1, 1)).as_tuple()[4:] == (4, 1, 0, 0)
        assert extend_to_8(DioSol4(5, 3, 3, 1)).as_tuple()[4:] == (1, 13, 2, 4)

    def test_unique_against_bruteforce(self):
        for k1, k2 in coprime_pairs(25, min_k=2):
            s = bounded_solution(k1, k2)
            ext = extend_to_8(s)
            assert ext.is_valid
            assert extend_to_8_bruteforce(s) == [ext]

    def test_violations_named(self):
        bad = ExtSol8(5, 3, 3, 1, 2, 13, 2, 4)
        assert "eq2" in bad.violations()
        assert "delta_identity" in bad.violations()
        assert not bad.is_valid

    def test_delta_identity(self):
        ext = extend_to_8(DioSol4(5, 3, 3, 1))
        assert ext.m1 + ext.m2 + ext.q3 == ext.k1 + ext.k2 - 1

    def test_rejects_small_side(self):
        with pytest.raises(InvalidInputError):
            extend_to_8(DioSol4(2, 1, 1, 0))
