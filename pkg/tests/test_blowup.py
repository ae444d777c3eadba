import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
"""
Tests for blowup module
"""

from math import gcd

import pytest
from germlab.core.blowup import (
    ResolutionGraph, blow_up_once, chart_resolve, delta, delta_complement_holds,
    delta_rel, engine_exponents, equisingular, graph_of, initial_state,
    is_degenerate, is_mumford_exceptional, multiplicity, quotient_resolution,
    resolve,
)
from germlab.core.chains import CenteredChain, WeightedChain
from germlab.core.diophantine import pr_inverse
from germlab.core.pairs_tree import EdgeLabel, Orbit, euclid_labels, n_euclid
from germlab.utils.errors import InvalidInputError


class TestResolve:
    """Test the blowup engine"""

    def test_five_three(self):
        res = resolve(5, 3)
        assert res.graph.weights == (3, 2, 1, 3)
        assert res.graph.branch_vertex_attached_to == 2
        assert res.sbar.as_tuple() == (5, 3, 3, 1)
        assert res.blowups == 4
        assert res.labels == [EdgeLabel.E2, EdgeLabel.E2, EdgeLabel.E1]
        assert res.multiplicity == 3

    def test_two_one(self):
        graph, sb, trace = resolve(2, 1)
        assert graph.weights == (2, 1)
        assert sb.as_tuple() == (2, 1, 1, 0)
        assert len(trace) == 2

    def test_one_one(self):
        res = resolve(1, 1)
        assert res.graph.weights == (1,)
        assert res.sbar.as_tuple() == (1, 1, 0, 0)
        assert res.blowups == 1

    def test_k_one_conventions(self):
        res = resolve(3, 1)
        assert res.graph.weights == (2, 2, 1)
        assert res.sbar.as_tuple() == (3, 1, 2, 0)
        assert is_degenerate(res.graph)

    def test_argument_order_normalized(self):
        assert resolve(3, 5).graph == resolve(5, 3).graph

    def test_rejects_bad_exponents(self):
        with pytest.raises(InvalidInputError, match="coprime"):
            resolve(4, 2)
        with pytest.raises(InvalidInputError, match="positive"):
            resolve(0, 1)

    def test_matches_decorated_tree(self):
        for k1 in range(2, 40):
            for k2 in range(1, k1):
                if gcd(k1, k2) != 1:
                    continue
                res = resolve(k1, k2)
                d = pr_inverse(Orbit(k1, k2))
                assert res.sbar.as_tuple() == (d.k1, d.k2, d.q1, d.q2)
                assert res.blowups == n_euclid(k1, k2) + 1
                assert res.labels == euclid_labels(Orbit(k1, k2))
                assert res.graph.chain.chain.d == 1
                assert is_mumford_exceptional(res.graph)


class TestEngineSteps:
    """Test single blowups and the state machine"""

    def test_first_step_creates_e1(self):
        state = blow_up_once(initial_state(5, 3))
        assert state.exponents == (2, 3)
        assert state.weights() == (1,)
        assert state.trace[0].label is EdgeLabel.E2
        assert state.trace[0].swapped

    def test_terminal_state_rejects_blowup(self):
        state = initial_state(1, 1)
        state = blow_up_once(state)
        assert state.terminal
        with pytest.raises(InvalidInputError, match="terminal"):
            blow_up_once(state)

    def test_graph_needs_terminal_state(self):
        with pytest.raises(InvalidInputError, match="not terminal"):
            graph_of(initial_state(5, 3))


class TestChartCrossCheck:
    """Test the integer engine against literal chart substitutions"""

    @pytest.mark.parametrize("k1,k2", [(2, 1), (3, 2), (5, 3), (7, 2), (8, 5)])
    def test_exponent_sequences_agree(self, k1, k2):
        chart = chart_resolve(k1, k2)
        assert chart.exponents == engine_exponents(k1, k2)
        assert chart.blowups == resolve(k1, k2).blowups

    def test_five_three_sequence(self):
        assert engine_exponents(5, 3) == ((5, 3), (2, 3), (2, 1), (1, 1))


class TestGraphPredicates:
    """Test equisingularity and degeneracy"""

    def test_equisingular_up_to_reversal(self):
        g = resolve(5, 3).graph
        flipped = ResolutionGraph(CenteredChain(WeightedChain((3,)), 1, WeightedChain((2, 3))))
        assert equisingular(g, flipped)
        assert not equisingular(g, resolve(7, 3).graph)

    def test_degenerate(self):
        assert is_degenerate(resolve(2, 1).graph)
        assert not is_degenerate(resolve(5, 3).graph)

    def test_multiplicity(self):
        assert multiplicity(5, 3) == 3
        assert multiplicity(2, 7) == 2


class TestQuotientsAndDelta:
    """Test cyclic quotient chains and the delta counts"""

    def test_quotient_resolution(self):
        assert quotient_resolution(7, 3).weights == (3, 2, 2)

    def test_delta_complement(self):
        for k in range(2, 50):
            for q in range(1, k):
                if gcd(k, q) == 1:
                    assert delta_complement_holds(k, q)

    def test_delta_rejects_bad_input(self):
        with pytest.raises(InvalidInputError):
            delta(4, 2)

    def test_delta_rel(self):
        assert delta_rel(6, 5, 2) == 2
        assert delta_rel(6, 5, 3) == 1
        assert delta_rel(6, 1, 2) == 0
        assert delta_rel(15, 13, 5) == 2

    def test_delta_rel_rejects_bad_split(self):
        with pytest.raises(InvalidInputError, match="k1 \\| k"):
            delta_rel(6, 5, 4)
        with pytest.raises(InvalidInputError, match="coprime to k1"):
            delta_rel(4, 3, 2)
