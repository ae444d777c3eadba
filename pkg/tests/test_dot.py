import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
"""
Tests for DOT export against golden files
"""

from germlab.core.blowup import resolve
from germlab.core.chains import hj_expand, orbit_chain
from germlab.core.diophantine import pr_inverse
from germlab.core.pairs_tree import Orbit
from germlab.output.dot import chain_to_dot, resolution_to_dot, tree_to_dot


class TestDotGolden:
    """Rendered graphs match the checked-in golden files byte for byte"""

    def test_tree(self, golden):
        assert tree_to_dot(3) == golden("tree_level3.dot")

    def test_chain(self, golden):
        assert chain_to_dot(hj_expand(5, 3)) == golden("hj_5_3.dot")

    def test_resolution(self, golden):
        assert resolution_to_dot(resolve(5, 3)) == golden("resolution_5_3.dot")
        assert resolution_to_dot(resolve(2, 1)) == golden("resolution_2_1.dot")


class TestDotShape:
    """Test structural properties of the rendered graphs"""

    def test_decorated_labels(self):
        out = tree_to_dot(4, decorated=True)
        assert '"5_3" [label="{5/3,3/1}"];' in out
        assert out.count(" -> ") == 1 + 2 + 4

    def test_centered_chain_bold_center(self):
        out = chain_to_dot(orbit_chain(pr_inverse(Orbit(5, 3))), name="orbit")
        assert out.startswith("graph orbit {")
        assert 'v3 [label="1", style=bold];' in out

    def test_deterministic(self):
        assert tree_to_dot(6) == tree_to_dot(6)
        assert resolution_to_dot(resolve(13, 8)).endswith("}\n")
