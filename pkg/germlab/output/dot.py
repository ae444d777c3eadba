"""
Graphviz DOT export for orbit trees, weighted chains and resolution graphs

Output is plain text with a fixed vertex and edge order, so the same input
always renders byte for byte the same. Lay it out with e.g.

    germ-lab resolve --k1 5 --k2 3 --format dot > res.gv
    dot -Tpng -O res.gv
"""

from typing import List, Optional, Sequence, Union

from ..core.blowup import Resolution
from ..core.chains import CenteredChain, WeightedChain
from ..core.diophantine import pr_inverse
from ..core.pairs_tree import Orbit, euclid_step, iter_levels

INDENT = "    "


def _node_id(o: Orbit) -> str:
    return f'"{o.k1}_{o.k2}"'


def _chain_lines(weights: Sequence[int], center: Optional[int]) -> List[str]:
    lines = [f"{INDENT}rankdir=LR;", f"{INDENT}node [shape=circle];"]
    for i, w in enumerate(weights):
        attrs = f'label="{w}"'
        if i == center:
            attrs += ", style=bold"
        lines.append(f"{INDENT}v{i + 1} [{attrs}];")
    for i in range(1, len(weights)):
        lines.append(f"{INDENT}v{i} -- v{i + 1};")
    return lines


def tree_to_dot(max_level: int, decorated: bool = False) -> str:
    """
    Orbit tree down to max_level, edges pointing toward {1,1}

    Edges carry their Euclid label (ε1/ε2). With decorated=True vertices are
    labeled {k1/q1,k2/q2} instead of {k1,k2}.
    """
    lines = ["digraph orbits {", f"{INDENT}rankdir=BT;"]
    for level, orbits in iter_levels(max_level):
        for o in orbits:
            label = str(pr_inverse(o)) if decorated else str(o)
            lines.append(f'{INDENT}{_node_id(o)} [label="{label}"];')
            if level >= 2:
                parent, edge = euclid_step(o)
                lines.append(f'{INDENT}{_node_id(o)} -> {_node_id(parent)} [label="{edge.symbol}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def chain_to_dot(chain: Union[WeightedChain, CenteredChain], name: str = "chain") -> str:
    """Weighted chain as an undirected path; a centered chain draws its center bold"""
    center = chain.center_index if isinstance(chain, CenteredChain) else None
    lines = [f"graph {name} {{"] + _chain_lines(chain.weights, center) + ["}"]
    return "\n".join(lines) + "\n"


def resolution_to_dot(res: Resolution) -> str:
    """Partially weighted resolution graph: the chain plus the unweighted vertex b"""
    chain = res.graph.chain
    center = chain.center_index
    lines = ["graph resolution {"] + _chain_lines(chain.weights, center)
    lines.append(f'{INDENT}b [label="b", shape=doublecircle];')
    lines.append(f"{INDENT}b -- v{center + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
