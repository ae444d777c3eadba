"""
Blowup resolution of x^k1 - y^k2 = 0 by chains of sigma-processes.

The strict transform of a coprime binomial stays a binomial x^A - y^B at a
chart origin, so a blowup is an integer update of (A, B) plus bookkeeping of
the exceptional components through the blown-up point:

- A > B: the new component becomes the {x=0} axis, the transform is x^(A-B) - y^B
- A < B: the new component becomes the {y=0} axis, the transform is x^A - y^(B-A)
- A = B = 1: one last blowup separates the transform; it then meets only the
  newest component, which carries the branch vertex b

Every component through the point loses 1 in self-intersection, the new one
enters at -1 between them, and E1 stays at the left end of the chain.
chart_resolve repeats the computation with literal polynomial substitutions.
"""

from dataclasses import dataclass, field, replace
from math import gcd
from typing import Dict, Iterator, List, Optional, Tuple

import sympy

from .chains import (
    CenteredChain,
    WeightedChain,
    hj_expand,
    is_contractible_to_smooth,
    pi1_order,
)
from .pairs_tree import EdgeLabel
from ..utils.errors import InvalidInputError, InvariantViolation
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Component:
    id: int
    self_intersection: int


@dataclass(frozen=True)
class BlowupStep:
    """One sigma-process; label is None for the final separating blowup"""

    index: int
    before: Tuple[int, int]
    after: Optional[Tuple[int, int]]
    label: Optional[EdgeLabel]
    swapped: bool
    created: int
    through: Tuple[int, ...]


@dataclass(frozen=True)
class ResolutionState:
    k1: int
    k2: int
    exponents: Tuple[int, int]
    components: Tuple[Component, ...] = ()
    comp_x: Optional[int] = None
    comp_y: Optional[int] = None
    terminal: bool = False
    trace: Tuple[BlowupStep, ...] = ()

    @property
    def current_exponents(self) -> Tuple[int, int]:
        """Exponents of the strict transform, reordered so k1' >= k2'"""
        a, b = self.exponents
        return (max(a, b), min(a, b))

    @property
    def attach_point(self) -> Tuple[int, ...]:
        """Ids of the components through the point the strict transform meets"""
        return tuple(c for c in (self.comp_x, self.comp_y) if c is not None)

    @property
    def blowups(self) -> int:
        return len(self.trace)

    def weights(self) -> Tuple[int, ...]:
        return tuple(-c.self_intersection for c in self.components)


@dataclass(frozen=True)
class SbarRecord:
    dlt0: int
    drt0: int
    dlt1: int
    drt1: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.dlt0, self.drt0, self.dlt1, self.drt1)


@dataclass(frozen=True)
class ResolutionGraph:
    """Centered chain plus the unweighted branch vertex b hanging off the center"""

    chain: CenteredChain
    component_ids: Tuple[int, ...] = ()

    @property
    def branch_vertex_attached_to(self) -> int:
        return self.chain.center_index

    @property
    def weights(self) -> Tuple[int, ...]:
        return self.chain.weights


@dataclass(frozen=True)
class Resolution:
    """Result of resolve(); unpacks as (graph, sbar, trace)"""

    k1: int
    k2: int
    graph: ResolutionGraph
    sbar: SbarRecord
    trace: Tuple[BlowupStep, ...] = field(default_factory=tuple)

    def __iter__(self) -> Iterator[object]:
        return iter((self.graph, self.sbar, self.trace))

    @property
    def blowups(self) -> int:
        return len(self.trace)

    @property
    def multiplicity(self) -> int:
        return multiplicity(self.k1, self.k2)

    @property
    def labels(self) -> List[EdgeLabel]:
        return [s.label for s in self.trace if s.label is not None]


def _require_pair(k1: int, k2: int) -> Tuple[int, int]:
    if k1 < 1 or k2 < 1:
        raise InvalidInputError(f"exponents must be positive: ({k1},{k2})")
    if gcd(k1, k2) != 1:
        raise InvalidInputError(f"exponents must be coprime: ({k1},{k2})")
    return max(k1, k2), min(k1, k2)


def initial_state(k1: int, k2: int) -> ResolutionState:
    a, b = _require_pair(k1, k2)
    return ResolutionState(k1=a, k2=b, exponents=(a, b))


def _insert(
    components: Tuple[Component, ...],
    through: Tuple[int, ...],
    new: Component,
) -> Tuple[Component, ...]:
    ids = [c.id for c in components]
    if not through:
        return components + (new,)
    if len(through) == 2:
        i, j = sorted(ids.index(t) for t in through)
        if j != i + 1:
            raise InvariantViolation("components through the point are not adjacent", actual=through)
        return components[: i + 1] + (new,) + components[j:]
    pos = ids.index(through[0])
    if pos == len(ids) - 1:
        return components + (new,)
    if pos == 0:
        return (new,) + components
    raise InvariantViolation("lone component through the point is interior", actual=through)


def blow_up_once(state: ResolutionState) -> ResolutionState:
    """
    Blow up the point where the strict transform is singular or tangent

    Raises:
        InvalidInputError: If the state is terminal
    """
    if state.terminal:
        raise InvalidInputError("resolution state is terminal")

    a, b = state.exponents
    through = state.attach_point
    new_id = len(state.components) + 1

    lowered = tuple(
        replace(c, self_intersection=c.self_intersection - 1) if c.id in through else c
        for c in state.components
    )
    components = _insert(lowered, through, Component(new_id, -1))

    before = state.current_exponents
    if a == b:
        if a != 1:
            raise InvariantViolation("equal exponents above 1", actual=(a, b))
        step = BlowupStep(len(state.trace) + 1, before, None, None, False, new_id, through)
        logger.debug(f"blowup {step.index}: {before} separated on E{new_id}")
        return replace(
            state,
            components=components,
            comp_x=None,
            comp_y=None,
            terminal=True,
            trace=state.trace + (step,),
        )

    if a > b:
        exponents = (a - b, b)
        comp_x, comp_y = new_id, state.comp_y
    else:
        exponents = (a, b - a)
        comp_x, comp_y = state.comp_x, new_id

    big, small = before
    label = EdgeLabel.E1 if big >= 2 * small else EdgeLabel.E2
    after = (max(exponents), min(exponents))
    swapped = big - small < small
    step = BlowupStep(len(state.trace) + 1, before, after, label, swapped, new_id, through)
    logger.debug(f"blowup {step.index}: {before} -> {after} ({label.value}) on E{new_id}")
    return replace(
        state,
        exponents=exponents,
        components=components,
        comp_x=comp_x,
        comp_y=comp_y,
        trace=state.trace + (step,),
    )


def run_to_terminal(state: ResolutionState) -> ResolutionState:
    while not state.terminal:
        state = blow_up_once(state)
    return state


def graph_of(state: ResolutionState) -> ResolutionGraph:
    """Dual graph of a terminal state, centered on the newest component"""
    if not state.terminal:
        raise InvalidInputError("resolution state is not terminal")
    ids = tuple(c.id for c in state.components)
    weights = state.weights()
    center = ids.index(state.trace[-1].created)
    chain = CenteredChain(
        WeightedChain(weights[:center]),
        weights[center],
        WeightedChain(weights[center + 1 :]),
    )
    return ResolutionGraph(chain, ids)


def sbar(state: ResolutionState) -> SbarRecord:
    """
    Continuants of the left and right parts of the exceptional chain

    Degenerate conventions: an empty right part gives (1, 0), so (k,1)
    germs land on (k, 1, k-1, 0) and the single blowup of (1,1) on (1,1,0,0).
    """
    chain = graph_of(state).chain
    return SbarRecord(chain.d_lt0, chain.d_rt0, chain.d_lt1, chain.d_rt1)


def resolve(k1: int, k2: int) -> Resolution:
    """
    Resolve x^k1 - y^k2 = 0

    Args:
        k1, k2: Coprime positive exponents, taken in either order

    Returns:
        Resolution(graph, sbar, trace); the trace has n_euclid(k1,k2) + 1 steps

    Raises:
        InvalidInputError: If the exponents are not coprime positive integers
    """
    state = run_to_terminal(initial_state(k1, k2))
    graph = graph_of(state)
    if graph.chain.center_weight != 1:
        raise InvariantViolation(
            "newest component is not a (-1)-curve",
            inputs={"k1": k1, "k2": k2},
            expected=1,
            actual=graph.chain.center_weight,
        )
    result = Resolution(state.k1, state.k2, graph, sbar(state), state.trace)
    logger.debug(f"resolved ({k1},{k2}): {graph.chain} in {result.blowups} blowups")
    return result


def is_degenerate(graph: ResolutionGraph) -> bool:
    """Degenerate chain: the center is the last vertex and every other weight is 2"""
    chain = graph.chain
    return not chain.right.weights and all(w == 2 for w in chain.left.weights)


def is_mumford_exceptional(graph: ResolutionGraph) -> bool:
    """The exceptional chain is negative definite with |det| = 1"""
    return is_contractible_to_smooth(graph.chain.chain)


def equisingular(g1: ResolutionGraph, g2: ResolutionGraph) -> bool:
    """Partially weighted graph isomorphism: same weights and center up to reversal"""
    w1, c1 = g1.weights, g1.branch_vertex_attached_to
    w2, c2 = g2.weights, g2.branch_vertex_attached_to
    if (w1, c1) == (w2, c2):
        return True
    return (tuple(reversed(w1)), len(w1) - 1 - c1) == (w2, c2)


def multiplicity(k1: int, k2: int) -> int:
    """Multiplicity of x^k1 - y^k2 at the origin"""
    return min(k1, k2)


def quotient_resolution(k: int, q: int) -> WeightedChain:
    """
    Minimal resolution chain of the cyclic quotient singularity A_{k,q}

    Raises:
        InvalidInputError: Unless k > q >= 1 and gcd(k, q) == 1
    """
    chain = hj_expand(k, q)
    order = pi1_order(chain)
    if order != k:
        raise InvariantViolation("quotient chain has wrong group order", inputs={"k": k, "q": q}, expected=k, actual=order)
    return chain


def delta(k: int, q: int) -> int:
    """
    Number of blowups at the moving point that regularize the quotient map
    along a section of A_{k,q}; equal to q

    Raises:
        InvalidInputError: Unless k > q >= 1 and gcd(k, q) == 1
    """
    if not k > q >= 1:
        raise InvalidInputError(f"delta needs k > q >= 1: ({k},{q})")
    if gcd(k, q) != 1:
        raise InvalidInputError(f"delta needs coprime k, q: ({k},{q})")
    return q


def delta_complement_holds(k: int, q: int) -> bool:
    """delta(k, q) + delta(k, k - q) == k"""
    return delta(k, q) + delta(k, k - q) == k


def delta_rel(k: int, q: int, k1: int) -> int:
    """
    Relative count for A_{k,q} over A_{k1,q mod k1}, where k = k1 * k2

    Writes q = m1*k1 + q1 with 0 <= q1 < k1 and returns m1, after asserting
    the self-intersection ledger -k + q = k1*(-k2 + m1) + q1.

    Raises:
        InvalidInputError: If k1 does not divide k, the cofactor is not coprime
            to k1, or q is not a unit below k
    """
    if k1 < 1 or k % k1:
        raise InvalidInputError(f"delta_rel needs k1 | k: k={k}, k1={k1}")
    k2 = k // k1
    if gcd(k1, k2) != 1:
        raise InvalidInputError(f"delta_rel needs k/k1 coprime to k1: k={k}, k1={k1}")
    if not k > q >= 1 or gcd(k, q) != 1:
        raise InvalidInputError(f"delta_rel needs 1 <= q < k coprime: ({k},{q})")
    m1, q1 = divmod(q, k1)
    if -k + q != k1 * (-k2 + m1) + q1:
        raise InvariantViolation("delta_rel ledger failed", inputs={"k": k, "q": q, "k1": k1})
    return m1


# Literal chart computation, used to validate the integer engine

_x, _y = sympy.symbols("x y")


@dataclass(frozen=True)
class ChartTrace:
    blowups: int
    exponents: Tuple[Tuple[int, int], ...]


def _strict_transform(g: sympy.Expr, var: sympy.Symbol) -> sympy.Expr:
    poly = sympy.Poly(g, _x, _y)
    idx = 0 if var == _x else 1
    m = min(monom[idx] for monom in poly.monoms())
    return sympy.expand(g / var**m)


def _binomial_exponents(h: sympy.Expr) -> Tuple[int, int]:
    pure: Dict[str, int] = {}
    for (ex, ey), _coeff in sympy.Poly(h, _x, _y).terms():
        if ey == 0 and ex > 0:
            pure["x"] = ex
        elif ex == 0 and ey > 0:
            pure["y"] = ey
        else:
            raise InvariantViolation("strict transform is not a binomial", actual=str(h))
    return pure["x"], pure["y"]


def chart_resolve(k1: int, k2: int) -> ChartTrace:
    """
    Resolve x^k1 - y^k2 by explicit substitutions in the two blowup charts

    Chart y -> x*y divides out x, chart x -> x*y divides out y; the state
    continues in whichever chart still has the strict transform through its
    origin, and stops when neither does.
    """
    a, b = _require_pair(k1, k2)
    f: sympy.Expr = _x**a - _y**b
    exponents: List[Tuple[int, int]] = [(a, b)]
    blowups = 0
    while True:
        blowups += 1
        for sub, var in (({_y: _x * _y}, _x), ({_x: _x * _y}, _y)):
            h = _strict_transform(sympy.expand(f.subs(sub)), var)
            if h.subs({_x: 0, _y: 0}) == 0:
                f = h
                exponents.append(_binomial_exponents(h))
                break
        else:
            return ChartTrace(blowups, tuple(exponents))


def engine_exponents(k1: int, k2: int) -> Tuple[Tuple[int, int], ...]:
    """Unnormalized exponent sequence of the integer engine, comparable to chart_resolve"""
    state = initial_state(k1, k2)
    seq = [state.exponents]
    while not state.terminal:
        state = blow_up_once(state)
        if not state.terminal:
            seq.append(state.exponents)
    return tuple(seq)
