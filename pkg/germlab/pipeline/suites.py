"""
Verification suites

Each suite replays one family of identities over a bounded sweep and records
every check in a CaseRecorder. Suite names follow the result they exercise;
aliases group them by module. The bound scales the sweep differently per
suite (see SUITES).
"""

from contextlib import contextmanager
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from ..core.blowup import (
    chart_resolve,
    delta,
    delta_complement_holds,
    delta_rel,
    engine_exponents,
    equisingular,
    is_degenerate,
    is_mumford_exceptional,
    multiplicity,
    quotient_resolution,
    resolve,
)
from ..core.chains import (
    chain_to_fraction,
    exact_det,
    hj_expand,
    intersection_matrix,
    orbit_chain,
    pi1_order,
    prefix_continuants,
    row_expansion_check,
)
from ..core.diophantine import (
    DECORATED_ROOT,
    DioSol4,
    HGen,
    apply_h,
    bounded_solution,
    decorated_action,
    extend_to_8,
    extend_to_8_bruteforce,
    lemma_bounds_hold,
    pr1_inverse,
    pr_inverse,
    solve_aux,
    solve_aux_bruteforce,
)
from ..core.monodromy import (
    ALLOWED_TAGS,
    EXCLUDED_TAGS,
    GermFamily,
    check_degree_bound,
    check_presentation,
    check_reduced,
    classify,
    enumerate_monodromy,
    family_hits,
    forced_facts_hold,
    pi1_data,
    smoothness_test,
    statement_cases,
    subcase_tag,
)
from ..core.pairs_tree import (
    Letter,
    Orbit,
    apply_action,
    euclid_labels,
    euclid_step,
    iter_levels,
    n_euclid,
    path_to_root,
)
from ..utils.errors import GermLabError, InvalidInputError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Failure:
    """One failed check; every field is rendered text so reports serialize losslessly"""

    case: str
    inputs: str
    expected: str
    actual: str


@dataclass
class VerifyReport:
    suite: str
    bound: int
    cases: int = 0
    failures: List[Failure] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


class CaseRecorder:
    """Counts checks and collects failures for one suite run"""

    def __init__(self, suite: str) -> None:
        self.suite = suite
        self.cases = 0
        self.failures: List[Failure] = []

    def check(self, case: str, ok: bool, inputs: Any = "", expected: Any = "", actual: Any = "") -> bool:
        self.cases += 1
        if not ok:
            failure = Failure(f"{self.suite}/{case}", str(inputs), str(expected), str(actual))
            self.failures.append(failure)
            logger.warning(
                f"{failure.case} failed: inputs={failure.inputs} "
                f"expected={failure.expected} actual={failure.actual}"
            )
        return ok

    def equal(self, case: str, expected: Any, actual: Any, inputs: Any = "") -> bool:
        return self.check(case, expected == actual, inputs, expected, actual)

    @contextmanager
    def guard(self, case: str, inputs: Any) -> Iterator[None]:
        """Turn a germ-lab error raised inside the block into a recorded failure"""
        try:
            yield
        except GermLabError as e:
            self.check(case, False, inputs, "no error", f"{type(e).__name__}: {e}")


SuiteFn = Callable[[CaseRecorder, int, int], None]


def _coprime_pairs(limit: int, min_k2: int = 1) -> Iterator[Tuple[int, int]]:
    """Coprime k1 >= k2 >= min_k2 with k1 <= limit"""
    for k1 in range(1, limit + 1):
        for k2 in range(min_k2, k1 + 1):
            if gcd(k1, k2) == 1:
                yield k1, k2


def _units(limit: int) -> Iterator[Tuple[int, int]]:
    """Coprime k > q >= 1 with k <= limit"""
    for k in range(2, limit + 1):
        for q in range(1, k):
            if gcd(k, q) == 1:
                yield k, q


def suite_tree(rec: CaseRecorder, bound: int, max_degree: int) -> None:
    """Orbit tree: replay, levels, step inverses, freeness"""
    for k1, k2 in _coprime_pairs(bound):
        o = Orbit(k1, k2)
        with rec.guard("replay", o):
            path = path_to_root(o)
            rec.equal("replay", o, path.replay(), o)
            rec.equal("path_length", n_euclid(k1, k2), len(path), o)
            rec.equal("level", n_euclid(k1, k2) + 1, o.level, o)
            if not o.is_terminal:
                parent, label = euclid_step(o)
                rec.equal("step_inverse", o, apply_action(parent, label.letter), o)

    max_level = min(14, max(3, bound // 20))
    seen: set = set()
    for level, orbits in iter_levels(max_level):
        expected = 1 if level == 1 else 2 ** (level - 2)
        rec.equal("level_count", expected, len(orbits), level)
        rec.equal("distinct", len(seen) + len(orbits), len(seen | set(orbits)), level)
        seen.update(orbits)


def suite_group_action(rec: CaseRecorder, bound: int, max_degree: int) -> None:
    """H action on solutions, pr and pr1 bijections, decorated tree commutation"""
    for k1, k2 in _coprime_pairs(bound):
        with rec.guard("bounded_solution", (k1, k2)):
            for s in {bounded_solution(k1, k2), bounded_solution(k2, k1)}:
                up = apply_h(s, HGen.H1)
                rec.check("h1_preserves", up.solves, s, 1, up.residual)
                rec.equal("h1inv_h1", s, apply_h(up, HGen.H1INV), s)
                rec.check("h2_preserves", apply_h(s, HGen.H2).solves, s)
                if s.k1 > s.k2:
                    rec.check("h1inv_preserves", apply_h(s, HGen.H1INV).solves, s)
                rec.check("in_dp", s.in_dp, s)

        o = Orbit(k1, k2)
        with rec.guard("pr_inverse", o):
            dec = pr_inverse(o)
            rec.equal("pr_pr_inverse", o, dec.pr(), o)
            rec.check("lemma_bounds", lemma_bounds_hold(dec), dec, "k2 <= q1+q2 < k1", dec.q1 + dec.q2)
            for letter in (Letter.A, Letter.B):
                rec.equal("commutation", apply_action(o, letter), decorated_action(dec, letter).pr(), (o, letter))
            if k1 >= 2:
                rec.equal("pr1_pr1_inverse", dec, pr1_inverse(k1, dec.q1), (k1, dec.q1))

    for k1 in range(2, bound + 1):
        for q1 in range(1, k1):
            if gcd(k1, q1) != 1:
                continue
            with rec.guard("pr1_inverse", (k1, q1)):
                dec = pr1_inverse(k1, q1)
                rec.equal("pr1_left", (k1, q1), dec.pr1(), (k1, q1))
                rec.equal("pr1_unique", dec, pr_inverse(dec.pr()), (k1, q1))

    # decorated tree built breadth first must sit over the plain tree
    max_level = min(20, max(3, bound // 10))
    replay_level = min(max_level, 12)
    decorated = [DECORATED_ROOT]
    for level, orbits in iter_levels(max_level):
        if level == 2:
            decorated = [decorated_action(DECORATED_ROOT, Letter.A)]
        elif level > 2:
            decorated = [decorated_action(d, letter) for d in decorated for letter in (Letter.A, Letter.B)]
        rec.equal("decorated_tree", [str(o) for o in orbits], [str(d.pr()) for d in decorated], level)
        if level <= replay_level:
            for o, d in zip(orbits, decorated):
                rec.equal("tree_isomorphism", d, pr_inverse(o), o)


def suite_extension(rec: CaseRecorder, bound: int, max_degree: int) -> None:
    """Auxiliary system and the eight-variable extension against brute force"""
    for k1 in range(2, bound + 1):
        for k2 in range(2, bound + 1):
            if gcd(k1, k2) != 1:
                continue
            s = bounded_solution(k1, k2)
            with rec.guard("extend", s):
                aux = solve_aux(s)
                rec.equal("aux_unique", [aux], solve_aux_bruteforce(s), s)
                ext = extend_to_8(s)
                rec.equal("ext_unique", [ext], extend_to_8_bruteforce(s), s)
                rec.equal("q3_closed_form", aux.a1 + aux.a2 - 1, ext.q3, s)
                rec.equal("delta_identity", k1 + k2 - 1, ext.m1 + ext.m2 + ext.q3, s)


def suite_chains(rec: CaseRecorder, bound: int, max_degree: int) -> None:
    """Continued fractions, continuant identities, center-row expansion, determinant sign"""
    for k, q in _units(bound):
        with rec.guard("hj", (k, q)):
            c = hj_expand(k, q)
            rec.equal("round_trip", (k, q), chain_to_fraction(c), (k, q))
            rec.equal("continuant", k, c.d, (k, q))
            rec.equal("reversal", k, c.reversed().d, (k, q))
            rec.equal("drop_origin", q, c.drop_first().d, (k, q))
            rec.check("weights_ge_2", min(c.weights) >= 2, (k, q), ">= 2", list(c.weights))
            minors = prefix_continuants(c.weights)
            rec.check("minors_increase", all(a < b for a, b in zip(minors, minors[1:])), (k, q), "increasing", minors)

    det_limit = min(bound, 40)
    for k, q in _units(det_limit):
        c = hj_expand(k, q)
        if len(c) <= 12:
            rec.equal("det_sign", (-1) ** len(c) * c.d, exact_det(intersection_matrix(c)), (k, q))

    max_level = min(12, max(3, bound // 40))
    for _, orbits in iter_levels(max_level):
        for o in orbits:
            with rec.guard("center_identity", o):
                cc = orbit_chain(pr_inverse(o))
                rec.equal("center_identity", 1, row_expansion_check(cc), o)
                rec.equal("pi1_order", 1, pi1_order(cc.chain), o)


def suite_resolution(rec: CaseRecorder, bound: int, max_degree: int) -> None:
    """Blowup engine against the continued-fraction model and the chart oracle"""
    previous = None
    for k1, k2 in _coprime_pairs(bound):
        o = Orbit(k1, k2)
        with rec.guard("resolve", o):
            res = resolve(k1, k2)
            model = orbit_chain(pr_inverse(o))
            rec.equal("dual_graph", model.weights, res.graph.weights, o)
            rec.equal("center", model.center_index, res.graph.branch_vertex_attached_to, o)
            rec.equal("blowups", n_euclid(k1, k2) + 1, res.blowups, o)
            rec.equal("trace_labels", euclid_labels(o), res.labels, o)
            rec.check("sbar_in_dp", DioSol4(*res.sbar.as_tuple()).in_dp, o, "in D_P", res.sbar.as_tuple())
            if res.blowups >= 2:
                rec.check("sbar_order", res.sbar.dlt0 > res.sbar.drt0, o, "dlt0 > drt0", res.sbar.as_tuple())
            rec.check("mumford", is_mumford_exceptional(res.graph), o, True, res.graph.weights)
            if len(res.graph.weights) <= 12:
                det = exact_det(intersection_matrix(res.graph.chain.chain))
                rec.equal("abs_det", 1, abs(det), o)
            rec.equal("degenerate", k2 == 1, is_degenerate(res.graph), o)
            rec.equal("multiplicity", k2, multiplicity(k1, k2), o)
            rec.check("equisingular_self", equisingular(res.graph, resolve(k2, k1).graph), o)
            if previous is not None:
                rec.check("equisingular_distinct", not equisingular(previous.graph, res.graph), o)
            if k1 <= 12:
                chart = chart_resolve(k1, k2)
                rec.equal("chart_exponents", engine_exponents(k1, k2), chart.exponents, o)
                rec.equal("chart_blowups", res.blowups, chart.blowups, o)
            previous = res


def suite_delta(rec: CaseRecorder, bound: int, max_degree: int) -> None:
    """Delta counts and the relative ledger"""
    for k, q in _units(bound):
        with rec.guard("delta", (k, q)):
            rec.equal("delta", q, delta(k, q), (k, q))
            rec.check("delta_complement", delta_complement_holds(k, q), (k, q))
            rec.equal("quotient_order", k, pi1_order(quotient_resolution(k, q)), (k, q))

    for k, q in _units(min(bound, 120)):
        for k1 in range(2, k):
            if k % k1 or gcd(k1, k // k1) != 1:
                continue
            with rec.guard("delta_rel", (k, q, k1)):
                rec.equal("delta_rel", (q - q % k1) // k1, delta_rel(k, q, k1), (k, q, k1))


def suite_generation(rec: CaseRecorder, bound: int, max_degree: int) -> None:
    """A permutation and a transposition generating S_d: at most two cycles, product rule"""
    for d in range(3, bound + 1):
        for g1, tau, verdict in statement_cases(d):
            inputs = (d, str(g1), str(tau))
            if verdict.generates:
                rec.check("cycle_count", verdict.t <= 2, inputs, "t <= 2", verdict.t)
            rec.check("product_rule", verdict.rule_holds, inputs, "rule", verdict.product_cycle_type)


def suite_classification(rec: CaseRecorder, bound: int, max_degree: int) -> None:
    """Germ classification against exhaustive enumeration, subcase exclusions, degree bound"""
    for k1, k2 in _coprime_pairs(bound):
        if k1 + k2 > bound:
            continue
        o = Orbit(k1, k2)
        with rec.guard("classify", o):
            by_degree: Dict[int, GermFamily] = {h.degree: h.family for h in family_hits(k1, k2)}
            data = pi1_data(k1, k2)
            top = min(multiplicity(k1, k2) + 1, max_degree)
            if multiplicity(k1, k2) == 1:
                g = classify(k1, k2, max_degree=max_degree)
                rec.equal("double", (GermFamily.DOUBLE, 2, 1), (g.family, g.degree, g.class_count), o)
            else:
                rec.check("no_double", by_degree.get(2) is not GermFamily.DOUBLE, o)
            for d in range(3, top + 1):
                admissible = enumerate_monodromy(d, data.k_lt, data.k_rt, max_degree=max_degree)
                smooth = [x for x in admissible if smoothness_test(x, data)]
                rec.equal("class_count", 1 if d in by_degree else 0, len(smooth), (k1, k2, d))
                for x in admissible:
                    rec.check("degree_bound", check_degree_bound(x, data), (k1, k2, str(x)))
                    rec.equal("reduced_relations", [], check_reduced(x, k1, k2), (k1, k2, str(x)))
                for x in smooth:
                    tag = subcase_tag(x, data)
                    rec.check("excluded_tag", tag not in EXCLUDED_TAGS, (k1, k2, str(x)), "allowed tag", tag)
                    rec.check("allowed_tag", tag in ALLOWED_TAGS, (k1, k2, str(x)), sorted(ALLOWED_TAGS), tag)
                    rec.check("forced_facts", forced_facts_hold(x, data), (k1, k2, str(x)), True, tag)
                    rec.equal("full_relations", [], check_presentation(x, k1, k2), (k1, k2, str(x)))

    named = [((3, 2), GermFamily.N, 3), ((6, 5), GermFamily.O, 5), ((5, 3), GermFamily.NONE, 0)]
    for (k1, k2), family, degree in named:
        if k1 + k2 > bound:
            continue
        with rec.guard("named", (k1, k2)):
            g = classify(k1, k2, max_degree=max_degree)
            rec.equal("named_family", (family, degree, g.expected_count), (g.family, g.degree, g.class_count), (k1, k2))


@dataclass(frozen=True)
class Suite:
    name: str
    run: SuiteFn
    bound_meaning: str
    # exhaustive suites stop here whatever bound is requested
    max_bound: Optional[int] = None


SUITES: Dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("prop1-1", suite_tree, "max k1 of the pair sweep"),
        Suite("thm0-2", suite_group_action, "max k1; tree sweep to level bound/10 (at most 20)"),
        Suite("thm0-3", suite_extension, "max k1 and k2"),
        Suite("stmt3-2", suite_chains, "max k of the (k,q) sweep"),
        Suite("thm4-4", suite_resolution, "max k1"),
        Suite("lem4-6", suite_delta, "max k"),
        Suite("stmt5-3", suite_generation, "max degree d (at most 7)", max_bound=7),
        Suite("thm0-4", suite_classification, "max k1+k2 (at most 12)", max_bound=12),
    ]
}

ALIASES: Dict[str, List[str]] = {
    "tree": ["prop1-1"],
    "diophantine": ["thm0-2", "thm0-3"],
    "chains": ["stmt3-2"],
    "blowup": ["thm4-4", "lem4-6"],
    "monodromy": ["stmt5-3", "thm0-4"],
    "all": sorted(SUITES),
}


def expand_names(names: List[str]) -> List[str]:
    """
    Resolve suite names and aliases to a sorted list of distinct suite names

    Raises:
        InvalidInputError: If a name is neither a suite nor an alias
    """
    out = set()
    for name in names:
        if name in SUITES:
            out.add(name)
        elif name in ALIASES:
            out.update(ALIASES[name])
        else:
            known = ", ".join(sorted(SUITES) + sorted(ALIASES))
            raise InvalidInputError(f"unknown suite {name!r}; known: {known}")
    return sorted(out)
