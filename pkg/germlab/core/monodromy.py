"""
Monodromy of germs branched along x^k1 - y^k2 = 0.

The local fundamental group of the complement is presented on generators
x0..xn: x1..xn follow the exceptional chain of the resolution, x0 is the
loop around the strict transform. After eliminating everything but
x_lt = x_{n0-1}, x0 and x_rt = x_{n0+1}, a germ of degree d >= 3 is a triple
(a, t, b) in S_d with

    a*t*b = id, t a transposition, <a, t, b> = S_d,
    order(a) | k_lt, order(b) | k_rt

(the central element x_{n0} dies because S_d has trivial center). The
cover is smooth exactly when the quotient chain it induces over the center
contracts to a smooth point; smoothness_ledger does that arithmetic.

Permutations are sympy Permutations on 0..d-1; products use sympy's
left-to-right convention, so a*t*b means "apply a, then t, then b".
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import factorial, gcd, isqrt, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.free_groups import FreeGroupElement, free_group
from sympy.combinatorics.named_groups import SymmetricGroup
from sympy.utilities.iterables import partitions

from .blowup import multiplicity, resolve
from .chains import CenteredChain, WeightedChain, hj_expand, is_positive_definite
from ..utils.errors import EnumerationRefused, InvalidInputError, InvariantViolation
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

DEFAULT_MAX_DEGREE = 8

ALLOWED_TAGS = frozenset({"(2,1)_{2_0}", "(1,2)_{1_1}", "(1,2)_{0_1}"})

EXCLUDED_TAGS = frozenset(
    {
        "(2,1)_{2_1}",
        "(1,2)_{1_2}",
        "(2,1)_{0_0}",
        "(1,2)_{0_0}",
        "(2,1)_{1_1}",
        "(2,1)_{0_1}",
        "(2,1)_{1_0}",
        "(1,2)_{1_0}",
        "(1,2)_{0_2}",
    }
)


# Permutation helpers


def identity(d: int) -> Permutation:
    return Permutation(list(range(d)))


def cycle_lengths(p: Permutation) -> Tuple[int, ...]:
    """Cycle lengths, fixed points included, longest first"""
    out: List[int] = []
    for length, count in p.cycle_structure.items():
        out.extend([length] * count)
    return tuple(sorted(out, reverse=True))


def cycle_count(p: Permutation) -> int:
    return len(cycle_lengths(p))


def is_transposition(p: Permutation) -> bool:
    return len(p.cyclic_form) == 1 and len(p.cyclic_form[0]) == 2


def cycle_notation(p: Permutation) -> str:
    """1-based cycle notation, e.g. (1 2 3)(4 5); the identity is ()"""
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


def transpositions(d: int) -> List[Permutation]:
    return [Permutation(i, j, size=d) for i in range(d) for j in range(i + 1, d)]


def generates_symmetric(gens: Sequence[Permutation], d: int) -> bool:
    """True iff gens generate all of S_d"""
    if d <= 1:
        return True
    return PermutationGroup(list(gens)).order() == factorial(d)


# Local fundamental group data and presentations


@dataclass(frozen=True)
class LocalPi1Data:
    """Cyclic quotient data (k_lt, q_lt) and (k_rt, q_rt) around the center"""

    k_lt: int
    q_lt: int
    k_rt: int
    q_rt: int
    degree_bound: int

    def __post_init__(self) -> None:
        residual = self.k_lt * self.k_rt - self.k_lt * self.q_rt - self.k_rt * self.q_lt
        if residual != 1:
            raise InvalidInputError(
                f"k_lt*k_rt - k_lt*q_rt - k_rt*q_lt must be 1, got {residual}: {self.as_tuple()}"
            )

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.k_lt, self.q_lt, self.k_rt, self.q_rt)

    def side(self, name: str) -> Tuple[int, int]:
        if name == "lt":
            return self.k_lt, self.q_lt
        return self.k_rt, self.q_rt


@dataclass
class Presentation:
    generators: Tuple[FreeGroupElement, ...]
    relations: List[Tuple[str, FreeGroupElement]]
    n0: int = 0
    weights: Tuple[int, ...] = ()

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(str(g) for g in self.generators)


@dataclass
class ReducedPresentation:
    data: LocalPi1Data
    generators: Tuple[FreeGroupElement, ...]
    relations: List[Tuple[str, FreeGroupElement]]


def _commutator(u: FreeGroupElement, v: FreeGroupElement) -> FreeGroupElement:
    return u**-1 * v**-1 * u * v


def evaluate(word: FreeGroupElement, images: Dict[str, Permutation], d: int) -> Permutation:
    """Evaluate a free-group word on permutations, left to right"""
    result = identity(d)
    for symbol, exp in word.array_form:
        result = result * images[str(symbol)] ** exp
    return result


def local_pi1_presentation(k1: int, k2: int) -> Presentation:
    """
    Presentation of the local fundamental group from the resolution graph

    Generators x0..xn; relations, in order:
      - [x_i, x_{i+1}] for 1 <= i < n, and [x0, x_{n0}]           (n)
      - x_{n0}^-1 x_{n0-1} x0 x_{n0+1}                            (1)
      - x_{i-1} x_i^(-w_i) x_{i+1} for i != n0                    (n-1)
    A neighbor that does not exist on the chain is left out of its word.
    """
    res = resolve(k1, k2)
    weights = res.graph.weights
    n = len(weights)
    n0 = res.graph.chain.n0
    _, *gens = free_group(", ".join(f"x{i}" for i in range(n + 1)))
    x = tuple(gens)
    one = x[0] ** 0

    def nb(i: int) -> FreeGroupElement:
        return x[i] if 1 <= i <= n else one

    relations: List[Tuple[str, FreeGroupElement]] = []
    for i in range(1, n):
        relations.append((f"[x{i},x{i + 1}]", _commutator(x[i], x[i + 1])))
    relations.append((f"[x0,x{n0}]", _commutator(x[0], x[n0])))
    relations.append(("center", x[n0] ** -1 * nb(n0 - 1) * x[0] * nb(n0 + 1)))
    for i in range(1, n + 1):
        if i == n0:
            continue
        relations.append((f"weight{i}", nb(i - 1) * x[i] ** (-weights[i - 1]) * nb(i + 1)))
    return Presentation(x, relations, n0, weights)


@lru_cache(maxsize=4096)
def pi1_data(k1: int, k2: int) -> LocalPi1Data:
    """(k_lt, q_lt, k_rt, q_rt) read off the resolution of x^k1 - y^k2"""
    res = resolve(k1, k2)
    c = res.graph.chain
    return LocalPi1Data(c.d_lt0, c.d_lt1, c.d_rt0, c.d_rt1, multiplicity(k1, k2) + 1)


def reduced_presentation(k1: int, k2: int) -> ReducedPresentation:
    """
    Three-generator presentation on x_lt, x0, x_rt

    With z = x_lt*x0*x_rt (the image of x_{n0}) the relations are that z is
    central and z^(-q_lt)*x_lt^k_lt = z^(-q_rt)*x_rt^k_rt = 1. Sending z to the
    identity leaves x_lt^k_lt = x_rt^k_rt = 1.
    """
    data = pi1_data(k1, k2)
    _, x_lt, x0, x_rt = free_group("x_lt, x0, x_rt")
    z = x_lt * x0 * x_rt
    relations = [
        ("[z,x_lt]", _commutator(z, x_lt)),
        ("[z,x0]", _commutator(z, x0)),
        ("[z,x_rt]", _commutator(z, x_rt)),
        ("left", z ** (-data.q_lt) * x_lt**data.k_lt),
        ("right", z ** (-data.q_rt) * x_rt**data.k_rt),
    ]
    return ReducedPresentation(data, (x_lt, x0, x_rt), relations)


# Monodromy data


@dataclass(frozen=True)
class MonodromyDatum:
    """Images of x_lt, x0, x_rt in S_d"""

    a: Permutation
    t: Permutation
    b: Permutation

    def __post_init__(self) -> None:
        if not (self.a.size == self.t.size == self.b.size):
            raise InvalidInputError("a, t, b must act on the same degree")
        if not is_transposition(self.t):
            raise InvalidInputError(f"t must be a transposition: {cycle_notation(self.t)}")
        if not (self.a * self.t * self.b).is_Identity:
            raise InvalidInputError("a*t*b must be the identity")

    @property
    def degree(self) -> int:
        return int(self.a.size)

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return (tuple(self.a.array_form), tuple(self.t.array_form), tuple(self.b.array_form))

    def cycles(self) -> Dict[str, str]:
        return {"a": cycle_notation(self.a), "t": cycle_notation(self.t), "b": cycle_notation(self.b)}

    def __str__(self) -> str:
        c = self.cycles()
        return f"a={c['a']} t={c['t']} b={c['b']}"


def is_admissible(datum: MonodromyDatum, data: LocalPi1Data) -> bool:
    """Order conditions plus full generation of S_d"""
    if data.k_lt % datum.a.order() or data.k_rt % datum.b.order():
        return False
    return generates_symmetric([datum.a, datum.t, datum.b], datum.degree)


def extend_datum(datum: MonodromyDatum, k1: int, k2: int) -> Dict[str, Permutation]:
    """
    Extend (a, t, b) to every generator of local_pi1_presentation

    x_{n0} goes to the identity; the weight relations then give each chain
    generator as a product of its two inner neighbors, working outward.

    Raises:
        InvalidInputError: If the chain has nothing on one side of the center
    """
    pres = local_pi1_presentation(k1, k2)
    n, n0, w = len(pres.weights), pres.n0, pres.weights
    if n0 == 1 or n0 == n:
        raise InvalidInputError(f"({k1},{k2}) has no chain vertex on one side of the center")
    d = datum.degree
    img: Dict[int, Permutation] = {0: datum.t, n0: identity(d), n0 - 1: datum.a, n0 + 1: datum.b}
    for i in range(n0 - 1, 1, -1):
        img[i - 1] = img[i + 1] ** -1 * img[i] ** w[i - 1]
    for i in range(n0 + 1, n):
        img[i + 1] = img[i] ** w[i - 1] * img[i - 1] ** -1
    return {f"x{i}": p for i, p in img.items()}


def check_presentation(datum: MonodromyDatum, k1: int, k2: int) -> List[str]:
    """Names of the relations of the full presentation that the extended datum breaks"""
    pres = local_pi1_presentation(k1, k2)
    images = extend_datum(datum, k1, k2)
    d = datum.degree
    return [name for name, word in pres.relations if not evaluate(word, images, d).is_Identity]


def check_reduced(datum: MonodromyDatum, k1: int, k2: int) -> List[str]:
    """Names of the reduced relations that (a, t, b) breaks"""
    red = reduced_presentation(k1, k2)
    images = {"x_lt": datum.a, "x0": datum.t, "x_rt": datum.b}
    d = datum.degree
    return [name for name, word in red.relations if not evaluate(word, images, d).is_Identity]


# Generation by a permutation and a transposition


@dataclass(frozen=True)
class SymmVerdict:
    generates: bool
    t: int
    product_cycle_type: Tuple[int, ...]

    @property
    def rule_holds(self) -> bool:
        """Generation forces t <= 2; t = 2 gives a d-cycle product, t = 1 two cycles"""
        if not self.generates:
            return True
        if self.t == 2:
            return len(self.product_cycle_type) == 1
        if self.t == 1:
            return len(self.product_cycle_type) == 2
        return False


def symm_classify(g1: Permutation, g2: Permutation) -> SymmVerdict:
    """
    Does a permutation together with a transposition generate S_d

    Args:
        g1: Any permutation of degree d
        g2: A transposition of degree d

    Returns:
        SymmVerdict with the generation answer, the number t of cycles of g1
        (fixed points counted) and the cycle type of g1*g2
    """
    if not is_transposition(g2):
        raise InvalidInputError(f"g2 must be a transposition: {cycle_notation(g2)}")
    if g1.size != g2.size:
        raise InvalidInputError("g1 and g2 must act on the same degree")
    d = int(g1.size)
    return SymmVerdict(
        generates=generates_symmetric([g1, g2], d),
        t=cycle_count(g1),
        product_cycle_type=cycle_lengths(g1 * g2),
    )


def partition_representative(parts: Sequence[int], d: int) -> Permutation:
    """Permutation with the given cycle type on consecutive points, longest cycle first"""
    cycles = []
    start = 0
    for length in sorted(parts, reverse=True):
        if length > 1:
            cycles.append(list(range(start, start + length)))
        start += length
    if not cycles:
        return identity(d)
    return Permutation(cycles, size=d)


def cycle_types(d: int) -> List[Tuple[int, ...]]:
    """Every partition of d, as descending tuples"""
    out = []
    for p in partitions(d):
        parts: List[int] = []
        for length, count in p.items():
            parts.extend([length] * count)
        out.append(tuple(sorted(parts, reverse=True)))
    return sorted(out, reverse=True)


def statement_cases(d: int) -> List[Tuple[Permutation, Permutation, SymmVerdict]]:
    """symm_classify over one g1 per cycle type and every transposition of S_d"""
    out = []
    taus = transpositions(d)
    for parts in cycle_types(d):
        g1 = partition_representative(parts, d)
        for tau in taus:
            out.append((g1, tau, symm_classify(g1, tau)))
    return out


# Exhaustive enumeration


def _joins_all(a: Permutation, t: Permutation) -> bool:
    # <a, t> is transitive iff a has one cycle, or two that t connects
    cycles = a.full_cyclic_form
    if len(cycles) == 1:
        return True
    if len(cycles) != 2:
        return False
    i, j = t.cyclic_form[0]
    first = set(cycles[0])
    return (i in first) != (j in first)


def _canonical(a: Permutation, t: Permutation, centralizer: List[Permutation]) -> MonodromyDatum:
    best: Optional[MonodromyDatum] = None
    for c in centralizer:
        tc = t ^ c
        cand = MonodromyDatum(a, tc, (a * tc) ** -1)
        if best is None or cand.key() < best.key():
            best = cand
    assert best is not None
    return best


def _enumerate_for_type(parts: Tuple[int, ...], d: int, k_rt: int) -> List[MonodromyDatum]:
    a = partition_representative(parts, d)
    centralizer: Optional[List[Permutation]] = None
    found: Dict[Tuple[Tuple[int, ...], ...], MonodromyDatum] = {}
    for t in transpositions(d):
        if not _joins_all(a, t):
            continue
        b = (a * t) ** -1
        if k_rt % b.order():
            continue
        if not generates_symmetric([a, t], d):
            continue
        if centralizer is None:
            centralizer = list(SymmetricGroup(d).centralizer(PermutationGroup([a])).generate())
        datum = _canonical(a, t, centralizer)
        found.setdefault(datum.key(), datum)
    return list(found.values())


def enumerate_monodromy(
    d: int,
    k_lt: int,
    k_rt: int,
    max_degree: int = DEFAULT_MAX_DEGREE,
    workers: int = 1,
) -> List[MonodromyDatum]:
    """
    All monodromy data of degree d up to simultaneous conjugation

    Args:
        d: Degree, at least 3
        k_lt: order(a) must divide it
        k_rt: order(b) must divide it
        max_degree: Exhaustive search cap
        workers: Threads; the search is split by the cycle type of a

    Returns:
        Canonical representatives (lexicographically least image tuples),
        sorted by that key

    Raises:
        InvalidInputError: If d < 3
        EnumerationRefused: If d > max_degree
    """
    if d < 3:
        raise InvalidInputError(f"enumeration needs degree >= 3, got {d}")
    if d > max_degree:
        logger.warning(f"refusing exhaustive enumeration at degree {d} (cap {max_degree})")
        raise EnumerationRefused(d, max_degree)

    types = [p for p in cycle_types(d) if k_lt % lcm(*p) == 0]
    if workers > 1 and len(types) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda p: _enumerate_for_type(p, d, k_rt), types))
    else:
        chunks = [_enumerate_for_type(p, d, k_rt) for p in types]

    result = sorted((x for chunk in chunks for x in chunk), key=lambda x: x.key())
    logger.debug(f"degree {d}, k_lt={k_lt}, k_rt={k_rt}: {len(result)} classes")
    return result


# Smoothness of the cover


@dataclass(frozen=True)
class UpstairsPoint:
    """Preimage of a contracted side point: A_{k,q} with k = k_side / cycle length"""

    side: str
    cycle_length: int
    k: int
    q: int
    m: int

    @property
    def singular(self) -> bool:
        return self.k > 1


@dataclass(frozen=True)
class SmoothnessLedger:
    center: int
    points: Tuple[UpstairsPoint, ...]
    chain: Optional[CenteredChain]
    smooth: bool

    @property
    def singular_points(self) -> Tuple[UpstairsPoint, ...]:
        return tuple(p for p in self.points if p.singular)


def _upstairs(side: str, perm: Permutation, k_side: int, q_side: int) -> List[UpstairsPoint]:
    out = []
    for length in cycle_lengths(perm):
        if k_side % length:
            raise InvalidInputError(f"cycle length {length} does not divide k_{side}={k_side}")
        k = k_side // length
        q = q_side % k
        out.append(UpstairsPoint(side, length, k, q, (q_side - q) // k))
    return out


def smoothness_ledger(datum: MonodromyDatum, data: LocalPi1Data) -> SmoothnessLedger:
    """
    Self-intersection ledger of the cover over the center

    Each cycle of a (resp. b) is a point over the left (right) quotient
    singularity; with l its length it is of type A_{k,q}, k = k_side / l,
    q = q_side mod k, and it contributes m = (q_side - q) / k to the center:

        center = -d + sum of m over all points

    Smooth iff center == -1, at most two points are singular, and the chain
    reversed hj(first) + [1] + hj(second) has continuant 1 and is positive
    definite.

    Raises:
        InvalidInputError: If a cycle length does not divide its k
    """
    points = tuple(
        _upstairs("lt", datum.a, data.k_lt, data.q_lt) + _upstairs("rt", datum.b, data.k_rt, data.q_rt)
    )
    center = -datum.degree + sum(p.m for p in points)
    singular = [p for p in points if p.singular]
    if len(singular) > 2:
        return SmoothnessLedger(center, points, None, False)

    left = hj_expand(singular[0].k, singular[0].q).reversed() if singular else WeightedChain()
    right = hj_expand(singular[1].k, singular[1].q) if len(singular) == 2 else WeightedChain()
    chain = CenteredChain(left, -center, right)
    full = chain.chain
    smooth = center == -1 and full.d == 1 and is_positive_definite(full)
    return SmoothnessLedger(center, points, chain, smooth)


def smoothness_test(datum: MonodromyDatum, data: LocalPi1Data) -> bool:
    return smoothness_ledger(datum, data).smooth


def subcase_tag(datum: MonodromyDatum, data: LocalPi1Data) -> str:
    """
    "(t_lt,t_rt)_{x_y}": cycle counts of a and b, then how many points over
    each side are singular
    """
    lt = _upstairs("lt", datum.a, data.k_lt, data.q_lt)
    rt = _upstairs("rt", datum.b, data.k_rt, data.q_rt)
    x = sum(1 for p in lt if p.singular)
    y = sum(1 for p in rt if p.singular)
    return f"({len(lt)},{len(rt)})_{{{x}_{y}}}"


# Classification


class GermFamily(str, Enum):
    O = "O"
    D = "D"
    N = "N"
    DOUBLE = "DOUBLE"
    NONE = "NONE"


@dataclass(frozen=True)
class FamilyHit:
    family: GermFamily
    degree: int
    params: Dict[str, int] = field(default_factory=dict)


@dataclass
class GermClass:
    k1: int
    k2: int
    family: GermFamily
    degree: int
    mu: int
    class_count: int
    expected_count: int
    cross_checked: bool
    witness: Optional[MonodromyDatum] = None
    subcase: Optional[str] = None
    params: Dict[str, int] = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return self.class_count == self.expected_count


def family_hits(k1: int, k2: int) -> List[FamilyHit]:
    """
    Every family the pair {k1,k2} belongs to, lowest degree first

    O:      {a*b, a+b}, a > b >= 2 coprime, degree a+b
    D:      {c*(e+1), e}, c, e >= 2 coprime, degree e+1
    N:      {e+1, e}, e >= 2, degree e+1
    DOUBLE: {k,1}, smooth branch, degree 2
    """
    if k1 < 1 or k2 < 1 or gcd(k1, k2) != 1:
        raise InvalidInputError(f"classify needs coprime positive exponents: ({k1},{k2})")
    hi, lo = max(k1, k2), min(k1, k2)
    hits: List[FamilyHit] = []
    if lo == 1:
        hits.append(FamilyHit(GermFamily.DOUBLE, 2))
    if lo >= 2 and hi == lo + 1:
        hits.append(FamilyHit(GermFamily.N, lo + 1, {"e": lo}))
    disc = lo * lo - 4 * hi
    if lo >= 4 and disc > 0 and isqrt(disc) ** 2 == disc and (lo + isqrt(disc)) % 2 == 0:
        a, b = (lo + isqrt(disc)) // 2, (lo - isqrt(disc)) // 2
        if b >= 2 and gcd(a, b) == 1:
            hits.append(FamilyHit(GermFamily.O, lo, {"a": a, "b": b}))
    if lo >= 2 and hi % (lo + 1) == 0:
        c = hi // (lo + 1)
        if c >= 2 and gcd(c, lo) == 1:
            hits.append(FamilyHit(GermFamily.D, lo + 1, {"c": c, "e": lo}))
    return sorted(hits, key=lambda h: h.degree)


def double_cover_classes() -> List[MonodromyDatum]:
    """
    Degree-2 covers of a smooth branch germ

    The local group is generated by the meridian x0, so a cover is a
    transposition of S_2 generating the whole group.
    """
    return [
        MonodromyDatum(t, t, identity(2))
        for t in SymmetricGroup(2).generate()
        if is_transposition(t) and generates_symmetric([t], 2)
    ]


def smooth_classes(
    k1: int,
    k2: int,
    d: int,
    max_degree: int = DEFAULT_MAX_DEGREE,
    workers: int = 1,
) -> List[MonodromyDatum]:
    """Conjugacy classes of admissible data of degree d >= 3 whose cover is smooth"""
    data = pi1_data(k1, k2)
    return [
        x
        for x in enumerate_monodromy(d, data.k_lt, data.k_rt, max_degree=max_degree, workers=workers)
        if smoothness_test(x, data)
    ]


def _class_for(
    k1: int,
    k2: int,
    hit: FamilyHit,
    max_degree: int,
    workers: int,
) -> GermClass:
    mu = multiplicity(k1, k2)
    if hit.family is GermFamily.DOUBLE:
        found = double_cover_classes()
        witness = found[0] if found else None
        return GermClass(k1, k2, hit.family, 2, mu, len(found), 1, True, witness, None, hit.params)
    data = pi1_data(k1, k2)
    if hit.degree > max_degree:
        logger.info(f"({k1},{k2}) degree {hit.degree} above cap {max_degree}; count not cross-checked")
        return GermClass(k1, k2, hit.family, hit.degree, mu, 1, 1, False, None, None, hit.params)
    found = smooth_classes(k1, k2, hit.degree, max_degree, workers)
    witness = found[0] if found else None
    tag = subcase_tag(witness, data) if witness is not None else None
    if len(found) != 1:
        logger.warning(f"({k1},{k2}) family {hit.family.value} at degree {hit.degree}: {len(found)} classes")
    return GermClass(k1, k2, hit.family, hit.degree, mu, len(found), 1, True, witness, tag, hit.params)


def _none_class(k1: int, k2: int, max_degree: int, workers: int) -> GermClass:
    mu = multiplicity(k1, k2)
    top = mu + 1
    count = 0
    for d in range(3, min(top, max_degree) + 1):
        count += len(smooth_classes(k1, k2, d, max_degree, workers))
    return GermClass(k1, k2, GermFamily.NONE, 0, mu, count, 0, top <= max_degree)


def classify_all(
    k1: int,
    k2: int,
    max_degree: int = DEFAULT_MAX_DEGREE,
    workers: int = 1,
) -> List[GermClass]:
    """One GermClass per family the pair belongs to, or a single NONE class"""
    hits = family_hits(k1, k2)
    if not hits:
        return [_none_class(k1, k2, max_degree, workers)]
    return [_class_for(k1, k2, h, max_degree, workers) for h in hits]


def classify(
    k1: int,
    k2: int,
    max_degree: int = DEFAULT_MAX_DEGREE,
    workers: int = 1,
) -> GermClass:
    """
    Classify germs branched along x^k1 - y^k2 = 0

    Returns the lowest-degree family the pair belongs to (pairs such as
    {6,5} sit in two families; see classify_all). class_count comes from the
    exhaustive enumeration filtered by smoothness whenever the degree is
    within max_degree, otherwise from the family formula with
    cross_checked False.
    """
    hits = family_hits(k1, k2)
    if not hits:
        return _none_class(k1, k2, max_degree, workers)
    return _class_for(k1, k2, hits[0], max_degree, workers)


def forced_facts_hold(datum: MonodromyDatum, data: LocalPi1Data) -> bool:
    """In subcase (2,1)_{2_0} the two left cycle lengths swap with the two k's"""
    if subcase_tag(datum, data) != "(2,1)_{2_0}":
        return True
    lt = _upstairs("lt", datum.a, data.k_lt, data.q_lt)
    return lt[0].cycle_length == lt[1].k and lt[1].cycle_length == lt[0].k


def check_degree_bound(datum: MonodromyDatum, data: LocalPi1Data) -> bool:
    """Degree at most mu + 1 and the data generate S_d"""
    if datum.degree > data.degree_bound:
        return False
    if not generates_symmetric([datum.a, datum.t, datum.b], datum.degree):
        raise InvariantViolation("admissible datum does not generate S_d", actual=str(datum))
    return True
