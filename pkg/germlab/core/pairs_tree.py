"""
Pairs tree - coprime-pair orbits, the alpha/beta semigroup actions,
Euclid's additive algorithm and the rooted orbit tree.

An orbit {k1,k2} is the unordered class of (k1,k2) and (k2,k1); it is stored
normalized with k1 >= k2. Every orbit other than the sentinel {1,0} is reached
from {1,1} by a unique word over {A, B} whose first letter is A, and walking
the Euclid steps backwards reads that word off.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterator, List, Sequence, Tuple

from .arith import checked_add
from ..utils.errors import InvalidInputError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


class Letter(str, Enum):
    """Generators of the free semigroup acting on orbits"""

    A = "A"  # alpha: {k1,k2} -> {k1+k2,k2}
    B = "B"  # beta:  {k1,k2} -> {k1+k2,k1}


class EdgeLabel(str, Enum):
    """Euclid replacements, the inverses of the letters"""

    E1 = "E1"
    E2 = "E2"

    @property
    def letter(self) -> Letter:
        return Letter.A if self is EdgeLabel.E1 else Letter.B

    @property
    def symbol(self) -> str:
        return "ε1" if self is EdgeLabel.E1 else "ε2"


@dataclass(frozen=True, order=True)
class Orbit:
    """Unordered coprime pair {k1,k2}, stored with k1 >= k2"""

    k1: int
    k2: int

    def __post_init__(self) -> None:
        if self.k2 < 0 or self.k1 < 1:
            raise InvalidInputError(f"orbit components must be k1 >= 1, k2 >= 0: {{{self.k1},{self.k2}}}")
        if self.k1 < self.k2:
            raise InvalidInputError(f"orbit must be normalized with k1 >= k2: {{{self.k1},{self.k2}}}")
        if self.k2 == 0 and self.k1 != 1:
            raise InvalidInputError(f"only the root {{1,0}} may have a zero component: {{{self.k1},0}}")
        if self.k2 >= 1 and gcd(self.k1, self.k2) != 1:
            raise InvalidInputError(f"orbit components must be coprime: {{{self.k1},{self.k2}}}")

    @classmethod
    def of(cls, a: int, b: int) -> "Orbit":
        """Build the orbit of the ordered pair (a, b)"""
        return cls(max(a, b), min(a, b))

    @property
    def is_root(self) -> bool:
        return self.k2 == 0

    @property
    def is_terminal(self) -> bool:
        return self.k1 == 1 and self.k2 == 1

    @property
    def level(self) -> int:
        if self.is_root:
            return 0
        return n_euclid(self.k1, self.k2) + 1

    def __str__(self) -> str:
        return f"{{{self.k1},{self.k2}}}"


ROOT = Orbit(1, 0)
ONE = Orbit(1, 1)


@dataclass(frozen=True)
class TreePath:
    """Word over {A, B}; replayed from {1,1} it names a single orbit"""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(Letter(x) for x in self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(x.value for x in self.letters)

    def replay(self, start: Orbit = ONE) -> Orbit:
        o = start
        for letter in self.letters:
            o = apply_action(o, letter)
        return o


def apply_action(o: Orbit, letter: Letter) -> Orbit:
    """
    Apply alpha (A) or beta (B) to an orbit

    Args:
        o: Any orbit except the root sentinel
        letter: Letter.A or Letter.B

    Returns:
        {k1+k2, k2} for A, {k1+k2, k1} for B

    Raises:
        InvalidInputError: If o is the root sentinel {1,0}
    """
    if o.is_root:
        raise InvalidInputError("the root sentinel {1,0} admits no action")
    total = checked_add(o.k1, o.k2)
    if Letter(letter) is Letter.A:
        return Orbit(total, o.k2)
    return Orbit(total, o.k1)


def euclid_step(o: Orbit) -> Tuple[Orbit, EdgeLabel]:
    """
    One step of Euclid's additive algorithm toward {1,1}

    E1 when k1 >= 2*k2, E2 otherwise. At k1 == 2*k2 (only {2,1}) both rules
    land on {1,1}; E1 is emitted.

    Raises:
        InvalidInputError: If o is {1,1} or {1,0}
    """
    if o.is_root or o.is_terminal:
        raise InvalidInputError(f"no Euclid step from terminal orbit {o}")
    diff = o.k1 - o.k2
    if o.k1 >= 2 * o.k2:
        return Orbit(diff, o.k2), EdgeLabel.E1
    return Orbit(o.k2, diff), EdgeLabel.E2


def n_euclid(k1: int, k2: int) -> int:
    """
    Number of Euclid steps from {k1,k2} down to {1,1}

    Counted with quotients so that pairs like (10**12, 1) stay cheap: a run
    of q subtractions of the same k2 costs q steps, and the final run stops
    one short since it lands on {1,1} rather than {k2,0}.

    Raises:
        InvalidInputError: If the pair is not a coprime pair of positive integers
    """
    if k1 < 1 or k2 < 1:
        raise InvalidInputError(f"n_euclid needs positive integers: ({k1},{k2})")
    if gcd(k1, k2) != 1:
        raise InvalidInputError(f"n_euclid needs a coprime pair: ({k1},{k2})")
    a, b = max(k1, k2), min(k1, k2)
    steps = 0
    while b:
        q, r = divmod(a, b)
        steps += q
        a, b = b, r
    return steps - 1


def euclid_labels(o: Orbit) -> List[EdgeLabel]:
    """Edge labels met walking from o down to {1,1}"""
    if o.is_root:
        raise InvalidInputError("the root sentinel {1,0} has no Euclid path")
    labels = []
    while not o.is_terminal:
        o, label = euclid_step(o)
        labels.append(label)
    return labels


def path_to_root(o: Orbit) -> TreePath:
    """
    Word that rebuilds o from {1,1}

    The Euclid labels read from o downward, reversed and mapped E1 -> A,
    E2 -> B.
    """
    labels = euclid_labels(o)
    return TreePath(tuple(label.letter for label in reversed(labels)))


def children(o: Orbit) -> Tuple[Orbit, Orbit]:
    """The A-child and B-child of o, in that order"""
    return apply_action(o, Letter.A), apply_action(o, Letter.B)


def iter_levels(max_level: int) -> Iterator[Tuple[int, List[Orbit]]]:
    """
    Breadth-first sweep of the orbit tree

    Yields (level, orbits) for level 1..max_level. Level 1 is [{1,1}], level 2
    is [{2,1}] (both letters agree on {1,1}), and each later level lists the
    A-child then the B-child of every orbit of the previous level.
    """
    if max_level < 1:
        raise InvalidInputError(f"level must be >= 1: {max_level}")
    current = [ONE]
    yield 1, current
    if max_level == 1:
        return
    current = [apply_action(ONE, Letter.A)]
    yield 2, current
    for level in range(3, max_level + 1):
        nxt: List[Orbit] = []
        for o in current:
            nxt.extend(children(o))
        current = nxt
        yield level, current


def enumerate_to_level(level: int) -> List[Orbit]:
    """
    All orbits at exactly the given tree level

    Level L >= 2 holds 2**(L-2) orbits, in deterministic A-before-B order.

    Raises:
        InvalidInputError: If level < 1
    """
    result: List[Orbit] = []
    for current_level, orbits in iter_levels(level):
        if current_level == level:
            result = list(orbits)
    logger.debug(f"level {level}: {len(result)} orbits")
    return result


def apply_ordered(pair: Sequence[int], letter: str) -> Tuple[int, int]:
    """
    Free-product generators on ordered pairs

    "x1" maps (k1,k2) to (k1+k2,k2) and "x2" swaps the entries. The orbit of
    (1,1) under both is every ordered coprime pair; forgetting order turns x1
    and x1 after x2 into A and B.
    """
    k1, k2 = pair
    if letter == "x1":
        return checked_add(k1, k2), k2
    if letter == "x2":
        return k2, k1
    raise InvalidInputError(f"unknown ordered-pair generator: {letter!r}")


def ordered_orbit(pair: Sequence[int]) -> Orbit:
    k1, k2 = pair
    return Orbit.of(k1, k2)
