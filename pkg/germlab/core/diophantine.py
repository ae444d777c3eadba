"""
Diophantine systems behind the decorated orbit tree.

A DioSol4 (k1, k2, q1, q2) solves

    k1*k2 - k1*q2 - k2*q1 = 1                                   (one)

and an ExtSol8 extends it by (q3, q4, m1, m2) with

    k1*k2*(k1+k2) - k1*k2*q3 - q4*(k1+k2) = 1                   (two)
    q4 = k1*m1 + q1 = k2*m2 + q2                                (three)

The group generated by h1 (and its inverse) and the swap h2 preserves (one).
Decorated orbits {k1/q1, k2/q2} carry the unique bounded solution over each
orbit, and the decorated tree is isomorphic to the plain one.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import List, Tuple

from .arith import checked_add, checked_mul, checked_sub
from .pairs_tree import (
    EdgeLabel,
    Letter,
    Orbit,
    TreePath,
    path_to_root,
)
from ..utils.errors import InvalidInputError, InvariantViolation
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


class HGen(str, Enum):
    """Generators of the group H acting on solutions of (one)"""

    H1 = "H1"
    H1INV = "H1INV"
    H2 = "H2"


@dataclass(frozen=True)
class DioSol4:
    k1: int
    k2: int
    q1: int
    q2: int

    @property
    def residual(self) -> int:
        """Left-hand side of (one); equals 1 on solutions"""
        lhs = checked_mul(self.k1, self.k2)
        lhs = checked_sub(lhs, checked_mul(self.k1, self.q2))
        return checked_sub(lhs, checked_mul(self.k2, self.q1))

    @property
    def solves(self) -> bool:
        return self.residual == 1

    @property
    def in_dp(self) -> bool:
        """Solution with 0 <= q1 < k1 and 0 <= q2 < k2"""
        return (
            self.solves
            and self.k1 >= 1
            and self.k2 >= 1
            and 0 <= self.q1 < self.k1
            and 0 <= self.q2 < self.k2
        )

    @property
    def in_dp0(self) -> bool:
        """Bounded solution with min(k1, k2) >= 2"""
        return self.in_dp and min(self.k1, self.k2) >= 2

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.k1, self.k2, self.q1, self.q2)

    def __str__(self) -> str:
        return f"({self.k1},{self.k2},{self.q1},{self.q2})"


@dataclass(frozen=True)
class DecoratedOrbit:
    """{k1/q1, k2/q2} with k1 >= k2; the root is {1/0, 1/0}"""

    k1: int
    q1: int
    k2: int
    q2: int

    def __post_init__(self) -> None:
        if self.k1 < self.k2:
            raise InvalidInputError(f"decorated orbit must have k1 >= k2: {self}")
        if not self.sol.solves:
            raise InvalidInputError(f"decorated orbit violates k1k2 - k1q2 - k2q1 = 1: {self}")

    @property
    def left(self) -> Tuple[int, int]:
        return (self.k1, self.q1)

    @property
    def right(self) -> Tuple[int, int]:
        return (self.k2, self.q2)

    @property
    def sol(self) -> DioSol4:
        return DioSol4(self.k1, self.k2, self.q1, self.q2)

    @property
    def is_root(self) -> bool:
        return self.k1 == 1 and self.k2 == 1

    def pr(self) -> Orbit:
        """Forget the decorations"""
        return Orbit(self.k1, self.k2)

    def pr1(self) -> Tuple[int, int]:
        return self.left

    def __str__(self) -> str:
        return f"{{{self.k1}/{self.q1},{self.k2}/{self.q2}}}"


DECORATED_ROOT = DecoratedOrbit(1, 0, 1, 0)


@dataclass(frozen=True)
class AuxSol:
    """(a1, a2) in [1,k1] x [1,k2] with k1*a2 - k2*a1 = q1 - q2"""

    base: DioSol4
    a1: int
    a2: int

    @property
    def residual(self) -> int:
        s = self.base
        return (s.k1 * self.a2 - s.k2 * self.a1) - (s.q1 - s.q2)


@dataclass(frozen=True)
class ExtSol8:
    k1: int
    k2: int
    q1: int
    q2: int
    q3: int
    q4: int
    m1: int
    m2: int

    @property
    def base(self) -> DioSol4:
        return DioSol4(self.k1, self.k2, self.q1, self.q2)

    def violations(self) -> List[str]:
        """Names of every equation or bound this 8-tuple breaks"""
        k1, k2, q1, q2, q3, q4, m1, m2 = self.as_tuple()
        s = checked_add(k1, k2)
        out: List[str] = []
        if not self.base.solves:
            out.append("eq1")
        prod = checked_mul(k1, k2)
        eq2 = checked_sub(checked_sub(checked_mul(prod, s), checked_mul(prod, q3)), checked_mul(q4, s))
        if eq2 != 1:
            out.append("eq2")
        if q4 != k1 * m1 + q1 or q4 != k2 * m2 + q2:
            out.append("eq3")
        if min(k1, k2) < 2:
            out.append("min_k")
        if m1 < 0 or m2 < 0:
            out.append("m_nonneg")
        if not (0 < q1 < k1 and 0 < q2 < k2):
            out.append("q12_bounds")
        if not 0 < q3 < s:
            out.append("q3_bounds")
        if not 0 < q4 < k1 * k2:
            out.append("q4_bounds")
        if m1 + m2 + q3 != s - 1:
            out.append("delta_identity")
        return out

    @property
    def is_valid(self) -> bool:
        return not self.violations()

    def as_tuple(self) -> Tuple[int, int, int, int, int, int, int, int]:
        return (self.k1, self.k2, self.q1, self.q2, self.q3, self.q4, self.m1, self.m2)


def _require_solution(s: DioSol4) -> None:
    if s.k1 < 1 or s.k2 < 1:
        raise InvalidInputError(f"k1, k2 must be positive: {s}")
    if not s.solves:
        raise InvalidInputError(f"{s} does not satisfy k1k2 - k1q2 - k2q1 = 1 (residual {s.residual})")


def _require_dp0(s: DioSol4) -> None:
    _require_solution(s)
    if not s.in_dp0:
        raise InvalidInputError(f"{s} is not a bounded solution with min(k1,k2) >= 2")


def apply_h(s: DioSol4, gen: HGen) -> DioSol4:
    """
    Apply a generator of H to a solution of (one)

    Args:
        s: Solution of (one)
        gen: H1, H1INV or H2

    Returns:
        H1:    (k1+k2, k2, k2+q1-q2, q2)
        H1INV: (k1-k2, k2, q1-k2+q2, q2)
        H2:    (k2, k1, q2, q1)

    Raises:
        InvalidInputError: If s violates (one) or H1INV would leave positive k1
    """
    _require_solution(s)
    gen = HGen(gen)
    if gen is HGen.H2:
        return DioSol4(s.k2, s.k1, s.q2, s.q1)
    if gen is HGen.H1:
        return DioSol4(
            checked_add(s.k1, s.k2),
            s.k2,
            checked_sub(checked_add(s.k2, s.q1), s.q2),
            s.q2,
        )
    if s.k1 <= s.k2:
        raise InvalidInputError(f"H1INV needs k1 > k2: {s}")
    return DioSol4(
        checked_sub(s.k1, s.k2),
        s.k2,
        checked_add(checked_sub(s.q1, s.k2), s.q2),
        s.q2,
    )


def decorated_action(o: DecoratedOrbit, letter: Letter) -> DecoratedOrbit:
    """
    Lift alpha/beta to decorated orbits

    A: {k1/q1, k2/q2} -> {(k1+k2)/(k2+q1-q2), k2/q2}
    B: {k1/q1, k2/q2} -> {(k1+k2)/(k1+q2-q1), k1/q1}
    """
    if Letter(letter) is Letter.A:
        s = apply_h(o.sol, HGen.H1)
    else:
        s = apply_h(apply_h(o.sol, HGen.H2), HGen.H1)
    return DecoratedOrbit(s.k1, s.q1, s.k2, s.q2)


def decorated_euclid_step(o: DecoratedOrbit) -> Tuple[DecoratedOrbit, EdgeLabel]:
    """Inverse of decorated_action; same E1/E2 rule and tie-break as the plain tree"""
    if o.is_root:
        raise InvalidInputError(f"no Euclid step from terminal orbit {o}")
    s = apply_h(o.sol, HGen.H1INV)
    if o.k1 >= 2 * o.k2:
        return DecoratedOrbit(s.k1, s.q1, s.k2, s.q2), EdgeLabel.E1
    return DecoratedOrbit(s.k2, s.q2, s.k1, s.q1), EdgeLabel.E2


def decorated_path_to_root(o: DecoratedOrbit) -> TreePath:
    labels = []
    while not o.is_root:
        o, label = decorated_euclid_step(o)
        labels.append(label)
    return TreePath(tuple(label.letter for label in reversed(labels)))


def replay_decorated(path: TreePath, start: DecoratedOrbit = DECORATED_ROOT) -> DecoratedOrbit:
    o = start
    for letter in path.letters:
        o = decorated_action(o, letter)
    return o


def pr_inverse(o: Orbit) -> DecoratedOrbit:
    """
    The decorated orbit over o

    Computed by replaying path_to_root(o) on the decorated tree, which checks
    the tree isomorphism on the way.

    Raises:
        InvalidInputError: If o is the root sentinel
    """
    if o.is_root:
        raise InvalidInputError("the root sentinel {1,0} has no decoration")
    result = replay_decorated(path_to_root(o))
    if result.pr() != o:
        raise InvariantViolation(
            "decorated replay left the orbit",
            inputs={"orbit": str(o)},
            expected=str(o),
            actual=str(result.pr()),
        )
    return result


def pr1_inverse(k1: int, q1: int) -> DecoratedOrbit:
    """
    The decorated orbit whose left component is k1/q1

    k2 is the unique integer in [1, k1) with q1*k2 + 1 = 0 (mod k1); then
    q1*k2 + 1 = k1*n and q2 = k2 - n.

    Raises:
        InvalidInputError: Unless k1 > q1 >= 1 and gcd(k1, q1) == 1
    """
    if not k1 > q1 >= 1:
        raise InvalidInputError(f"pr1_inverse needs k1 > q1 >= 1: ({k1},{q1})")
    if gcd(k1, q1) != 1:
        raise InvalidInputError(f"pr1_inverse needs coprime k1, q1: ({k1},{q1})")
    k2 = (-pow(q1, -1, k1)) % k1
    n, rem = divmod(checked_add(checked_mul(q1, k2), 1), k1)
    if rem:
        raise InvariantViolation("modular inverse failed", inputs={"k1": k1, "q1": q1})
    return DecoratedOrbit(k1, q1, k2, k2 - n)


def lemma_bounds_hold(o: DecoratedOrbit) -> bool:
    """k2 <= q1 + q2 < k1 for every decorated orbit but the root"""
    if o.is_root:
        return True
    return o.k2 <= o.q1 + o.q2 < o.k1


def bounded_solution(k1: int, k2: int) -> DioSol4:
    """The unique solution of (one) with 0 <= q_i < k_i over an ordered coprime pair"""
    d = pr_inverse(Orbit.of(k1, k2)).sol
    if k1 >= k2:
        return d
    return apply_h(d, HGen.H2)


def solve_aux(s: DioSol4) -> AuxSol:
    """
    Unique (a1, a2) in [1,k1] x [1,k2] with k1*a2 - k2*a1 = q1 - q2

    a2 is pinned modulo k2 by k1*a2 = q1 - q2 (mod k2), which leaves one
    candidate in [1,k2]; a1 then follows.

    Raises:
        InvalidInputError: If s is not a bounded solution with min(k1,k2) >= 2
        InvariantViolation: If the forced candidate leaves the box
    """
    _require_dp0(s)
    diff = s.q1 - s.q2
    a2 = (diff * pow(s.k1, -1, s.k2)) % s.k2 or s.k2
    a1, rem = divmod(checked_sub(checked_mul(s.k1, a2), diff), s.k2)
    if rem or not (1 <= a1 <= s.k1):
        raise InvariantViolation(
            "auxiliary system has no solution in the box",
            inputs={"s": s.as_tuple()},
            expected="1 <= a1 <= k1",
            actual=(a1, a2, rem),
        )
    return AuxSol(s, a1, a2)


def solve_aux_bruteforce(s: DioSol4) -> List[AuxSol]:
    """Every box solution, scanning a2 over [1,k2] and solving for a1"""
    _require_dp0(s)
    out = []
    for a2 in range(1, s.k2 + 1):
        a1, rem = divmod(s.k1 * a2 - (s.q1 - s.q2), s.k2)
        if rem == 0 and 1 <= a1 <= s.k1:
            out.append(AuxSol(s, a1, a2))
    return out


def extend_to_8(s: DioSol4) -> ExtSol8:
    """
    The unique bounded extension of s to the system (one), (two), (three)

    Closed form from the auxiliary solution:
        q3 = a1 + a2 - 1, m1 = k2 - a2, m2 = k1 - a1, q4 = k1*m1 + q1

    Raises:
        InvalidInputError: If s is not a bounded solution with min(k1,k2) >= 2
        InvariantViolation: If the closed form misses the system
    """
    aux = solve_aux(s)
    m1 = s.k2 - aux.a2
    m2 = s.k1 - aux.a1
    ext = ExtSol8(
        s.k1,
        s.k2,
        s.q1,
        s.q2,
        q3=aux.a1 + aux.a2 - 1,
        q4=checked_add(checked_mul(s.k1, m1), s.q1),
        m1=m1,
        m2=m2,
    )
    bad = ext.violations()
    if bad:
        raise InvariantViolation(
            "closed-form extension violates the system",
            inputs={"s": s.as_tuple()},
            expected=[],
            actual=bad,
        )
    return ext


def extend_to_8_bruteforce(s: DioSol4) -> List[ExtSol8]:
    """
    Every bounded extension, found by scanning q3 over (0, k1+k2)

    (two) is linear in q4, so each q3 pins at most one q4; (three) then pins
    m1 and m2.
    """
    _require_dp0(s)
    total = s.k1 + s.k2
    prod = s.k1 * s.k2
    out = []
    for q3 in range(1, total):
        q4, rem = divmod(prod * (total - q3) - 1, total)
        if rem or not 0 < q4 < prod:
            continue
        m1, r1 = divmod(q4 - s.q1, s.k1)
        m2, r2 = divmod(q4 - s.q2, s.k2)
        if r1 or r2 or m1 < 0 or m2 < 0:
            continue
        ext = ExtSol8(s.k1, s.k2, s.q1, s.q2, q3, q4, m1, m2)
        if ext.is_valid:
            out.append(ext)
    return out
