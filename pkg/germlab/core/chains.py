"""
Weighted chains, continuants and Hirzebruch-Jung continued fractions.

A weighted chain is an ordered list of integer weights w_1..w_n (w_1 is the
origin). Its continuant D(w) is the determinant of the tridiagonal matrix
with the weights on the diagonal and -1 beside it, computed by

    D_0 = 1, D_{-1} = 0, D_n = w_n * D_{n-1} - D_{n-2}

The intersection matrix of a chain of rational curves is the negative of that
matrix with +1 off the diagonal, so det I = (-1)^n * D.
"""

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np
import sympy

from .arith import checked_mul, checked_sub
from .diophantine import DecoratedOrbit
from ..utils.errors import InvalidInputError, InvariantViolation
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

# Eigenvalue slack for the floating cross-check of definiteness
EIGEN_TOLERANCE = 1e-9


def continuant(weights: Iterable[int]) -> int:
    """
    Continuant of a weight sequence

    Args:
        weights: Integer weights, possibly empty

    Returns:
        D(weights); 1 for the empty sequence

    Raises:
        ArithmeticOverflow: If an intermediate value leaves 64 bits
    """
    prev, cur = 0, 1
    for w in weights:
        prev, cur = cur, checked_sub(checked_mul(w, cur), prev)
    return cur


def prefix_continuants(weights: Sequence[int]) -> List[int]:
    """D_1..D_n, the leading principal minors of the weight matrix"""
    out = []
    prev, cur = 0, 1
    for w in weights:
        prev, cur = cur, checked_sub(checked_mul(w, cur), prev)
        out.append(cur)
    return out


@dataclass(frozen=True)
class WeightedChain:
    weights: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[int]:
        return iter(self.weights)

    def __getitem__(self, index: int) -> int:
        return self.weights[index]

    def reversed(self) -> "WeightedChain":
        return WeightedChain(tuple(reversed(self.weights)))

    def drop_first(self) -> "WeightedChain":
        return WeightedChain(self.weights[1:])

    def drop_last(self) -> "WeightedChain":
        return WeightedChain(self.weights[:-1])

    @property
    def d(self) -> int:
        """Continuant of the chain"""
        return continuant(self.weights)

    def __str__(self) -> str:
        return "[" + ",".join(str(w) for w in self.weights) + "]"


@dataclass(frozen=True)
class CenteredChain:
    """
    left + [center] + right, read left to right

    The left part is stored in chain order, so its vertex next to the center
    is its last entry; the right part's is its first entry.
    """

    left: WeightedChain = field(default_factory=WeightedChain)
    center_weight: int = 1
    right: WeightedChain = field(default_factory=WeightedChain)

    @property
    def weights(self) -> Tuple[int, ...]:
        return self.left.weights + (self.center_weight,) + self.right.weights

    @property
    def center_index(self) -> int:
        """0-based position of the center vertex"""
        return len(self.left)

    @property
    def n0(self) -> int:
        """1-based position of the center vertex"""
        return len(self.left) + 1

    @property
    def chain(self) -> WeightedChain:
        return WeightedChain(self.weights)

    @property
    def d_lt0(self) -> int:
        return self.left.d

    @property
    def d_lt1(self) -> int:
        # D_{-1} = 0 for an empty side
        return self.left.drop_last().d if self.left.weights else 0

    @property
    def d_rt0(self) -> int:
        return self.right.d

    @property
    def d_rt1(self) -> int:
        return self.right.drop_first().d if self.right.weights else 0

    def __str__(self) -> str:
        body = [str(w) for w in self.weights]
        body[self.center_index] = f"<{body[self.center_index]}>"
        return "[" + ",".join(body) + "]"


def hj_expand(k: int, q: int) -> WeightedChain:
    """
    Hirzebruch-Jung expansion k/q = w1 - 1/(w2 - 1/(...))

    Greedy: w = ceil(k/q), then (k, q) <- (q, w*q - k) until q reaches 0.

    Args:
        k: Numerator, k > q
        q: Denominator, q >= 1 and coprime to k

    Returns:
        Chain with every weight >= 2, continuant k, and continuant q once the
        origin is dropped

    Raises:
        InvalidInputError: Unless k > q >= 1 and gcd(k, q) == 1
    """
    if not k > q >= 1:
        raise InvalidInputError(f"hj_expand needs k > q >= 1: ({k},{q})")
    if gcd(k, q) != 1:
        raise InvalidInputError(f"hj_expand needs coprime k, q: ({k},{q})")
    weights = []
    while q:
        w = -(-k // q)
        weights.append(w)
        k, q = q, w * q - k
    return WeightedChain(tuple(weights))


def chain_to_fraction(c: WeightedChain) -> Tuple[int, int]:
    """
    Recognize a Hirzebruch-Jung chain

    Returns:
        (k, q) with hj_expand(k, q) == c

    Raises:
        InvalidInputError: If c is empty or has a weight below 2
    """
    if not c.weights:
        raise InvalidInputError("empty chain has no fraction")
    if min(c.weights) < 2:
        raise InvalidInputError(f"chain weights must all be >= 2: {c}")
    return c.d, c.drop_first().d


def orbit_chain(o: DecoratedOrbit) -> CenteredChain:
    """
    Chain model of a decorated orbit

    reversed hj(k1,q1) + [1] + hj(k2,q2); a side whose fraction is 1/0 is
    empty. The orientation is pinned by d_lt0 = k1, d_lt1 = q1, d_rt0 = k2,
    d_rt1 = q2.

    Raises:
        InvariantViolation: If the assembled chain misses those four values
    """
    left = hj_expand(o.k1, o.q1).reversed() if o.k1 > 1 else WeightedChain()
    right = hj_expand(o.k2, o.q2) if o.k2 > 1 else WeightedChain()
    cc = CenteredChain(left, 1, right)
    got = (cc.d_lt0, cc.d_lt1, cc.d_rt0, cc.d_rt1)
    if got != (o.k1, o.q1, o.k2, o.q2):
        raise InvariantViolation(
            "orbit chain orientation mismatch",
            inputs={"orbit": str(o)},
            expected=(o.k1, o.q1, o.k2, o.q2),
            actual=got,
        )
    return cc


def row_expansion(c: CenteredChain) -> int:
    """Laplace expansion of the continuant along the center row"""
    return (
        c.center_weight * c.d_lt0 * c.d_rt0
        - c.d_rt0 * c.d_lt1
        - c.d_lt0 * c.d_rt1
    )


def row_expansion_check(c: CenteredChain) -> int:
    """
    Evaluate the center-row expansion and the direct continuant

    Returns:
        Their common value (1 for every orbit chain)

    Raises:
        InvariantViolation: If the two evaluations differ
    """
    by_row = row_expansion(c)
    direct = c.chain.d
    if by_row != direct:
        raise InvariantViolation(
            "center-row expansion disagrees with continuant",
            inputs={"chain": list(c.weights), "center": c.center_index},
            expected=direct,
            actual=by_row,
        )
    return direct


def pi1_order(c: WeightedChain) -> int:
    """Order of the cyclic local fundamental group around a contracted chain"""
    return abs(c.d)


def is_positive_definite(c: WeightedChain) -> bool:
    """Sylvester's test on the weight matrix: every prefix continuant is positive"""
    return all(m > 0 for m in prefix_continuants(c.weights))


def weight_matrix(c: WeightedChain) -> sympy.Matrix:
    """Tridiagonal matrix with the weights on the diagonal and -1 beside it"""
    n = len(c)

    def entry(i: int, j: int) -> int:
        if i == j:
            return c.weights[i]
        return -1 if abs(i - j) == 1 else 0

    return sympy.Matrix(n, n, entry)


def intersection_matrix(c: WeightedChain) -> sympy.Matrix:
    """Intersection matrix of a chain of rational curves with self-intersections -w_i"""
    return -weight_matrix(c)


def exact_det(m: sympy.Matrix) -> int:
    """Integer determinant by fraction-free Bareiss elimination"""
    if m.rows == 0:
        return 1
    return int(m.det(method="bareiss"))


def min_eigenvalue(c: WeightedChain) -> float:
    """Smallest eigenvalue of the weight matrix, in floating point"""
    if not c.weights:
        return float("inf")
    n = len(c)
    m = np.diag(np.array(c.weights, dtype=float))
    if n > 1:
        off = -np.ones(n - 1)
        m += np.diag(off, 1) + np.diag(off, -1)
    return float(np.linalg.eigvalsh(m)[0])


def is_negative_definite(c: WeightedChain) -> bool:
    """
    Negative definiteness of the intersection matrix

    Decided exactly by Sylvester's test; numpy's eigenvalues are consulted as a
    cross-check and a clear disagreement is an error.

    Raises:
        InvariantViolation: If the exact and floating answers clearly disagree
    """
    exact = is_positive_definite(c)
    low = min_eigenvalue(c)
    if (exact and low < -EIGEN_TOLERANCE) or (not exact and low > EIGEN_TOLERANCE):
        raise InvariantViolation(
            "Sylvester test disagrees with eigenvalues",
            inputs={"chain": list(c.weights)},
            expected=exact,
            actual=low,
        )
    return exact


def is_contractible_to_smooth(c: WeightedChain) -> bool:
    """A chain of rational curves blows down to a smooth point iff it is negative definite with |det| = 1"""
    return is_negative_definite(c) and abs(c.d) == 1
