"""
Balancing - Step balancing sequences and the exhaustive payload balancer

A balancing sequence b_z of length k has its first p symbols equal to
(s + 1) mod q and the remaining k - p symbols equal to s, with z = s*k + p.
Adding b_z for z = 0 ... kq-1 to a payload traces a (1, q-1) random walk of
weights, so at least one candidate reaches the payload balancing value.
"""

from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

import structlog
from pydantic import BaseModel, ConfigDict, Field

from .core import Sequence, Shape
from .errors import IndexOutOfRange, LengthMismatch, AlphabetMismatch

logger = structlog.get_logger(__name__)


class BalancingIndex(BaseModel):
    """Balancing index z and its (s, p) decomposition, z = s*k + p."""

    model_config = ConfigDict(frozen=True)

    z: int = Field(ge=0)
    s: int = Field(ge=0)
    p: int = Field(ge=0)

    @classmethod
    def from_z(cls, shape: Shape, z: int) -> "BalancingIndex":
        """
        Decompose z for the given shape

        Raises:
            IndexOutOfRange: If z is outside [0, kq-1]
        """
        if not 0 <= z < shape.size:
            raise IndexOutOfRange("z", z, 0, shape.size - 1)
        s, p = divmod(z, shape.k)
        return cls.model_construct(z=z, s=s, p=p)

    def check(self, shape: Shape) -> "BalancingIndex":
        """Verify z = s*k + p with s < q and p < k."""
        if not (self.s < shape.q and self.p < shape.k and self.z == self.s * shape.k + self.p):
            raise IndexOutOfRange("z", self.z, 0, shape.size - 1)
        return self


class Candidate(BaseModel):
    """One row of the payload balancer: y = x (+) b_z and its weight."""

    model_config = ConfigDict(frozen=True)

    index: BalancingIndex
    b: Sequence
    y: Sequence
    weight: int
    balanced: bool

    @property
    def z(self) -> int:
        return self.index.z


class WalkTrace(BaseModel):
    """
    Weight versus index, as plotted in a random walk graph

    Attributes:
        points: (index, weight) pairs in increasing index order
        beta: Reference balancing value drawn as the target line, if any
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: Tuple[Tuple[int, int], ...]
    beta: Optional[Fraction] = None

    @property
    def weights(self) -> List[int]:
        return [w for _, w in self.points]

    def deltas(self) -> List[int]:
        """Successive weight differences."""
        weights = self.weights
        return [b - a for a, b in zip(weights, weights[1:])]


def _step_symbols(q: int, k: int, s: int, p: int) -> Tuple[int, ...]:
    high = (s + 1) % q
    return (high,) * p + (s,) * (k - p)


def balancing_sequence(shape: Shape, z: Union[int, BalancingIndex]) -> Sequence:
    """
    Balancing sequence b_z

    Args:
        shape: Params or Shape providing q and k
        z: Integer index or BalancingIndex

    Returns:
        Length-k sequence with p leading symbols (s+1) mod q and k-p symbols s

    Raises:
        IndexOutOfRange: If z is outside [0, kq-1]
    """
    if isinstance(z, BalancingIndex):
        index = z.check(shape)
    else:
        index = BalancingIndex.from_z(shape, z)
    return Sequence.trusted(_step_symbols(shape.q, shape.k, index.s, index.p), shape.q)


def _check_payload(shape: Shape, x: Sequence) -> None:
    if x.q != shape.q:
        raise AlphabetMismatch(shape.q, x.q)
    if len(x) != shape.k:
        raise LengthMismatch(shape.k, len(x), "payload")


def iter_payload_weights(shape: Shape, x: Sequence) -> Iterator[Tuple[int, Tuple[int, ...], Tuple[int, ...], int]]:
    """
    Yield (z, b_z, y, w(y)) as plain tuples for z = 0 ... kq-1

    Moving from z to z+1 raises position z mod k of b_z by one (mod q), so y
    and its weight are updated in place.
    """
    _check_payload(shape, x)
    q, k = shape.q, shape.k
    b = [0] * k
    y = list(x.symbols)
    w = sum(y)
    for z in range(shape.size):
        yield z, tuple(b), tuple(y), w
        j = z % k
        b[j] = (b[j] + 1) % q
        if y[j] == q - 1:
            y[j] = 0
            w -= q - 1
        else:
            y[j] += 1
            w += 1


def balance_candidates(shape: Shape, x: Sequence) -> Iterator[Candidate]:
    """
    Lazily enumerate the kq payload candidates in increasing z

    A candidate is marked balanced when w(y) = k(q-1)/2, which is only
    possible when k(q-1) is even.

    Args:
        shape: Params or Shape providing q and k
        x: Payload of length k

    Returns:
        Iterator of Candidate rows
    """
    target = shape.payload_beta
    for z, b, y, w in iter_payload_weights(shape, x):
        s, p = divmod(z, shape.k)
        yield Candidate(
            index=BalancingIndex.model_construct(z=z, s=s, p=p),
            b=Sequence.trusted(b, shape.q),
            y=Sequence.trusted(y, shape.q),
            weight=w,
            balanced=(w == target),
        )


def balanced_indices(shape: Shape, x: Sequence) -> List[int]:
    """Indices z whose payload y is balanced on its own."""
    return [c.z for c in balance_candidates(shape, x) if c.balanced]


def walk_trace(shape: Shape, x: Sequence) -> WalkTrace:
    """
    Random walk of w(x (+) b_z) versus z

    Successive weights differ by +1 or -(q-1).
    """
    points = tuple((z, w) for z, _, _, w in iter_payload_weights(shape, x))
    logger.debug("walk_traced", q=shape.q, k=shape.k, points=len(points))
    return WalkTrace(points=points, beta=shape.payload_beta)
