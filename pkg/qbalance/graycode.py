"""
Gray Code - Non-binary (r', q)-Gray code rank and unrank

Maps the lexicographic q-ary word d of a rank z' to its Gray word g and back.
The i-th Gray symbol keeps d_i when the sum of the preceding Gray symbols is
even and takes the complement q-1-d_i when it is odd. Consecutive Gray words
differ in one position and their weights differ by exactly one.
"""

from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field

from .balancing import WalkTrace
from .config import get_settings
from .core import Sequence
from .errors import IndexOutOfRange, ParameterError, SizeGuardExceeded

logger = structlog.get_logger(__name__)


class GrayWord(BaseModel):
    """
    A Gray codeword together with its rank

    Attributes:
        g: Gray word of length r'
        z_prime: Rank in [0, q^r' - 1]
        d: Lexicographic q-ary representation of z_prime
    """

    model_config = ConfigDict(frozen=True)

    g: Sequence
    z_prime: int = Field(ge=0)
    d: Sequence

    @property
    def weight(self) -> int:
        return self.g.weight


def gray_encode_symbols(d: Tuple[int, ...], q: int) -> Tuple[int, ...]:
    """Gray-encode plain symbols; see gray_encode."""
    out: List[int] = []
    parity = 0
    for symbol in d:
        g = symbol if parity == 0 else q - 1 - symbol
        out.append(g)
        parity = (parity + g) & 1
    return tuple(out)


def gray_decode_symbols(g: Tuple[int, ...], q: int) -> Tuple[int, ...]:
    """Gray-decode plain symbols; see gray_decode."""
    out: List[int] = []
    parity = 0
    for symbol in g:
        out.append(symbol if parity == 0 else q - 1 - symbol)
        parity = (parity + symbol) & 1
    return tuple(out)


def gray_encode(d: Sequence) -> Sequence:
    """
    Map a lexicographic word to its Gray word

    g_1 = d_1; for i >= 2, with S_i the sum of g_1 ... g_{i-1},
    g_i = d_i when S_i is even and q-1-d_i when S_i is odd.
    """
    return Sequence.trusted(gray_encode_symbols(d.symbols, d.q), d.q)


def gray_decode(g: Sequence) -> Sequence:
    """
    Map a Gray word back to its lexicographic word

    The parity of the Gray prefix sums is read from g itself, so decoding is
    a single left-to-right scan.
    """
    return Sequence.trusted(gray_decode_symbols(g.symbols, g.q), g.q)


def to_digits(value: int, q: int, length: int) -> Tuple[int, ...]:
    """Base-q digits of value, most significant first, zero padded to length."""
    digits = [0] * length
    for position in range(length - 1, -1, -1):
        value, digits[position] = divmod(value, q)
    return tuple(digits)


def from_digits(digits: Tuple[int, ...], q: int) -> int:
    value = 0
    for digit in digits:
        value = value * q + digit
    return value


def _check_code(q: int, r_prime: int) -> None:
    if q < 2 or r_prime < 1:
        raise ParameterError(f"invalid Gray code parameters q={q}, r'={r_prime}")


def gray_rank_to_word(q: int, r_prime: int, z_prime: int) -> GrayWord:
    """
    Unrank: Gray word of rank z'

    Args:
        q: Alphabet size
        r_prime: Gray word length
        z_prime: Rank in [0, q^r' - 1]

    Returns:
        GrayWord with g, z_prime and d

    Raises:
        IndexOutOfRange: If z' is outside the code
    """
    _check_code(q, r_prime)
    last = q**r_prime - 1
    if not 0 <= z_prime <= last:
        raise IndexOutOfRange("z'", z_prime, 0, last)
    d = to_digits(z_prime, q, r_prime)
    return GrayWord.model_construct(
        g=Sequence.trusted(gray_encode_symbols(d, q), q),
        z_prime=z_prime,
        d=Sequence.trusted(d, q),
    )


def gray_word_to_rank(g: Sequence) -> int:
    """Rank: the index z' whose Gray word is g."""
    return from_digits(gray_decode_symbols(g.symbols, g.q), g.q)


def _guarded_size(q: int, r_prime: int, guard: Optional[int]) -> int:
    _check_code(q, r_prime)
    size = q**r_prime
    limit = guard if guard is not None else get_settings().walk_guard
    if size > limit:
        logger.error("gray_enumeration_refused", q=q, r_prime=r_prime, size=size, guard=limit)
        raise SizeGuardExceeded(size, limit)
    return size


def iter_gray_weights(q: int, r_prime: int, start: int = 0, stop: Optional[int] = None) -> Iterator[int]:
    """Weights of the Gray words of ranks start ... stop-1 (no guard)."""
    if stop is None:
        stop = q**r_prime
    for z_prime in range(start, stop):
        yield sum(gray_encode_symbols(to_digits(z_prime, q, r_prime), q))


def gray_table(q: int, r_prime: int, guard: Optional[int] = None) -> Iterator[GrayWord]:
    """
    Enumerate the whole (r', q)-Gray code in rank order

    Raises:
        SizeGuardExceeded: If q^r' exceeds the guard
    """
    size = _guarded_size(q, r_prime, guard)
    for z_prime in range(size):
        yield gray_rank_to_word(q, r_prime, z_prime)


def gray_walk(q: int, r_prime: int, guard: Optional[int] = None) -> WalkTrace:
    """
    Random walk of w(g(z')) over all ranks

    Consecutive weights differ by exactly one.

    Raises:
        SizeGuardExceeded: If q^r' exceeds the guard
    """
    size = _guarded_size(q, r_prime, guard)
    points = tuple(enumerate(iter_gray_weights(q, r_prime, 0, size)))
    logger.debug("gray_walk_traced", q=q, r_prime=r_prime, points=len(points))
    return WalkTrace(points=points, beta=Fraction(r_prime * (q - 1), 2))
