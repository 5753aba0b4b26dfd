"""
Core - q-ary sequences, modular symbol arithmetic and code parameters

Every other module builds on the types defined here:

- Sequence: an immutable word over {0, ..., q-1} with its weight
- Shape: the (q, k) pair that balancing sequences depend on
- Params: the full parameter bundle of the Gray-prefix construction
"""

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .config import get_settings
from .errors import AlphabetMismatch, LengthMismatch, ParameterError, SizeGuardExceeded

logger = structlog.get_logger(__name__)

_DIGITS = re.compile(r"[0-9]+")


class Sequence(BaseModel):
    """
    Fixed-length q-ary word

    Attributes:
        symbols: Ordered symbols, each in {0, ..., q-1}
        q: Alphabet size
    """

    model_config = ConfigDict(frozen=True)

    symbols: Tuple[int, ...]
    q: int = Field(ge=2)

    @model_validator(mode="after")
    def check_symbols(self) -> "Sequence":
        for position, symbol in enumerate(self.symbols):
            if not 0 <= symbol < self.q:
                raise ValueError(
                    f"symbol {symbol} at position {position} not in [0, {self.q - 1}]"
                )
        return self

    @classmethod
    def of(cls, symbols: Iterable[int], q: int) -> "Sequence":
        """
        Build a validated sequence

        Raises:
            ParameterError: If q < 2 or a symbol is outside the alphabet
        """
        try:
            return cls(symbols=tuple(symbols), q=q)
        except ValidationError as e:
            raise ParameterError(f"invalid {q}-ary sequence: {e.errors()[0]['msg']}") from e

    @classmethod
    def trusted(cls, symbols: Iterable[int], q: int) -> "Sequence":
        """Build a sequence from symbols already known to be valid."""
        return cls.model_construct(symbols=tuple(symbols), q=q)

    @property
    def weight(self) -> int:
        """Algebraic sum of the symbols."""
        return sum(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def __str__(self) -> str:
        return format_word(self)


class Shape(BaseModel):
    """
    Alphabet size and information length

    Balancing sequences only depend on these two values, so the payload
    balancer accepts a Shape where the full construction needs Params.
    """

    model_config = ConfigDict(frozen=True)

    q: int = Field(ge=2)
    k: int = Field(ge=1)

    @property
    def size(self) -> int:
        """Number of balancing sequences, kq."""
        return self.k * self.q

    @property
    def payload_beta(self) -> Fraction:
        return Fraction(self.k * (self.q - 1), 2)


class Params(Shape):
    """
    Parameters of the Gray-prefix balanced code

    Attributes:
        r_prime: Gray prefix length r'
        n: Codeword length k + r' + 1
        beta_n: Balancing value n(q-1)/2 of the whole codeword
        beta_r: Balancing value r'(q-1)/2 of the prefix, kept exact
        z1: First Gray rank of the prefix subset
        z2: Last Gray rank of the prefix subset
        centering: How the subset was placed ("left", "symmetric", "window" or "full")
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r_prime: int = Field(ge=1)
    n: int
    beta_n: int
    beta_r: Fraction
    z1: int = Field(ge=0)
    z2: int = Field(ge=0)
    centering: str = "left"

    @model_validator(mode="after")
    def check_consistency(self) -> "Params":
        if self.n != self.k + self.r_prime + 1:
            raise ValueError(f"n={self.n} != k + r' + 1")
        if 2 * self.beta_n != self.n * (self.q - 1):
            raise ValueError(f"beta_n={self.beta_n} != n(q-1)/2")
        if self.beta_r != Fraction(self.r_prime * (self.q - 1), 2):
            raise ValueError(f"beta_r={self.beta_r} != r'(q-1)/2")
        if self.z2 - self.z1 + 1 != self.size:
            raise ValueError(f"subset [{self.z1}, {self.z2}] does not hold kq={self.size} ranks")
        if self.z2 > self.q**self.r_prime - 1:
            raise ValueError(f"z2={self.z2} beyond the last Gray rank")
        return self

    @property
    def redundancy(self) -> int:
        """Total appended symbols, r' + 1."""
        return self.r_prime + 1


def ceil_log(k: int, q: int) -> int:
    """Smallest t with q**t >= k, computed without floating point."""
    t, power = 0, 1
    while power < k:
        power *= q
        t += 1
    return t


def make_shape(q: int, k: int) -> Shape:
    """
    Validate an alphabet size and information length

    Raises:
        ParameterError: If q < 2, k < 1 or q exceeds the configured maximum
    """
    max_alphabet = get_settings().max_alphabet
    if q > max_alphabet:
        raise ParameterError(f"q={q} exceeds maximum alphabet size {max_alphabet}")
    try:
        return Shape(q=q, k=k)
    except ValidationError as e:
        raise ParameterError(f"invalid parameters q={q}, k={k}: {e.errors()[0]['msg']}") from e


@lru_cache(maxsize=256)
def make_params(q: int, k: int, centering: str = "left") -> Params:
    """
    Derive the full parameter bundle for information length k over a q-ary alphabet

    Args:
        q: Alphabet size (>= 2)
        k: Information length (>= 1)
        centering: Subset placement for odd q, "left" (default) or "symmetric"

    Returns:
        Params with r' = ceil(log_q k) + 1, n = k + r' + 1 and the prefix subset

    Raises:
        ParameterError: If the parameters are invalid or n(q-1) is odd
    """
    shape = make_shape(q, k)
    r_prime = ceil_log(k, q) + 1
    n = k + r_prime + 1
    if (n * (q - 1)) % 2:
        raise ParameterError(
            f"balancing value n(q-1)/2 = {n}*{q - 1}/2 is not an integer for q={q}, k={k}"
        )

    from .codec import select_subset

    subset = select_subset(q, k, r_prime, centering=centering)
    params = Params(
        q=shape.q,
        k=shape.k,
        r_prime=r_prime,
        n=n,
        beta_n=n * (q - 1) // 2,
        beta_r=Fraction(r_prime * (q - 1), 2),
        z1=subset.z1,
        z2=subset.z2,
        centering=subset.centering,
    )
    logger.info(
        "params_created",
        q=q,
        k=k,
        r_prime=r_prime,
        n=n,
        beta_n=params.beta_n,
        z1=params.z1,
        z2=params.z2,
    )
    return params


def weight(x: Sequence) -> int:
    """Algebraic sum of the symbols of x."""
    return x.weight


def _check_compatible(x: Sequence, b: Sequence) -> None:
    if x.q != b.q:
        raise AlphabetMismatch(x.q, b.q)
    if len(x) != len(b):
        raise LengthMismatch(len(x), len(b))


def add_mod(x: Sequence, b: Sequence) -> Sequence:
    """Elementwise (x_i + b_i) mod q."""
    _check_compatible(x, b)
    q = x.q
    return Sequence.trusted(((a + c) % q for a, c in zip(x.symbols, b.symbols)), q)


def sub_mod(y: Sequence, b: Sequence) -> Sequence:
    """Elementwise (y_i - b_i) mod q."""
    _check_compatible(y, b)
    q = y.q
    return Sequence.trusted(((a - c) % q for a, c in zip(y.symbols, b.symbols)), q)


def parse_word(text: str, q: int) -> Sequence:
    """
    Parse the text form of a word

    For q <= 10 the word is a contiguous string of decimal digits ("21120"),
    for q > 10 it is a comma separated list ("3,12,0"). Surrounding
    parentheses and whitespace are ignored.

    Raises:
        ParameterError: If the text is empty, malformed or has out-of-range symbols
    """
    cleaned = text.strip()
    if cleaned.startswith("(") and cleaned.endswith(")"):
        cleaned = cleaned[1:-1].strip()
    if not cleaned:
        raise ParameterError("empty word")

    symbols: List[int]
    if "," in cleaned or q > 10:
        symbols = []
        for part in cleaned.split(","):
            part = part.strip()
            if not _DIGITS.fullmatch(part):
                raise ParameterError(f"malformed symbol '{part}' in word '{text.strip()}'")
            symbols.append(int(part))
    else:
        if not _DIGITS.fullmatch(cleaned):
            raise ParameterError(f"malformed word '{text.strip()}'")
        symbols = [int(ch) for ch in cleaned]
    return Sequence.of(symbols, q)


def format_word(x: Sequence) -> str:
    """Render a word in its text form."""
    if x.q <= 10:
        return "".join(str(s) for s in x.symbols)
    return ",".join(str(s) for s in x.symbols)


def iter_words(q: int, length: int, guard: Optional[int] = None) -> Iterator[Sequence]:
    """
    All q-ary words of the given length in lexicographic order

    Raises:
        SizeGuardExceeded: If q**length exceeds the guard
    """
    size = q**length
    limit = guard if guard is not None else get_settings().walk_guard
    if size > limit:
        raise SizeGuardExceeded(size, limit)
    for symbols in itertools.product(range(q), repeat=length):
        yield Sequence.trusted(symbols, q)
