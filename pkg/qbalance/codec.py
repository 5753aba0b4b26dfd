"""
Codec - Balanced q-ary encoding with Gray code prefixes

A codeword is c = (u | g | y) of length n = k + r' + 1:

- y = x (+) b_z is the payload shifted by the z-th balancing sequence
- g is the Gray word of rank z' = z1 + z, taken from a subset of kq ranks
- u is a single symbol absorbing the remaining weight gap

The encoder scans z = 0 ... kq-1 and keeps the first codeword whose weight is
the balancing value n(q-1)/2. The decoder reads z' from g, rebuilds b_z and
subtracts it from y.
"""

from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

import structlog
from pydantic import BaseModel, ConfigDict, Field

from .balancing import BalancingIndex, WalkTrace, balancing_sequence, iter_payload_weights
from .config import get_settings
from .core import Params, Sequence, sub_mod
from .errors import (
    AlphabetMismatch,
    EncodingFailure,
    LengthMismatch,
    NotBalanced,
    ParameterError,
    PrefixOutOfSubset,
    SizeGuardExceeded,
    SubsetNotFound,
)
from .graycode import (
    GrayWord,
    gray_decode_symbols,
    gray_encode_symbols,
    gray_table,
    iter_gray_weights,
    to_digits,
    from_digits,
)

logger = structlog.get_logger(__name__)

CENTERINGS = ("left", "symmetric")


class SubsetSpec(BaseModel):
    """
    Inclusive range of Gray ranks used as prefixes

    Attributes:
        z1: First rank
        z2: Last rank, z2 - z1 + 1 = kq
        mean_weight: Exact average weight of the chosen Gray words
        centering: How the window was placed ("left", "symmetric", "window" or "full")
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    z1: int = Field(ge=0)
    z2: int = Field(ge=0)
    mean_weight: Fraction
    centering: str

    @property
    def size(self) -> int:
        return self.z2 - self.z1 + 1

    def distance(self, beta_r: Fraction) -> Fraction:
        return abs(self.mean_weight - beta_r)


class Codeword(BaseModel):
    """
    Structured codeword (u | g | y)

    Attributes:
        u: Redundant symbol
        g: Gray prefix with its rank
        y: Modified payload
    """

    model_config = ConfigDict(frozen=True)

    u: int = Field(ge=0)
    g: GrayWord
    y: Sequence

    @property
    def q(self) -> int:
        return self.y.q

    @property
    def sequence(self) -> Sequence:
        """The transmitted word u g_1 ... g_r' y_1 ... y_k."""
        return Sequence.trusted((self.u,) + self.g.g.symbols + self.y.symbols, self.q)

    @property
    def weight(self) -> int:
        return self.u + self.g.weight + self.y.weight

    def __str__(self) -> str:
        return str(self.sequence)


class EncodingRow(BaseModel):
    """One candidate row of the encoder table."""

    model_config = ConfigDict(frozen=True)

    z: int
    z_prime: int
    b: Sequence
    y: Sequence
    g: Sequence
    u: int
    codeword: Sequence
    weight: int
    balanced: bool


class DecodeTrace(BaseModel):
    """Every intermediate value of one decoding."""

    model_config = ConfigDict(frozen=True)

    u: int
    g: Sequence
    d: Sequence
    z_prime: int
    index: BalancingIndex
    b: Sequence
    y: Sequence
    x: Sequence

    @property
    def z(self) -> int:
        return self.index.z


class PrefixRow(BaseModel):
    """Decoding of one Gray word; index and b are None outside the subset."""

    model_config = ConfigDict(frozen=True)

    g: Sequence
    d: Sequence
    z_prime: int
    index: Optional[BalancingIndex] = None
    b: Optional[Sequence] = None

    @property
    def in_subset(self) -> bool:
        return self.index is not None


def _window_weights(q: int, r_prime: int, start: int, size: int, guard: Optional[int]) -> List[int]:
    limit = guard if guard is not None else get_settings().walk_guard
    if size > limit:
        raise SizeGuardExceeded(size, limit)
    return list(iter_gray_weights(q, r_prime, start, start + size))


def _centred_window_weight(q: int, r_prime: int, z1: int, size: int) -> int:
    """
    Total Gray weight of ranks z1 ... z1+size-1 for odd q

    Ranks z' and q^r'-1-z' hold complementary words, so the part of the window
    that is symmetric about the centre rank weighs r'(q-1)/2 per rank and only
    the overhang is enumerated.
    """
    center = q**r_prime // 2
    z2 = z1 + size - 1
    half = min(center - z1, z2 - center)
    core = (2 * half + 1) * r_prime * (q - 1) // 2
    head = sum(iter_gray_weights(q, r_prime, z1, center - half))
    tail = sum(iter_gray_weights(q, r_prime, center + half + 1, z2 + 1))
    return core + head + tail


def _scan_windows(q: int, r_prime: int, size: int, beta_r: Fraction, guard: Optional[int]) -> Tuple[int, Fraction]:
    """Slide a window of `size` ranks; first exact mean wins, else closest, else smallest z1."""
    total = q**r_prime
    weights = _window_weights(q, r_prime, 0, total, guard)
    running = sum(weights[:size])
    best_z1 = 0
    best_mean = Fraction(running, size)
    for z1 in range(1, total - size + 1):
        if best_mean == beta_r:
            break
        running += weights[z1 + size - 1] - weights[z1 - 1]
        mean = Fraction(running, size)
        if abs(mean - beta_r) < abs(best_mean - beta_r):
            best_z1, best_mean = z1, mean
    return best_z1, best_mean


def select_subset(
    q: int,
    k: int,
    r_prime: int,
    centering: str = "left",
    guard: Optional[int] = None,
) -> SubsetSpec:
    """
    Choose the kq consecutive Gray ranks used as prefixes

    - kq = q^r': the whole code.
    - q odd: a window around the centre rank floor(q^r'/2). For k even it spans
      kq/2 ranks on each side (the last one excluded). For k odd, "left" starts
      ceil(kq/2) ranks before the centre, "symmetric" floor(kq/2) ranks before,
      which makes the mean weight exactly r'(q-1)/2.
    - q even: the first window whose exact mean weight equals r'(q-1)/2,
      otherwise the closest one (smallest z1 on ties).

    Args:
        q: Alphabet size
        k: Information length
        r_prime: Gray prefix length
        centering: "left" or "symmetric" (odd q only)
        guard: Maximum number of Gray words enumerated by the even-q scan (defaults to settings)

    Returns:
        SubsetSpec with z1, z2 and the exact mean weight

    Raises:
        ParameterError: If kq exceeds q^r' or the centering is unknown
        SubsetNotFound: If no window rounds to the target weight (q even)
    """
    if centering not in CENTERINGS:
        raise ParameterError(f"unknown centering '{centering}', expected one of {', '.join(CENTERINGS)}")
    total = q**r_prime
    size = k * q
    if size > total:
        raise ParameterError(f"kq={size} exceeds the {total} words of the ({r_prime},{q})-Gray code")
    beta_r = Fraction(r_prime * (q - 1), 2)

    if size == total:
        subset = SubsetSpec(z1=0, z2=total - 1, mean_weight=beta_r, centering="full")
    elif q % 2:
        center = total // 2
        if k % 2 == 0 or centering == "symmetric":
            z1 = center - size // 2
        else:
            z1 = center - (size + 1) // 2
        subset = SubsetSpec(
            z1=z1,
            z2=z1 + size - 1,
            mean_weight=Fraction(_centred_window_weight(q, r_prime, z1, size), size),
            centering=centering,
        )
    else:
        z1, mean = _scan_windows(q, r_prime, size, beta_r, guard)
        if abs(mean - beta_r) > Fraction(1, 2):
            logger.error("subset_not_found", q=q, k=k, r_prime=r_prime, best_mean=str(mean))
            raise SubsetNotFound(
                f"no window of {size} ranks in the ({r_prime},{q})-Gray code has mean weight "
                f"within 1/2 of {beta_r} (best {mean} at z1={z1})"
            )
        subset = SubsetSpec(z1=z1, z2=z1 + size - 1, mean_weight=mean, centering="window")

    if subset.mean_weight != beta_r:
        logger.debug(
            "subset_mean_off_target",
            q=q,
            k=k,
            mean=str(subset.mean_weight),
            target=str(beta_r),
        )
    return subset


def _check_payload(params: Params, x: Sequence) -> None:
    if x.q != params.q:
        raise AlphabetMismatch(params.q, x.q)
    if len(x) != params.k:
        raise LengthMismatch(params.k, len(x), "payload")


def _iter_raw_rows(params: Params, x: Sequence):
    """Yield (z, z', b, y, g, u, w(c)) tuples with the per-row u rule."""
    q, r_prime, beta = params.q, params.r_prime, params.beta_n
    for z, b, y, wy in iter_payload_weights(params, x):
        z_prime = params.z1 + z
        g = gray_encode_symbols(to_digits(z_prime, q, r_prime), q)
        wg = sum(g)
        u = beta - wy - wg
        if not 0 <= u < q:
            u = 0
        yield z, z_prime, b, y, g, u, u + wg + wy


def encode(params: Params, x: Sequence) -> Tuple[Codeword, int]:
    """
    Encode a payload into a balanced codeword

    Args:
        params: Code parameters from make_params
        x: Information word of length k

    Returns:
        (codeword, z) for the smallest balancing index z whose codeword has
        weight n(q-1)/2

    Raises:
        LengthMismatch, AlphabetMismatch: If x does not fit the parameters
        EncodingFailure: If no index balances the word
    """
    _check_payload(params, x)
    for z, z_prime, _, y, g, u, w in _iter_raw_rows(params, x):
        if w == params.beta_n:
            codeword = Codeword(
                u=u,
                g=GrayWord.model_construct(
                    g=Sequence.trusted(g, params.q),
                    z_prime=z_prime,
                    d=Sequence.trusted(to_digits(z_prime, params.q, params.r_prime), params.q),
                ),
                y=Sequence.trusted(y, params.q),
            )
            logger.debug("codeword_encoded", q=params.q, k=params.k, z=z, z_prime=z_prime, u=u)
            return codeword, z

    logger.error("encoding_failed", q=params.q, k=params.k, word=str(x))
    raise EncodingFailure(f"no balancing index balances {x} for q={params.q}, k={params.k}")


def enumerate_encodings(params: Params, x: Sequence) -> List[EncodingRow]:
    """
    Full kq-row diagnostic table of the encoder

    Each row carries u chosen as n(q-1)/2 - w(y) - w(g) when that is a symbol,
    else 0; the row is balanced when the resulting codeword hits n(q-1)/2.
    encode returns the first balanced row.
    """
    _check_payload(params, x)
    q = params.q
    rows = []
    for z, z_prime, b, y, g, u, w in _iter_raw_rows(params, x):
        rows.append(
            EncodingRow(
                z=z,
                z_prime=z_prime,
                b=Sequence.trusted(b, q),
                y=Sequence.trusted(y, q),
                g=Sequence.trusted(g, q),
                u=u,
                codeword=Sequence.trusted((u,) + g + y, q),
                weight=w,
                balanced=(w == params.beta_n),
            )
        )
    return rows


def _as_sequence(params: Params, c: Union[Codeword, Sequence]) -> Sequence:
    word = c.sequence if isinstance(c, Codeword) else c
    if word.q != params.q:
        raise AlphabetMismatch(params.q, word.q)
    if len(word) != params.n:
        raise LengthMismatch(params.n, len(word), "codeword")
    return word


def decode_trace(params: Params, c: Union[Codeword, Sequence], strict: bool = False) -> DecodeTrace:
    """
    Decode a codeword and keep every intermediate value

    Args:
        params: Code parameters used by the encoder
        c: Codeword or raw length-n sequence
        strict: Reject words whose weight is not n(q-1)/2

    Returns:
        DecodeTrace with u, g, d, z', z, (s, p), b_z, y and the payload x

    Raises:
        LengthMismatch, AlphabetMismatch: If c does not fit the parameters
        NotBalanced: In strict mode, when w(c) != n(q-1)/2
        PrefixOutOfSubset: If the Gray rank is outside [z1, z2]
    """
    word = _as_sequence(params, c)
    if strict and word.weight != params.beta_n:
        logger.error("decode_not_balanced", weight=word.weight, beta=params.beta_n)
        raise NotBalanced(word.weight, params.beta_n)

    q, r_prime = params.q, params.r_prime
    symbols = word.symbols
    u = symbols[0]
    g = symbols[1 : 1 + r_prime]
    y = Sequence.trusted(symbols[1 + r_prime :], q)
    d = gray_decode_symbols(g, q)
    z_prime = from_digits(d, q)
    if not params.z1 <= z_prime <= params.z2:
        logger.error("prefix_out_of_subset", z_prime=z_prime, z1=params.z1, z2=params.z2)
        raise PrefixOutOfSubset(z_prime, params.z1, params.z2)

    index = BalancingIndex.from_z(params, z_prime - params.z1)
    b = balancing_sequence(params, index)
    return DecodeTrace(
        u=u,
        g=Sequence.trusted(g, q),
        d=Sequence.trusted(d, q),
        z_prime=z_prime,
        index=index,
        b=b,
        y=y,
        x=sub_mod(y, b),
    )


def decode(params: Params, c: Union[Codeword, Sequence], strict: bool = False) -> Sequence:
    """
    Recover the information word from a codeword

    Drops u, reads the Gray prefix, converts its rank z' to z = z' - z1,
    rebuilds b_z and returns y (-) b_z. See decode_trace for the errors raised.
    """
    return decode_trace(params, c, strict=strict).x


def prefix_table(params: Params, guard: Optional[int] = None) -> Iterator[PrefixRow]:
    """
    Decoding of every Gray word of length r'

    Rows inside [z1, z2] carry the balancing index and b_z; the others do not.
    """
    for word in gray_table(params.q, params.r_prime, guard=guard):
        if params.z1 <= word.z_prime <= params.z2:
            index = BalancingIndex.from_z(params, word.z_prime - params.z1)
            yield PrefixRow(
                g=word.g,
                d=word.d,
                z_prime=word.z_prime,
                index=index,
                b=balancing_sequence(params, index),
            )
        else:
            yield PrefixRow(g=word.g, d=word.d, z_prime=word.z_prime)


def codeword_walk(params: Params, x: Sequence) -> WalkTrace:
    """
    Random walk of w(g | y) versus z, without u

    Steps are +2, 0, -(q-2) or -q; a row can be balanced exactly when its
    weight lies in [n(q-1)/2 - (q-1), n(q-1)/2].
    """
    _check_payload(params, x)
    points = tuple((z, w - u) for z, _, _, _, _, u, w in _iter_raw_rows(params, x))
    return WalkTrace(points=points, beta=Fraction(params.beta_n))


def u_histogram(params: Params, words: Iterable[Sequence]) -> Dict[int, int]:
    """
    Count the redundant symbol u chosen by the encoder over many words

    Returns:
        Mapping u -> number of words, sorted by u
    """
    counts: Counter = Counter()
    for x in words:
        codeword, _ = encode(params, x)
        counts[codeword.u] += 1
    logger.info("u_histogram_collected", q=params.q, k=params.k, words=sum(counts.values()))
    return dict(sorted(counts.items()))
