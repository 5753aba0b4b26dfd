"""
Analysis - Information length versus redundancy for balanced q-ary schemes

Evaluates how many information symbols k each balancing scheme supports for a
given number r of redundant symbols, so the Gray-prefix construction
(k = q^(r-2)) can be compared against earlier constructions.
"""

import math
from enum import Enum
from typing import Iterable, List, Union

import structlog
from pydantic import BaseModel, ConfigDict, Field

from .config import get_settings
from .errors import ParameterError, UnknownScheme, UnsupportedRange

logger = structlog.get_logger(__name__)

# exp() overflows just above this
_MAX_LOG = 709.0

NOTES = (
    "approx rows use the balanced-word cardinality estimate in log domain without its O(1/k) factor",
    "pelusi parity term resolved as the largest integer k satisfying the bound",
    "compressed-scheme bound with unspecified scalars a1(q,gamma) a2(q,gamma) omitted; "
    "its gamma=0 form equals capocelli-b",
)


class Scheme(str, Enum):
    """Balancing schemes with a known k-versus-r relation"""

    BALANCED_PREFIX = "balanced-prefix"
    CAPOCELLI_A = "capocelli-a"
    CAPOCELLI_B = "capocelli-b"
    PREFIXLESS = "prefixless"
    PELUSI = "pelusi"
    GRAY_PREFIX = "gray-prefix"


class SchemeBound(BaseModel):
    """
    Maximum information length of one scheme at one redundancy

    Attributes:
        scheme: Scheme identifier
        q: Alphabet size
        r: Total redundancy in symbols
        k_max: Largest supported information length
        exact: False when the bound relies on the cardinality estimate
        iterations: Evaluations needed to settle a self-referencing bound
    """

    model_config = ConfigDict(frozen=True)

    scheme: Scheme
    q: int = Field(ge=2)
    r: int = Field(ge=1)
    k_max: Union[int, float]
    exact: bool
    iterations: int = 1

    @property
    def exactness(self) -> str:
        return "exact" if self.exact else "approx"


def _check_alphabet(q: int) -> None:
    if q < 2:
        raise ParameterError(f"alphabet size q={q} must be at least 2")


def log_balanced_cardinality(q: int, k: int) -> float:
    """Natural log of the estimated number of balanced q-ary words of length k."""
    _check_alphabet(q)
    if k < 1:
        raise ParameterError(f"length k={k} must be at least 1")
    return k * math.log(q) + 0.5 * math.log(6.0 / (math.pi * k * (q * q - 1)))


def balanced_cardinality_approx(q: int, k: int) -> float:
    """
    Estimated number of balanced q-ary words of length k

    q^k * sqrt(6 / (pi * k * (q^2 - 1))), evaluated in log domain.

    Raises:
        ParameterError: If q < 2 or k < 1
        UnsupportedRange: If the value overflows a float
    """
    return _bounded_exp(log_balanced_cardinality(q, k), f"estimate for q={q}, k={k}")


def _bounded_exp(log_value: float, what: str) -> float:
    if log_value > _MAX_LOG:
        raise UnsupportedRange(f"{what} overflows a float; use log_balanced_cardinality")
    return math.exp(log_value)


def balanced_count(q: int, k: int) -> int:
    """
    Exact number of balanced q-ary words of length k

    Coefficient of x^(k(q-1)/2) in (1 + x + ... + x^(q-1))^k, zero when k(q-1) is odd.
    """
    _check_alphabet(q)
    if k < 0:
        raise ParameterError(f"length k={k} must not be negative")
    if (k * (q - 1)) % 2:
        return 0
    target = k * (q - 1) // 2
    counts = [1] + [0] * target
    for _ in range(k):
        prefix = [0]
        for value in counts:
            prefix.append(prefix[-1] + value)
        counts = [prefix[w + 1] - prefix[max(0, w - q + 1)] for w in range(target + 1)]
    return counts[target]


SCHEME_ALIASES = {
    "swart-weber": Scheme.BALANCED_PREFIX,
    "this-paper": Scheme.GRAY_PREFIX,
}


def _parse_scheme(scheme: Union[str, Scheme]) -> Scheme:
    if isinstance(scheme, str) and scheme in SCHEME_ALIASES:
        return SCHEME_ALIASES[scheme]
    try:
        return Scheme(scheme)
    except ValueError:
        raise UnknownScheme(str(scheme), [s.value for s in Scheme]) from None


def _pelusi_kmax(q: int, r: int) -> SchemeBound:
    # k <= (F - (q mod 2 + ((q-1)k) mod 2)) / (q-1): largest integer k satisfying it
    cardinality = _bounded_exp(log_balanced_cardinality(q, r), f"pelusi bound for q={q}, r={r}")
    base = q % 2
    k_max = math.floor((cardinality - base) / (q - 1))
    iterations = 1
    if ((q - 1) * k_max) % 2:
        iterations = 2
        if k_max > (cardinality - base - 1) / (q - 1):
            k_max -= 1
    return SchemeBound(scheme=Scheme.PELUSI, q=q, r=r, k_max=k_max, exact=False, iterations=iterations)


def scheme_kmax(scheme: Union[str, Scheme], q: int, r: int) -> SchemeBound:
    """
    Maximum information length of a scheme for redundancy r

    Args:
        scheme: Scheme identifier (see Scheme)
        q: Alphabet size
        r: Total redundancy in symbols

    Returns:
        SchemeBound with k_max >= 1

    Raises:
        UnknownScheme: If the identifier is not recognised
        UnsupportedRange: If r is too small for the scheme (k_max < 1)
    """
    kind = _parse_scheme(scheme)
    _check_alphabet(q)
    if r < 1:
        raise UnsupportedRange(f"redundancy r={r} must be at least 1")

    if kind is Scheme.GRAY_PREFIX:
        if r < 2:
            raise UnsupportedRange("the Gray-prefix construction needs r >= 2")
        bound = SchemeBound(scheme=kind, q=q, r=r, k_max=q ** (r - 2), exact=True)
    elif kind is Scheme.CAPOCELLI_A:
        bound = SchemeBound(scheme=kind, q=q, r=r, k_max=(q**r - 1) // (q - 1), exact=True)
    elif kind is Scheme.CAPOCELLI_B:
        bound = SchemeBound(scheme=kind, q=q, r=r, k_max=2 * (q**r - 1) // (q - 1) - r, exact=True)
    elif kind is Scheme.PREFIXLESS:
        bound = SchemeBound(scheme=kind, q=q, r=r, k_max=q ** (r - 1) - r, exact=True)
    elif kind is Scheme.BALANCED_PREFIX:
        k_max = _bounded_exp(
            log_balanced_cardinality(q, r) - math.log(q),
            f"{kind.value} bound for q={q}, r={r}",
        )
        bound = SchemeBound(scheme=kind, q=q, r=r, k_max=k_max, exact=False)
    else:
        bound = _pelusi_kmax(q, r)

    if bound.k_max < 1:
        raise UnsupportedRange(f"{kind.value} supports no information symbols at q={q}, r={r}")
    return bound


def redundancy_table(q: int, r_values: Iterable[int]) -> List[SchemeBound]:
    """
    k_max of every scheme for each redundancy, grouped by scheme

    Rows where a scheme supports no information symbols are omitted.

    Raises:
        UnsupportedRange: If some r exceeds the configured maximum redundancy
    """
    r_list = sorted(set(r_values))
    limit = get_settings().max_redundancy
    if r_list and r_list[-1] > limit:
        raise UnsupportedRange(f"redundancy r={r_list[-1]} exceeds maximum {limit}")

    rows: List[SchemeBound] = []
    for kind in Scheme:
        for r in r_list:
            try:
                rows.append(scheme_kmax(kind, q, r))
            except UnsupportedRange:
                logger.debug("scheme_row_skipped", scheme=kind.value, q=q, r=r)
    logger.info("redundancy_table_built", q=q, rows=len(rows))
    return rows
