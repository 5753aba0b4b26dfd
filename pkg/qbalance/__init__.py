"""
qbalance - Balanced q-ary encoding with Gray code prefixes
"""

__version__ = "1.0.0"

from .analysis import (
    NOTES,
    Scheme,
    SchemeBound,
    balanced_cardinality_approx,
    balanced_count,
    log_balanced_cardinality,
    redundancy_table,
    scheme_kmax,
)
from .balancing import (
    BalancingIndex,
    Candidate,
    WalkTrace,
    balance_candidates,
    balanced_indices,
    balancing_sequence,
    walk_trace,
)
from .codec import (
    Codeword,
    DecodeTrace,
    EncodingRow,
    PrefixRow,
    SubsetSpec,
    codeword_walk,
    decode,
    decode_trace,
    encode,
    enumerate_encodings,
    prefix_table,
    select_subset,
    u_histogram,
)
from .config import Settings, configure_logging, get_settings
from .core import (
    Params,
    Sequence,
    Shape,
    add_mod,
    ceil_log,
    format_word,
    iter_words,
    make_params,
    make_shape,
    parse_word,
    sub_mod,
    weight,
)
from .errors import (
    AlphabetMismatch,
    DecodeError,
    EncodingFailure,
    IndexOutOfRange,
    LengthMismatch,
    NotBalanced,
    ParameterError,
    PrefixOutOfSubset,
    QBalanceError,
    SizeGuardExceeded,
    SubsetNotFound,
    UnknownScheme,
    UnsupportedRange,
)
from .graycode import (
    GrayWord,
    gray_decode,
    gray_encode,
    gray_rank_to_word,
    gray_table,
    gray_walk,
    gray_word_to_rank,
)

__all__ = [
    "__version__",
    # core
    "Params",
    "Sequence",
    "Shape",
    "add_mod",
    "ceil_log",
    "format_word",
    "iter_words",
    "make_params",
    "make_shape",
    "parse_word",
    "sub_mod",
    "weight",
    # balancing
    "BalancingIndex",
    "Candidate",
    "WalkTrace",
    "balance_candidates",
    "balanced_indices",
    "balancing_sequence",
    "walk_trace",
    # gray code
    "GrayWord",
    "gray_decode",
    "gray_encode",
    "gray_rank_to_word",
    "gray_table",
    "gray_walk",
    "gray_word_to_rank",
    # codec
    "Codeword",
    "DecodeTrace",
    "EncodingRow",
    "PrefixRow",
    "SubsetSpec",
    "codeword_walk",
    "decode",
    "decode_trace",
    "encode",
    "enumerate_encodings",
    "prefix_table",
    "select_subset",
    "u_histogram",
    # analysis
    "NOTES",
    "Scheme",
    "SchemeBound",
    "balanced_cardinality_approx",
    "balanced_count",
    "log_balanced_cardinality",
    "redundancy_table",
    "scheme_kmax",
    # config
    "Settings",
    "configure_logging",
    "get_settings",
    # errors
    "AlphabetMismatch",
    "DecodeError",
    "EncodingFailure",
    "IndexOutOfRange",
    "LengthMismatch",
    "NotBalanced",
    "ParameterError",
    "PrefixOutOfSubset",
    "QBalanceError",
    "SizeGuardExceeded",
    "SubsetNotFound",
    "UnknownScheme",
    "UnsupportedRange",
]
