"""
Formatter - Render tables, traces and bounds as text

Tables are tab separated, walks and bounds are CSV (comma delimiter, LF line
endings, no quoting). Every renderer returns text ending in a newline.
"""

from fractions import Fraction
from typing import Dict, Iterable, Union

from .analysis import NOTES, SchemeBound
from .balancing import Candidate, WalkTrace
from .codec import DecodeTrace, EncodingRow, PrefixRow, SubsetSpec
from .core import Params, format_word
from .graycode import GrayWord


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _number(value: Union[int, float, Fraction]) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def _lines(header: str, rows: Iterable[str]) -> str:
    return "\n".join([header, *rows]) + "\n"


def format_payload_table(candidates: Iterable[Candidate]) -> str:
    """Payload balancer rows: z, b_z, y, w(y), balanced."""
    return _lines(
        "z\tb\ty\tweight\tbalanced",
        (
            f"{c.z}\t{format_word(c.b)}\t{format_word(c.y)}\t{c.weight}\t{_flag(c.balanced)}"
            for c in candidates
        ),
    )


def format_gray_table(words: Iterable[GrayWord]) -> str:
    """Gray code listing: rank, lexicographic word, Gray word."""
    return _lines(
        "z\td\tg",
        (f"{w.z_prime}\t{format_word(w.d)}\t{format_word(w.g)}" for w in words),
    )


def format_encoding_table(rows: Iterable[EncodingRow]) -> str:
    """Encoder candidates: z, z', b_z, y, c, w(c), balanced."""
    return _lines(
        "z\tz_prime\tb\ty\tc\tweight\tbalanced",
        (
            f"{r.z}\t{r.z_prime}\t{format_word(r.b)}\t{format_word(r.y)}\t"
            f"{format_word(r.codeword)}\t{r.weight}\t{_flag(r.balanced)}"
            for r in rows
        ),
    )


def format_prefix_table(rows: Iterable[PrefixRow]) -> str:
    """Gray prefix decoding: g, d, z', z, s, p, b_z (dashes outside the subset)."""

    def render(row: PrefixRow) -> str:
        head = f"{format_word(row.g)}\t{format_word(row.d)}\t{row.z_prime}"
        if not row.in_subset:
            return f"{head}\t-\t-\t-\t-"
        return f"{head}\t{row.index.z}\t{row.index.s}\t{row.index.p}\t{format_word(row.b)}"

    return _lines("g\td\tz_prime\tz\ts\tp\tb", (render(row) for row in rows))


def format_walk_csv(trace: WalkTrace) -> str:
    """Random walk as `z,weight` CSV."""
    return _lines("z,weight", (f"{z},{w}" for z, w in trace.points))


def format_redundancy_csv(rows: Iterable[SchemeBound], notes: bool = True) -> str:
    """Scheme bounds as CSV, preceded by `#` comment lines when notes is set."""
    body = _lines(
        "scheme,q,r,kmax,exactness",
        (f"{b.scheme.value},{b.q},{b.r},{_number(b.k_max)},{b.exactness}" for b in rows),
    )
    if not notes:
        return body
    return "".join(f"# {note}\n" for note in NOTES) + body


def format_decode_trace(trace: DecodeTrace) -> str:
    """One `name=value` line per intermediate decoding value."""
    fields = [
        ("u", trace.u),
        ("g", format_word(trace.g)),
        ("d", format_word(trace.d)),
        ("z_prime", trace.z_prime),
        ("z", trace.index.z),
        ("s", trace.index.s),
        ("p", trace.index.p),
        ("b", format_word(trace.b)),
        ("y", format_word(trace.y)),
        ("x", format_word(trace.x)),
    ]
    return "".join(f"{name}={value}\n" for name, value in fields)


def format_subset(params: Params, subset: SubsetSpec) -> str:
    fields = [
        ("q", params.q),
        ("k", params.k),
        ("r_prime", params.r_prime),
        ("n", params.n),
        ("beta_n", params.beta_n),
        ("beta_r", _number(params.beta_r)),
        ("z1", subset.z1),
        ("z2", subset.z2),
        ("mean_weight", _number(subset.mean_weight)),
        ("centering", subset.centering),
    ]
    return "".join(f"{name}={value}\n" for name, value in fields)


def format_u_histogram(histogram: Dict[int, int]) -> str:
    return _lines("u,count", (f"{u},{count}" for u, count in histogram.items()))
