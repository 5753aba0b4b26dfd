"""
CLI - Command-line front end for the balanced q-ary codec

Subcommands: encode, decode, gray, walk, subset, table, prefixes, ustats,
compare. Data goes to standard output (or --out), diagnostics to standard
error. Exit codes: 0 success, 2 parameter or usage error, 3 decode or data
error.
"""

import argparse
import sys
from contextlib import contextmanager
from typing import Iterator, List, Optional, TextIO

import structlog

from . import __version__
from .analysis import redundancy_table
from .balancing import balance_candidates, walk_trace
from .codec import (
    CENTERINGS,
    codeword_walk,
    decode_trace,
    encode,
    enumerate_encodings,
    prefix_table,
    select_subset,
    u_histogram,
)
from .config import configure_logging, get_settings
from .core import format_word, iter_words, make_params, make_shape, parse_word
from .errors import DecodeError, EncodingFailure, QBalanceError
from .formatter import (
    format_decode_trace,
    format_encoding_table,
    format_gray_table,
    format_payload_table,
    format_prefix_table,
    format_redundancy_csv,
    format_subset,
    format_u_histogram,
    format_walk_csv,
)
from .graycode import gray_table, gray_walk
from .plotting import gray_walk_figure, redundancy_figure, walk_figure

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_DATA = 3


def _add_code_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", type=int, required=True, help="alphabet size")
    parser.add_argument("--k", type=int, required=True, help="information length")
    parser.add_argument(
        "--centering",
        choices=CENTERINGS,
        default="left",
        help="prefix subset placement for odd q",
    )


def _add_io_args(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--word", help="single word in text form")
    source.add_argument("--in", dest="infile", help="file with one word per line ('-' for stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbalance",
        description="Balanced q-ary encoding with Gray code prefixes",
    )
    parser.add_argument("--version", action="version", version=f"qbalance {__version__}")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode information words")
    _add_code_args(p)
    _add_io_args(p)
    p.add_argument("--trace", action="store_true", help="also print z, z', u and weight")

    p = sub.add_parser("decode", help="decode codewords")
    _add_code_args(p)
    _add_io_args(p)
    p.add_argument("--strict", action="store_true", help="reject unbalanced codewords")
    p.add_argument("--trace", action="store_true", help="print every intermediate value")

    p = sub.add_parser("subset", help="show parameters and the Gray prefix subset")
    _add_code_args(p)

    p = sub.add_parser("table", help="tabulate every encoder candidate of a word (TSV)")
    _add_code_args(p)
    p.add_argument("--word", required=True)

    p = sub.add_parser("prefixes", help="decode every Gray word of the prefix length (TSV)")
    _add_code_args(p)

    p = sub.add_parser("gray", help="list the (r', q)-Gray code (TSV)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True, help="Gray word length r'")
    p.add_argument("--walk", action="store_true", help="print the weight walk as CSV instead")
    p.add_argument("--plot", help="write the weight walk chart to this HTML file")

    p = sub.add_parser("walk", help="random walk of weights as CSV")
    p.add_argument("--q", type=int, required=True)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--word", help="payload word; walks w(x + b_z) over z")
    target.add_argument("--r", type=int, help="Gray word length; walks w(g) over z'")
    p.add_argument("--combined", action="store_true", help="walk w(g | y) of the full codeword")
    p.add_argument("--centering", choices=CENTERINGS, default="left")
    p.add_argument("--payload", action="store_true", help="print the payload candidate table (TSV)")
    p.add_argument("--plot", help="write the walk chart to this HTML file")

    p = sub.add_parser("ustats", help="histogram of u over every word of length k")
    _add_code_args(p)

    p = sub.add_parser("compare", help="information length vs. redundancy per scheme (CSV)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--rmin", type=int, default=1)
    p.add_argument("--no-notes", action="store_true", help="omit the leading # comment lines")
    p.add_argument("--plot", help="write the comparison chart to this HTML file")

    return parser


def _read_words(args: argparse.Namespace, stdin: TextIO) -> Iterator[str]:
    if args.word is not None:
        yield args.word
        return
    if args.infile in (None, "-"):
        for line in stdin:
            if line.strip():
                yield line.strip()
        return
    with open(args.infile, encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                yield line.strip()


@contextmanager
def _sink(path: Optional[str], stdout: TextIO) -> Iterator[TextIO]:
    if path is None:
        yield stdout
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        yield handle


def _write_plot(fig, path: str) -> None:
    fig.write_html(path)
    logger.info("plot_written", path=path)


def _cmd_encode(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    params = make_params(args.q, args.k, args.centering)
    for text in _read_words(args, stdin):
        codeword, z = encode(params, parse_word(text, args.q))
        if args.trace:
            out.write(
                f"{codeword}\tz={z}\tz_prime={codeword.g.z_prime}\tu={codeword.u}\tweight={codeword.weight}\n"
            )
        else:
            out.write(f"{codeword}\n")


def _cmd_decode(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    params = make_params(args.q, args.k, args.centering)
    for text in _read_words(args, stdin):
        trace = decode_trace(params, parse_word(text, args.q), strict=args.strict)
        out.write(format_decode_trace(trace) if args.trace else f"{format_word(trace.x)}\n")


def _cmd_subset(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    params = make_params(args.q, args.k, args.centering)
    subset = select_subset(params.q, params.k, params.r_prime, centering=args.centering)
    out.write(format_subset(params, subset))


def _cmd_table(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    params = make_params(args.q, args.k, args.centering)
    out.write(format_encoding_table(enumerate_encodings(params, parse_word(args.word, args.q))))


def _cmd_prefixes(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    params = make_params(args.q, args.k, args.centering)
    out.write(format_prefix_table(prefix_table(params)))


def _cmd_gray(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    if args.walk or args.plot:
        trace = gray_walk(args.q, args.r)
        if args.plot:
            _write_plot(gray_walk_figure(trace), args.plot)
        if args.walk:
            out.write(format_walk_csv(trace))
            return
    out.write(format_gray_table(gray_table(args.q, args.r)))


def _cmd_walk(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    if args.r is not None:
        trace = gray_walk(args.q, args.r)
        figure = gray_walk_figure(trace) if args.plot else None
    else:
        x = parse_word(args.word, args.q)
        if args.combined:
            params = make_params(args.q, len(x), args.centering)
            trace = codeword_walk(params, x)
            band = (params.beta_n - (params.q - 1), params.beta_n)
            figure = walk_figure(trace, title="Codeword random walk", band=band) if args.plot else None
        else:
            shape = make_shape(args.q, len(x))
            if args.payload:
                out.write(format_payload_table(balance_candidates(shape, x)))
                return
            trace = walk_trace(shape, x)
            figure = walk_figure(trace, title="Payload random walk") if args.plot else None
    if figure is not None:
        _write_plot(figure, args.plot)
    out.write(format_walk_csv(trace))


def _cmd_ustats(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    params = make_params(args.q, args.k, args.centering)
    words = iter_words(params.q, params.k)
    out.write(format_u_histogram(u_histogram(params, words)))


def _cmd_compare(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> None:
    rows = redundancy_table(args.q, range(args.rmin, args.rmax + 1))
    if args.plot:
        _write_plot(redundancy_figure(rows), args.plot)
    out.write(format_redundancy_csv(rows, notes=not args.no_notes))


_COMMANDS = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "subset": _cmd_subset,
    "table": _cmd_table,
    "prefixes": _cmd_prefixes,
    "gray": _cmd_gray,
    "walk": _cmd_walk,
    "ustats": _cmd_ustats,
    "compare": _cmd_compare,
}


def run(
    argv: Optional[List[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Parse arguments, dispatch to the library and map errors to exit codes

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])
        stdin, stdout, stderr: Streams, defaulting to the process streams

    Returns:
        0 on success, 2 for parameter or usage errors, 3 for decode or data errors
    """
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr

    settings = get_settings()
    configure_logging(settings.log_level, json=settings.log_json)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_PARAMETER

    try:
        with _sink(args.out, stdout) as out:
            _COMMANDS[args.command](args, out, stdin)
    except (DecodeError, EncodingFailure) as e:
        logger.error("command_failed", command=args.command, error=str(e))
        stderr.write(f"qbalance: error: {e}\n")
        return EXIT_DATA
    except QBalanceError as e:
        logger.error("command_failed", command=args.command, error=str(e))
        stderr.write(f"qbalance: error: {e}\n")
        return EXIT_PARAMETER
    except UnicodeDecodeError as e:
        logger.error("input_not_utf8", command=args.command, error=str(e))
        stderr.write(f"qbalance: error: input is not valid UTF-8 text: {e}\n")
        return EXIT_DATA
    except OSError as e:
        stderr.write(f"qbalance: error: {e}\n")
        return EXIT_PARAMETER
    return EXIT_OK


def main() -> None:
    sys.exit(run())
