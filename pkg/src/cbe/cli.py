"""Command-line surface: compress, decompress, stats, rank, unrank,
selftest.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 format or
corruption error, 4 selftest failure. Diagnostics go to stderr; data
and results go to stdout, so pipelines stay clean.
"""

import argparse
import io
import sys
from contextlib import contextmanager
from dataclasses import dataclass

from . import container, selftest
from .codec import RankRangeError, decode, encode
from .container import ArchiveError, DEFAULT_BLOCK_SIZE
from .multiset import (
    Alphabet,
    FrequencyTable,
    build_frequency_table,
    BIT_ALPHABET,
    BYTE_ALPHABET,
    message_stats,
    permutation_count,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FORMAT = 3
EXIT_SELFTEST = 4

_MODES = {"byte": container.MODE_BYTE, "bit": container.MODE_BIT}


@dataclass
class CliConfig:
    command: str
    input: str = "-"
    output: str = "-"
    block_size: int = DEFAULT_BLOCK_SIZE
    mode: str = "byte"
    message: str = None
    index: int = None
    freq_spec: str = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="cbe",
        description=(
            "Lossless codec that stores a message as its rank among the "
            "orderings of its symbol multiset."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    def add_io(p, output=True):
        p.add_argument("input", nargs="?", default="-",
                       help="input path, or - for stdin (default)")
        if output:
            p.add_argument("output", nargs="?", default="-",
                           help="output path, or - for stdout (default)")

    def add_coding(p):
        p.add_argument("-b", "--block-size", type=int,
                       default=DEFAULT_BLOCK_SIZE, metavar="N",
                       help="symbols per block (default %(default)s)")
        p.add_argument("--mode", choices=("byte", "bit"), default="byte",
                       help="symbol granularity (default %(default)s)")

    p = sub.add_parser("compress", help="encode a file or stream")
    add_io(p)
    add_coding(p)

    p = sub.add_parser("decompress", help="decode an archive")
    add_io(p)

    p = sub.add_parser("stats", help="entropy and size report for an input")
    add_io(p, output=False)
    add_coding(p)

    p = sub.add_parser("rank", help="rank of a text message")
    p.add_argument("message", help="message whose rank to print")

    p = sub.add_parser("unrank", help="message for a rank and frequency list")
    p.add_argument("index", help="decimal rank")
    p.add_argument("freq_spec", help='frequency list, e.g. "a=3,b=1,n=2"')

    sub.add_parser("selftest", help="run the built-in verification vectors")
    return parser


def parse_args(argv=None) -> CliConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CliConfig(command=args.command)
    for name in ("input", "output", "block_size", "mode", "message",
                 "freq_spec"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if cfg.block_size < 1:
        parser.error("block size must be at least 1")
    if cfg.command == "unrank":
        try:
            cfg.index = int(args.index)
        except ValueError:
            parser.error(f"index {args.index!r} is not a decimal integer")
        if cfg.index < 0:
            parser.error("index must be nonnegative")
    return cfg


@contextmanager
def _open_input(path):
    if path == "-":
        yield sys.stdin.buffer
    else:
        with open(path, "rb") as fp:
            yield fp


@contextmanager
def _open_output(path):
    if path == "-":
        yield sys.stdout.buffer
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fp:
            yield fp


def run_compress(cfg: CliConfig) -> int:
    with _open_input(cfg.input) as src, _open_output(cfg.output) as dst:
        container.compress(src, dst, block_size=cfg.block_size,
                           mode=_MODES[cfg.mode])
    return EXIT_OK


def run_decompress(cfg: CliConfig) -> int:
    with _open_input(cfg.input) as src, _open_output(cfg.output) as dst:
        container.decompress(src, dst)
    return EXIT_OK


class _NullSink:
    def write(self, data):
        return len(data)


def run_stats(cfg: CliConfig) -> int:
    with _open_input(cfg.input) as src:
        data = src.read()
    if cfg.mode == "byte":
        table = build_frequency_table(data, BYTE_ALPHABET)
    else:
        ones = sum(bin(b).count("1") for b in data)
        table = FrequencyTable(BIT_ALPHABET, (8 * len(data) - ones, ones))
    stats = message_stats(table)
    summary = container.compress(io.BytesIO(data), _NullSink(),
                                 block_size=cfg.block_size,
                                 mode=_MODES[cfg.mode])
    lines = [
        f"n={stats.n}",
        f"t_effective={stats.t_effective}",
        f"entropy_bits_per_symbol={stats.entropy_bits_per_symbol:.4f}",
        f"shannon_total_bits={stats.shannon_total_bits:.4f}",
        f"naive_bits={stats.naive_bits:.4f}",
        f"rank_bound_bits={stats.rank_bound_bits_real:.4f}",
        f"payload_bits={summary.payload_bits}",
        f"header_bytes={summary.overhead_bytes}",
        f"total_archive_bytes={summary.total_bytes}",
        f"compression_ratio={stats.compression_ratio:.4f}",
        f"space_saving_percent={stats.space_saving_percent:.4f}",
    ]
    print("\n".join(lines))
    return EXIT_OK


def _freq_string(table: FrequencyTable) -> str:
    return ",".join(f"{chr(s)}={c}" for s, c in table.nonzero_items())


def parse_freq_spec(text: str) -> FrequencyTable:
    """Parse 'a=3,b=1,n=2' into a table over the listed characters."""
    entries = {}
    for part in text.split(","):
        symbol, sep, number = part.partition("=")
        if not sep or len(symbol) != 1 or not number.isdigit():
            raise ValueError(f"bad frequency entry {part!r}")
        code = ord(symbol)
        if code in entries:
            raise ValueError(f"duplicate symbol {symbol!r}")
        entries[code] = int(number)
    alphabet = Alphabet(tuple(entries))
    return FrequencyTable(alphabet, tuple(entries[s] for s in alphabet.symbols))


def run_rank(cfg: CliConfig) -> int:
    symbols = [ord(c) for c in cfg.message]
    alphabet = Alphabet(tuple(set(symbols))) if symbols else BIT_ALPHABET
    rank, table = encode(symbols, alphabet)
    print(f"{rank}  {_freq_string(table)}")
    return EXIT_OK


def run_unrank(cfg: CliConfig) -> int:
    try:
        table = parse_freq_spec(cfg.freq_spec)
    except ValueError as exc:
        print(f"cbe: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.index >= permutation_count(table):
        raise RankRangeError(
            f"rank {cfg.index} out of range for table with "
            f"{permutation_count(table)} arrangements"
        )
    print("".join(chr(s) for s in decode(cfg.index, table)))
    return EXIT_OK


def run_selftest(cfg: CliConfig) -> int:
    results = selftest.run_all()
    for result in results:
        if result.passed:
            print(f"{result.name}: ok")
        else:
            print(f"{result.name}: FAIL ({result.detail})")
    return EXIT_OK if all(r.passed for r in results) else EXIT_SELFTEST


_COMMANDS = {
    "compress": run_compress,
    "decompress": run_decompress,
    "stats": run_stats,
    "rank": run_rank,
    "unrank": run_unrank,
    "selftest": run_selftest,
}


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    try:
        return _COMMANDS[cfg.command](cfg)
    except (ArchiveError, RankRangeError) as exc:
        print(f"cbe: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"cbe: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
