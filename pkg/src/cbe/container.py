"""Block archive framing for the rank codec.

Layout (integers are canonical little-endian base-128 varints):

    magic   4 bytes   b"CBE1"
    mode    1 byte    0x01 byte symbols, 0x02 bit symbols
    block*  varint    n, symbols in the block, >= 1
            varint    d, distinct symbols present, >= 1
            d times   symbol id (1 byte), count (varint >= 1),
                      strictly ascending symbol ids
            varint    payload_len == ceil(ceil(log2 P) / 8) for the
                      block's table, where P is its arrangement count
            bytes     the block's rank, big-endian, payload_len bytes
    end     varint 0  terminator; nothing may follow

Each block is independently decodable: its table is complete side
information for its rank. Bit mode unpacks every input byte least
significant bit first, so byte k contributes arrival positions
8k..8k+7.
"""

import io
import math
from dataclasses import dataclass

from .binomials import multinomial
from .codec import _unrank_counts, encode, encode_binary, decode_binary
from .multiset import BYTE_ALPHABET, rank_width_bits

MAGIC = b"CBE1"
MODE_BYTE = 0x01
MODE_BIT = 0x02
DEFAULT_BLOCK_SIZE = 4096


class ArchiveError(ValueError):
    """The bytes violate the archive format."""


def write_varint(value: int) -> bytes:
    """Canonical base-128 little-endian encoding of a nonnegative int."""
    if value < 0:
        raise ValueError("varint values are unsigned")
    out = bytearray()
    while True:
        group = value & 0x7F
        value >>= 7
        out.append(group | (0x80 if value else 0))
        if not value:
            return bytes(out)


def read_varint(data: bytes, offset: int = 0):
    """Decode a varint from `data` at `offset`; returns (value, end offset).

    Rejects truncated input and non-canonical encodings (a redundant
    zero final group).
    """
    reader = _ByteReader(io.BytesIO(data[offset:]))
    value = reader.varint("varint")
    return value, offset + reader.consumed


class _ByteReader:
    """Exact-length reads with format-level diagnostics."""

    def __init__(self, fp):
        self._fp = fp
        self.consumed = 0

    def exact(self, size: int, what: str) -> bytes:
        parts = []
        need = size
        while need:
            chunk = self._fp.read(need)
            if not chunk:
                raise ArchiveError(f"truncated archive while reading {what}")
            parts.append(chunk)
            need -= len(chunk)
        self.consumed += size
        return b"".join(parts)

    def varint(self, what: str) -> int:
        value = 0
        shift = 0
        while True:
            byte = self.exact(1, what)[0]
            group = byte & 0x7F
            value |= group << shift
            if not byte & 0x80:
                if shift and not group:
                    raise ArchiveError(f"non-canonical varint in {what}")
                return value
            shift += 7
            if shift > 63:
                raise ArchiveError(f"varint too long in {what}")


@dataclass(frozen=True)
class ArchiveSummary:
    """Size accounting returned by `compress`."""

    blocks: int
    symbols: int
    payload_bits: int
    payload_bytes: int
    overhead_bytes: int

    @property
    def total_bytes(self) -> int:
        return self.payload_bytes + self.overhead_bytes


def _read_full(src, size: int) -> bytes:
    """Read exactly `size` bytes unless the stream ends first."""
    parts = []
    need = size
    while need:
        chunk = src.read(need)
        if not chunk:
            break
        parts.append(chunk)
        need -= len(chunk)
    return b"".join(parts)


def _write_block(dst, n, entries, rank, width_bits):
    payload_len = (width_bits + 7) // 8
    parts = [write_varint(n), write_varint(len(entries))]
    for symbol, count in entries:
        parts.append(bytes((symbol,)))
        parts.append(write_varint(count))
    parts.append(write_varint(payload_len))
    parts.append(rank.to_bytes(payload_len, "big"))
    block = b"".join(parts)
    dst.write(block)
    return len(block) - payload_len, payload_len


_BIT_TUPLES = tuple(
    tuple((value >> s) & 1 for s in range(8)) for value in range(256)
)


def _iter_bit_blocks(src, block_size):
    """Arrival-order bit blocks of at most block_size bits."""
    pending = []
    while True:
        chunk = _read_full(src, max(4096, (block_size + 7) // 8))
        if not chunk:
            break
        for byte in chunk:
            pending.extend(_BIT_TUPLES[byte])
        while len(pending) >= block_size:
            yield pending[:block_size]
            pending = pending[block_size:]
    if pending:
        yield pending


def compress(src, dst, *, block_size: int = DEFAULT_BLOCK_SIZE, mode: int = MODE_BYTE):
    """Encode `src` into `dst` as independent blocks; returns ArchiveSummary.

    Every block is a single adaptive pass: the counts tallied while
    ranking the block become its header.
    """
    if block_size < 1:
        raise ValueError("block_size must be at least 1")
    if mode not in (MODE_BYTE, MODE_BIT):
        raise ValueError(f"unknown mode {mode!r}")
    dst.write(MAGIC)
    dst.write(bytes((mode,)))
    overhead = len(MAGIC) + 1
    payload_bits = payload_bytes = blocks = symbols = 0

    if mode == MODE_BYTE:
        while True:
            try:
                chunk = _read_full(src, block_size)
            except OSError as exc:
                raise OSError(f"reading block {blocks}: {exc}") from exc
            if not chunk:
                break
            rank, table = encode(chunk, BYTE_ALPHABET)
            entries = table.nonzero_items()
            width = rank_width_bits(multinomial(table.counts))
            head, paid = _write_block(dst, len(chunk), entries, rank, width)
            overhead += head
            payload_bytes += paid
            payload_bits += width
            blocks += 1
            symbols += len(chunk)
    else:
        try:
            for bits in _iter_bit_blocks(src, block_size):
                rank, zeros, ones = encode_binary(bits)
                entries = [(s, c) for s, c in ((0, zeros), (1, ones)) if c]
                width = rank_width_bits(math.comb(zeros + ones, ones))
                head, paid = _write_block(dst, len(bits), entries, rank, width)
                overhead += head
                payload_bytes += paid
                payload_bits += width
                blocks += 1
                symbols += len(bits)
        except OSError as exc:
            raise OSError(f"reading block {blocks}: {exc}") from exc

    dst.write(write_varint(0))
    overhead += 1
    return ArchiveSummary(
        blocks=blocks,
        symbols=symbols,
        payload_bits=payload_bits,
        payload_bytes=payload_bytes,
        overhead_bytes=overhead,
    )


def _read_block_table(reader, n, index, max_symbol):
    """Parse one block's symbol entries; returns a 256-slot count list."""
    what = f"block {index}"
    distinct = reader.varint(what)
    if not 1 <= distinct <= max_symbol + 1:
        raise ArchiveError(f"{what}: invalid distinct-symbol count {distinct}")
    counts = [0] * 256
    previous = -1
    total = 0
    for _ in range(distinct):
        symbol = reader.exact(1, what)[0]
        if symbol <= previous:
            raise ArchiveError(f"{what}: symbol entries not strictly ascending")
        if symbol > max_symbol:
            raise ArchiveError(f"{what}: symbol {symbol} invalid for this mode")
        count = reader.varint(what)
        if count < 1:
            raise ArchiveError(f"{what}: zero count for symbol {symbol}")
        counts[symbol] = count
        total += count
        previous = symbol
    if total != n:
        raise ArchiveError(f"{what}: counts sum to {total}, header says {n}")
    return counts


def _read_block_rank(reader, index, permutations):
    """Parse one block's payload; returns the validated rank."""
    what = f"block {index}"
    width = rank_width_bits(permutations)
    expected_len = (width + 7) // 8
    payload_len = reader.varint(what)
    if payload_len != expected_len:
        raise ArchiveError(
            f"{what}: payload is {payload_len} bytes, table requires {expected_len}"
        )
    rank = int.from_bytes(reader.exact(payload_len, what), "big")
    if rank >= permutations:
        raise ArchiveError(
            f"{what}: rank {rank} out of range ({permutations} arrangements)"
        )
    return rank


def decompress(src, dst):
    """Decode an archive from `src`, writing original bytes to `dst`."""
    reader = _ByteReader(src)
    if reader.exact(4, "archive magic") != MAGIC:
        raise ArchiveError("bad magic: not a CBE archive")
    mode = reader.exact(1, "archive mode")[0]
    if mode not in (MODE_BYTE, MODE_BIT):
        raise ArchiveError(f"unknown mode byte 0x{mode:02x}")

    index = 0
    bit_acc = 0
    bit_fill = 0
    while True:
        n = reader.varint("block length")
        if n == 0:
            break
        index += 1
        if mode == MODE_BYTE:
            counts = _read_block_table(reader, n, index, 255)
            permutations = multinomial(counts)
            rank = _read_block_rank(reader, index, permutations)
            ranks = _unrank_counts(rank, counts, permutations)
            dst.write(bytes(ranks))
        else:
            counts = _read_block_table(reader, n, index, 1)
            permutations = math.comb(n, counts[1])
            rank = _read_block_rank(reader, index, permutations)
            packed = bytearray()
            for bit in decode_binary(rank, counts[0], counts[1]):
                bit_acc |= bit << bit_fill
                bit_fill += 1
                if bit_fill == 8:
                    packed.append(bit_acc)
                    bit_acc = 0
                    bit_fill = 0
            dst.write(bytes(packed))
    if mode == MODE_BIT and bit_fill:
        raise ArchiveError("bit stream does not end on a byte boundary")
    if src.read(1):
        raise ArchiveError("trailing data after terminator")


def compress_bytes(data: bytes, *, block_size: int = DEFAULT_BLOCK_SIZE,
                   mode: int = MODE_BYTE) -> bytes:
    """`compress` for in-memory data."""
    out = io.BytesIO()
    compress(io.BytesIO(data), out, block_size=block_size, mode=mode)
    return out.getvalue()


def decompress_bytes(archive: bytes) -> bytes:
    """`decompress` for in-memory data."""
    out = io.BytesIO()
    decompress(io.BytesIO(archive), out)
    return out.getvalue()
