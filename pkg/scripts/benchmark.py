#!/usr/bin/env python3
"""Throughput and bound-tightness report for the block codec.

Times compress/decompress over synthetic corpora and shows how close
the payload lands to the entropy total per corpus:

    python scripts/benchmark.py
    python scripts/benchmark.py --size 4194304 --block-size 8192
"""

import argparse
import io
import random
import time

from cbe.container import MODE_BIT, MODE_BYTE, compress, decompress
from cbe.multiset import (
    BIT_ALPHABET,
    BYTE_ALPHABET,
    FrequencyTable,
    build_frequency_table,
    message_stats,
)


def corpora(size, seed):
    rng = random.Random(seed)
    text = (
        b"the quick brown fox jumps over the lazy dog while the codec "
        b"counts every letter it has seen so far. "
    )
    skew = bytes(rng.choices(range(8), weights=(40, 20, 10, 8, 8, 6, 4, 4),
                             k=size))
    yield "constant", b"\x2a" * size
    yield "text", (text * (size // len(text) + 1))[:size]
    yield "skewed-8", skew
    yield "random", rng.randbytes(size)


def run(name, data, block_size, mode):
    src = io.BytesIO(data)
    archive = io.BytesIO()
    t0 = time.perf_counter()
    summary = compress(src, archive, block_size=block_size, mode=mode)
    t1 = time.perf_counter()
    archive.seek(0)
    out = io.BytesIO()
    decompress(archive, out)
    t2 = time.perf_counter()
    assert out.getvalue() == data, f"{name}: roundtrip mismatch"

    # reference entropy in the same symbol domain the codec ranks over
    if mode == MODE_BYTE:
        table = build_frequency_table(data, BYTE_ALPHABET)
    else:
        ones = sum(bin(b).count("1") for b in data)
        table = FrequencyTable(BIT_ALPHABET, (8 * len(data) - ones, ones))
    stats = message_stats(table)
    mib = len(data) / (1 << 20)
    print(
        f"{name:>10}  enc {mib / max(t1 - t0, 1e-9):6.2f} MiB/s"
        f"  dec {mib / max(t2 - t1, 1e-9):6.2f} MiB/s"
        f"  payload {summary.payload_bits:>9} bits"
        f"  nH {stats.shannon_total_bits:12.1f}"
        f"  archive {summary.total_bytes:>9} B"
        f"  blocks {summary.blocks:>4}"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=1 << 20,
                        help="corpus size in bytes (default 1 MiB)")
    parser.add_argument("--block-size", type=int, default=4096)
    parser.add_argument("--mode", choices=("byte", "bit"), default="byte")
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()
    mode = MODE_BYTE if args.mode == "byte" else MODE_BIT

    print(f"size={args.size} block_size={args.block_size} mode={args.mode}")
    for name, data in corpora(args.size, args.seed):
        run(name, data, args.block_size, mode)


if __name__ == "__main__":
    main()
