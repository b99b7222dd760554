import itertools

import pytest

from cbe.codec import decode, encode
from cbe.multiset import Alphabet, FrequencyTable, permutation_count
from cbe.oracle import (
    EnumerationCapError,
    brute_rank,
    enumerate_in_rank_order,
)
from cbe.selftest import BANANA_RANKING, banana_table
from helpers import table_of


def chars(symbols) -> str:
    return "".join(chr(s) for s in symbols)


class TestEnumeration:
    def test_banana_full_table(self):
        rows = enumerate_in_rank_order(banana_table())
        assert len(rows) == 60
        assert [chars(r) for r in rows] == list(BANANA_RANKING)
        assert chars(rows[0]) == "nnbaaa"
        assert chars(rows[22]) == "banana"
        assert chars(rows[59]) == "aaabnn"

    def test_four_bit_words(self):
        rows = enumerate_in_rank_order(table_of(2, 2))
        numerals = ["".join(str(b) for b in reversed(r)) for r in rows]
        assert numerals == ["0011", "0101", "0110", "1001", "1010", "1100"]

    def test_single_symbol_and_empty(self):
        assert enumerate_in_rank_order(table_of(4)) == [(0, 0, 0, 0)]
        assert enumerate_in_rank_order(table_of(0, 0)) == [()]

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            enumerate_in_rank_order(table_of(8, 8), cap=100)


class TestBruteRank:
    def test_banana(self):
        table = banana_table()
        assert brute_rank([ord(c) for c in "banana"], table) == 22
        assert brute_rank([ord(c) for c in "nnbaaa"], table) == 0
        assert brute_rank([ord(c) for c in "aaabnn"], table) == 59

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            brute_rank([ord(c) for c in "bananb"], banana_table())

    def test_cap(self):
        with pytest.raises(EnumerationCapError):
            brute_rank([0] * 8 + [1] * 8, table_of(8, 8), cap=100)


class TestAgainstCodec:
    def test_rows_roundtrip_for_small_tables(self):
        # every multiset with at most 5040 arrangements, up to 4 symbols
        for t in (1, 2, 3, 4):
            alpha = Alphabet(tuple(range(t)))
            for n in range(0, 11):
                for counts in _compositions(n, t):
                    table = FrequencyTable(alpha, counts)
                    if permutation_count(table) > 5040:
                        continue
                    rows = enumerate_in_rank_order(table)
                    assert len(rows) == permutation_count(table)
                    for index, row in enumerate(rows):
                        assert encode(row, alpha)[0] == index
                        assert tuple(decode(index, table)) == row

    def test_brute_rank_matches_encode(self):
        alpha = Alphabet((0, 1, 2))
        for n in range(0, 6):
            for msg in itertools.product(range(3), repeat=n):
                rank, table = encode(msg, alpha)
                assert brute_rank(msg, table) == rank


def _compositions(n, parts):
    """All tuples of `parts` nonnegative ints summing to n."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest
