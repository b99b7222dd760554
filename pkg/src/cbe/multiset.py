"""Alphabets, frequency tables, and the information-theoretic yardsticks
used to size and judge encoded ranks."""

import math
from dataclasses import dataclass, field

from .binomials import multinomial


class UnknownSymbolError(ValueError):
    """A message symbol is not a member of the working alphabet."""

    def __init__(self, symbol, position=None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"symbol {symbol!r}{where} is not in the alphabet")
        self.symbol = symbol
        self.position = position


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct unsigned symbol identifiers.

    Symbols are kept in ascending order and a symbol's position is its
    rank; smaller identifiers rank lower in every ordering this package
    produces.
    """

    symbols: tuple

    def __post_init__(self):
        ordered = tuple(sorted(self.symbols))
        if not ordered:
            raise ValueError("alphabet must contain at least one symbol")
        for s in ordered:
            if not isinstance(s, int) or s < 0:
                raise ValueError(f"symbol {s!r} is not an unsigned integer")
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate symbol {a!r}")
        object.__setattr__(self, "symbols", ordered)
        object.__setattr__(self, "_ranks", {s: i for i, s in enumerate(ordered)})

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, symbol):
        return symbol in self._ranks

    def rank_of(self, symbol) -> int:
        try:
            return self._ranks[symbol]
        except KeyError:
            raise UnknownSymbolError(symbol, None) from None

    @property
    def rank_map(self) -> dict:
        """Symbol -> rank lookup table (treat as read-only)."""
        return self._ranks


BYTE_ALPHABET = Alphabet(tuple(range(256)))
BIT_ALPHABET = Alphabet((0, 1))


@dataclass(frozen=True)
class FrequencyTable:
    """Per-symbol occurrence counts; the decoder's side information."""

    alphabet: Alphabet
    counts: tuple
    n: int = field(init=False)

    def __post_init__(self):
        counts = tuple(self.counts)
        if len(counts) != len(self.alphabet):
            raise ValueError(
                f"{len(counts)} counts for {len(self.alphabet)} symbols"
            )
        for c in counts:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"count {c!r} is not a nonnegative integer")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "n", sum(counts))

    @property
    def t_effective(self) -> int:
        """Number of symbols that actually occur."""
        return sum(1 for c in self.counts if c)

    def nonzero_items(self):
        """(symbol, count) pairs for occurring symbols, ascending."""
        return [
            (s, c) for s, c in zip(self.alphabet.symbols, self.counts) if c
        ]

    def multiset(self):
        """The counted symbols expanded into an ascending list."""
        out = []
        for s, c in zip(self.alphabet.symbols, self.counts):
            out.extend([s] * c)
        return out


def build_frequency_table(message, alphabet: Alphabet) -> FrequencyTable:
    """Tally a message over `alphabet`, rejecting foreign symbols."""
    counts = [0] * len(alphabet)
    ranks = alphabet.rank_map
    for position, symbol in enumerate(message):
        rank = ranks.get(symbol)
        if rank is None:
            raise UnknownSymbolError(symbol, position)
        counts[rank] += 1
    return FrequencyTable(alphabet, tuple(counts))


def shannon_entropy(table: FrequencyTable) -> float:
    """Entropy of the table's empirical distribution, bits/symbol.

    Zero-count symbols contribute nothing; the empty table has entropy 0.
    """
    n = table.n
    if n == 0:
        return 0.0
    total = 0.0
    for c in table.counts:
        if c:
            p = c / n
            total -= p * math.log2(p)
    return total


def permutation_count(table: FrequencyTable) -> int:
    """Number of distinct arrangements of the table's multiset."""
    return multinomial(table.counts)


def rank_width_bits(permutations: int) -> int:
    """Bits needed to address any rank in [0, permutations)."""
    if permutations < 1:
        raise ValueError("permutation count must be positive")
    return (permutations - 1).bit_length()


def payload_bit_length(table: FrequencyTable) -> int:
    """Worst-case rank width for this table, ceil(log2 P) bits."""
    return rank_width_bits(permutation_count(table))


def naive_bit_length(n: int, t: int) -> float:
    """Bits for n symbols with no statistics: n * log2(t)."""
    if t < 1:
        raise ValueError("alphabet size must be positive")
    if n == 0:
        return 0.0
    return n * math.log2(t)


def compression_ratio(uncompressed_bits: float, compressed_bits: float) -> float:
    """Uncompressed over compressed size."""
    if compressed_bits <= 0:
        raise ValueError("compressed size must be positive")
    return uncompressed_bits / compressed_bits


def space_saving_percent(uncompressed_bits: float, compressed_bits: float) -> float:
    """Percentage of space removed by compression."""
    if uncompressed_bits <= 0:
        raise ValueError("uncompressed size must be positive")
    return (1.0 - compressed_bits / uncompressed_bits) * 100.0


def shannon_pattern_count_log2(table: FrequencyTable) -> float:
    """log2 of the pattern count implied by the entropy, n*log2(n) - sum(f*log2(f)).

    Algebraically equal to n * shannon_entropy(table); kept as a separate
    formula so the identity can be checked numerically.
    """
    n = table.n
    if n == 0:
        return 0.0
    total = n * math.log2(n)
    for c in table.counts:
        if c:
            total -= c * math.log2(c)
    return total


def entropy_bound_margin(table: FrequencyTable) -> float:
    """Slack of the entropy bound: n*H - log2(P), in bits.

    Strictly positive when at least two counts are nonzero; exactly zero
    when a single symbol carries all the mass.
    """
    if table.n == 0:
        return 0.0
    return table.n * shannon_entropy(table) - math.log2(permutation_count(table))


@dataclass(frozen=True)
class MessageStats:
    """Size accounting for one message/table."""

    n: int
    t_effective: int
    entropy_bits_per_symbol: float
    shannon_total_bits: float
    rank_bound_bits_exact: int
    rank_bound_bits_real: float
    naive_bits: float
    compression_ratio: float
    space_saving_percent: float


def message_stats(table: FrequencyTable) -> MessageStats:
    """All yardsticks for one table.

    The naive baseline uses the number of symbols actually present, so
    it is a length the message itself could be stored in. Ratio and
    saving compare that baseline against the entropy total; with one or
    zero distinct symbols both lengths vanish and the ratio degenerates
    to 1 (nothing to compress).
    """
    n = table.n
    t_eff = table.t_effective
    entropy = shannon_entropy(table)
    total_entropy_bits = n * entropy
    permutations = permutation_count(table)
    naive = naive_bit_length(n, t_eff) if t_eff else 0.0
    if naive > 0.0 and total_entropy_bits > 0.0:
        ratio = compression_ratio(naive, total_entropy_bits)
        saving = space_saving_percent(naive, total_entropy_bits)
    else:
        ratio = 1.0
        saving = 0.0
    return MessageStats(
        n=n,
        t_effective=t_eff,
        entropy_bits_per_symbol=entropy,
        shannon_total_bits=total_entropy_bits,
        rank_bound_bits_exact=rank_width_bits(permutations),
        rank_bound_bits_real=math.log2(permutations),
        naive_bits=naive,
        compression_ratio=ratio,
        space_saving_percent=saving,
    )
