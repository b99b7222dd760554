"""Shared test helpers."""

from math import factorial

from cbe import Alphabet, FrequencyTable


def table_of(*counts) -> FrequencyTable:
    """Frequency table over the implicit alphabet 0..len(counts)-1."""
    return FrequencyTable(Alphabet(tuple(range(len(counts)))), counts)


def char_table(spec: dict) -> FrequencyTable:
    """Frequency table from a {char: count} mapping."""
    alphabet = Alphabet(tuple(ord(c) for c in spec))
    return FrequencyTable(
        alphabet, tuple(spec[chr(s)] for s in alphabet.symbols)
    )


def factorial_multinomial(counts) -> int:
    """Arrangement count straight from factorials (independent oracle)."""
    result = factorial(sum(counts))
    for c in counts:
        result //= factorial(c)
    return result
