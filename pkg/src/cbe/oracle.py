"""Brute-force ground truth for the rank codec.

Arrangements are enumerated by explicit stepping and ranked by
counting, with no arithmetic shared with the codec (plain factorials
and the textbook next-permutation only). Intentionally bounded: this
is the reference the fast path is judged against, not a fast path.
"""

import math

from .multiset import FrequencyTable

DEFAULT_CAP = 10**6


class EnumerationCapError(ValueError):
    """The multiset has more arrangements than the enumeration cap."""


def _arrangement_total(counts) -> int:
    total = math.factorial(sum(counts))
    for c in counts:
        total //= math.factorial(c)
    return total


def _next_permutation(seq) -> bool:
    """Step `seq` to its lexicographic successor in place."""
    i = len(seq) - 2
    while i >= 0 and seq[i] >= seq[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(seq) - 1
    while seq[j] <= seq[i]:
        j -= 1
    seq[i], seq[j] = seq[j], seq[i]
    seq[i + 1:] = reversed(seq[i + 1:])
    return True


def enumerate_in_rank_order(table: FrequencyTable, cap: int = DEFAULT_CAP):
    """All arrangements of the table's multiset, ordered by rank.

    One arrangement precedes another when, at the largest arrival
    position where they differ, it holds the smaller symbol. Stepping
    therefore runs the standard next-permutation on the reversed view
    and emits each state reversed back into arrival order.
    """
    total = _arrangement_total(table.counts)
    if total > cap:
        raise EnumerationCapError(f"{total} arrangements exceed the cap of {cap}")
    view = table.multiset()
    rows = [tuple(reversed(view))]
    while _next_permutation(view):
        rows.append(tuple(reversed(view)))
    return rows


def brute_rank(message, table: FrequencyTable, cap: int = DEFAULT_CAP) -> int:
    """Rank of `message` found by counting from the smallest arrangement.

    The result is the number of arrangements that order strictly below
    the message. The message must use exactly the table's multiset.
    """
    msg = list(message)
    if sorted(msg) != table.multiset():
        raise ValueError("message is not a permutation of the table's multiset")
    total = _arrangement_total(table.counts)
    if total > cap:
        raise EnumerationCapError(f"{total} arrangements exceed the cap of {cap}")
    target = list(reversed(msg))
    view = table.multiset()
    rank = 0
    while view != target:
        if not _next_permutation(view):
            raise AssertionError("enumeration exhausted before reaching message")
        rank += 1
    return rank
