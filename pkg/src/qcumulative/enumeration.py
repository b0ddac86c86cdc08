"""Brute-force ground truth by exhaustive enumeration.

Partition generation, distinct multiset rearrangements and the exhaustive
filter for cumulative rearrangements live here.  The enumerators are the
oracle every fast path in this package is validated against, so they stay
deliberately naive: a depth-first walk over distinct orderings, pruned only
by the defining prefix-sum test itself.

All generators are lazy, single-consumer, and enumerate in a fixed
deterministic order.  They are meant for desk scale; beyond roughly a dozen
parts the walk becomes impractical and the counting module is the only
sensible route.
"""

from __future__ import annotations

from typing import Iterator

from .core import Composition, Partition, ResidueProfile, as_partition

__all__ = [
    "partitions_of",
    "rearrangements",
    "cumulative_rearrangements",
    "brute_count",
    "brute_reduced",
]


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _partitions_bounded(n, n)


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def _multiset_orderings(values: tuple[int, ...], counts: list[int], q: int | None) -> Iterator[Composition]:
    """Depth-first walk over distinct orderings of a multiset, lexicographic.

    ``values`` must be strictly increasing; ``counts`` gives the multiplicity
    of each value and is consumed in place.  When ``q`` is given, any prefix
    whose running sum is divisible by q is abandoned, so exactly the
    cumulative orderings come out (none for the empty multiset, which has no
    cumulative ordering by convention).
    """
    n = sum(counts)
    if n == 0:
        if q is None:
            yield ()
        return
    m = len(values)
    seq: list[int] = []
    chosen: list[int] = []
    sums = [0]
    nxt = 0
    while True:
        while nxt < m and not (counts[nxt] and (q is None or (sums[-1] + values[nxt]) % q)):
            nxt += 1
        if nxt == m:
            if not chosen:
                return
            last = chosen.pop()
            counts[last] += 1
            seq.pop()
            sums.pop()
            nxt = last + 1
            continue
        counts[nxt] -= 1
        seq.append(values[nxt])
        sums.append(sums[-1] + values[nxt])
        chosen.append(nxt)
        if len(seq) == n:
            yield tuple(seq)
            last = chosen.pop()
            counts[last] += 1
            seq.pop()
            sums.pop()
            nxt = last + 1
        else:
            nxt = 0


def _values_and_counts(lam: Partition) -> tuple[tuple[int, ...], list[int]]:
    values = sorted(set(lam))
    return tuple(values), [lam.count(v) for v in values]


def rearrangements(lam: Partition) -> Iterator[Composition]:
    """All distinct orderings of the parts of lam, in lexicographic order.

    The empty partition has exactly one rearrangement, the empty composition.
    """
    values, counts = _values_and_counts(as_partition(lam))
    return _multiset_orderings(values, counts, None)


def cumulative_rearrangements(lam: Partition, q: int) -> Iterator[Composition]:
    """The cumulative members of ``rearrangements(lam)``, in the same order."""
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    values, counts = _values_and_counts(as_partition(lam))
    return _multiset_orderings(values, counts, q)


def brute_count(lam: Partition, q: int) -> int:
    """Count cumulative rearrangements of lam by exhaustive enumeration."""
    return sum(1 for _ in cumulative_rearrangements(lam, q))


def brute_reduced(rp: ResidueProfile) -> Iterator[Composition]:
    """Enumerate the cumulative orderings of the reduced multiset of ``rp``.

    The reduced multiset has ``rp.r[i-1]`` parts equal to i for each
    i in 1..q-1; the profile must not carry divisible parts (r0 = 0).
    Orderings come out lexicographically.
    """
    if rp.q < 2:
        raise ValueError(f"modulus must be >= 2, got {rp.q}")
    if rp.r0 != 0:
        raise ValueError(f"profile must have r0 = 0, got {rp.r0}")
    return _multiset_orderings(tuple(range(1, rp.q)), list(rp.r), rp.q)
