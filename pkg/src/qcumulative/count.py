"""Exact counting of cumulative rearrangements.

The reduced count (orderings of the multiset with r_i parts equal to i that
keep every prefix sum off 0 mod q) is computed by a memoised dynamic program
whose state is the vector of remaining part counts together with the running
prefix residue.  The full count for a partition then factors as

    reduced count x (product of residue-class factorials over part-value
    factorials) x (a binomial placing the divisible parts),

all in exact integer arithmetic.
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from typing import Iterable

from .core import Partition, ResidueProfile, as_partition, residue_profile

__all__ = ["factorial", "binomial", "CountTable", "reduced_count", "cumulative_count"]


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Exact C(n, k), with 0 for k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


class CountTable:
    """Memoised counts of cumulative orderings of reduced multisets.

    ``orderings(counts, residue)`` is the number of ways to lay out a
    multiset with ``counts[i-1]`` parts equal to i so that, starting from
    the given running prefix residue, no prefix sum becomes divisible by q.
    The empty multiset counts once (the empty layout extends nothing).

    Entries are exact integers.  A table may be shared between threads:
    computation holds an internal lock, so concurrent use returns the same
    values as a private table.
    """

    def __init__(self, q: int):
        if q < 2:
            raise ValueError(f"modulus must be >= 2, got {q}")
        self.q = q
        self._memo: dict[tuple[tuple[int, ...], int], int] = {}
        self._lock = threading.Lock()

    def orderings(self, counts: Iterable[int], residue: int = 0) -> int:
        counts = tuple(counts)
        if len(counts) != self.q - 1:
            raise ValueError(f"count vector must have length q-1 = {self.q - 1}, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError(f"counts must be >= 0, got {counts}")
        with self._lock:
            return self._fill(counts, residue % self.q)

    def _fill(self, counts: tuple[int, ...], residue: int) -> int:
        # Iterative post-order evaluation; recursion depth would otherwise
        # grow with the total number of parts.
        q = self.q
        memo = self._memo
        target = (counts, residue)
        stack = [target]
        while stack:
            state = stack[-1]
            if state in memo:
                stack.pop()
                continue
            v, s = state
            if not any(v):
                memo[state] = 1
                stack.pop()
                continue
            total = 0
            missing = []
            for i in range(1, q):
                if not v[i - 1]:
                    continue
                t = (s + i) % q
                if t == 0:
                    continue
                child = (v[: i - 1] + (v[i - 1] - 1,) + v[i:], t)
                known = memo.get(child)
                if known is None:
                    missing.append(child)
                else:
                    total += known
            if missing:
                stack.extend(missing)
            else:
                memo[state] = total
                stack.pop()
        return memo[target]


def reduced_count(rp: ResidueProfile) -> int:
    """Exact number of cumulative orderings of the reduced multiset of rp.

    The profile must have r0 = 0.  The all-zero vector reduces to the empty
    composition, which is not cumulative, so its count is 0.
    """
    if rp.q < 2:
        raise ValueError(f"modulus must be >= 2, got {rp.q}")
    if rp.r0 != 0:
        raise ValueError(f"profile must have r0 = 0, got {rp.r0}")
    if not any(rp.r):
        return 0
    return CountTable(rp.q).orderings(rp.r)


def cumulative_count(lam: Partition, q: int) -> int:
    """Exact number of cumulative rearrangements of lam.

    The residue pattern of a cumulative rearrangement is a cumulative
    ordering of the reduced multiset; each pattern lifts in
    (prod r_i!) / (prod n_s!) ways per residue class, and the parts
    divisible by q drop into any of C(len(lam)-1, r0) slot choices after
    the leading part.  For q = 1 every prefix sum is divisible, so the
    count is 0 for every partition.
    """
    lam = as_partition(lam)
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    if q == 1 or not lam:
        return 0
    prof = residue_profile(lam, q)
    reduced = reduced_count(ResidueProfile(q=q, r0=0, r=prof.r))
    if reduced == 0:
        return 0
    numerator = reduced * factorial(prof.r0) * binomial(len(lam) - 1, prof.r0)
    for c in prof.r:
        numerator *= factorial(c)
    denominator = 1
    for multiplicity in Counter(lam).values():
        denominator *= factorial(multiplicity)
    assert numerator % denominator == 0
    return numerator // denominator
