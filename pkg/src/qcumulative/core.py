"""Elementary objects for cumulative-rearrangement arithmetic.

A composition is a finite sequence of positive integer parts, stored as a
plain tuple; a partition is a weakly decreasing composition.  A composition
is called cumulative for a modulus q when it is nonempty and none of its
prefix sums is divisible by q.  A :class:`ResidueProfile` records how many
parts of a composition fall in each residue class mod q.

Everything here is a pure function of immutable values, so results can be
shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable

Composition = tuple[int, ...]
Partition = tuple[int, ...]


def as_composition(parts: Iterable[int]) -> Composition:
    """Canonicalise a part sequence, rejecting parts below 1."""
    delta = tuple(parts)
    for p in delta:
        if p < 1:
            raise ValueError(f"composition parts must be >= 1, got {p}")
    return delta


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalise a partition, rejecting increases between adjacent parts."""
    lam = as_composition(parts)
    for left, right in zip(lam, lam[1:]):
        if left < right:
            raise ValueError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


@dataclass(frozen=True)
class ResidueProfile:
    """Residue-class part counts of a composition for a fixed modulus.

    ``r[j-1]`` counts the parts congruent to j mod q, for j = 1..q-1;
    ``r0`` counts the parts divisible by q.  For q = 1 the vector ``r``
    is empty and every part lands in ``r0``.
    """

    q: int
    r0: int
    r: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", tuple(self.r))
        if self.q < 1:
            raise ValueError(f"modulus must be >= 1, got {self.q}")
        if self.r0 < 0:
            raise ValueError(f"r0 must be >= 0, got {self.r0}")
        if len(self.r) != self.q - 1:
            raise ValueError(f"residue vector must have length q-1 = {self.q - 1}, got {len(self.r)}")
        if any(c < 0 for c in self.r):
            raise ValueError(f"residue counts must be >= 0, got {self.r}")


def partial_sums(delta: Iterable[int]) -> tuple[int, ...]:
    """Prefix sums of a composition; empty for the empty composition."""
    return tuple(accumulate(delta))


def concatenate(delta: Iterable[int], eta: Iterable[int]) -> Composition:
    """Join two compositions end to end."""
    return tuple(delta) + tuple(eta)


def part_multiplicity(delta: Iterable[int], d: int) -> int:
    """Number of parts of delta equal to d."""
    if d < 1:
        raise ValueError(f"part value must be >= 1, got {d}")
    return tuple(delta).count(d)


def is_cumulative(delta: Iterable[int], q: int) -> bool:
    """True iff delta is nonempty and no prefix sum is divisible by q.

    The empty composition is never cumulative, for any q.
    """
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    delta = tuple(delta)
    running = 0
    for p in delta:
        running += p
        if running % q == 0:
            return False
    return bool(delta)


def residue_profile(delta: Iterable[int], q: int) -> ResidueProfile:
    """Classify every part of delta by its residue mod q."""
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    counts = [0] * q
    length = 0
    for p in delta:
        counts[p % q] += 1
        length += 1
    return ResidueProfile(q=q, r0=counts[0], r=tuple(counts[1:]))


def profile_norm(rp: ResidueProfile) -> int:
    """Sum of i * r_i: the size of any composition the profile reduces to."""
    return sum(i * c for i, c in enumerate(rp.r, start=1))


def profile_weight(rp: ResidueProfile) -> int:
    """Capacity bound (q-1) + sum of (q-i) * r_i over i >= 2.

    Residue-1 parts do not contribute.  Undefined for q = 1.
    """
    if rp.q < 2:
        raise ValueError("profile weight is undefined for modulus 1")
    return (rp.q - 1) + sum((rp.q - i) * rp.r[i - 1] for i in range(2, rp.q))


def profile_max(rp: ResidueProfile) -> int:
    """Largest count among the nonzero residue classes (r0 excluded)."""
    if rp.q < 2:
        raise ValueError("profile max is undefined for modulus 1")
    return max(rp.r)


def scale_profile(rp: ResidueProfile, a: int) -> ResidueProfile:
    """Permute the residue classes by multiplication with an invertible a.

    Class i is sent to class a*i mod q; r0 and q are unchanged, and the
    multiset of counts is preserved.
    """
    q = rp.q
    if not 1 <= a <= q - 1 or math.gcd(a, q) != 1:
        raise ValueError(f"{a} is not invertible modulo {q}")
    scaled = [0] * (q - 1)
    for i in range(1, q):
        scaled[(a * i) % q - 1] = rp.r[i - 1]
    return ResidueProfile(q=q, r0=rp.r0, r=tuple(scaled))


def scale_composition(delta: Iterable[int], a: int, q: int) -> Composition:
    """Multiply every part by a mod q, keeping representatives in 1..q-1.

    Defined only for parts already in 1..q-1; prefix-sum residues are
    multiplied by a alongside the parts, so cumulativity is preserved.
    """
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    if math.gcd(a, q) != 1:
        raise ValueError(f"{a} is not invertible modulo {q}")
    delta = tuple(delta)
    for p in delta:
        if not 1 <= p <= q - 1:
            raise ValueError(f"parts must lie in 1..{q - 1}, got {p}")
    return tuple((a * p) % q for p in delta)


def mod_inverse(a: int, q: int) -> int:
    """The unique b in 1..q-1 with a*b congruent to 1 mod q."""
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got {q}")
    try:
        return pow(a, -1, q)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {q}") from None
