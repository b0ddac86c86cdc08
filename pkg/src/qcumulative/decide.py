"""Fast existence decisions and explicit witness construction.

For a reduced profile whose residue-1 count is maximal, existence of a
cumulative ordering is equivalent to two arithmetic conditions: the profile
norm must not be divisible by q, and the maximal count must not exceed the
profile weight.  For a prime modulus, any partition can be brought into that
shape by scaling the profile with the inverse of a class attaining the
maximum, which yields a complete existence test on the original partition.

Witnesses are built by a guarded recursive construction that peels parts off
the back of the pattern while the arithmetic conditions persist; whenever a
step would leave a profile violating them, the builder switches to a search
guided by the exact count table, which succeeds whenever any ordering exists.
The pattern fixes the residue class of every leading part and is then lifted
to the actual parts of the partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .core import (
    Composition,
    Partition,
    ResidueProfile,
    as_partition,
    is_cumulative,
    mod_inverse,
    profile_max,
    profile_norm,
    profile_weight,
    residue_profile,
    scale_composition,
    scale_profile,
)
from .count import CountTable

__all__ = [
    "MaximizerCheck",
    "ExistenceVerdict",
    "WitnessReport",
    "is_prime",
    "reduced_nonempty",
    "existence_verdict",
    "shortcut_nonzero",
    "witness_pattern",
    "witness",
]

METHOD_CONSTRUCTION = "guarded-construction"
METHOD_DP_SEARCH = "dp-guided-search"
METHOD_NONE = "none"


class MaximizerCheck(NamedTuple):
    """One tested residue class attaining the maximal count."""

    a: int
    b: int
    scaled_weight: int
    passed: bool


@dataclass(frozen=True)
class ExistenceVerdict:
    """Outcome of the existence test for a prime modulus.

    ``nonzero`` holds exactly when the partition size is not divisible by
    the prime and at least one maximizer passed its weight check.
    """

    nonzero: bool
    size_divisible: bool
    checked_maximizers: tuple[MaximizerCheck, ...]


@dataclass(frozen=True)
class WitnessReport:
    """A cumulative rearrangement, or a certified absence of one."""

    exists: bool
    witness: Optional[Composition]
    method: str


def is_prime(p: int) -> bool:
    """Primality by trial division; inputs here are small."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _check_reduced_anchored(rp: ResidueProfile) -> None:
    if rp.q < 2:
        raise ValueError(f"modulus must be >= 2, got {rp.q}")
    if rp.r0 != 0:
        raise ValueError(f"profile must have r0 = 0, got {rp.r0}")
    if rp.r[0] != max(rp.r):
        raise ValueError(
            f"residue-1 count must attain the maximum, got {rp.r}; scale the profile first"
        )


def reduced_nonempty(rp: ResidueProfile) -> bool:
    """Decide whether the reduced multiset of rp has a cumulative ordering.

    Requires r0 = 0 and the residue-1 count to be maximal.  Equivalent to
    ``reduced_count(rp) > 0`` on that domain, in constant arithmetic.
    """
    _check_reduced_anchored(rp)
    return profile_norm(rp) % rp.q != 0 and profile_max(rp) <= profile_weight(rp)


def existence_verdict(lam: Partition, p: int) -> ExistenceVerdict:
    """Decide whether lam has any cumulative rearrangement mod a prime p.

    Every residue class attaining the maximal count is checked: class a
    passes when the maximal count fits under the weight of the profile
    scaled by the inverse of a.  The verdict is positive iff the partition
    size is not divisible by p and some class passes.
    """
    lam = as_partition(lam)
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    prof = residue_profile(lam, p)
    size_divisible = sum(lam) % p == 0
    top = max(prof.r)
    reduced = ResidueProfile(q=p, r0=0, r=prof.r)
    checks = []
    for a in range(1, p):
        if prof.r[a - 1] != top:
            continue
        b = mod_inverse(a, p)
        weight = profile_weight(scale_profile(reduced, b))
        checks.append(MaximizerCheck(a=a, b=b, scaled_weight=weight, passed=top <= weight))
    nonzero = not size_divisible and any(c.passed for c in checks)
    return ExistenceVerdict(nonzero=nonzero, size_divisible=size_divisible, checked_maximizers=tuple(checks))


def shortcut_nonzero(lam: Partition, p: int) -> bool:
    """Sufficient test: the maximal class count is positive and tied.

    When two distinct residue classes attain the maximum and the partition
    size is not divisible by p, a cumulative rearrangement always exists;
    a False answer decides nothing.
    """
    lam = as_partition(lam)
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    if sum(lam) % p == 0:
        return False
    prof = residue_profile(lam, p)
    top = max(prof.r)
    return top > 0 and sum(1 for c in prof.r if c == top) >= 2


def _norm(r: tuple[int, ...]) -> int:
    return sum(i * c for i, c in enumerate(r, start=1))


def _weight(q: int, r: tuple[int, ...]) -> int:
    return (q - 1) + sum((q - i) * r[i - 1] for i in range(2, q))


def _conditions_hold(q: int, r: tuple[int, ...]) -> bool:
    top = max(r)
    return r[0] == top and _norm(r) % q != 0 and top <= _weight(q, r)


def _dp_guided_pattern(q: int, r: tuple[int, ...]) -> Optional[Composition]:
    """Lexicographically smallest cumulative ordering of the reduced multiset.

    Greedy: always take the smallest part value whose removal leaves a
    sub-profile with a positive ordering count.  Returns None when no
    ordering exists at all.
    """
    table = CountTable(q)
    if not any(r) or table.orderings(r) == 0:
        return None
    counts = list(r)
    out = []
    s = 0
    while any(counts):
        for i in range(1, q):
            if not counts[i - 1]:
                continue
            t = (s + i) % q
            if t == 0:
                continue
            counts[i - 1] -= 1
            if table.orderings(tuple(counts), t) > 0:
                out.append(i)
                s = t
                break
            counts[i - 1] += 1
        else:
            raise AssertionError("count table promised a continuation")
    return tuple(out)


def _construct_pattern(q: int, r: tuple[int, ...]) -> tuple[Composition, bool]:
    """Build a cumulative ordering of the reduced multiset of r.

    Assumes ``_conditions_hold(q, r)``.  Peels a trailing part (or a
    trailing pair) off the pattern while the conditions persist on the
    shrunken profile, finishing with an explicit run-based layout; if a
    peeling step would break the conditions the remainder comes from
    dp-guided search instead.  Returns the pattern and whether the case
    construction ran unassisted.
    """
    suffix: list[int] = []  # accumulated right-to-left
    counts = list(r)
    while True:
        if not any(counts[1:]):
            # only residue-1 parts remain: 1 <= counts[0] <= q-1 here
            head = (1,) * counts[0]
            return head + tuple(reversed(suffix)), True
        norm = _norm(tuple(counts))
        drop = next((b for b in range(2, q) if counts[b - 1] and b % q != norm % q), None)
        if drop is not None:
            # removing one part of value drop keeps the norm off 0 mod q
            counts[drop - 1] -= 1
            if _conditions_hold(q, tuple(counts)):
                suffix.append(drop)
                continue
            counts[drop - 1] += 1
            break
        # every present value >= 2 is congruent to the norm, hence unique
        b = next(i for i in range(2, q) if counts[i - 1])
        if counts[0] <= _weight(q, tuple(counts)) - (q - b):
            counts[0] -= 1
            counts[b - 1] -= 1
            if _conditions_hold(q, tuple(counts)):
                suffix.append(1)
                suffix.append(b)
                continue
            counts[0] += 1
            counts[b - 1] += 1
            break
        # ones are abundant: lay the pattern out as explicit runs
        run_tail = counts[0] - (q - b) * (counts[b - 1] - 1) - (q - 1)
        if 0 < run_tail <= q - b:
            block = (b,) + (1,) * (q - b)
            head = (1,) * (q - 1) + block * (counts[b - 1] - 1) + (b,) + (1,) * run_tail
            return head + tuple(reversed(suffix)), True
        break
    remainder = _dp_guided_pattern(q, tuple(counts))
    assert remainder is not None
    return remainder + tuple(reversed(suffix)), False


def witness_pattern(rp: ResidueProfile) -> Optional[Composition]:
    """A cumulative ordering of the reduced multiset of rp, or None.

    Preconditions as for :func:`reduced_nonempty`.  The returned pattern is
    deterministic; None comes back exactly when no ordering exists.
    """
    _check_reduced_anchored(rp)
    if not reduced_nonempty(rp):
        return None
    pattern, _ = _construct_pattern(rp.q, rp.r)
    return pattern


def _lift(lam: Partition, q: int, pattern: Composition) -> Composition:
    """Replace pattern slots by actual parts and append the divisible parts.

    Slot value i takes the largest unused part congruent to i mod q; parts
    divisible by q go last, in descending order, where they can no longer
    create a divisible prefix sum.
    """
    buckets: dict[int, list[int]] = {}
    for part in lam:  # lam is descending, so each bucket is descending
        buckets.setdefault(part % q, []).append(part)
    cursor = {residue: 0 for residue in buckets}
    out = []
    for slot in pattern:
        out.append(buckets[slot][cursor[slot]])
        cursor[slot] += 1
    out.extend(buckets.get(0, ()))
    arranged = tuple(out)
    assert tuple(sorted(arranged, reverse=True)) == lam
    assert is_cumulative(arranged, q)
    return arranged


def witness(lam: Partition, q: int) -> WitnessReport:
    """Produce one cumulative rearrangement of lam, or certify none exists.

    For prime q the residue pattern comes from the guarded construction on
    the profile scaled into anchored shape, transported back by part-wise
    scaling; for composite q it comes from dp-guided search directly.
    """
    lam = as_partition(lam)
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got {q}")
    prof = residue_profile(lam, q)
    reduced = ResidueProfile(q=q, r0=0, r=prof.r)
    if is_prime(q):
        verdict = existence_verdict(lam, q)
        if not verdict.nonzero:
            return WitnessReport(exists=False, witness=None, method=METHOD_NONE)
        chk = next(c for c in verdict.checked_maximizers if c.passed)
        scaled = scale_profile(reduced, chk.b)
        assert _conditions_hold(q, scaled.r)
        pattern, unassisted = _construct_pattern(q, scaled.r)
        pattern = scale_composition(pattern, chk.a, q)
        method = METHOD_CONSTRUCTION if unassisted else METHOD_DP_SEARCH
    else:
        pattern = _dp_guided_pattern(q, prof.r)
        if pattern is None:
            return WitnessReport(exists=False, witness=None, method=METHOD_NONE)
        method = METHOD_DP_SEARCH
    return WitnessReport(exists=True, witness=_lift(lam, q, pattern), method=method)
