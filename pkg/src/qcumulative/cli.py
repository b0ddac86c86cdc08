"""Command-line surface: counting, decisions, witnesses, enumeration,
sweep tables and self-validation.

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success (or a
positive decision), 1 negative decision, 2 usage error, 3 self-check
mismatch.  Counts are serialized as decimal strings in JSON output, since
they routinely exceed fixed-width integer types.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .core import Partition, is_cumulative, profile_max, residue_profile
from .count import cumulative_count
from .decide import ExistenceVerdict, existence_verdict, is_prime, witness
from .enumeration import brute_count, cumulative_rearrangements, partitions_of

USAGE_ERROR = 2
MISMATCH_ERROR = 3

CSV_HEADER = "partition;modulus;c;nonzero;witness"


class UsageError(Exception):
    """Malformed input that argparse cannot catch on its own."""


def _parse_partition(text: str, sort: bool) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(token) for token in text.split(","))
    except ValueError:
        raise UsageError(f"partition must be comma-separated integers, got {text!r}") from None
    if any(p < 1 for p in parts):
        raise UsageError(f"partition parts must be >= 1, got {text!r}")
    if sort:
        return tuple(sorted(parts, reverse=True))
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise UsageError(f"partition parts must be weakly decreasing (or pass --sort), got {text!r}")
    return parts


def _parse_moduli(text: str) -> tuple[int, ...]:
    try:
        moduli = tuple(int(token) for token in text.split(","))
    except ValueError:
        raise UsageError(f"moduli must be comma-separated integers, got {text!r}") from None
    if any(q < 1 for q in moduli):
        raise UsageError(f"moduli must be >= 1, got {text!r}")
    return moduli


def _check_modulus(q: int) -> int:
    if q < 1:
        raise UsageError(f"modulus must be >= 1, got {q}")
    return q


def _parts_field(parts: Optional[Sequence[int]]) -> str:
    return " ".join(str(p) for p in parts) if parts else ""


def _verdict_json(verdict: ExistenceVerdict) -> dict:
    return {
        "size_divisible": verdict.size_divisible,
        "maximizers": [
            {"a": c.a, "b": c.b, "scaled_weight": c.scaled_weight, "passed": c.passed}
            for c in verdict.checked_maximizers
        ],
    }


def _record(lam: Partition, q: int) -> dict:
    """OutputRecord for one partition: count, flag, witness and any verdict detail."""
    c = cumulative_count(lam, q)
    record = {
        "partition": list(lam),
        "modulus": q,
        "c": str(c),
        "nonzero": c != 0,
    }
    if c != 0:
        report = witness(lam, q)
        record["witness"] = list(report.witness)
    if is_prime(q):
        record["conditions"] = _verdict_json(existence_verdict(lam, q))
    return record


def _cmd_count(args: argparse.Namespace) -> int:
    lam = _parse_partition(args.partition, args.sort)
    q = _check_modulus(args.modulus)
    c = cumulative_count(lam, q)
    if args.format == "json":
        print(json.dumps({"partition": list(lam), "modulus": q, "c": str(c), "nonzero": c != 0}))
    else:
        print(c)
    return 0


def _cmd_exists(args: argparse.Namespace) -> int:
    lam = _parse_partition(args.partition, args.sort)
    p = args.prime
    if not is_prime(p):
        raise UsageError(f"--prime must be a prime number, got {p}")
    verdict = existence_verdict(lam, p)
    if args.format == "json":
        payload = {"partition": list(lam), "prime": p, "nonzero": verdict.nonzero}
        payload.update(_verdict_json(verdict))
        print(json.dumps(payload))
    else:
        size = sum(lam)
        if verdict.size_divisible:
            print(f"(i) fail: {p} divides |lambda| = {size}")
        else:
            print("(i) pass")
        top = profile_max(residue_profile(lam, p))
        passed = [c for c in verdict.checked_maximizers if c.passed]
        if passed:
            c = passed[0]
            print(f"(ii) pass: max {top} <= {c.scaled_weight} (a={c.a}, b={c.b})")
        else:
            best = max((c.scaled_weight for c in verdict.checked_maximizers), default=0)
            print(f"(ii) fail: max {top} > {best}")
        print(f"nonzero: {'true' if verdict.nonzero else 'false'}")
    return 0 if verdict.nonzero else 1


def _cmd_witness(args: argparse.Namespace) -> int:
    lam = _parse_partition(args.partition, args.sort)
    q = _check_modulus(args.modulus)
    if q < 2:
        raise UsageError("witness requires a modulus >= 2")
    report = witness(lam, q)
    if args.format == "json":
        payload = {
            "partition": list(lam),
            "modulus": q,
            "exists": report.exists,
            "witness": list(report.witness) if report.exists else None,
            "method": report.method,
        }
        print(json.dumps(payload))
    else:
        print(",".join(str(p) for p in report.witness) if report.exists else "none")
    return 0 if report.exists else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    lam = _parse_partition(args.partition, args.sort)
    q = _check_modulus(args.modulus)
    for delta in cumulative_rearrangements(lam, q):
        print(",".join(str(p) for p in delta))
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError(f"--n must be >= 0, got {args.n}")
    q = _check_modulus(args.modulus)
    if args.format == "csv":
        print(CSV_HEADER)
        for lam in partitions_of(args.n):
            record = _record(lam, q)
            row = ";".join(
                [
                    _parts_field(lam),
                    str(q),
                    record["c"],
                    "true" if record["nonzero"] else "false",
                    _parts_field(record.get("witness")),
                ]
            )
            print(row)
    else:
        for lam in partitions_of(args.n):
            print(json.dumps(_record(lam, q)))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise UsageError(f"--max-n must be >= 0, got {args.max_n}")
    moduli = _parse_moduli(args.moduli)
    if args.primes_only:
        moduli = tuple(q for q in moduli if is_prime(q))
    checked = 0
    mismatches = 0

    def report(lam, q, what):
        nonlocal mismatches
        mismatches += 1
        print(f"mismatch: partition={lam} modulus={q}: {what}", file=sys.stderr)

    for n in range(args.max_n + 1):
        for lam in partitions_of(n):
            for q in moduli:
                oracle = brute_count(lam, q)
                checked += 1
                if cumulative_count(lam, q) != oracle:
                    report(lam, q, f"count {cumulative_count(lam, q)} != brute {oracle}")
                if q >= 2:
                    rep = witness(lam, q)
                    checked += 1
                    if rep.exists != (oracle > 0):
                        report(lam, q, f"witness existence {rep.exists} != brute {oracle > 0}")
                    elif rep.exists and (
                        tuple(sorted(rep.witness, reverse=True)) != lam or not is_cumulative(rep.witness, q)
                    ):
                        report(lam, q, f"witness {rep.witness} does not validate")
                if is_prime(q):
                    checked += 1
                    if existence_verdict(lam, q).nonzero != (oracle > 0):
                        report(lam, q, f"existence verdict disagrees with brute {oracle}")
    print(f"checked={checked} mismatches={mismatches}")
    return 0 if mismatches == 0 else MISMATCH_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcumulative",
        description="Count, decide and construct rearrangements of a partition "
        "with no prefix sum divisible by q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_partition_args(p):
        p.add_argument("--partition", required=True, help="comma-separated parts, weakly decreasing; empty for the empty partition")
        p.add_argument("--sort", action="store_true", help="accept unsorted parts and sort them internally")

    p_count = sub.add_parser("count", help="print the exact number of cumulative rearrangements")
    add_partition_args(p_count)
    p_count.add_argument("--modulus", type=int, required=True)
    p_count.add_argument("--format", choices=("plain", "json"), default="plain")
    p_count.set_defaults(func=_cmd_count)

    p_exists = sub.add_parser("exists", help="decide nonzeroness for a prime modulus (exit 0 yes, 1 no)")
    add_partition_args(p_exists)
    p_exists.add_argument("--prime", type=int, required=True)
    p_exists.add_argument("--format", choices=("plain", "json"), default="plain")
    p_exists.set_defaults(func=_cmd_exists)

    p_witness = sub.add_parser("witness", help="print one cumulative rearrangement or 'none' (exit 0/1)")
    add_partition_args(p_witness)
    p_witness.add_argument("--modulus", type=int, required=True)
    p_witness.add_argument("--format", choices=("plain", "json"), default="plain")
    p_witness.set_defaults(func=_cmd_witness)

    p_enum = sub.add_parser("enumerate", help="print every cumulative rearrangement, one per line")
    add_partition_args(p_enum)
    p_enum.add_argument("--modulus", type=int, required=True)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_sweep = sub.add_parser("sweep", help="one record per partition of N (reverse-lexicographic)")
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--modulus", type=int, required=True)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_check = sub.add_parser("check", help="cross-validate fast paths against brute force (exit 0 iff clean)")
    p_check.add_argument("--max-n", type=int, default=10)
    p_check.add_argument("--moduli", default="2,3,4,5,6,7", help="comma-separated moduli to sweep")
    p_check.add_argument("--primes-only", action="store_true", help="drop composite moduli from the sweep")
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
