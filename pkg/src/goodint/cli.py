"""Command-line front end.

Four subcommands: classify one modulus, enumerate a range, compute a
multiplicative order, and run the counterexample audits.  Output is one
JSON object per line (schema_version 1), records sorted by (ell, a, b).

Exit codes: 0 success, 1 usage error, 2 precondition violation,
3 discrepancies found (audit --claim crossval only).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import arith, audit, classify, oracle
from .core import Pair, Verdict

SCHEMA_VERSION = 1
ENUM_LIMIT = 10**8
_CHUNK = 1024

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_DISCREPANCY = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; the contract here wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record, separators=(",", ":")) + "\n")


def _verdict_record(a: int, b: int, v: Verdict, agreement: bool | None = None) -> dict:
    rec = {
        "schema_version": SCHEMA_VERSION,
        "kind": "verdict",
        "ell": v.ell,
        "a": a,
        "b": b,
        "good": v.good,
        "oddly_good": v.oddly_good,
        "evenly_good": v.evenly_good,
        "witness": v.witness,
        "method": v.method,
    }
    if v.s_val2 is not None:
        rec["s_val2"] = v.s_val2
    if v.order_claim_ok is not None:
        rec["order_claim_ok"] = v.order_claim_ok
    if agreement is not None:
        rec["agreement"] = agreement
    return rec


def _finding_record(f: audit.AuditFinding) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "finding",
        "claim": f.claim_id,
        "a": f.a,
        "b": f.b,
        "modulus": f.modulus,
        "x": f.x,
        "literal_verdict": f.literal_verdict,
        "oracle_verdict": f.oracle_verdict,
        "discrepancy": f.discrepancy,
        "note": f.note,
    }


def _resolve_jobs(flag: int | None) -> int:
    if flag is not None:
        return max(1, flag)
    env = os.environ.get("GOODINT_JOBS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"GOODINT_JOBS must be an integer, got {env!r}")
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

_METHODS = ("theorem", "corollary", "oracle", "brute")


def _one_verdict(pair: Pair, ell: int, method: str) -> Verdict:
    if method == "theorem":
        return classify.is_good(pair, ell)
    if method == "corollary":
        return classify.is_good_via_sum_valuation(pair, ell)
    if method == "oracle":
        return oracle.order_oracle_verdict(pair, ell)
    return oracle.brute_force_verdict(pair, ell)


def _cmd_classify(args) -> int:
    pair = Pair(args.a, args.b)
    if args.method != "all":
        _emit(_verdict_record(args.a, args.b, _one_verdict(pair, args.ell, args.method)))
        return EXIT_OK
    methods = [m for m in _METHODS if m != "corollary" or pair.ab_odd]
    verdicts = [_one_verdict(pair, args.ell, m) for m in methods]
    keyed = {(v.good, v.oddly_good, v.evenly_good, v.witness) for v in verdicts}
    agreement = len(keyed) == 1
    for v in verdicts:
        _emit(_verdict_record(args.a, args.b, v, agreement=agreement))
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

def _keep(v: Verdict, flt: str) -> bool:
    if flt == "all":
        return True
    if flt == "good":
        return v.good
    if flt == "oddly":
        return v.oddly_good
    if flt == "evenly":
        return v.evenly_good
    return not v.good  # bad


def _enumerate_chunk(task) -> list[str]:
    a, b, lo, hi, flt = task
    pair = Pair(a, b)
    lines = []
    for ell in range(lo, hi):
        v = oracle.order_oracle_verdict(pair, ell)
        if _keep(v, flt):
            lines.append(json.dumps(_verdict_record(a, b, v), separators=(",", ":")))
    return lines


def _cmd_enumerate(args) -> int:
    if args.max < 0 or args.max > ENUM_LIMIT:
        raise ValueError(f"--max must be in 0..{ENUM_LIMIT}, got {args.max}")
    Pair(args.a, args.b)  # validate before spawning workers
    jobs = _resolve_jobs(args.jobs)
    tasks = [
        (args.a, args.b, lo, min(lo + _CHUNK, args.max + 1), args.filter)
        for lo in range(1, args.max + 1, _CHUNK)
    ]
    if jobs <= 1 or len(tasks) <= 1:
        chunks = (_enumerate_chunk(t) for t in tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        chunks = pool.map(_enumerate_chunk, tasks)
    for chunk in chunks:
        for line in chunk:
            sys.stdout.write(line + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# order
# ---------------------------------------------------------------------------

def _cmd_order(args) -> int:
    profile = arith.order_via_crt(args.x, arith.factorize(args.mod))
    _emit({
        "schema_version": SCHEMA_VERSION,
        "kind": "order",
        "x": profile.x,
        "modulus": profile.modulus,
        "order": profile.order,
        "components": [list(c) for c in profile.components],
    })
    return EXIT_OK


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------

def _cmd_audit(args) -> int:
    jobs = _resolve_jobs(args.jobs)
    if args.claim == "jitman-eq1":
        findings = audit.audit_order2_congruence(args.beta, args.x_max)
        for f in findings:
            _emit(_finding_record(f))
        return EXIT_OK
    if args.claim == "jitman-eq2":
        for f in audit.audit_negation_from_even_order(args.d_max):
            _emit(_finding_record(f))
        return EXIT_OK
    if args.claim == "thm2-literal":
        findings = audit.audit_whole_order_variant(
            args.a_max, args.b_max, args.ell_max, "literal", jobs=jobs)
        for f in sorted(findings, key=lambda f: (f.modulus, f.a, f.b)):
            _emit(_finding_record(f))
        return EXIT_OK
    findings = audit.crossval_sweep(args.a_max, args.b_max, args.ell_max, jobs=jobs)
    for f in sorted(findings, key=lambda f: (f.modulus, f.a, f.b)):
        _emit(_finding_record(f))
    return EXIT_DISCREPANCY if findings else EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="goodint", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify one modulus against a pair")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--method", choices=_METHODS + ("all",), default="all")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("enumerate", help="stream verdicts for ell = 1..max")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--filter", choices=("good", "oddly", "evenly", "bad", "all"),
                   default="all")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: GOODINT_JOBS or CPU count)")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("order", help="multiplicative order with its components")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.set_defaults(fn=_cmd_order)

    p = sub.add_parser("audit", help="scan a claim against ground truth")
    p.add_argument("--claim", required=True,
                   choices=("jitman-eq1", "jitman-eq2", "thm2-literal", "crossval"))
    p.add_argument("--beta", type=int, default=8, help="jitman-eq1: max power of two")
    p.add_argument("--x-max", type=int, default=None, help="jitman-eq1: residue cap")
    p.add_argument("--d-max", type=int, default=100, help="jitman-eq2: max odd modulus")
    p.add_argument("--a-max", type=int, default=25)
    p.add_argument("--b-max", type=int, default=25)
    p.add_argument("--ell-max", type=int, default=200)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(fn=_cmd_audit)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"goodint: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
