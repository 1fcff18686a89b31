"""Counterexample scanners.

Each audit pits a plausible-looking implication, evaluated exactly as
printed, against ground truth and emits a structured finding wherever the
two part ways.  Two of the claims are false in general and the scans
exhibit the smallest refuting instances; the cross-validation sweep runs
the case-analysis classifiers against the definitional oracle and is
expected to stay silent.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import arith, classify, oracle
from .core import Pair

CLAIM_ORDER2_CONGRUENCE = "jitman_eq1"
CLAIM_NEGATION_FROM_EVEN_ORDER = "jitman_eq2"
CLAIM_WHOLE_ORDER_VARIANT = "thm2_literal"
CLAIM_CUSTOM = "custom"


@dataclass(frozen=True)
class AuditFinding:
    """One audited instance: what the literal statement says vs. ground truth."""

    claim_id: str
    a: int
    b: int
    modulus: int
    x: int
    literal_verdict: bool
    oracle_verdict: bool
    discrepancy: bool
    note: str = ""


def _finding(claim_id, a, b, modulus, x, literal, oracle_v, note=""):
    return AuditFinding(claim_id, a, b, modulus, x, literal, oracle_v,
                        literal != oracle_v, note)


# ---------------------------------------------------------------------------
# Order tables for odd prime powers (cyclic groups), shared by the scanners.
# ---------------------------------------------------------------------------

def primitive_root(pp: int) -> int:
    """Smallest primitive root of the odd prime power pp."""
    f = arith.factorize(pp)
    if f.beta or len(f.odd_part) != 1:
        raise ValueError(f"{pp} is not an odd prime power")
    p, e = f.odd_part[0]
    n = p ** (e - 1) * (p - 1)
    qs = [q for q, _ in arith.factorize(n).prime_items()]
    g = 2
    while True:
        if g % p and all(pow(g, n // q, pp) != 1 for q in qs):
            return g
        g += 1


def order_table(pp: int) -> np.ndarray:
    """Orders of all residues mod the odd prime power pp (1 where undefined).

    Built by walking the powers of a primitive root, so entries come from
    the group structure itself: Ord(g**j) = n / gcd(n, j).
    """
    p = arith.factorize(pp).odd_part[0][0]
    n = pp - pp // p
    g = primitive_root(pp)
    pows = np.empty(n, dtype=np.int64)
    v = 1
    for j in range(n):
        pows[j] = v
        v = v * g % pp
    tab = np.ones(pp, dtype=np.int64)
    tab[pows] = n // np.gcd(n, np.arange(n, dtype=np.int64))
    return tab


def _pow_mod_vec(base: np.ndarray, exp: np.ndarray, mod: int) -> np.ndarray:
    """Elementwise base**exp mod `mod` (int64; mod**2 must fit in int64)."""
    result = np.ones_like(base)
    b = base % mod
    e = exp.copy()
    while e.any():
        result = np.where(e & 1, result * b % mod, result)
        b = b * b % mod
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# Claim: order 2 mod 2**beta forces x = -1 (mod 2**beta).
# ---------------------------------------------------------------------------

def audit_order2_congruence(beta_max: int, x_max: int | None = None) -> list[AuditFinding]:
    """Scan odd residues of order 2 mod 2**beta for beta = 1..beta_max.

    The audited implication concludes x = -1 (mod 2**beta) from the premise
    Ord(x) = 2.  Every premise-satisfying residue below min(2**beta, x_max)
    yields one finding; literal_verdict is the conclusion, oracle_verdict
    the (always verified) premise, so discrepancies are exactly the
    counterexamples.
    """
    if not 1 <= beta_max <= 20:
        raise ValueError(f"beta_max must be in 1..20, got {beta_max}")
    findings = []
    for beta in range(1, beta_max + 1):
        m = 1 << beta
        top = m if x_max is None else min(m, x_max)
        for x in range(1, top, 2):
            if x != 1 and x * x % m == 1:
                premise = arith.multiplicative_order(x, m) == 2
                literal = x == m - 1
                note = "" if literal else f"also represented by {x + m}"
                findings.append(_finding(CLAIM_ORDER2_CONGRUENCE, x, 1, m, x,
                                         literal, premise, note))
    return findings


# ---------------------------------------------------------------------------
# Claim: order 2k mod odd d forces x**k = -1 (mod d).
# ---------------------------------------------------------------------------

def audit_negation_from_even_order(d_max: int) -> Iterator[AuditFinding]:
    """Scan every odd d <= d_max and every coprime x of even order 2k.

    Evaluates x**k mod d directly and yields a finding for each
    counterexample (holding instances are not materialized: there are on
    the order of d_max**2 of them).  Counterexamples only ever appear for
    d with at least two distinct prime factors; the scan verifies rather
    than assumes this.  Cost grows quadratically in d_max.
    """
    if not 1 <= d_max <= 10**5:
        raise ValueError(f"d_max must be in 1..10**5, got {d_max}")
    tables: dict[int, np.ndarray] = {}
    for d in range(3, d_max + 1, 2):
        f = arith.factorize(d)
        pps = f.prime_powers()
        for pp in pps:
            if pp not in tables:
                tables[pp] = order_table(pp)
        coprime = np.ones(d, dtype=bool)
        for p, _ in f.odd_part:
            coprime[::p] = False
        x = np.nonzero(coprime)[0].astype(np.int64)
        t = tables[pps[0]][x % pps[0]]
        for pp in pps[1:]:
            t = np.lcm(t, tables[pp][x % pp])
        even = (t & 1) == 0
        xe, te = x[even], t[even]
        ke = te >> 1
        y = _pow_mod_vec(xe, ke, d)
        bad = y != d - 1
        for xi, ki, yi, ti in zip(xe[bad], ke[bad], y[bad], te[bad]):
            xi, ki, yi, ti = int(xi), int(ki), int(yi), int(ti)
            yield _finding(
                CLAIM_NEGATION_FROM_EVEN_ORDER, xi, 1, d, xi,
                literal=False, oracle_v=True,
                note=f"order {ti}; pow(x, {ki}, {d}) = {yi}",
            )


# ---------------------------------------------------------------------------
# Whole-modulus vs per-prime order condition for odd witnesses.
# ---------------------------------------------------------------------------

def _odd_witness_instances(a_max: int, b_max: int, ell_max: int):
    """Ordered coprime odd pairs and the moduli 2**beta * d, beta >= 2, d >= 3."""
    ells = [ell for ell in range(4, ell_max + 1, 4) if (ell >> arith.nu2(ell)) >= 3]
    pairs = [
        (a, b)
        for a in range(1, a_max + 1, 2)
        for b in range(1, b_max + 1, 2)
        if math.gcd(a, b) == 1
    ]
    return pairs, ells


def _odd_witness_pair_findings(task) -> list[AuditFinding]:
    a, b, ells, ell_max = task
    pair = Pair(a, b)
    sweep = oracle.brute_force_sweep(pair, ell_max)
    out = []
    for ell in ells:
        if math.gcd(a * b, ell) != 1:
            continue
        truth = sweep[ell - 1].oddly_good
        for variant in classify.VARIANTS:
            lit = classify.is_oddly_good(pair, ell, variant).oddly_good
            if lit != truth:
                claim = (CLAIM_WHOLE_ORDER_VARIANT if variant == "literal"
                         else CLAIM_CUSTOM)
                out.append(_finding(claim, a, b, ell, pair.residue(ell),
                                    lit, truth, note=f"variant={variant}"))
    return out


def audit_odd_witness_variants(a_max: int, b_max: int, ell_max: int,
                               jobs: int | None = None) -> dict[str, list[AuditFinding]]:
    """Both odd-witness decision variants vs. the definitional oracle.

    Sweeps every ordered coprime odd pair (a <= a_max, b <= b_max) and every
    ell = 2**beta * d <= ell_max with beta >= 2, d >= 3 coprime to ab, and
    returns discrepancies grouped per variant.  The per_prime list is
    expected to stay empty; the literal list documents where the printed
    whole-modulus condition diverges.
    """
    if not 1 <= ell_max <= 10**4:
        raise ValueError(f"ell_max must be in 1..10**4, got {ell_max}")
    pairs, ells = _odd_witness_instances(a_max, b_max, ell_max)
    tasks = [(a, b, ells, ell_max) for a, b in pairs]
    grouped: dict[str, list[AuditFinding]] = {v: [] for v in classify.VARIANTS}
    for chunk in _run_tasks(_odd_witness_pair_findings, tasks, jobs):
        for finding in chunk:
            variant = finding.note.split("=", 1)[1]
            grouped[variant].append(finding)
    return grouped


def audit_whole_order_variant(a_max: int, b_max: int, ell_max: int,
                              variant: str = "literal",
                              jobs: int | None = None) -> list[AuditFinding]:
    """Discrepancy list for one odd-witness variant (see audit_odd_witness_variants)."""
    if variant not in classify.VARIANTS:
        raise ValueError(f"variant must be one of {classify.VARIANTS}, got {variant!r}")
    return audit_odd_witness_variants(a_max, b_max, ell_max, jobs=jobs)[variant]


# ---------------------------------------------------------------------------
# Cross-validation: every classifier against the definitional oracle.
# ---------------------------------------------------------------------------

def _crossval_pair(task) -> list[AuditFinding]:
    a, b, ell_max = task
    pair = Pair(a, b)
    sweep = oracle.brute_force_sweep(pair, ell_max)
    out = []
    for ell in range(1, ell_max + 1):
        truth = sweep[ell - 1]
        candidates = {
            "order_oracle": oracle.order_oracle_verdict(pair, ell),
            "case_analysis": classify.is_good(pair, ell),
        }
        if pair.ab_odd:
            candidates["sum_valuation"] = classify.is_good_via_sum_valuation(pair, ell)
        for name, v in candidates.items():
            if v.flags() != truth.flags() or v.witness != truth.witness:
                x = pair.residue(ell) if math.gcd(a * b, ell) == 1 else 0
                out.append(_finding(CLAIM_CUSTOM, a, b, ell, x,
                                    v.good, truth.good,
                                    note=f"{name} disagrees with brute force"))
    return out


def crossval_sweep(a_max: int, b_max: int, ell_max: int,
                   jobs: int | None = None) -> list[AuditFinding]:
    """Compare all deciders with brute force over coprime pairs a < b.

    Covers every coprime (a, b) with a <= a_max, a < b <= b_max and every
    ell <= ell_max; flags and witnesses must all coincide, so any returned
    finding is a defect somewhere.
    """
    tasks = [
        (a, b, ell_max)
        for a in range(1, a_max + 1)
        for b in range(a + 1, b_max + 1)
        if math.gcd(a, b) == 1
    ]
    out: list[AuditFinding] = []
    for chunk in _run_tasks(_crossval_pair, tasks, jobs):
        out.extend(chunk)
    return out


def _run_tasks(fn, tasks, jobs):
    """Map fn over tasks, optionally across processes; order is preserved."""
    if jobs is None:
        jobs = 1
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
