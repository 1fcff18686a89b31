"""Decision procedures for good / oddly-good moduli.

The deciders here settle membership by case analysis on (parity of ab,
2-part of ell, odd part of ell) using per-prime multiplicative orders; they
never search for exponents themselves.  Witnesses and the odd/even split
are delegated to the order oracle, so a decider's contribution to a Verdict
is exactly its membership bit.

`is_oddly_good` exists in two variants because the whole-modulus order
condition ("literal") and the per-prime condition ("per_prime") genuinely
differ on composite odd parts; the per_prime variant is the one that
matches the oracles, and the audit module surfaces where the literal one
does not.
"""

from __future__ import annotations

import math

from . import arith, oracle
from .core import Pair, Verdict

VARIANTS = ("literal", "per_prime")


def _require_odd_pair(pair: Pair) -> None:
    if not pair.ab_odd:
        raise ValueError("requires both a and b odd")


def _require_odd_cofactor(pair: Pair, d: int) -> None:
    if d <= 1 or d % 2 == 0:
        raise ValueError(f"d must be odd and > 1, got {d}")
    g = math.gcd(pair.a * pair.b, d)
    if g != 1:
        raise ValueError(f"d must be coprime to ab, gcd = {g}")


def order_val2s(pair: Pair, primes) -> tuple[int, ...]:
    """2-adic valuation of the order of a*b**-1 mod p, per prime p."""
    return tuple(
        arith.nu2(arith.multiplicative_order(pair.residue(p), p)) for p in primes
    )


def common_order_val2(pair: Pair, d: int) -> int | None:
    """The shared valuation s when every prime p | d has 2**s || Ord_p, else None."""
    vals = set(order_val2s(pair, (p for p, _ in arith.factorize(d).odd_part)))
    return vals.pop() if len(vals) == 1 else None


def sum_valuation(pair: Pair) -> int | None:
    """2-adic valuation of a + b; None encodes a + b = 0 (every power divides)."""
    s = pair.a + pair.b
    return None if s == 0 else arith.nu2(s)


def _le_gamma(beta: int, gamma: int | None) -> bool:
    return gamma is None or beta <= gamma


def power_of_two_equivalence(pair: Pair, beta: int) -> tuple[bool, bool, bool]:
    """Three tests for 2**beta against an odd pair, returned side by side.

    divides: 2**beta | a + b; good: the oracle's verdict on ell = 2**beta;
    congruent: beta = 1 or a*b**-1 = -1 (mod 2**beta).  The three agree on
    the whole domain; callers asserting that agreement get the raw booleans.
    """
    _require_odd_pair(pair)
    if not 1 <= beta <= 62:
        raise ValueError(f"beta must be in 1..62, got {beta}")
    m = 1 << beta
    divides = (pair.a + pair.b) % m == 0
    good = oracle.order_oracle_verdict(pair, m).good
    congruent = beta == 1 or pair.residue(m) == m - 1
    return divides, good, congruent


def odd_good_criterion(pair: Pair, d: int) -> bool:
    """Membership test for odd d > 1: all per-prime orders share an even part.

    True iff some s >= 1 has 2**s || Ord_p(a*b**-1) for every prime p | d.
    """
    _require_odd_cofactor(pair, d)
    s = common_order_val2(pair, d)
    return s is not None and s >= 1


def even_ell_good_criterion(pair: Pair, d: int, beta: int) -> bool:
    """Membership test for ell = 2**beta * d with beta >= 2 and odd d > 1.

    True iff a*b**-1 = -1 (mod 2**beta) and 2 || Ord_p(a*b**-1) for every
    prime p | d.
    """
    _require_odd_pair(pair)
    _require_odd_cofactor(pair, d)
    if not 2 <= beta <= 62:
        raise ValueError(f"beta must be in 2..62, got {beta}")
    m = 1 << beta
    if pair.residue(m) != m - 1:
        return False
    return common_order_val2(pair, d) == 1


def doubling_verdicts(pair: Pair, d: int) -> tuple[bool, bool]:
    """Oracle verdicts for d and 2d (odd d > 1, odd pair), computed independently."""
    _require_odd_pair(pair)
    _require_odd_cofactor(pair, d)
    return (
        oracle.order_oracle_verdict(pair, d).good,
        oracle.order_oracle_verdict(pair, 2 * d).good,
    )


def _delegated(pair: Pair, ell: int, good: bool, method: str,
               s_val2: int | None = None, order_claim_ok: bool | None = None) -> Verdict:
    if not good:
        return Verdict(ell, False, False, False, None, method, s_val2, order_claim_ok)
    o = oracle.order_oracle_verdict(pair, ell)
    return Verdict(ell, True, o.oddly_good, o.evenly_good, o.witness, method,
                   s_val2, order_claim_ok)


def is_good(pair: Pair, ell: int) -> Verdict:
    """Case-analysis membership decision for any positive ell."""
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if ell == 1:
        return _delegated(pair, ell, True, "theorem")
    if math.gcd(pair.a * pair.b, ell) != 1:
        return _delegated(pair, ell, False, "theorem")
    f = arith.factorize(ell)
    beta, d = f.beta, f.odd_value
    primes = [p for p, _ in f.odd_part]
    if pair.ab_odd:
        if beta <= 1:
            good = d == 1 or _exists_common_even(pair, primes)
        else:
            m = 1 << beta
            good = pair.residue(m) == m - 1 and (
                d == 1 or _all_val2_one(pair, primes)
            )
    else:
        good = beta == 0 and (d == 1 or _exists_common_even(pair, primes))
    return _delegated(pair, ell, good, "theorem")


def _exists_common_even(pair: Pair, primes) -> bool:
    vals = set(order_val2s(pair, primes))
    return len(vals) == 1 and vals.pop() >= 1


def _all_val2_one(pair: Pair, primes) -> bool:
    return all(v == 1 for v in order_val2s(pair, primes))


def is_oddly_good(pair: Pair, ell: int, variant: str = "per_prime") -> Verdict:
    """Case-analysis decision for odd witnesses.

    variant selects the condition used when beta >= 2 and d >= 3: "literal"
    requires 2 || Ord_d(a*b**-1) for the whole odd part d, "per_prime"
    requires 2 || Ord_p(a*b**-1) for every prime p | d.  Elsewhere the two
    coincide.  The evenly_good flag and witness come from the oracle, so a
    refuted literal decision shows up as an internally inconsistent Verdict.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if ell == 1:
        oddly = True
    elif math.gcd(pair.a * pair.b, ell) != 1:
        oddly = False
    else:
        f = arith.factorize(ell)
        beta, d = f.beta, f.odd_value
        primes = [p for p, _ in f.odd_part]
        if pair.ab_odd:
            if beta <= 1:
                oddly = d == 1 or _all_val2_one(pair, primes)
            else:
                m = 1 << beta
                if pair.residue(m) != m - 1:
                    oddly = False
                elif d == 1:
                    oddly = True
                elif variant == "literal":
                    xd = pair.residue(d)
                    oddly = arith.nu2(arith.multiplicative_order(xd, d)) == 1
                else:
                    oddly = _all_val2_one(pair, primes)
        else:
            oddly = beta == 0 and (d == 1 or _all_val2_one(pair, primes))
    o = oracle.order_oracle_verdict(pair, ell)
    return Verdict(ell, oddly or o.evenly_good, oddly, o.evenly_good,
                   o.witness, "theorem")


def is_good_via_sum_valuation(pair: Pair, ell: int) -> Verdict:
    """Membership decided through gamma = nu2(a + b) instead of a congruence.

    Odd pairs only (a + b must be even for gamma to carry information).
    Agrees with is_good on its whole domain.  For odd parts d > 1 the
    verdict also reports the common per-prime order valuation s and, when
    good, whether the order mod ell carries that same valuation.
    """
    _require_odd_pair(pair)
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if ell <= 2:
        return _delegated(pair, ell, True, "corollary")
    if math.gcd(pair.a * pair.b, ell) != 1:
        return _delegated(pair, ell, False, "corollary")
    f = arith.factorize(ell)
    beta, d = f.beta, f.odd_value
    gamma = sum_valuation(pair)
    if d == 1:
        return _delegated(pair, ell, _le_gamma(beta, gamma), "corollary")
    s = common_order_val2(pair, d)
    if beta <= 1:
        good = s is not None and s >= 1
    else:
        good = _le_gamma(beta, gamma) and s == 1
    claim_ok = None
    if good:
        whole = arith.multiplicative_order(pair.residue(ell), ell)
        claim_ok = arith.nu2(whole) == s
    return _delegated(pair, ell, good, "corollary", s_val2=s, order_claim_ok=claim_ok)


def is_oddly_good_via_sum_valuation(pair: Pair, ell: int) -> Verdict:
    """Odd-witness membership decided through gamma = nu2(a + b).

    Odd pairs only.  When the order-valuation case applies, the verdict
    reports whether 2 || Ord_ell(a*b**-1) held (order_claim_ok), which the
    decision promises as a side effect.
    """
    _require_odd_pair(pair)
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    o = oracle.order_oracle_verdict(pair, ell)
    s_val2 = None
    claim_ok = None
    if ell <= 2:
        oddly = True
    elif math.gcd(pair.a * pair.b, ell) != 1:
        oddly = False
    else:
        f = arith.factorize(ell)
        beta, d = f.beta, f.odd_value
        gamma = sum_valuation(pair)
        if d == 1:
            oddly = _le_gamma(beta, gamma)
        else:
            s_val2 = common_order_val2(pair, d)
            oddly = _le_gamma(beta, gamma) and s_val2 == 1
            if oddly:
                whole = arith.multiplicative_order(pair.residue(ell), ell)
                claim_ok = arith.nu2(whole) == 1
    return Verdict(ell, oddly or o.evenly_good, oddly, o.evenly_good,
                   o.witness, "corollary", s_val2=s_val2, order_claim_ok=claim_ok)
