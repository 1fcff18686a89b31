"""Ground-truth deciders.

Two independent routes to the same answer: a definitional brute-force scan
of a**k + b**k mod ell, and an exact oracle built on the multiplicative
order of x = a * b**-1.  The equivalence of the two is what the rest of the
package is validated against.
"""

from __future__ import annotations

import math

import numpy as np

from . import arith
from .core import Pair, Verdict


def order_oracle_verdict(pair: Pair, ell: int) -> Verdict:
    """Exact verdict from the order of x = a*b**-1 mod ell.

    ell | a**k + b**k iff x**k = -1 (mod ell).  For ell > 2 that happens
    iff the order t of x is even and x**(t/2) = -1; every witness is then
    congruent to t/2 mod t, so the parity of t/2 settles oddly/evenly.
    """
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if ell == 1:
        return Verdict(1, True, True, True, 1, "oracle")
    if ell == 2:
        if pair.ab_odd:
            return Verdict(2, True, True, True, 1, "oracle")
        return Verdict(2, False, False, False, None, "oracle")
    if math.gcd(pair.a * pair.b, ell) != 1:
        # A shared prime would have to divide both a and b.
        return Verdict(ell, False, False, False, None, "oracle")
    x = pair.residue(ell)
    t = arith.multiplicative_order(x, ell)
    if t % 2 == 0 and pow(x, t // 2, ell) == ell - 1:
        k = t // 2
        return Verdict(ell, True, k % 2 == 1, k % 2 == 0, k, "oracle")
    return Verdict(ell, False, False, False, None, "oracle")


def default_scan_bound(pair: Pair, ell: int) -> int:
    """Exponent bound making the definitional scan total.

    When gcd(ab, ell) = 1 the residue sequence a**k + b**k mod ell is purely
    periodic with period dividing lambda(ell); twice that covers both
    parities of k.  Otherwise fall back to 2*ell, a safe overestimate.
    """
    if math.gcd(pair.a * pair.b, ell) == 1:
        return 2 * arith.carmichael_lambda(ell)
    return 2 * ell


def brute_force_verdict(pair: Pair, ell: int, k_max: int | None = None) -> Verdict:
    """Definitional verdict: scan k = 1..k_max for ell | a**k + b**k.

    Records the smallest witness overall and the smallest odd and even
    witnesses, updating running powers incrementally.
    """
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if k_max is None:
        k_max = default_scan_bound(pair, ell)
    if k_max < 1:
        raise ValueError(f"k_max must be positive, got {k_max}")
    a = pair.a % ell
    b = pair.b % ell
    pa, pb = a, b
    w_odd = w_even = 0
    for k in range(1, k_max + 1):
        if (pa + pb) % ell == 0:
            if k & 1:
                if not w_odd:
                    w_odd = k
            elif not w_even:
                w_even = k
            if w_odd and w_even:
                break
        pa = pa * a % ell
        pb = pb * b % ell
    witness = min(w for w in (w_odd, w_even) if w) if (w_odd or w_even) else None
    return Verdict(
        ell,
        witness is not None,
        w_odd > 0,
        w_even > 0,
        witness,
        "brute_force",
    )


def brute_force_sweep(pair: Pair, ell_max: int) -> list[Verdict]:
    """brute_force_verdict for every ell in 1..ell_max, vectorized.

    One shared scan to k = 2*ell_max covers every per-ell default bound
    (2*lambda(ell) <= 2*(ell-1) for coprime ell, 2*ell otherwise); scanning
    past a modulus' own bound cannot change its verdict because the witness
    set is periodic.  Intermediate products must fit in int64, which holds
    for ell_max < 2**31.
    """
    if ell_max < 0:
        raise ValueError(f"ell_max must be non-negative, got {ell_max}")
    if ell_max == 0:
        return []
    if ell_max >= 1 << 31:
        raise ValueError("ell_max too large for the vectorized scan")
    mods = np.arange(1, ell_max + 1, dtype=np.int64)
    a_red = pair.a % mods
    b_red = pair.b % mods
    pa = a_red.copy()
    pb = b_red.copy()
    w_odd = np.zeros(ell_max, dtype=np.int64)
    w_even = np.zeros(ell_max, dtype=np.int64)
    for k in range(1, 2 * ell_max + 1):
        s = pa + pb
        hit = (s == mods) | (s == 0)
        if hit.any():
            tgt = w_odd if k & 1 else w_even
            fresh = hit & (tgt == 0)
            tgt[fresh] = k
        pa *= a_red
        pa %= mods
        pb *= b_red
        pb %= mods
    out = []
    for i in range(ell_max):
        wo, we = int(w_odd[i]), int(w_even[i])
        witness = min(w for w in (wo, we) if w) if (wo or we) else None
        out.append(
            Verdict(i + 1, witness is not None, wo > 0, we > 0, witness, "brute_force")
        )
    return out
