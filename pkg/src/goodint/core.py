"""Shared domain records: the coprime base pair and classification verdicts."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import arith


@dataclass(frozen=True)
class Pair:
    """A coprime pair of nonzero integers (a, b) with cached parity of a*b."""

    a: int
    b: int
    ab_parity: str = field(init=False)

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError("a and b must be nonzero")
        g = math.gcd(self.a, self.b)
        if g != 1:
            raise ValueError(f"a and b must be coprime, gcd({self.a}, {self.b}) = {g}")
        parity = "odd" if (self.a & 1) and (self.b & 1) else "even"
        object.__setattr__(self, "ab_parity", parity)

    @property
    def ab_odd(self) -> bool:
        return self.ab_parity == "odd"

    def residue(self, m: int) -> int:
        """a * b**-1 canonicalized mod m; requires gcd(b, m) = 1."""
        return self.a % m * arith.mod_inverse(self.b, m) % m


@dataclass(frozen=True)
class Verdict:
    """Classification of one modulus ell against a fixed pair.

    good means some k >= 1 has ell dividing a**k + b**k; oddly_good /
    evenly_good record whether such a k can be chosen odd / even.  witness
    is the smallest k overall (None when bad).  method tags the decision
    procedure: theorem, corollary, oracle, or brute_force.

    s_val2 and order_claim_ok are optional diagnostics filled by the
    valuation-based classifiers: the common 2-adic valuation of the
    per-prime orders, and whether the order of a*b**-1 mod ell carries
    that same valuation.
    """

    ell: int
    good: bool
    oddly_good: bool
    evenly_good: bool
    witness: int | None
    method: str
    s_val2: int | None = None
    order_claim_ok: bool | None = None

    def flags(self) -> tuple[bool, bool, bool]:
        return (self.good, self.oddly_good, self.evenly_good)
