"""Exact integer and modular arithmetic: factorization, multiplicative orders,
2-adic valuations.

Everything here is deterministic and exact for inputs up to 2**63 (Python
integers are arbitrary precision, so intermediate products never overflow).
All functions are pure; results for repeated arguments may be served from a
cache.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

FACTOR_INPUT_LIMIT = 2**63

# Trial division cutoff before switching to Pollard rho.
_TRIAL_LIMIT = 10**6

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10**24,
# which covers every input we accept.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotInvertibleError(ValueError):
    """Requested inverse does not exist; `.gcd` holds the offending gcd."""

    def __init__(self, b: int, m: int, g: int):
        super().__init__(f"{b} is not invertible modulo {m} (gcd {g})")
        self.gcd = g


@dataclass(frozen=True)
class Factorization:
    """n = 2**beta * prod(p**e for p, e in odd_part).

    odd_part lists distinct odd primes in ascending order; beta == 0 exactly
    when n is odd.
    """

    n: int
    beta: int
    odd_part: tuple[tuple[int, int], ...]

    @property
    def odd_value(self) -> int:
        """The odd cofactor n / 2**beta."""
        return self.n >> self.beta

    def prime_items(self) -> tuple[tuple[int, int], ...]:
        """All (prime, exponent) pairs, including the 2-part when present."""
        if self.beta:
            return ((2, self.beta),) + self.odd_part
        return self.odd_part

    def prime_powers(self) -> tuple[int, ...]:
        """Maximal prime-power divisors, the 2-part first when present."""
        return tuple(p**e for p, e in self.prime_items())


@dataclass(frozen=True)
class OrderProfile:
    """Multiplicative order of x mod m with its per-prime-power components.

    order equals lcm of all component orders; x is canonical in [0, m).
    """

    x: int
    modulus: int
    order: int
    components: tuple[tuple[int, int], ...]


def gcd(a: int, b: int) -> int:
    """Non-negative gcd; gcd(0, 0) is rejected."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_pow(x: int, e: int, m: int) -> int:
    """x**e mod m, canonical in [0, m). m = 1 yields 0."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    return pow(x, e, m)


def mod_inverse(b: int, m: int) -> int:
    """The unique r in [0, m) with b*r = 1 (mod m)."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    g = math.gcd(b, m)
    if g != 1:
        raise NotInvertibleError(b, m, g)
    return pow(b, -1, m)


def nu2(n: int) -> int:
    """Largest g with 2**g dividing n; n must be nonzero."""
    if n == 0:
        raise ValueError("2-adic valuation of 0 is undefined")
    return (n & -n).bit_length() - 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    s = nu2(n - 1)
    d = (n - 1) >> s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Some nontrivial factor of composite odd n (Brent's cycle variant)."""
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1  # cycle collapsed; retry with a new polynomial


def _split(m: int, out: dict[int, int]) -> None:
    if is_prime(m):
        out[m] = out.get(m, 0) + 1
        return
    g = _pollard_rho(m)
    _split(g, out)
    _split(m // g, out)


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Complete factorization of n, 1 <= n <= 2**63.

    Trial division up to 10**6, then Pollard rho with deterministic
    Miller-Rabin, so results are reproducible.
    """
    if n < 1:
        raise ValueError(f"cannot factor non-positive {n}")
    if n > FACTOR_INPUT_LIMIT:
        raise ValueError(f"{n} exceeds the supported bound 2**63")
    beta = nu2(n) if n > 1 else 0
    m = n >> beta
    fac: dict[int, int] = {}
    d = 3
    while d * d <= m and d <= _TRIAL_LIMIT:
        while m % d == 0:
            fac[d] = fac.get(d, 0) + 1
            m //= d
        d += 2
    if m > 1:
        _split(m, fac)
    return Factorization(n, beta, tuple(sorted(fac.items())))


@lru_cache(maxsize=1 << 16)
def carmichael_lambda(n: int) -> int:
    """Exponent of the multiplicative group mod n (every order divides it)."""
    f = factorize(n)
    parts = []
    if f.beta == 1:
        parts.append(1)
    elif f.beta == 2:
        parts.append(2)
    elif f.beta >= 3:
        parts.append(1 << (f.beta - 2))
    for p, e in f.odd_part:
        parts.append(p ** (e - 1) * (p - 1))
    return math.lcm(*parts) if parts else 1


def multiplicative_order(x: int, m: int) -> int:
    """Smallest t >= 1 with x**t = 1 (mod m).

    Starts from the Carmichael bound of m and peels prime factors, so it
    never scans linearly.  Requires gcd(x, m) = 1.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    x %= m
    if m <= 2:
        return 1
    g = math.gcd(x, m)
    if g != 1:
        raise ValueError(f"order undefined: gcd({x}, {m}) = {g}")
    t = carmichael_lambda(m)
    for q, e in factorize(t).prime_items():
        for _ in range(e):
            if t % q == 0 and pow(x, t // q, m) == 1:
                t //= q
            else:
                break
    return t


def order_via_crt(x: int, f: Factorization) -> OrderProfile:
    """Order of x mod f.n assembled as the lcm of per-prime-power orders."""
    m = f.n
    x0 = x % m
    if math.gcd(x0, m) != 1:
        raise ValueError(f"order undefined: gcd({x0}, {m}) > 1")
    comps = []
    total = 1
    for pp in f.prime_powers():
        t = multiplicative_order(x0 % pp, pp)
        comps.append((pp, t))
        total = math.lcm(total, t)
    return OrderProfile(x=x0, modulus=m, order=total, components=tuple(comps))


def smallest_negation_exponent(x: int, m: int) -> int | None:
    """Smallest k >= 1 with x**k = -1 (mod m), or None when no k works.

    -1 can only sit in the cyclic group <x> as its unique element of order
    2, so the candidate is half the order of x; moduli 1 and 2 (where
    -1 = 1) answer 1.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    x %= m
    g = math.gcd(x, m)
    if g != 1:
        raise ValueError(f"negation exponent undefined: gcd({x}, {m}) = {g}")
    if m <= 2:
        return 1
    t = multiplicative_order(x, m)
    if t % 2 == 1:
        return None
    k = t // 2
    return k if pow(x, k, m) == m - 1 else None
