"""Shared brute-force reference oracles for the test suite.

Everything here is deliberately naive -- linear scans and direct pow calls
-- so the implementations under test are checked against code that shares
none of their logic.
"""

import math

import pytest


def order_by_scan(x: int, m: int) -> int:
    """Multiplicative order by stepping powers one at a time."""
    if m == 1:
        return 1
    assert math.gcd(x, m) == 1
    x %= m
    v = x
    t = 1
    while v != 1:
        v = v * x % m
        t += 1
        assert t <= m, "order scan exceeded the group size"
    return t


def negation_by_scan(x: int, m: int) -> int | None:
    """Smallest k with x**k = -1 (mod m) by scanning one full power cycle."""
    if m <= 2:
        return 1
    x %= m
    v = x
    k = 1
    while True:
        if v == m - 1:
            return k
        if v == 1:
            return None  # powers repeat from here on
        v = v * x % m
        k += 1


def witness_by_scan(a: int, b: int, ell: int, k_max: int):
    """(smallest witness, smallest odd, smallest even) for ell | a**k + b**k.

    Uses fresh pow() per exponent rather than incremental products.
    """
    w = w_odd = w_even = None
    for k in range(1, k_max + 1):
        if (pow(a, k, ell) + pow(b, k, ell)) % ell == 0:
            if w is None:
                w = k
            if k % 2 == 1 and w_odd is None:
                w_odd = k
            if k % 2 == 0 and w_even is None:
                w_even = k
        if w_odd is not None and w_even is not None:
            break
    return w, w_odd, w_even


def factor_by_trial(n: int) -> dict[int, int]:
    """Trial-division factorization, complete for any n this suite uses."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@pytest.fixture
def scan_order():
    return order_by_scan


@pytest.fixture
def scan_negation():
    return negation_by_scan
