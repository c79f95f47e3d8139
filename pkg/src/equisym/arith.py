"""Small exact number-theory helpers used across the package."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (inputs here stay tiny)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def multiplicative_order(u: int, q: int) -> int:
    """Order of u in (Z/q)^*.  Raises ValueError if gcd(u, q) != 1."""
    u %= q
    if math.gcd(u, q) != 1:
        raise ValueError(f"{u} is not a unit mod {q}")
    k, x = 1, u
    while x != 1:
        x = (x * u) % q
        k += 1
    return k
