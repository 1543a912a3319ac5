"""Small exact number-theory helpers shared across modules."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in prime_factors(n):
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        out[p] = k
    return out


def dixon_prime(exponent: int, order: int) -> int:
    """Least prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    k = 1
    while True:
        p = k * exponent + 1
        if p * p > 4 * order and is_prime(p):
            return p
        k += 1


def primitive_root(p: int) -> int:
    """Least primitive root modulo the prime p."""
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
        g += 1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a / n), full extension of Jacobi."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    # factor out 2s of n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 == 1 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol loop on odd n > 0
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0
