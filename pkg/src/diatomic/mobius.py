"""Moebius function by linear sieve, and the Mertens function."""
from __future__ import annotations


def mobius_sieve(n: int) -> list[int]:
    """mu(0..n), with mu(0) = 0."""
    mu = [0] * (n + 1)
    if n >= 1:
        mu[1] = 1
    is_composite = bytearray(n + 1)
    primes: list[int] = []
    for i in range(2, n + 1):
        if not is_composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > n:
                break
            is_composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return mu


def mertens(n: int) -> int:
    """M(n) = mu(1) + ... + mu(n)."""
    if n < 1:
        return 0
    return sum(mobius_sieve(n))
