"""Stern's diatomic sequence a_n and its classical identities."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

import numpy as np

from .exact import DomainError, EisensteinInt, fib, sigma_power_sum
from .mobius import mertens

LOG2_PHI = math.log2((1 + math.sqrt(5)) / 2)


def _descend(n: int, start: tuple[int, int], step0, step1) -> tuple[int, int]:
    """Walk the binary digits of n below the leading one from a pair at index 1."""
    pair = start
    for bit in bin(n)[3:]:
        pair = step1(*pair) if bit == "1" else step0(*pair)
    return pair


def stern_pair(n: int) -> tuple[int, int]:
    """(a_n, a_{n+1}); n = 0 gives (0, 1)."""
    if n < 0:
        raise DomainError("index must be >= 0")
    if n == 0:
        return 0, 1
    # (a_m, a_{m+1}) -> (a_{2m}, a_{2m+1}) or (a_{2m+1}, a_{2m+2})
    return _descend(n, (1, 1), lambda a, b: (a, a + b), lambda a, b: (a + b, b))


def stern(n: int) -> int:
    """a_n with a_0 = 0, a_1 = 1, a_2n = a_n, a_2n+1 = a_n + a_n+1."""
    return stern_pair(n)[0]


def stern_table(size: int) -> np.ndarray:
    """a_0 .. a_{size-1} by the defining recurrence (int64)."""
    a = np.zeros(max(size, 2), dtype=np.int64)
    a[1] = 1
    filled = 2
    while filled < size:
        # entries [filled, 2*filled - 1) only read indices below filled
        hi = min(2 * filled - 1, size)
        idx = np.arange(filled, hi)
        half = idx // 2
        odd = idx % 2 == 1
        a[filled:hi] = a[half] + np.where(odd, a[np.minimum(half + 1, filled - 1)], 0)
        filled = hi
    return a[:size]


def diatomic_row(j: int) -> list[int]:
    """Row j of the diatomic array: a_{2^j} .. a_{2^{j+1}}."""
    lo = 1 << j
    return stern_table(2 * lo + 1)[lo:].tolist()


@dataclass(frozen=True)
class PairPath:
    """Branch bits from the subtractive process, last step first.

    Bit 0 means the pair sat at an even index 2m (left < right), bit 1 at an
    odd index 2m+1 (left > right).
    """

    bits: tuple[int, ...]

    def index(self) -> int:
        n = 1
        for bit in reversed(self.bits):
            n = 2 * n + bit
        return n


def subtractive_path(p: int, q: int) -> PairPath:
    if p < 1 or q < 1:
        raise DomainError(f"({p}, {q}) is not a pair of positive integers")
    if gcd(p, q) != 1:
        raise DomainError(f"({p}, {q}) is not coprime")
    bits = []
    while (p, q) != (1, 1):
        if p < q:
            q -= p
            bits.append(0)
        else:
            p -= q
            bits.append(1)
    return PairPath(tuple(bits))


def stern_index(p: int, q: int) -> int:
    """The unique n >= 1 with (a_n, a_{n+1}) = (p, q)."""
    return subtractive_path(p, q).index()


def s2(n: int) -> int:
    return n.bit_count()


def _binet_counts(digits: np.ndarray, n: int) -> list[int]:
    # sigma^x * conj(sigma)^y = sigma^(x - y) since sigma*conj(sigma) = 1
    d = (digits[: n + 1] - digits[n::-1]) % 6
    return np.bincount(d, minlength=6).tolist()


def binet_sigma_sum(digits: np.ndarray, n: int) -> EisensteinInt:
    """sum_{k=0}^{n} sigma^{digits[k]} * conj(sigma)^{digits[n-k]}."""
    return sigma_power_sum(_binet_counts(digits, n))


def s2_table(size: int) -> np.ndarray:
    t = np.zeros(size, dtype=np.int64)
    for i in range(1, size):
        t[i] = t[i >> 1] + (i & 1)
    return t


def binet_sigma_stern(n: int) -> EisensteinInt:
    """The Eisenstein sum whose rational part is a_{n+1}."""
    if n < 0:
        raise DomainError("index must be >= 0")
    return binet_sigma_sum(s2_table(n + 1), n)


def pascal_mod2_diagonal(n: int) -> int:
    """sum over 2i + j = n of C(i+j, i) mod 2."""
    # Lucas: C(i+j, i) is odd iff i and j share no binary digit
    return sum(1 for i in range(n // 2 + 1) if i & (n - 2 * i) == 0)


def jacobsthal(n: int) -> int:
    return (2**n - (-1) ** n) // 3


def coons_tyler_ratio(n: int) -> float:
    """a_n / (3n)^{log2 phi}."""
    if n < 1:
        raise DomainError("index must be >= 1")
    return stern(n) / (3 * n) ** LOG2_PHI


def coons_tyler_sweep(lo: int, hi: int) -> tuple[int, float]:
    """(argmax, max) of the Coons-Tyler ratio over lo <= n <= hi."""
    a = stern_table(hi + 1)[lo:].astype(np.float64)
    n = np.arange(lo, hi + 1, dtype=np.float64)
    ratio = a / (3 * n) ** LOG2_PHI
    i = int(np.argmax(ratio))
    return lo + i, float(ratio[i])


def modified_fibonacci_next(prev: int, cur: int) -> int:
    """a_{n+1} from a_{n-1}, a_n."""
    return cur + prev - 2 * (prev % cur)


def lemma_product(m: int, n: int) -> int:
    """a_{m+1} a_{n+1} - a_m a_n; equals 1 whenever m + n = 2^j - 1."""
    am, am1 = stern_pair(m)
    an, an1 = stern_pair(n)
    return am1 * an1 - am * an


class ExpSum(NamedTuple):
    complex_sum: complex
    mertens_sum: int
    terms: int


def farey_fractions_below(x: int):
    """Reduced p/q in (0, 1) with q < x, by pruned mediant-tree descent."""
    stack = [(0, 1, 1, 1)]
    while stack:
        p1, q1, p2, q2 = stack.pop()
        p, q = p1 + p2, q1 + q2
        if q >= x:
            continue
        yield p, q
        stack.append((p, q, p2, q2))
        stack.append((p1, q1, p, q))


def stern_exponential_sum(x: int) -> ExpSum:
    """sum_{a_{2n+1} < x} exp(2 pi i a_{2n} / a_{2n+1}) next to the Mertens sum.

    Every reduced fraction in (0, 1) is a_{2n}/a_{2n+1} for exactly one n,
    so the index sum is enumerated over the Stern-Brocot tree instead.
    """
    if x < 2:
        raise DomainError("x must be >= 2")
    total = 0j
    terms = 0
    tau = 2j * cmath.pi
    for p, q in farey_fractions_below(x):
        total += cmath.exp(tau * p / q)
        terms += 1
    # mu(1) = 1 has no fraction in (0, 1)
    return ExpSum(total, mertens(x - 1) - 1, terms)


def fibonacci_at_jacobsthal(n: int) -> tuple[int, int]:
    """(a_{J(n)}, F_n)."""
    return stern(jacobsthal(n)), fib(n)
