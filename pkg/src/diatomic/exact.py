"""Exact arithmetic foundations.

Rationals are ``fractions.Fraction`` throughout; this module adds the pieces
the standard library lacks: perfect-square detection, the ring Z[sigma] with
sigma a primitive sixth root of unity, Fibonacci numbers, the Zeckendorf
codec, dyadic rationals and the continued-fraction codec.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DomainError(ValueError):
    """Argument lies outside the domain of an exact operation."""


def isqrt_exact(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), n is a perfect square)``."""
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    r = math.isqrt(n)
    return r, r * r == n


def exact_sqrt(n: int) -> int:
    r, ok = isqrt_exact(n)
    if not ok:
        raise DomainError(f"{n} is not a perfect square")
    return r


# -- Fibonacci ---------------------------------------------------------------

_FIB = [0, 1]


def fib(n: int) -> int:
    """F_n with F_0 = 0, F_1 = F_2 = 1."""
    if n < 0:
        raise DomainError("fib index must be >= 0")
    while len(_FIB) <= n:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[n]


def fib_index_at_most(n: int) -> int:
    """Largest i >= 2 with F_i <= n (n >= 1)."""
    i = 2
    while fib(i + 1) <= n:
        i += 1
    return i


# -- Zeckendorf words --------------------------------------------------------

@dataclass(frozen=True)
class ZeckendorfWord:
    """Bit string over Fibonacci numbers, least significant first.

    ``bits[j]`` is the coefficient of F_{j+2}.  Non-canonical words (with
    adjacent ones) are allowed as values; ``zeck_encode`` only ever produces
    canonical ones.
    """

    bits: tuple[int, ...] = ()

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise DomainError("Zeckendorf bits must be 0 or 1")
        # strip leading (most significant) zeros
        bits = self.bits
        end = len(bits)
        while end and bits[end - 1] == 0:
            end -= 1
        if end != len(bits):
            object.__setattr__(self, "bits", bits[:end])

    @classmethod
    def from_string(cls, s: str) -> "ZeckendorfWord":
        """Parse book-order text, most significant digit first."""
        return cls(tuple(int(c) for c in reversed(s)))

    @property
    def canonical(self) -> bool:
        return all(not (x and y) for x, y in zip(self.bits, self.bits[1:]))

    @property
    def value(self) -> int:
        return sum(fib(j + 2) for j, b in enumerate(self.bits) if b)

    def terms(self) -> list[int]:
        """Fibonacci summands, largest first."""
        return [fib(j + 2) for j in reversed(range(len(self.bits))) if self.bits[j]]

    def popcount(self) -> int:
        return sum(self.bits)

    def shift(self, k: int = 1) -> "ZeckendorfWord":
        """Raise every Fibonacci index by k (append k zeros in book order)."""
        return ZeckendorfWord((0,) * k + self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in reversed(self.bits)) or "0"


def zeck_encode(n: int) -> ZeckendorfWord:
    """Canonical (greedy) Zeckendorf representation of n."""
    if n < 0:
        raise DomainError("cannot encode a negative number")
    if n == 0:
        return ZeckendorfWord()
    top = fib_index_at_most(n)
    bits = [0] * (top - 1)
    i = top
    while n:
        if fib(i) <= n:
            n -= fib(i)
            bits[i - 2] = 1
            i -= 2
        else:
            i -= 1
    return ZeckendorfWord(tuple(bits))


def zeck_decode(word: ZeckendorfWord) -> int:
    return word.value


# -- Z[sigma] ----------------------------------------------------------------

@dataclass(frozen=True)
class EisensteinInt:
    """re + si*sigma, where sigma = (1 + sqrt(-3))/2 and sigma^2 = sigma - 1."""

    re: int = 0
    si: int = 0

    def __add__(self, other):
        other = _eis(other)
        return EisensteinInt(self.re + other.re, self.si + other.si)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInt(-self.re, -self.si)

    def __sub__(self, other):
        return self + (-_eis(other))

    def __rsub__(self, other):
        return _eis(other) - self

    def __mul__(self, other):
        other = _eis(other)
        a, b, c, d = self.re, self.si, other.re, other.si
        return EisensteinInt(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.norm() != 1:
                raise DomainError("only units have negative powers")
            return self.conj() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "EisensteinInt":
        # conj(sigma) = 1 - sigma
        return EisensteinInt(self.re + self.si, -self.si)

    def norm(self) -> int:
        a, b = self.re, self.si
        return a * a + a * b + b * b

    def is_rational(self) -> bool:
        return self.si == 0

    def __complex__(self):
        return complex(self.re + 0.5 * self.si, self.si * math.sqrt(3) / 2)

    def __repr__(self):
        return f"EisensteinInt({self.re}, {self.si})"


def _eis(x) -> EisensteinInt:
    if isinstance(x, EisensteinInt):
        return x
    if isinstance(x, int):
        return EisensteinInt(x, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to EisensteinInt")


def eis_mul(a: EisensteinInt, b: EisensteinInt) -> EisensteinInt:
    return a * b


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
SIGMA = EisensteinInt(0, 1)
SIGMA_BAR = EisensteinInt(1, -1)

# sigma has order 6; SIGMA_POWERS[e] = sigma^e
SIGMA_POWERS = tuple(SIGMA ** e for e in range(6))


def sigma_power_sum(counts: Sequence[int]) -> EisensteinInt:
    """sum_e counts[e] * sigma^e for e in 0..5."""
    re = si = 0
    for e, c in enumerate(counts):
        if c:
            p = SIGMA_POWERS[e]
            re += c * p.re
            si += c * p.si
    return EisensteinInt(re, si)


# -- dyadic rationals --------------------------------------------------------

@dataclass(frozen=True)
class DyadicRational:
    """k / 2**n in lowest terms (k odd unless n == 0)."""

    k: int
    n: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("dyadic exponent must be >= 0")
        k, n = self.k, self.n
        while n and k % 2 == 0:
            k //= 2
            n -= 1
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_fraction(cls, r) -> "DyadicRational":
        r = Fraction(r)
        d = r.denominator
        if d & (d - 1):
            raise DomainError(f"{r} is not a dyadic rational")
        return cls(r.numerator, d.bit_length() - 1)

    def to_fraction(self) -> Fraction:
        return Fraction(self.k, 1 << self.n)

    def __str__(self):
        return str(self.to_fraction())


def as_dyadic(d) -> DyadicRational:
    if isinstance(d, DyadicRational):
        return d
    return DyadicRational.from_fraction(d)


# -- continued fractions -----------------------------------------------------

@dataclass(frozen=True)
class CFWord:
    """Partial quotients a_1..a_m of x = 1/(a_1 + 1/(a_2 + ...)), x in (0, 1].

    Canonical form has last term >= 2 whenever m >= 2; 1 itself is [1].
    """

    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms or any(t < 1 for t in self.terms):
            raise DomainError("continued fraction terms must be positive")

    @property
    def canonical(self) -> bool:
        return len(self.terms) == 1 or self.terms[-1] >= 2

    def alternate(self) -> "CFWord":
        """The other finite expansion of the same number."""
        t = self.terms
        if t[-1] == 1 and len(t) >= 2:
            return CFWord(t[:-2] + (t[-2] + 1,))
        return CFWord(t[:-1] + (t[-1] - 1, 1))

    def value(self) -> Fraction:
        return cf_decode(self)


def cf_encode(r) -> CFWord:
    r = Fraction(r)
    if not 0 < r <= 1:
        raise DomainError(f"{r} is outside (0, 1]")
    terms = []
    p, q = r.numerator, r.denominator
    while p:
        a, rem = divmod(q, p)
        terms.append(a)
        p, q = rem, p
    return CFWord(tuple(terms))


def cf_decode(cf: CFWord | Iterable[int]) -> Fraction:
    terms = cf.terms if isinstance(cf, CFWord) else tuple(cf)
    x = Fraction(0)
    for a in reversed(terms):
        x = 1 / (a + x)
    return x
