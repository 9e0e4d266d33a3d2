"""The operation a (+) b = a + b + sqrt(4ab + 1) and the sequence built from it.

b_1 = 0, b_2n = b_n, b_2n+1 = b_n (+) b_n+1.  Everything here is exact: the
integer entry points refuse radicands that are not perfect squares.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Integral
from typing import Optional

from .box import conway_f
from .exact import DomainError, as_dyadic, exact_sqrt, isqrt_exact
from .stern import _descend, stern, stern_pair, stern_table


def _root(a: int, b: int, N: int) -> int:
    rad = 4 * a * b + N
    if rad < 0:
        raise DomainError(f"negative radicand 4*{a}*{b}{N:+d}")
    r, ok = isqrt_exact(rad)
    if not ok:
        raise DomainError(f"4*{a}*{b}{N:+d} = {rad} is not a perfect square")
    return r


def oplus(a: int, b: int, N: int = 1) -> int:
    """a + b + sqrt(4ab + N), exact."""
    return a + b + _root(a, b, N)


def ominus(a: int, b: int, N: int = 1) -> int:
    """a + b - sqrt(4ab + N), exact."""
    return a + b - _root(a, b, N)


def principal_sqrt(z: complex) -> complex:
    """sqrt(r e^{i t}) = sqrt(r) e^{i t/2} with t taken in [0, 2 pi)."""
    r = abs(z)
    t = cmath.phase(z) % (2 * math.pi)
    return math.sqrt(r) * cmath.exp(0.5j * t)


def _float_root(a, b, N):
    rad = 4 * a * b + N
    if isinstance(rad, complex):
        return principal_sqrt(rad)
    if rad < 0:
        raise DomainError("negative radicand in real mode")
    return math.sqrt(rad)


def _exact_ints(a, b, N) -> bool:
    if not all(isinstance(v, Integral) for v in (a, b, N)):
        return False
    rad = 4 * a * b + N
    return rad >= 0 and isqrt_exact(rad)[1]


def oplus_n(a, b, N):
    """x + y + sqrt(4xy + N) in floating point, exactly for square integer radicands.

    A complex radicand (complex N) uses ``principal_sqrt``; a negative real
    radicand is a domain error.
    """
    if _exact_ints(a, b, N):
        return oplus(a, b, N)
    return a + b + _float_root(a, b, N)


def ominus_n(a, b, N):
    if _exact_ints(a, b, N):
        return ominus(a, b, N)
    return a + b - _float_root(a, b, N)


# -- the sequence b_n --------------------------------------------------------

def b_pair(n: int) -> tuple[int, int]:
    """(b_n, b_{n+1}) for n >= 1."""
    if n < 1:
        raise DomainError("index must be >= 1")

    def even(x, y):
        return x, oplus(x, y)

    def odd(x, y):
        return oplus(x, y), y

    return _descend(n, (0, 0), even, odd)


def b(n: int) -> int:
    return b_pair(n)[0]


def b_table(size: int) -> list[int]:
    """[None, b_1, ..., b_{size-1}] from the recurrence with exact (+)."""
    t: list[Optional[int]] = [None, 0] + [0] * max(size - 2, 0)
    for n in range(2, size):
        h = n // 2
        t[n] = t[h] if n % 2 == 0 else oplus(t[h], t[h + 1])
    return t[:size]


def b_closed(k: int) -> int:
    """a_{2^{j+1} - k} * a_{k - 2^j} where 2^j <= k < 2^{j+1}."""
    if k < 1:
        raise DomainError("index must be >= 1")
    j = k.bit_length() - 1
    return stern((2 << j) - k) * stern(k - (1 << j))


def b_closed_table(size: int) -> list[int]:
    a = stern_table(2 * size + 2)
    out = [0] * size
    for k in range(1, size):
        j = k.bit_length() - 1
        out[k] = int(a[(2 << j) - k]) * int(a[k - (1 << j)])
    return out


def g(d) -> Fraction:
    """g(k/2^n) = b_k / b_{2^n + k} on (0, 1], with g(1) = f(1) = 1 and g(0) = 0.

    The two endpoints are 0/0 in raw form and take their continuity values.
    """
    d = as_dyadic(d)
    size = 1 << d.n
    if not 0 <= d.k <= size:
        raise DomainError(f"{d} is outside [0, 1]")
    if d.k == 0:
        return Fraction(0)
    if d.k == size:
        return conway_f(1)
    return Fraction(b(d.k), b(size + d.k))


# -- M_(+) and the pair bijection -------------------------------------------

def _check_pair(a: int, b_: int) -> None:
    if a < 0 or b_ < 0:
        raise DomainError(f"({a}, {b_}) has a negative entry")
    if not isqrt_exact(4 * a * b_ + 1)[1]:
        raise DomainError(f"4*{a}*{b_}+1 is not a perfect square")


def m_oplus(pair: tuple[int, int]) -> Optional[tuple[int, int]]:
    """One step of the slow (+)-Euclidean algorithm; None means stop."""
    a, b_ = pair
    _check_pair(a, b_)
    if a < b_:
        return a, ominus(a, b_)
    if b_ < a:
        return ominus(a, b_), b_
    return None


def b_pair_path(a: int, b_: int) -> tuple[int, ...]:
    """Branch bits (0: index 2m, 1: index 2m+1) from (a, b) down to (0, 0)."""
    _check_pair(a, b_)
    bits = []
    pair = (a, b_)
    while True:
        nxt = m_oplus(pair)
        if nxt is None:
            break
        # B_2m = (b_m, b_m (+) b_m+1) keeps the left entry, B_2m+1 the right
        bits.append(0 if nxt[0] == pair[0] else 1)
        pair = nxt
    assert pair == (0, 0)
    return tuple(bits)


def b_pair_index(a: int, b_: int) -> int:
    """The unique n >= 1 with (b_n, b_{n+1}) = (a, b)."""
    n = 1
    for bit in reversed(b_pair_path(a, b_)):
        n = 2 * n + bit
    return n


# -- c_k = A a_k^2 + B b_k ---------------------------------------------------

def c_general(A: int, B: int, n: int) -> int:
    if n < 1:
        raise DomainError("index must be >= 1")
    return A * stern(n) ** 2 + B * b(n)


def c_general_table(A: int, B: int, size: int) -> list[int]:
    a = stern_table(size)
    bt = b_table(size)
    return [0] + [A * int(a[k]) ** 2 + B * bt[k] for k in range(1, size)]


def lemma_radicand(k: int) -> tuple[int, int]:
    """(a_k^2 b_{k+1} + a_{k+1}^2 b_k + 1, a_k a_{k+1} sqrt(4 b_k b_{k+1} + 1))."""
    ak, ak1 = stern_pair(k)
    bk, bk1 = b_pair(k)
    return ak * ak * bk1 + ak1 * ak1 * bk + 1, ak * ak1 * exact_sqrt(4 * bk * bk1 + 1)


def quadratic_form(x, y, z) -> int:
    """2(x^2 + y^2 + z^2) - (x + y + z)^2."""
    return 2 * (x * x + y * y + z * z) - (x + y + z) ** 2
