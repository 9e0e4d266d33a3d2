"""Fibonacci representations: the shift rho, Beatty maps, and R_n.

R_n counts the ways to write n as a sum of distinct Fibonacci numbers
F_2, F_3, ...  Two independent computations are provided: subset-sum dynamic
programming (``r_table``) and the Beatty recursion (``r_count_recursive``).
"""
from __future__ import annotations

import bisect
import math
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import _FIB, CFWord, DomainError, fib

PHI = (1 + math.sqrt(5)) / 2


# -- guarded Beatty floors ---------------------------------------------------

def _phi_bounds(m: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Consecutive convergents F_{m+1}/F_m, F_{m+2}/F_{m+1} as (lower, upper)."""
    c1 = (fib(m + 1), fib(m))
    c2 = (fib(m + 2), fib(m + 1))
    # odd m: F_{m+1}/F_m lies above phi
    return (c2, c1) if m % 2 else (c1, c2)


def floor_u_v_phi(u: int, v: int) -> int:
    """floor(u + v*phi), certified from rational brackets on phi.

    phi is irrational, so for v != 0 the value sits strictly inside the
    bracket; precision grows until the bracket holds no integer boundary.
    """
    if v == 0:
        return u
    m = 2 * abs(v).bit_length() + 8
    while True:
        (p_lo, q_lo), (p_hi, q_hi) = _phi_bounds(m)
        if v < 0:
            (p_lo, q_lo), (p_hi, q_hi) = (p_hi, q_hi), (p_lo, q_lo)
        # x_lo = u + v p_lo/q_lo < x < x_hi = u + v p_hi/q_hi
        f = u + (v * p_lo) // q_lo
        if (u - f - 1) * q_hi + v * p_hi <= 0:
            return f
        m += 16


def beatty_phi(n: int) -> int:
    """floor(n phi)."""
    return floor_u_v_phi(0, n)


def beatty_phi2(n: int) -> int:
    """floor(n phi^2)."""
    return floor_u_v_phi(n, n)


def beatty_rho(n: int) -> int:
    """floor(n phi + 1/phi), with 1/phi = phi - 1."""
    return floor_u_v_phi(-1, n + 1)


def beatty_rho2(n: int) -> int:
    """floor(n phi^2 + 1/phi)."""
    return floor_u_v_phi(n - 1, n + 1)


def beatty_t(n: int) -> int:
    """floor(n phi + 2/phi)."""
    return floor_u_v_phi(-2, n + 2)


def alpha(n: int) -> int:
    """floor(n phi - 1/phi^2), with 1/phi^2 = 2 - phi."""
    return floor_u_v_phi(-2, n + 1)


def beta(n: int) -> int:
    """floor(n phi^2 + phi)."""
    return floor_u_v_phi(n, n + 1)


# -- the Fibonacci shift -----------------------------------------------------

def rho(n: int) -> int:
    """Raise each index of the Zeckendorf representation of n by one."""
    if n < 0:
        raise DomainError("index must be >= 0")
    if n == 0:
        return 0
    fib(n.bit_length() * 2 + 4)
    i = bisect.bisect_right(_FIB, n) - 1
    total = 0
    while n:
        if _FIB[i] <= n:
            n -= _FIB[i]
            total += _FIB[i + 1]
            i -= 2
        else:
            i -= 1
    return total


def rho2(n: int) -> int:
    return rho(n) + n


def t_shift(n: int) -> int:
    return rho(n + 1) - 1


# -- R_n ---------------------------------------------------------------------

def r_table(size: int) -> np.ndarray:
    """R_0 .. R_{size-1} from prod_{i>=2} (1 + x^{F_i}) truncated."""
    dp = np.zeros(size, dtype=np.int64)
    dp[0] = 1
    i = 2
    while fib(i) < size:
        f = fib(i)
        dp[f:] = dp[f:] + dp[:-f]
        i += 1
    return dp


_R_CACHE = np.ones(1, dtype=np.int64)


def _r_values(size: int) -> np.ndarray:
    global _R_CACHE
    if len(_R_CACHE) < size:
        _R_CACHE = r_table(max(size, 2 * len(_R_CACHE)))
    return _R_CACHE


def r_count(n: int) -> int:
    if n < 0:
        raise DomainError("index must be >= 0")
    return int(_r_values(n + 1)[n])


def classify(n: int) -> tuple[str, int]:
    """('rho2', m) if n = rho2(m) with m >= 1, else ('T', m) with n = T(m)."""
    if n < 1:
        raise DomainError("index must be >= 1")
    # n / phi^2 = 2n - n phi
    m = 2 * n - beatty_phi(n) - 1
    for c in (m, m + 1):
        if c >= 1 and rho2(c) == n:
            return "rho2", c
    while m >= 1 and rho2(m) > n:
        m -= 1
    while rho2(m + 1) < n:
        m += 1
    # rho2(1..m) are the values below n; the rest are T(0), T(1), ...
    t_index = n - m - 1
    if t_shift(t_index) != n:
        raise ArithmeticError(f"{n} is neither rho2(m) nor T(m)")
    return "T", t_index


_R_MEMO = {0: 1}


def r_count_recursive(n: int) -> int:
    """R_n from R_{rho2(m)} = R_m + R_{m-1} and R_{T(m)} = R_m."""
    if n in _R_MEMO:
        return _R_MEMO[n]
    kind, m = classify(n)
    val = r_count_recursive(m) + r_count_recursive(m - 1) if kind == "rho2" else r_count_recursive(m)
    _R_MEMO[n] = val
    return val


sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


# -- the box-function analogue q ---------------------------------------------

def q_pair(k: int, n: int) -> tuple[int, int]:
    """Unreduced (R_k, R_{F_n + k}) for k < F_{n-1}."""
    if not 0 <= k < fib(n - 1):
        raise DomainError(f"q needs 0 <= k < F_{n - 1} = {fib(n - 1)}")
    R = _r_values(fib(n) + k + 1)
    return int(R[k]), int(R[fib(n) + k])


def q(k: int, n: int) -> Fraction:
    """q(k, F_n) = R_k / R_{F_n + k}."""
    return Fraction(*q_pair(k, n))


def mediant(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    return x[0] + y[0], x[1] + y[1]


def q_inverse_series(cf: CFWord | Sequence[int], depth: int | None = None,
                     periodic: bool = False) -> float:
    """sum_k (-1)^{k+1} / phi^{2(c_1 + ... + c_k) - 1}.

    A finite expansion is summed in full.  With ``periodic`` the terms repeat
    cyclically and ``depth`` terms are summed.
    """
    terms = tuple(cf.terms if isinstance(cf, CFWord) else cf)
    if not terms:
        raise DomainError("empty continued fraction")
    if periodic:
        if depth is None:
            raise DomainError("periodic evaluation needs a depth")
        terms = tuple(terms[i % len(terms)] for i in range(depth))
    elif depth is not None:
        terms = terms[:depth]
    total = 0.0
    s = 0
    for k, c in enumerate(terms):
        s += c
        total += (-1) ** k * PHI ** (1 - 2 * s)
    return total


def _grid_neighbour(x: Fraction, m: int, side: int, gap: int = 2) -> int:
    # grid points k/F_m only locate their limit points to O(1/F_m); stay a
    # couple of steps clear of x
    F = fib(m)
    k = math.floor(x * F) if side < 0 else math.ceil(x * F)
    return k + side * gap


def q_limit(x, m_max: int = 30, window: int = 5) -> tuple[float, int, float]:
    """One-sided limit of q(k', F_m') as k'/F_m' -> x, for x in (0, 1/phi).

    Q is flat on one side of many points and rises only logarithmically on
    the other, so both sides are followed over m' in the last ``window``
    levels up to ``m_max`` and the side that has settled is used.  Returns
    (value at m_max, side -1/+1, spread of that side over the window).
    """
    x = Fraction(x)
    best = None
    for side in (-1, 1):
        vals = []
        for m in range(m_max - window + 1, m_max + 1):
            k = _grid_neighbour(x, m, side)
            if not 0 <= k < fib(m - 1):
                raise DomainError(f"{x} is outside the domain of Q")
            vals.append(q(k, m))
        spread = float(max(vals) - min(vals))
        if best is None or spread < best[2]:
            best = (float(vals[-1]), side, spread)
    return best


# -- crushed array -----------------------------------------------------------

def crushed_row_span(r: int) -> tuple[int, int]:
    """Index range [F_n - 1, F_{n+1} - 2] of printed row r (n = r + 2)."""
    n = r + 2
    return fib(n) - 1, fib(n + 1) - 2


def crushed_array_r(rows: int) -> list[list[int]]:
    if rows > 25:
        raise DomainError("rows must be <= 25")
    if rows < 1:
        return []
    R = _r_values(crushed_row_span(rows)[1] + 1)
    out = []
    for r in range(1, rows + 1):
        lo, hi = crushed_row_span(r)
        out.append([int(v) for v in R[lo:hi + 1]])
    return out


def column_difference(k: int) -> int:
    """Common two-row difference of column k: R_{k-1}, with R_{-1} = 0."""
    return 0 if k == 0 else r_count(k - 1)
