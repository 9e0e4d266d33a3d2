"""Registered property sweeps behind ``diatomic verify``.

A suite enumerates its cases for a given bound and checks them one at a
time, so a sweep can be cut into contiguous chunks and spread over worker
processes; results are merged back in chunk order.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Callable, Optional, Sequence

from . import box, fibrep, oplus, sigma_binet, stern
from .exact import fib, isqrt_exact


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    default_bound: int
    cases: Callable[[int], Sequence]
    check: Callable[[Any, Any], bool]
    setup: Callable[[int], Any] = lambda bound: None


SUITES: dict[str, Suite] = {}


def suite(name, description, default_bound, cases, setup=None):
    def register(check):
        SUITES[name] = Suite(name, description, default_bound, cases, check,
                             setup or (lambda bound: None))
        return check
    return register


@dataclass
class SuiteResult:
    name: str
    bound: int
    cases: int
    failure: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failure is None


@lru_cache(maxsize=8)
def _context(name: str, bound: int):
    return SUITES[name].setup(bound)


def _run_chunk(name: str, bound: int, lo: int, hi: int) -> tuple[int, Optional[str]]:
    s = SUITES[name]
    ctx = _context(name, bound)
    cases = s.cases(bound)
    done = 0
    for case in cases[lo:hi]:
        done += 1
        if not s.check(case, ctx):
            return done, repr(case)
    return done, None


def run_suite(name: str, bound: Optional[int] = None, jobs: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    s = SUITES[name]
    bound = s.default_bound if bound is None else bound
    total = len(s.cases(bound))
    if jobs <= 1 or total < 2:
        chunks = [_run_chunk(name, bound, 0, total)]
    else:
        step = math.ceil(total / jobs)
        spans = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_chunk, name, bound, lo, hi) for lo, hi in spans]
            chunks = [f.result() for f in futures]
    # deterministic: the first failing chunk in index order wins
    count = 0
    for done, failure in chunks:
        count += done
        if failure is not None:
            return SuiteResult(name, bound, count, failure)
    return SuiteResult(name, bound, count)


# -- Stern -------------------------------------------------------------------

def _coprime_pairs(bound):
    return [(p, s - p) for s in range(2, bound + 1) for p in range(1, s) if gcd(p, s - p) == 1]


@suite("stern-pair-bijection", "stern_index inverts stern_pair on coprime pairs with p + q <= bound",
       200, _coprime_pairs)
def _(case, ctx):
    return stern.stern_pair(stern.stern_index(*case)) == case


# a left inverse on 1..bound also makes the pairs pairwise distinct
@suite("stern-index-roundtrip", "stern_index(stern_pair(n)) = n for n <= bound",
       2**14, lambda bound: range(1, bound + 1))
def _(n, ctx):
    return stern.stern_index(*stern.stern_pair(n)) == n


@suite("jacobsthal", "a_J(n) = F_n for 1 <= n <= bound", 30, lambda bound: range(1, bound + 1))
def _(n, ctx):
    a, f = stern.fibonacci_at_jacobsthal(n)
    return a == f


@suite("modified-fibonacci", "a_{n+1} = a_n + a_{n-1} - 2 (a_{n-1} mod a_n) for 2 <= n <= bound",
       2**16, lambda bound: range(2, bound + 1), setup=lambda bound: stern.stern_table(bound + 2))
def _(n, a):
    return stern.modified_fibonacci_next(int(a[n - 1]), int(a[n])) == a[n + 1]


@suite("sigma-binet-stern", "the Eisenstein sum over s_2 gives a_{n+1} for n <= bound",
       2**12, lambda bound: range(bound + 1),
       setup=lambda bound: (stern.s2_table(bound + 1), stern.stern_table(bound + 2)))
def _(n, ctx):
    digits, a = ctx
    total = stern.binet_sigma_sum(digits, n)
    return total.si == 0 and total.re == a[n + 1]


@suite("pascal-mod2", "odd binomials on the diagonal 2i + j = n count a_{n+1}, n <= bound",
       2**12, lambda bound: range(bound + 1), setup=lambda bound: stern.stern_table(bound + 2))
def _(n, a):
    return stern.pascal_mod2_diagonal(n) == a[n + 1]


@suite("stern-product-lemma", "a_{m+1} a_{n+1} - a_m a_n = 1 when m + n = 2^j - 1, j <= bound",
       16, lambda bound: [(j, m) for j in range(1, bound + 1) for m in range(2**j)],
       setup=lambda bound: stern.stern_table(2**bound + 1))
def _(case, a):
    j, m = case
    n = 2**j - 1 - m
    return int(a[m + 1]) * int(a[n + 1]) - int(a[m]) * int(a[n]) == 1


@suite("coons-tyler", "max of a_n/(3n)^log2(phi) over 2 <= n <= bound lies in [0.4470, 0.4473]",
       2**20, lambda bound: [bound])
def _(bound, ctx):
    _, best = stern.coons_tyler_sweep(2, bound)
    return 0.4470 <= best <= 0.4473


@suite("mertens", "the Stern exponential sum below x = bound equals the Mertens sum",
       500, lambda bound: [bound])
def _(x, ctx):
    res = stern.stern_exponential_sum(x)
    return abs(res.complex_sum - res.mertens_sum) <= 1e-6 * max(res.terms, 1)


# -- box functions -----------------------------------------------------------

def _dyadics(bound):
    size = 2**bound
    return [Fraction(k, size) for k in range(size + 1)]


@suite("box-inverse", "question_mark(conway_f(d)) = d on dyadics k/2^bound", 12, _dyadics)
def _(d, ctx):
    return box.question_mark(box.conway_f(d)).to_fraction() == d


@suite("box-reciprocal-points", "f(2^-j) = 1/(j+1) for j <= bound", 18, lambda bound: range(bound + 1))
def _(j, ctx):
    return box.conway_f(Fraction(1, 2**j)) == Fraction(1, j + 1)


# -- the (+) sequence ------------------------------------------------------

@suite("b-closed-form", "b_k = a_{2^{j+1}-k} a_{k-2^j} and b_k >= 0 for 1 <= k <= bound",
       2**16, lambda bound: range(1, bound + 1),
       setup=lambda bound: (oplus.b_table(bound + 1), oplus.b_closed_table(bound + 1)))
def _(k, ctx):
    rec, closed = ctx
    return rec[k] == closed[k] and rec[k] >= 0


@suite("g-formula", "g(x) = f(2^{j+1} x - 1)(1 - j f(2x)) on dyadics k/2^bound in (2^-j-1, 2^-j)",
       12, lambda bound: [Fraction(k, 2**bound) for k in range(1, 2**bound)])
def _(x, ctx):
    j = 0
    while x <= Fraction(1, 2 ** (j + 1)):
        j += 1
    if x == Fraction(1, 2**j):
        return True
    # at j = 0 the second factor is 1 and f(2x) would fall outside [0, 1]
    second = 1 - j * box.conway_f(2 * x) if j else 1
    return oplus.g(x) == box.conway_f(2 ** (j + 1) * x - 1) * second


@suite("g-upper-half", "g(x) = f(2x - 1) on dyadics k/2^bound in [1/2, 1]", 12,
       lambda bound: [Fraction(k, 2**bound) for k in range(2 ** (bound - 1), 2**bound + 1)])
def _(x, ctx):
    return oplus.g(x) == box.conway_f(2 * x - 1)


def _square_pairs(bound):
    return [(a, b) for a in range(bound + 1) for b in range(bound + 1) if isqrt_exact(4 * a * b + 1)[1]]


@suite("b-pair-bijection", "b_pair_index inverts (b_n, b_n+1) on valid pairs with a, b <= bound",
       300, _square_pairs)
def _(pair, ctx):
    return oplus.b_pair(oplus.b_pair_index(*pair)) == pair


@suite("b-index-roundtrip", "b_pair_index((b_n, b_n+1)) = n for n <= bound",
       2**14, lambda bound: range(1, bound + 1))
def _(n, ctx):
    return oplus.b_pair_index(*oplus.b_pair(n)) == n


@suite("b-radicand-lemma", "a_k^2 b_{k+1} + a_{k+1}^2 b_k + 1 = a_k a_{k+1} sqrt(4 b_k b_{k+1} + 1)",
       2**14, lambda bound: range(1, bound + 1))
def _(k, ctx):
    lhs, rhs = oplus.lemma_radicand(k)
    return lhs == rhs


@suite("b-columns", "b_{2^{j+1}+k} = a_k^2 + b_{2^j+k} for j <= bound, 0 <= k < 2^j",
       14, lambda bound: [(j, k) for j in range(bound + 1) for k in range(2**j)],
       setup=lambda bound: (stern.stern_table(2 ** (bound + 2)), oplus.b_table(2 ** (bound + 2))))
def _(case, ctx):
    a, bt = ctx
    j, k = case
    return bt[2 ** (j + 1) + k] == int(a[k]) ** 2 + bt[2**j + k]


@suite("c-general-recurrence", "A a^2 + B b obeys the (+)_N recurrence with N = 4AB + B^2",
       2**12, lambda bound: [(A, B, n) for A, B in ((1, -1), (2, 3), (0, 1), (1, 0))
                            for n in range(1, bound + 1)])
def _(case, ctx):
    A, B, n = case
    N = 4 * A * B + B * B
    c = [oplus.c_general(A, B, m) for m in (n, n + 1, 2 * n, 2 * n + 1)]
    return c[2] == c[0] and c[3] == oplus.oplus(c[0], c[1], N)


# -- Fibonacci representations ---------------------------------------------

@suite("r-oracle", "subset-sum R_n equals the Beatty recursion for n <= bound", 10**5,
       lambda bound: range(bound + 1), setup=lambda bound: fibrep.r_table(bound + 1))
def _(n, R):
    return fibrep.r_count_recursive(n) == R[n]


@suite("rho-beatty", "Zeckendorf shift rho(n) equals the certified floor(n phi + 1/phi)", 10**4,
       lambda bound: range(bound + 1))
def _(n, ctx):
    return fibrep.rho(n) == fibrep.beatty_rho(n)


@suite("beatty-partition", "rho2(n), n >= 1, and T(n), n >= 0, cover [1, bound] exactly once", 10**4,
       lambda bound: [bound])
def _(bound, ctx):
    hits = [0] * (bound + 1)
    n = 1
    while fibrep.rho2(n) <= bound:
        hits[fibrep.rho2(n)] += 1
        n += 1
    n = 0
    while fibrep.t_shift(n) <= bound:
        hits[fibrep.t_shift(n)] += 1
        n += 1
    return all(h == 1 for h in hits[1:])


@suite("alpha-beta", "R'_alpha(n) = R'_n and R'_beta(n) = R'_n + R'_{n+1} with R'_n = R_{n-1}, 1 <= n <= bound",
       5000, lambda bound: range(1, bound + 1), setup=lambda bound: fibrep.r_table(3 * bound + 4))
def _(n, R):
    # the 1-based count R'_n = R_{n-1} has R'_1 = 1
    return R[fibrep.alpha(n) - 1] == R[n - 1] and R[fibrep.beta(n) - 1] == R[n - 1] + R[n]


@suite("alpha-beta-shifted", "R_alpha(n) = R_{n-1} and R_{beta(n)-1} = R_n + R_{n-1}, i.e. alpha = T(n-1), beta - 1 = rho2",
       5000, lambda bound: range(1, bound + 1), setup=lambda bound: fibrep.r_table(3 * bound + 4))
def _(n, R):
    return (fibrep.alpha(n) == fibrep.t_shift(n - 1) and fibrep.beta(n) - 1 == fibrep.rho2(n)
            and R[fibrep.alpha(n)] == R[n - 1] and R[fibrep.beta(n) - 1] == R[n] + R[n - 1])


@suite("triple-rho", "rho(rho(rho(n)+1)) = rho(rho(rho(n))+1) + 1 for n <= bound", 10**4,
       lambda bound: range(bound + 1))
def _(n, ctx):
    r = fibrep.rho
    return r(r(r(n) + 1)) == r(r(r(n)) + 1) + 1


def _q_cases(bound):
    return [(n, k) for n in range(3, bound + 1) for k in range(1, fib(n - 1))]


@suite("q-mediant", "q(T(k),F_n+1) = q(k,F_n) and q(rho2(k),F_n+2) = q(k,F_n) * q(k-1,F_n)",
       20, _q_cases)
def _(case, ctx):
    n, k = case
    if fibrep.q(fibrep.t_shift(k), n + 1) != fibrep.q(k, n):
        return False
    med = fibrep.mediant(fibrep.q_pair(k, n), fibrep.q_pair(k - 1, n))
    return fibrep.q_pair(fibrep.rho2(k), n + 2) == med


@suite("r-row-shift", "R_{F_{n+2}+j} = R_{F_n+j} + R_j for j < F_{n-1}, n <= bound", 20,
       lambda bound: [(n, j) for n in range(2, bound + 1) for j in range(fib(n - 1))],
       setup=lambda bound: fibrep.r_table(fib(bound + 2) + fib(bound) + 1))
def _(case, R):
    n, j = case
    return R[fib(n + 2) + j] == R[fib(n) + j] + R[j]


@suite("r-row-symmetry", "R'_{F_m+k} = R'_{F_{m+1}-k} with R'_n = R_{n-1}, 0 < k < F_{m-1}, m <= bound", 20,
       lambda bound: [(m, k) for m in range(2, bound + 1) for k in range(1, fib(m - 1))],
       setup=lambda bound: fibrep.r_table(fib(bound + 1) + 1))
def _(case, R):
    m, k = case
    # rows of the crushed array start at F_n - 1, so they read in R'
    return R[fib(m) + k - 1] == R[fib(m + 1) - k - 1]


@suite("r-crushed-columns", "crushed-array columns step by R_{k-1} every two rows and die like rabbits",
       22, lambda bound: [bound])
def _(rows, ctx):
    arr = fibrep.crushed_array_r(rows)
    for r in range(len(arr)):
        for k in range(len(arr[r])):
            if r + 2 < len(arr) and arr[r + 2][k] != arr[r][k] + fibrep.column_difference(k):
                return False
            if r >= 3 and k < len(arr[r - 3]):
                if r + 1 < len(arr) and arr[r + 1][k] != arr[r][k] + arr[r - 1][k] - arr[r - 2][k]:
                    return False
    return True


@suite("graph-rows", "graph row n lists the values 0 .. F_{n+2}-2 left to right", 12,
       lambda bound: [bound])
def _(depth, ctx):
    from .graph import graph_g
    g = graph_g(depth)
    for n in range(1, depth + 2):
        if [v for _, v in g.row(n)] != list(range(fib(n + 2) - 1)):
            return False
    return True


# -- the sigma-Binet sequence -------------------------------------------------

@suite("sf-shift", "s_F(rho(n)) = s_F(n) and s_F(rho2(n)+1) = s_F(n) + 1 for n <= bound", 10**4,
       lambda bound: range(bound + 1))
def _(n, ctx):
    sf = sigma_binet.s_f
    return sf(fibrep.rho(n)) == sf(n) and sf(fibrep.rho2(n) + 1) == sf(n) + 1


@suite("c-integrality", "the sigma part of the c_n sum vanishes for n <= bound", 5000,
       lambda bound: range(1, bound + 1), setup=lambda bound: sigma_binet.s_f_table(bound + 1))
def _(n, digits):
    return sigma_binet.c_sigma_sum(n, digits).si == 0


def _c_context(bound):
    return sigma_binet.c_sigma_table(fib(bound + 3) + 3)


@suite("c-fibonacci-recurrence", "c_{F_{n+2}+k} = c_{F_n+k} + c_k + c_{F_{n-1}+k} for 2 <= n <= bound, k <= F_{n-2}",
       18, lambda bound: [(n, k) for n in range(2, bound + 1) for k in range(fib(n - 2) + 1)],
       setup=_c_context)
def _(case, c):
    n, k = case
    # c[0] is 0, the empty Binet sum
    return c[fib(n + 2) + k] == c[fib(n) + k] + c[k] + c[fib(n - 1) + k]


@suite("c-corollary", "c_{F_n} + c_{F_{n-1}+2} = c_{F_n+1} = c_{F_{n+1}+2} for 4 <= n <= bound",
       18, lambda bound: range(4, bound + 1), setup=_c_context)
def _(n, c):
    return c[fib(n)] + c[fib(n - 1) + 2] == c[fib(n) + 1] == c[fib(n + 1) + 2]
