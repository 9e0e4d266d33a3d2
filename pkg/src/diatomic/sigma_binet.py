"""The sequence obtained by putting Zeckendorf digit counts into Stern's Binet formula.

c_{n+1} = sum_{k=0}^{n} sigma^{s_F(k)} conj(sigma)^{s_F(n-k)}, an element of
Z[sigma] fixed by conjugation and hence an integer.
"""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .exact import DomainError, EisensteinInt, fib, zeck_encode
from .fibrep import beatty_phi, beatty_phi2, rho, rho2
from .stern import binet_sigma_sum

REPORT_SCHEMA_VERSION = 1


class IntegrityError(ArithmeticError):
    """A Binet sum that should be rational came out with a sigma part."""


def s_f(n: int) -> int:
    """Number of terms in the Zeckendorf representation of n."""
    return zeck_encode(n).popcount()


def s_f_table(size: int) -> np.ndarray:
    """s_F(0 .. size-1), using s_F(F_i + j) = 1 + s_F(j) for j < F_{i-1}."""
    t = np.zeros(size, dtype=np.int64)
    i = 2
    while fib(i) < size:
        lo, hi = fib(i), min(fib(i + 1), size)
        t[lo:hi] = 1 + t[: hi - lo]
        i += 1
    return t


def c_sigma_sum(n: int, digits: np.ndarray | None = None) -> EisensteinInt:
    """The Z[sigma] sum defining c_n (n >= 1)."""
    if n < 1:
        raise DomainError("index must be >= 1")
    if digits is None:
        digits = s_f_table(n)
    return binet_sigma_sum(digits, n - 1)


def c_sigma(n: int) -> int:
    total = c_sigma_sum(n)
    if total.si:
        raise IntegrityError(f"c_{n} has sigma part {total.si}")
    return total.re


def c_sigma_table(size: int) -> list[int]:
    """[0, c_1, ..., c_{size-1}] (index 0 is a placeholder)."""
    digits = s_f_table(max(size, 1))
    out = [0]
    for n in range(1, size):
        total = binet_sigma_sum(digits, n - 1)
        if total.si:
            raise IntegrityError(f"c_{n} has sigma part {total.si}")
        out.append(total.re)
    return out


def crushed_rows(values, rows: int) -> list[list[int]]:
    """Printed row r holds indices F_{r+1} .. F_{r+2} - 1."""
    return [list(values[fib(r + 1): fib(r + 2)]) for r in range(1, rows + 1)]


def crushed_array_c(rows: int) -> list[list[int]]:
    if rows > 25:
        raise DomainError("rows must be <= 25")
    return crushed_rows(c_sigma_table(fib(rows + 2)), rows)


def crushed_array_sf(rows: int) -> list[list[int]]:
    return crushed_rows(s_f_table(fib(rows + 2)).tolist(), rows)


# -- conjecture sweeps -------------------------------------------------------

ASSUMPTION = ("the five-inequality chain reads the undefined shifts sigma(n), "
              "sigma_2(n) as rho(n), rho_2(n)")

CONJECTURES = {
    "i": "c(rho2(n)+1) >= c(floor(n phi^2)) >= c(floor(n phi)) >= c(rho(n)) >= c(n) >= 0",
    "ii": "the minimum of each crushed-array row is its leftmost element",
    "iii": "first column x_n = c(F_n) satisfies x_{n+2} = x_n + x_{n-1}",
    "iv": "every column satisfies x_{n+1} = x_n + x_{n-1} - x_{n-3}",
}


@dataclass
class ConjectureResult:
    id: str
    statement: str
    bound: int
    checked: int
    violations: list[int]
    wall_time: float


@dataclass
class ConjectureReport:
    bound: int
    results: list[ConjectureResult] = field(default_factory=list)
    schema_version: int = REPORT_SCHEMA_VERSION
    assumption: str = ASSUMPTION

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    def by_id(self, cid: str) -> ConjectureResult:
        return next(r for r in self.results if r.id == cid)


def _check_chain(c, bound):
    bad, checked = [], 0
    for n in range(1, bound + 1):
        chain = [c[rho2(n) + 1], c[beatty_phi2(n)], c[beatty_phi(n)], c[rho(n)], c[n], 0]
        checked += 1
        if any(x < y for x, y in zip(chain, chain[1:])):
            bad.append(n)
    return checked, bad


def _rows_within(bound):
    r = 1
    while fib(r + 2) - 1 <= bound:
        yield r, fib(r + 1), fib(r + 2)
        r += 1


def _check_row_minimum(c, bound):
    bad, checked = [], 0
    for _, lo, hi in _rows_within(bound):
        row = c[lo:hi]
        checked += 1
        if min(row) < row[0]:
            bad.append(lo + row.index(min(row)))
    return checked, bad


def _check_padovan(c, bound):
    bad, checked = [], 0
    n = 2
    while fib(n + 2) <= bound:
        checked += 1
        if c[fib(n + 2)] != c[fib(n)] + c[fib(n - 1)]:
            bad.append(fib(n + 2))
        n += 1
    return checked, bad


def _check_dying_rabbit(c, bound):
    # column k of printed row r is c(F_{r+1} + k), present while k < F_r
    bad, checked = [], 0
    r = 4
    while fib(r + 2) <= bound:
        # rows r+1, r, r-1, r-3 all need column k
        for k in range(fib(r - 3)):
            idx = [fib(m + 1) + k for m in (r + 1, r, r - 1, r - 3)]
            if idx[0] > bound:
                break
            checked += 1
            x_next, x, x_prev, x_back3 = (c[i] for i in idx)
            if x_next != x + x_prev - x_back3:
                bad.append(idx[0])
        r += 1
    return checked, bad


_CHECKS = {"i": _check_chain, "ii": _check_row_minimum, "iii": _check_padovan, "iv": _check_dying_rabbit}


def conjecture_report(bound: int, ids=("i", "ii", "iii", "iv")) -> ConjectureReport:
    """Sweep each conjecture up to ``bound``; violations are reported, never raised."""
    if not 1 <= bound <= 10**4:
        raise DomainError("bound must be in 1..10000")
    size = max(rho2(bound) + 2, bound + 1)
    c = c_sigma_table(size)
    report = ConjectureReport(bound)
    for cid in ids:
        t0 = time.perf_counter()
        checked, bad = _CHECKS[cid](c, bound)
        report.results.append(ConjectureResult(cid, CONJECTURES[cid], bound, checked, bad,
                                               time.perf_counter() - t0))
    return report
