"""Conway's box function on dyadics and Minkowski's question mark on rationals."""
from __future__ import annotations

from fractions import Fraction

from .exact import DomainError, DyadicRational, as_dyadic, cf_encode
from .stern import stern, stern_table


def conway_f(d) -> Fraction:
    """f(k/2^n) = a_k / a_{2^n + k} for dyadic d in [0, 1]."""
    d = as_dyadic(d)
    if not 0 <= d.k <= (1 << d.n):
        raise DomainError(f"{d} is outside [0, 1]")
    return Fraction(stern(d.k), stern((1 << d.n) + d.k))


def question_mark(r) -> DyadicRational:
    """?(r) = 2 * sum (-1)^{m+1} 2^{-(a_1 + ... + a_m)} over the CF of r."""
    r = Fraction(r)
    if not 0 <= r <= 1:
        raise DomainError(f"{r} is outside [0, 1]")
    if r == 0:
        return DyadicRational(0)
    total = Fraction(0)
    s = 0
    sign = 1
    for a in cf_encode(r).terms:
        s += a
        total += sign * Fraction(2, 1 << s)
        sign = -sign
    return DyadicRational.from_fraction(total)


def sample_singular(fn: str, depth: int) -> list[tuple[Fraction, Fraction]]:
    """Graph samples of f (fn='f') or ? (fn='questionMark', alias 'qm').

    For f the abscissae are k/2^depth; for ? they are the images f(k/2^depth),
    so both tables hold the same point set reflected in y = x.
    """
    if depth > 20:
        raise DomainError("depth must be <= 20")
    size = 1 << depth
    a = stern_table(2 * size + 1)
    xs = [Fraction(k, size) for k in range(size + 1)]
    fx = [Fraction(int(a[k]), int(a[size + k])) for k in range(size + 1)]
    if fn == "f":
        return list(zip(xs, fx))
    if fn in ("questionMark", "qm"):
        return [(x, question_mark(x).to_fraction()) for x in fx]
    raise DomainError(f"unknown singular function {fn!r}")
