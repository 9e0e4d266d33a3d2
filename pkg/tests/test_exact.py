import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from diatomic.exact import (
    ONE, SIGMA, SIGMA_BAR, SIGMA_POWERS, ZERO, DomainError, DyadicRational,
    EisensteinInt, ZeckendorfWord, as_dyadic, cf_decode, cf_encode, exact_sqrt, fib,
    isqrt_exact, sigma_power_sum, zeck_decode, zeck_encode,
)


def test_fib_small():
    assert [fib(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


@pytest.mark.parametrize("n,root,ok", [(0, 0, True), (1, 1, True), (24, 4, False), (25, 5, True)])
def test_isqrt_exact_examples(n, root, ok):
    assert isqrt_exact(n) == (root, ok)


def test_exact_sqrt_rejects_nonsquare():
    with pytest.raises(DomainError):
        exact_sqrt(26)


@settings(max_examples=500)
@given(st.integers(min_value=0, max_value=2**256))
def test_isqrt_against_definition(n):
    r, ok = isqrt_exact(n)
    assert r * r <= n < (r + 1) ** 2
    assert ok == (r * r == n)


@given(st.integers(min_value=0, max_value=2**128))
def test_isqrt_recognises_squares(k):
    assert isqrt_exact(k * k) == (k, True)


# -- Zeckendorf --------------------------------------------------------------

@pytest.mark.parametrize("n,word", [(0, "0"), (1, "1"), (4, "101"), (12, "10101"), (27, "1001001")])
def test_zeck_examples(n, word):
    z = zeck_encode(n)
    assert str(z) == word
    assert z.canonical
    assert zeck_decode(z) == n


def test_zeck_27_terms():
    assert sorted(zeck_encode(27).terms()) == [1, 5, 21]
    assert zeck_encode(27).popcount() == 3


def test_noncanonical_word_still_decodes():
    w = ZeckendorfWord.from_string("0011")
    assert not w.canonical
    assert w.value == 3


def test_zeck_roundtrip_and_canonicity_exhaustive():
    for n in range(10**5 + 1):
        z = zeck_encode(n)
        assert zeck_decode(z) == n
    # spot-check canonicity on a sparser grid (no two adjacent ones)
    for n in range(0, 10**5, 7):
        assert "11" not in str(zeck_encode(n))


def test_zeck_shift_is_rho():
    from diatomic.fibrep import rho
    for n in range(500):
        assert zeck_encode(n).shift().value == rho(n)


# -- Eisenstein integers -----------------------------------------------------

eis = st.builds(EisensteinInt, st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))


@settings(max_examples=10_000)
@given(eis, eis, eis)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a * b).norm() == a.norm() * b.norm()


def test_sigma_identities():
    assert SIGMA * SIGMA_BAR == ONE
    assert SIGMA + SIGMA_BAR == ONE
    assert SIGMA ** 6 == ONE
    assert SIGMA ** -1 == SIGMA_BAR
    assert SIGMA.conj() == SIGMA_BAR
    assert abs(complex(SIGMA) - complex(0.5, math.sqrt(3) / 2)) < 1e-12
    assert len(SIGMA_POWERS) == 6 and SIGMA_POWERS[3] == -ONE


def test_negative_power_of_nonunit_refused():
    with pytest.raises((DomainError, ZeroDivisionError, ValueError)):
        EisensteinInt(2, 0) ** -1


def test_sigma_power_sum_counts():
    # one of each residue sums to zero
    assert sigma_power_sum([1] * 6) == ZERO
    assert sigma_power_sum([2, 0, 0, 0, 0, 0]) == EisensteinInt(2, 0)


# -- dyadics and continued fractions -----------------------------------------

def test_dyadic_normalises():
    d = DyadicRational(4, 4)
    assert (d.k, d.n) == (1, 2)
    assert d.to_fraction() == Fraction(1, 4)
    assert as_dyadic(Fraction(3, 8)) == DyadicRational(3, 3)


def test_dyadic_rejects_non_dyadic():
    with pytest.raises(DomainError):
        DyadicRational.from_fraction(Fraction(1, 3))


@pytest.mark.parametrize("r,terms", [(Fraction(2, 5), [2, 2]), (Fraction(1), [1]), (Fraction(3, 7), [2, 3])])
def test_cf_examples(r, terms):
    assert cf_encode(r).terms == tuple(terms)


def test_cf_alternate_form():
    cf = cf_encode(Fraction(2, 5))
    alt = cf.alternate()
    assert alt.terms == (2, 1, 1)
    assert alt.value() == Fraction(2, 5)


def test_cf_domain():
    for bad in (Fraction(0), Fraction(3, 2), Fraction(-1, 2)):
        with pytest.raises(DomainError):
            cf_encode(bad)


def test_cf_roundtrip_all_denominators_to_500():
    for q in range(1, 501):
        for p in range(1, q + 1):
            if math.gcd(p, q) == 1:
                r = Fraction(p, q)
                cf = cf_encode(r)
                assert cf.canonical
                assert cf_decode(cf) == r
                assert cf_decode(cf.terms) == r
