import cmath
import math
from fractions import Fraction

import pytest

from diatomic import stern
from diatomic.exact import DomainError
from diatomic.mobius import mertens, mobius_sieve

LISTING = [1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1, 5]


def naive_stern(n, memo={0: 0, 1: 1}):
    if n not in memo:
        h = n // 2
        memo[n] = naive_stern(h) if n % 2 == 0 else naive_stern(h) + naive_stern(h + 1)
    return memo[n]


def test_prefix():
    assert [stern.stern(n) for n in range(1, 18)] == LISTING


def test_table_matches_recurrence():
    t = stern.stern_table(5000)
    assert all(int(t[n]) == naive_stern(n) for n in range(5000))


def test_pair_and_zero():
    assert stern.stern_pair(0) == (0, 1)
    assert stern.stern_pair(5) == (3, 2)


def test_diatomic_row():
    assert stern.diatomic_row(2) == [1, 3, 2, 3, 1]
    # rows are palindromes
    for j in range(8):
        row = stern.diatomic_row(j)
        assert row == row[::-1]


@pytest.mark.parametrize("pair,n", [((3, 2), 5), ((1, 1), 1), ((1, 2), 2), ((2, 1), 3)])
def test_stern_index(pair, n):
    assert stern.stern_index(*pair) == n


def test_stern_index_not_coprime():
    with pytest.raises(DomainError, match="not coprime"):
        stern.stern_index(2, 4)


def test_every_coprime_pair_once():
    seen = {}
    for n in range(1, 2**12):
        seen.setdefault(stern.stern_pair(n), n)
    for p in range(1, 30):
        for q in range(1, 30):
            if math.gcd(p, q) == 1 and (p, q) in seen:
                assert stern.stern_index(p, q) == seen[(p, q)]


def test_binet_sigma_formula():
    for n in range(200):
        v = stern.binet_sigma_stern(n)
        assert v.si == 0 and v.re == naive_stern(n + 1)


def test_pascal_diagonal_equals_stern():
    # the diagonal 2i + j = n of Pascal's triangle mod 2 sums to a_{n+1}
    for n in range(300):
        brute = sum(math.comb(n - i, i) % 2 for i in range(n // 2 + 1))
        assert stern.pascal_mod2_diagonal(n) == brute == naive_stern(n + 1)


def test_jacobsthal_gives_fibonacci():
    assert [stern.jacobsthal(n) for n in range(1, 7)] == [1, 1, 3, 5, 11, 21]
    for n in range(1, 40):
        a, f = stern.fibonacci_at_jacobsthal(n)
        assert a == f


def test_modified_fibonacci_walk():
    prev, cur = 1, 1
    for n in range(2, 1000):
        prev, cur = cur, stern.modified_fibonacci_next(prev, cur)
        assert cur == naive_stern(n + 1)


def test_product_lemma():
    for j in range(1, 10):
        for m in range(2**j):
            assert stern.lemma_product(m, 2**j - 1 - m) == 1


def test_coons_tyler_value_at_jacobsthal():
    assert abs(stern.coons_tyler_ratio(stern.jacobsthal(30)) - 1 / math.sqrt(5)) < 1e-6


def test_coons_tyler_sweep_small_n_peak():
    # small n beat the limsup: a_5 = 3 gives 3 / 15^0.694 > 1/sqrt 5
    arg, best = stern.coons_tyler_sweep(2, 2**12)
    assert arg == 5
    assert best > 0.45


def test_mobius_and_mertens():
    mu = mobius_sieve(30)
    assert list(mu[1:11]) == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert mertens(10) == -1


def test_farey_enumeration_matches_brute_force():
    x = 40
    tree = sorted(stern.farey_fractions_below(x), key=lambda t: Fraction(*t))
    brute = sorted(((p, q) for q in range(2, x) for p in range(1, q) if math.gcd(p, q) == 1),
                   key=lambda t: Fraction(*t))
    assert tree == brute


def test_exponential_sum_index_scan_equivalence():
    # scan odd indices of the actual sequence up to where every q < x has appeared
    x = 20
    t = stern.stern_table(2**(x + 1) + 2)
    direct = 0j
    for n in range(1, 2**x):
        num, den = int(t[2 * n]), int(t[2 * n + 1])
        if den < x:
            direct += cmath.exp(2j * cmath.pi * num / den)
    res = stern.stern_exponential_sum(x)
    assert abs(direct - res.complex_sum) < 1e-9
    assert abs(res.complex_sum - res.mertens_sum) < 1e-9


@pytest.mark.parametrize("x", [100, 500])
def test_exponential_sum_mertens(x):
    res = stern.stern_exponential_sum(x)
    assert abs(res.complex_sum - res.mertens_sum) < 1e-6 * res.terms
    assert res.terms == sum(1 for _ in stern.farey_fractions_below(x))


@pytest.mark.parametrize("x,expected", [(2, 0), (5, -2), (11, -2)])
def test_exponential_sum_small(x, expected):
    res = stern.stern_exponential_sum(x)
    assert res.mertens_sum == expected
    assert abs(res.complex_sum - expected) < 1e-12


def test_exponential_sum_domain():
    with pytest.raises(DomainError):
        stern.stern_exponential_sum(1)


@pytest.mark.parametrize("n,expected", [(1, 0.4664), (3, 0.43507)])
def test_coons_tyler_small_values(n, expected):
    assert abs(stern.coons_tyler_ratio(n) - expected) < 5e-5
