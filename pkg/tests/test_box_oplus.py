import math
from fractions import Fraction

import pytest

from diatomic import box, oplus
from diatomic.exact import DomainError, DyadicRational

B_LISTING = [0, 0, 1, 0, 2, 1, 2, 0, 3, 2, 6, 1, 6, 2, 3, 0, 4, 3, 10, 2, 15, 6, 12, 1, 12, 6, 15]


def minkowski_brute(r: Fraction) -> Fraction:
    # ?(x) by walking the Stern-Brocot tree: independent of the series form
    lo, hi = (0, 1), (1, 1)
    val, step = Fraction(0), Fraction(1, 2)
    if r == 1:
        return Fraction(1)
    while True:
        mid = (lo[0] + hi[0], lo[1] + hi[1])
        m = Fraction(*mid)
        if m == r:
            return val + step
        if r < m:
            hi = mid
        else:
            lo = mid
            val += step
        step /= 2


# -- box functions -----------------------------------------------------------

def test_conway_f_powers_of_two():
    for j in range(19):
        assert box.conway_f(Fraction(1, 2**j)) == Fraction(1, j + 1)


def test_conway_f_symmetry():
    assert box.conway_f(Fraction(1, 2)) == Fraction(1, 2)
    for k in range(1, 2**10):
        d = Fraction(k, 2**10)
        assert box.conway_f(1 - d) + box.conway_f(d) == 1


def test_question_mark_against_tree_walk():
    for q in range(1, 40):
        for p in range(1, q + 1):
            if math.gcd(p, q) == 1:
                r = Fraction(p, q)
                assert box.question_mark(r).to_fraction() == minkowski_brute(r)


def test_question_mark_inverts_f():
    for k in range(2**10 + 1):
        d = Fraction(k, 2**10)
        assert box.question_mark(box.conway_f(d)).to_fraction() == d


def test_question_mark_value_type():
    v = box.question_mark(Fraction(2, 5))
    assert isinstance(v, DyadicRational)
    assert v.to_fraction() == Fraction(3, 8)


def test_sample_singular_shapes():
    f = box.sample_singular("f", 8)
    assert len(f) == 257
    assert (Fraction(1, 4), Fraction(1, 3)) in f
    qm = box.sample_singular("qm", 4)
    assert {(y, x) for x, y in qm} == set(box.sample_singular("f", 4))
    with pytest.raises(DomainError):
        box.sample_singular("nope", 3)


# -- the (+) operation -------------------------------------------------------

def test_oplus_examples():
    assert oplus.oplus(1, 2) == 6
    assert oplus.ominus(1, 2) == 0
    assert oplus.oplus(0, 0) == 1
    with pytest.raises(DomainError):
        oplus.oplus(1, 1)


def test_oplus_general_n():
    assert oplus.oplus(1, 1, N=-3) == 3
    assert oplus.oplus_n(1, 1, -3) == 3
    assert abs(oplus.oplus_n(1.5, 2.0, 1) - (3.5 + math.sqrt(13))) < 1e-12
    z = oplus.oplus_n(0, 0, -4 + 0j)
    assert abs(z - 2j) < 1e-12
    with pytest.raises(DomainError):
        oplus.oplus_n(1, 1, -5)


def test_principal_sqrt_branch():
    # theta is taken in [0, 2 pi): sqrt(-1 - 0j) lands on the upper half circle
    r = oplus.principal_sqrt(complex(-1, -1e-300))
    assert r.imag > 0
    assert abs(oplus.principal_sqrt(4) - 2) < 1e-15


def test_b_prefix_and_closed_form():
    assert [oplus.b(n) for n in range(1, 28)] == B_LISTING
    t = oplus.b_table(2**12)
    c = oplus.b_closed_table(2**12)
    for k in range(1, 2**12):
        assert t[k] == c[k] == oplus.b_closed(k) >= 0


def test_b_pair_roundtrip():
    for n in range(1, 2**12):
        assert oplus.b_pair_index(*oplus.b_pair(n)) == n
    assert oplus.b_pair(10) == (2, 6)


def test_b_pair_rejects_invalid():
    with pytest.raises(DomainError):
        oplus.b_pair_index(1, 1)
    with pytest.raises(DomainError):
        oplus.b_pair_index(-1, 0)


def test_m_oplus_steps_down():
    assert oplus.m_oplus((2, 6)) == (2, 1)
    assert oplus.m_oplus((6, 1)) == (2, 1)
    assert oplus.m_oplus((0, 0)) is None


def test_valid_pairs_are_exactly_b_pairs():
    # (0, m) first appears at index 2^m, so keep both entries small
    pairs = {oplus.b_pair(n) for n in range(1, 2**14)}
    for a in range(14):
        for b_ in range(14):
            valid = math.isqrt(4 * a * b_ + 1) ** 2 == 4 * a * b_ + 1
            if valid and (a, b_) != (0, 0):
                assert (a, b_) in pairs


def test_g_examples():
    assert oplus.g(Fraction(3, 4)) == Fraction(1, 2)
    assert oplus.g(0) == 0
    assert oplus.g(1) == 1


def test_g_against_box_function():
    # on [1/2, 1] g is a reparametrised f; below, a product of two f values
    for k in range(2**7, 2**8 + 1):
        x = Fraction(k, 2**8)
        assert oplus.g(x) == box.conway_f(2 * x - 1)


def test_consecutive_b_triples():
    # x, y, x (+) y satisfy (x + y - z)^2 = 4xy + 1
    for n in range(1, 500):
        x, y = oplus.b(n), oplus.b(n + 1)
        z = oplus.oplus(x, y)
        assert (x + y - z) ** 2 == 4 * x * y + 1
        assert oplus.quadratic_form(x, y, z) == 1


def test_c_general_and_radicand_lemma():
    for k in range(1, 300):
        lhs, rhs = oplus.lemma_radicand(k)
        assert lhs == rhs
    tab = oplus.c_general_table(2, 3, 200)
    assert all(tab[k] == oplus.c_general(2, 3, k) for k in range(1, 200))
