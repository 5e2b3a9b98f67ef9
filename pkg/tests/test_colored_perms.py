import math

import pytest

import wreathpoly.colored_perms as cp
from wreathpoly.polyring import DomainError, IntPolynomial, gamma_expansion


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_enumerate_sizes():
    assert len(list(cp.enumerate_group(1, 2))) == 2
    assert len(list(cp.enumerate_group(2, 2))) == 8
    assert len(list(cp.enumerate_group(3, 3))) == 162
    with pytest.raises(DomainError):
        list(cp.enumerate_group(2, 0))


def test_des_set():
    w = cp.ColoredPermutation((1, 2), (1, 0), 2)
    assert cp.des_set(w) == {1}
    w = cp.ColoredPermutation((2, 1), (0, 0), 2)
    assert cp.des_set(w) == {1}
    w = cp.ColoredPermutation((1, 2, 3), (0, 0, 0), 2)
    assert cp.des_set(w) == set()
    assert cp.asc_set(w) == {1, 2, 3}


def test_statistics():
    w = cp.ColoredPermutation((2, 1), (0, 0), 2)
    assert (cp.exc(w), cp.exc_A(w), cp.fexc(w)) == (1, 1, 2)
    w = cp.ColoredPermutation((1, 2), (1, 1), 2)
    assert (cp.exc(w), cp.exc_A(w), cp.fexc(w)) == (2, 0, 2)
    w = cp.ColoredPermutation((1, 2), (0, 0), 2)
    assert (cp.exc(w), cp.exc_A(w), cp.fexc(w)) == (0, 0, 0)
    assert not cp.is_derangement(w)
    assert cp.is_derangement(cp.ColoredPermutation((1, 2), (1, 1), 2))


def test_eulerian_poly():
    assert cp.eulerian_poly(2, 1, "des") == P(1, 1)
    assert cp.eulerian_poly(2, 2, "des") == P(1, 6, 1)
    assert cp.eulerian_poly(0, 3, "exc") == P(1)
    for n in range(5):
        for r in (1, 2, 3):
            assert cp.eulerian_poly(n, r, "des") == cp.eulerian_poly(n, r, "exc")


def test_derangement_poly():
    assert cp.derangement_poly(0, 2) == P(1)
    assert cp.derangement_poly(1, 2) == P(0, 1)
    assert cp.derangement_poly(2, 2) == P(0, 4, 1)
    assert cp.derangement_poly(2, 1, "inclusion_exclusion") == P(0, 1)
    for n in range(5):
        for r in (1, 2, 3):
            assert cp.derangement_poly(n, r, "direct") == cp.derangement_poly(
                n, r, "inclusion_exclusion"
            )


def test_xi_counts():
    plus, minus = cp.xi_counts(2, 2)
    assert plus[1] == 3
    assert minus[1] == 1
    # r = 1 boundary: ascent sets always contain n, so the minus counts
    # vanish and the split degenerates to the classical one
    plus, minus = cp.xi_counts(1, 1)
    assert all(x == 0 for x in plus)
    assert all(x == 0 for x in minus)


def test_d_plus_minus():
    assert cp.d_plus_minus(2, 2) == (P(0, 3), P(0, 1, 1))
    assert cp.d_plus_minus(1, 2) == (P(), P(0, 1))
    dp, dm = cp.d_plus_minus(3, 2)
    assert dp + dm == cp.derangement_poly(3, 2)


def test_a_plus_minus():
    assert cp.a_plus_minus(2, 2) == (P(1, 3), P(0, 3, 1))
    assert cp.a_plus_minus(1, 2) == (P(1), P(0, 1))
    assert cp.a_plus_minus(0, 3) == (P(1), P())
    for n in range(5):
        for r in (2, 3):
            ap, am = cp.a_plus_minus(n, r)
            assert ap + am == cp.eulerian_poly(n, r, "des")


def test_binomial_eulerian():
    assert cp.binomial_eulerian(3, 2) == P(1, 26, 44, 8)
    assert cp.binomial_eulerian(1, 1) == P(1, 1)
    assert cp.binomial_eulerian_pm(5, 2)[0] == P(1, 211, 1371, 1371, 211, 1)
    bp, bm = cp.binomial_eulerian_pm(4, 2)
    assert bp + bm == cp.binomial_eulerian(4, 2)


def test_eulerian_from_derangements():
    for n in range(5):
        for r in (1, 2, 3):
            total = IntPolynomial.zero()
            for k in range(n + 1):
                total = total + math.comb(n, k) * cp.derangement_poly(k, r)
            assert total == cp.eulerian_poly(n, r, "exc")


def test_gamma_tilde_against_displays():
    pf, mf, pd, md = cp.gamma_tilde(2, 2)
    assert pf == (1, 3)
    assert pf == pd and mf == md
    pf, mf, _, _ = cp.gamma_tilde(4, 2)
    assert mf == (0, 15, 98)
    pf, mf, _, _ = cp.gamma_tilde(5, 2)
    assert pf == (1, 206, 743)
    assert mf == (0, 31, 577, 361)


def test_gamma_tilde_two_ways():
    for n in range(1, 5):
        for r in (2, 3):
            pf, mf, pd, md = cp.gamma_tilde(n, r)
            assert pf == pd
            assert mf == md
            bp, bm = cp.binomial_eulerian_pm(n, r)
            assert tuple(gamma_expansion(bp, n).gammas) == pf
            assert tuple(gamma_expansion(bm, n + 1).gammas) == mf


def test_a_plus_alt():
    assert cp.a_plus_alt(2, 2, "positive_first_des") == P(1, 3)
    assert cp.a_plus_alt(2, 2, "carlitz") == P(1, 3)
    assert cp.a_plus_alt(1, 3, "flag_exc") == P(1)
    for n in range(1, 5):
        for r in (1, 2, 3):
            expect = cp.a_plus_minus(n, r)[0]
            for method in ("positive_first_des", "flag_exc", "carlitz"):
                assert cp.a_plus_alt(n, r, method) == expect


def test_des_B():
    assert cp.des_B_set(cp.SignedPermutation((2, -1))) == {1}
    assert cp.des_B_set(cp.SignedPermutation((-1, -2))) == set()
    assert cp.des_B_set(cp.SignedPermutation((1, 2))) == {2}


def test_gamma_B_matches_gamma_tilde():
    assert cp.gamma_B(2) == ((1, 3), (0, 3))
    assert cp.gamma_B(3)[1] == (0, 7, 11)
    for n in range(1, 6):
        gp, gm = cp.gamma_B(n)
        pf, mf, _, _ = cp.gamma_tilde(n, 2)
        assert gp == pf
        assert gm == mf


def test_signed_to_colored():
    w = cp.SignedPermutation((2, -1, 3))
    cw = cp.signed_to_colored(w)
    assert cw.sigma == (2, 1, 3)
    assert cw.eps == (0, 1, 0)
    assert cw.r == 2
