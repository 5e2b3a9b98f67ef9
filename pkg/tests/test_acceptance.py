"""Acceptance suite.

Each test covers one acceptance criterion and prints a single
"ACCEPTANCE k: PASS" line when its assertions all hold.  Expected values
are exact; no floating point is used anywhere.
"""

import itertools
import math
import time

import wreathpoly.colored_perms as cp
import wreathpoly.simplicial as sx
import wreathpoly.symfunc as sf
from wreathpoly.polyring import (
    IntPolynomial,
    gamma_expansion,
    is_palindromic,
    is_real_rooted,
    palindromic_decomposition,
)


def P(*coeffs):
    return IntPolynomial(coeffs)


def report(number, label, started, limit):
    elapsed = time.monotonic() - started
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"
    print(f"ACCEPTANCE {number}: PASS - {label} ({elapsed:.2f}s)")


def test_criterion_1_table_regression():
    started = time.monotonic()
    expected_b = {
        1: P(1, 2),
        2: P(1, 8, 4),
        3: P(1, 26, 44, 8),
        4: P(1, 80, 328, 208, 16),
        5: P(1, 242, 2072, 3072, 912, 32),
    }
    expected_plus = {
        1: P(1, 1),
        2: P(1, 5, 1),
        3: P(1, 19, 19, 1),
        4: P(1, 65, 185, 65, 1),
        5: P(1, 211, 1371, 1371, 211, 1),
    }
    expected_minus = {
        1: P(0, 1),
        2: P(0, 3, 3),
        3: P(0, 7, 25, 7),
        4: P(0, 15, 143, 143, 15),
        5: P(0, 31, 701, 1701, 701, 31),
    }
    expected_gamma_plus = {
        1: (1,),
        2: (1, 3),
        3: (1, 16),
        4: (1, 61, 57),
        5: (1, 206, 743),
    }
    expected_gamma_minus = {
        1: (0, 1),
        2: (0, 3),
        3: (0, 7, 11),
        4: (0, 15, 98),
        5: (0, 31, 577, 361),
    }
    for n in range(1, 6):
        assert cp.binomial_eulerian(n, 2) == expected_b[n]
        plus, minus = cp.binomial_eulerian_pm(n, 2)
        assert plus == expected_plus[n]
        assert minus == expected_minus[n]
        assert tuple(gamma_expansion(plus, n).gammas) == expected_gamma_plus[n]
        assert tuple(gamma_expansion(minus, n + 1).gammas) == expected_gamma_minus[n]
    report(1, "table regression for signed binomial Eulerian data", started, 10)


def test_criterion_2_enumerative_identities():
    started = time.monotonic()
    for n in range(6):
        for r in (1, 2, 3):
            # descents and excedances are equidistributed
            assert cp.eulerian_poly(n, r, "des") == cp.eulerian_poly(n, r, "exc")
            # Eulerian polynomial as a binomial sum of derangement polynomials
            total = IntPolynomial.zero()
            for k in range(n + 1):
                total = total + math.comb(n, k) * cp.derangement_poly(k, r)
            assert total == cp.eulerian_poly(n, r, "exc")
        # one-color case degenerates to the classical statistics
        assert cp.eulerian_poly(n, 1, "des") == cp.eulerian_poly(n, 1, "exc")
        if n >= 1:
            # one color: the minus part of the derangement split vanishes
            assert all(x == 0 for x in cp.xi_counts(n, 1)[1])
            assert cp.d_plus_minus(n, 1)[1].is_zero()
            assert cp.d_plus_minus(n, 1)[0] == cp.derangement_poly(n, 1)
    for n in range(1, 6):
        for r in (1, 2, 3):
            pf, mf, pd, md = cp.gamma_tilde(n, r)
            assert pf == pd and mf == md
            bp, bm = cp.binomial_eulerian_pm(n, r)
            assert tuple(gamma_expansion(bp, n).gammas) == pf
            assert tuple(gamma_expansion(bm, n + 1).gammas) == mf
    report(2, "enumerative identities and gamma vectors two ways", started, 30)


def test_criterion_3_geometry_bridges():
    started = time.monotonic()
    for n in range(1, 5):
        for r in (1, 2, 3):
            tri = sx.gamma_complex(n, r)
            a_plus = cp.a_plus_minus(n, r)[0]
            assert sx.h_polynomial(tri.complex) == a_plus
            assert cp.a_plus_alt(n, r, "carlitz") == a_plus
            assert cp.a_plus_alt(n, r, "positive_first_des") == a_plus
            assert sx.local_h(tri) == cp.d_plus_minus(n, r)[0]
            delta = sx.delta_of(tri)
            expect = cp.binomial_eulerian_pm(n, r)[0]
            assert sx.h_polynomial(delta) == expect
            mix = IntPolynomial.zero()
            for k in range(n + 1):
                for face in itertools.combinations(range(1, n + 1), k):
                    sub = tri.restrict(face).complex
                    mix = mix + sx.h_polynomial(sub, k).shift(n - k)
            assert mix == expect
    report(3, "h and local h polynomials match enumeration", started, 60)


def test_criterion_4_sphere_structure():
    started = time.monotonic()
    for n in range(1, 5):
        for r in (1, 2, 3):
            delta = sx.delta_of(sx.gamma_complex(n, r))
            assert sx.is_flag(delta)
            assert sx.ridges_in_two_facets(delta)
    report(4, "flag pseudomanifold structure of the doubled complex", started, 120)


def test_criterion_5_equivariant_series():
    started = time.monotonic()
    N = 5
    for r in (1, 2, 3):
        psi = sf.named_series("psi", r, N)
        plus = sf.named_series("psi_plus", r, N)
        minus = sf.named_series("psi_minus", r, N)
        assert plus + minus == psi
        for n in range(1, N + 1):
            assert plus[n].is_palindromic(n)
            assert minus[n].is_palindromic(n + 1)
            assert sf.is_schur_gamma_positive(plus[n], n)
            assert sf.is_schur_gamma_positive(minus[n], n + 1)
            assert psi[n].dimension_poly() == cp.derangement_poly(n, r)
            assert plus[n].dimension_poly() == cp.d_plus_minus(n, r)[0]
            assert minus[n].dimension_poly() == cp.d_plus_minus(n, r)[1]
        tnr = sf.named_series("tphi_nr", r, N)
        tp = sf.named_series("tphi_plus", r, N)
        tm = sf.named_series("tphi_minus", r, N)
        assert tp + tm == tnr
        for n in range(1, N + 1):
            assert tnr[n].dimension_poly() == cp.binomial_eulerian(n, r)
            assert tp[n].dimension_poly() == cp.binomial_eulerian_pm(n, r)[0]
            assert tm[n].dimension_poly() == cp.binomial_eulerian_pm(n, r)[1]
            assert tp[n].is_palindromic(n)
            assert tm[n].is_palindromic(n + 1)
    for name, degree_shift in (("phi", -1), ("tphi", 0)):
        ser = sf.named_series(name, 1, N)
        for n in range(1, N + 1):
            assert ser[n].is_palindromic(n + degree_shift)
            assert sf.is_schur_gamma_positive(ser[n], n + degree_shift)
    for name in ("tphi_plus", "tphi_minus", "phi_nr_plus", "phi_nr_minus"):
        ser = sf.named_series(name, 2, N)
        shift = 1 if name.endswith("minus") else 0
        for n in range(1, N + 1):
            assert sf.is_schur_gamma_positive(ser[n], n + shift)
    report(5, "equivariant series palindromicity and positivity", started, 120)


def test_criterion_6_fixed_subcomplex_oracle():
    started = time.monotonic()
    h2 = sf.gen("h", 2)
    assert sf.stembridge_h(2, 1) == sf.TPoly(2, (h2, h2))
    for n in range(1, 5):
        for r in (1, 2, 3):
            assert sf.stembridge_h(n, r) == sf.named_series("c_gamma", r, n)[n]
    report(6, "fixed subcomplex h series matches the closed form", started, 60)


def test_criterion_7_rational_function_oracle():
    started = time.monotonic()
    for n in range(1, 5):
        for r in (1, 2, 3):
            assert sf.stapledon_phi(n, r, "per_class") == sf.stapledon_phi(
                n, r, "closed_form"
            )
    for n in range(1, 4):
        for r in (1, 2, 3):
            for k in range(4):
                for lam in sf.partitions(n):
                    w = sf.cycle_type_permutation(lam)
                    assert (
                        sf.lattice_fixed_count(n, r, k, w)
                        == (r * k + 1) ** sf.cycle_count(w)
                    )
    report(7, "per class numerators and lattice point counts", started, 30)


def test_criterion_8_signed_descent_model():
    started = time.monotonic()
    for n in range(1, 7):
        gp, gm = cp.gamma_B(n)
        pf, mf, _, _ = cp.gamma_tilde(n, 2)
        assert gp == pf
        assert gm == mf
    report(8, "signed descent gamma vectors match the two color case", started, 30)


def test_criterion_9_real_rootedness():
    started = time.monotonic()
    for n in range(1, 7):
        for r in (1, 2, 3):
            assert is_real_rooted(cp.eulerian_poly(n, r, "des"))
            plus, minus = cp.binomial_eulerian_pm(n, r)
            assert is_real_rooted(plus)
            if not minus.is_zero():
                assert minus.coeffs[0] == 0
                assert is_real_rooted(IntPolynomial(minus.coeffs[1:]))
    report(9, "real rootedness of Eulerian and split polynomials", started, 60)
