import itertools
import math

import pytest

import wreathpoly.colored_perms as cp
import wreathpoly.simplicial as sx
from wreathpoly.polyring import DomainError, IntPolynomial, is_palindromic


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_simplex():
    s = sx.simplex(3)
    assert s.complex.f_vector() == (1, 3, 3, 1)
    assert sx.h_polynomial(sx.simplex(2).complex) == P(1)
    assert len(sx.simplex(1).complex.vertices) == 1


def test_barycentric():
    b2 = sx.barycentric_subdivision(2).complex
    assert b2.f_vector() == (1, 3, 2)
    b3 = sx.barycentric_subdivision(3).complex
    assert b3.f_vector() == (1, 7, 12, 6)
    assert sx.h_polynomial(b3) == P(1, 4, 1)


def test_edgewise_subdivision_counts():
    path = sx.SimplicialComplex(
        [[("base", 1), ("base", 2)], [("base", 2), ("base", 3)]]
    )
    assert len(sx.edgewise_subdivision(path, 1).facets) == 2
    assert len(sx.edgewise_subdivision(path, 2).facets) == 4
    b3 = sx.barycentric_subdivision(3).complex
    assert len(sx.edgewise_subdivision(b3, 3).facets) == 54
    with pytest.raises(DomainError):
        sx.edgewise_subdivision(path, 0)


def test_gamma_complex_facets():
    for n in (1, 2, 3):
        for r in (1, 2, 3):
            sc = sx.gamma_complex(n, r).complex
            assert len(sc.facets) == math.factorial(n) * r ** (n - 1)


def test_restriction():
    tri = sx.barycentric_subdivision(3)
    sub = tri.restrict([1, 2]).complex
    assert sub.f_vector() == (1, 3, 2)
    g32 = sx.gamma_complex(3, 2)
    assert g32.restrict([1]).complex.f_vector() == (1, 1)
    assert g32.restrict([1, 3]).complex.f_vector() == sx.gamma_complex(2, 2).complex.f_vector()
    with pytest.raises(DomainError):
        g32.restrict([4])


def test_restriction_is_induced_subcomplex():
    # the structural rebuild equals the faces carried by the subface
    tri = sx.gamma_complex(3, 2)
    sc = tri.complex
    fs = {1, 2}
    allowed = {
        v for v in sc.vertices if all(set(lbl[1]) <= fs for lbl, _m in v[1])
    }
    cands = {f & frozenset(allowed) for f in sc.facets}
    induced = sx.SimplicialComplex(f for f in cands if not any(f < g for g in cands))
    assert induced == tri.restrict(fs).complex


def test_delta_of():
    cross = sx.delta_of(sx.simplex(3))
    assert len(cross.facets) == 8
    two_points = sx.delta_of(sx.barycentric_subdivision(1))
    assert sx.h_polynomial(two_points) == P(1, 1)
    d2 = sx.delta_of(sx.barycentric_subdivision(2))
    assert sx.h_polynomial(d2) == P(1, 3, 1)


def test_h_polynomial():
    path5 = sx.SimplicialComplex(
        [[("base", i), ("base", i + 1)] for i in range(1, 5)]
    )
    assert path5.f_vector() == (1, 5, 4)
    assert sx.h_polynomial(path5) == P(1, 3)
    square = sx.SimplicialComplex(
        [
            [("base", 1), ("base", 2)],
            [("base", 2), ("base", 3)],
            [("base", 3), ("base", 4)],
            [("base", 4), ("base", 1)],
        ]
    )
    assert sx.h_polynomial(square) == P(1, 2, 1)
    nonpure = sx.SimplicialComplex([[("base", 1), ("base", 2)], [("base", 3)]])
    with pytest.raises(DomainError):
        sx.h_polynomial(nonpure)


def test_local_h():
    assert sx.local_h(sx.barycentric_subdivision(2)) == P(0, 1)
    assert sx.local_h(sx.gamma_complex(2, 2)) == P(0, 3)
    assert sx.local_h(sx.simplex(3)).is_zero()


def test_h_and_local_h_against_enumeration():
    for n in range(1, 4):
        for r in (1, 2, 3):
            tri = sx.gamma_complex(n, r)
            assert sx.h_polynomial(tri.complex) == cp.a_plus_minus(n, r)[0]
            assert sx.local_h(tri) == cp.d_plus_minus(n, r)[0]
            lh = sx.local_h(tri)
            assert is_palindromic(lh, n)
            assert all(c >= 0 for c in lh.coeffs)


def test_h_delta():
    for n in range(1, 4):
        for r in (1, 2):
            tri = sx.gamma_complex(n, r)
            delta = sx.delta_of(tri)
            expect = cp.binomial_eulerian_pm(n, r)[0]
            assert sx.h_polynomial(delta) == expect
            mix = IntPolynomial.zero()
            for k in range(n + 1):
                for face in itertools.combinations(range(1, n + 1), k):
                    mix = mix + sx.h_polynomial(tri.restrict(face).complex, k).shift(n - k)
            assert mix == expect


def test_is_flag():
    square = sx.SimplicialComplex(
        [
            [("base", 1), ("base", 2)],
            [("base", 2), ("base", 3)],
            [("base", 3), ("base", 4)],
            [("base", 4), ("base", 1)],
        ]
    )
    assert sx.is_flag(square)
    hollow = sx.SimplicialComplex(
        [
            [("base", 1), ("base", 2)],
            [("base", 2), ("base", 3)],
            [("base", 1), ("base", 3)],
        ]
    )
    assert not sx.is_flag(hollow)
    assert sx.is_flag(sx.gamma_complex(3, 2).complex)


def test_sphere_checks():
    for n in (2, 3):
        for r in (1, 2):
            delta = sx.delta_of(sx.gamma_complex(n, r))
            assert sx.ridges_in_two_facets(delta)
            assert sx.euler_characteristic(delta) == 1 + (-1) ** (n - 1)
            assert sx.is_flag(delta)


def test_act_and_fixed():
    b2 = sx.barycentric_subdivision(2).complex
    action = sx.act((2, 1), b2)
    fixed = sx.fixed_subcomplex(b2, action)
    assert fixed.f_vector() == (1, 1)
    assert sx.h_polynomial(fixed) == P(1)
    ident = sx.act((1, 2), b2)
    assert sx.fixed_subcomplex(b2, ident) == b2


def test_fixed_gamma_complex():
    for n in (2, 3):
        for r in (1, 2, 3):
            sc = sx.gamma_complex(n, r).complex
            w = (2, 1) + tuple(range(3, n + 1))
            fixed = sx.fixed_subcomplex(sc, sx.act(w, sc))
            assert fixed.f_vector() == sx.gamma_complex(n - 1, r).complex.f_vector()


def test_delta_action_not_proper():
    tri = sx.gamma_complex(2, 2)
    delta = sx.delta_of(tri)
    action = sx.act((2, 1), delta)
    with pytest.raises(DomainError):
        sx.fixed_subcomplex(delta, action)


def test_serialization():
    sc = sx.simplex(2).complex
    js = sc.to_json()
    assert js["facets"] == [["v1", "v2"]]
    assert sc.to_text() == "v1 v2"
