"""Cross-verification suites.

Every identity the package claims is checked here by computing both sides
independently: enumerative (permutation statistics and polynomial
transforms), geometric (triangulations against enumeration) and equivariant
(symmetric function series against everything else).  Each check records its
parameters and a witness on failure; a report passes iff all checks do.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import colored_perms as cp
from . import simplicial as sx
from . import symfunc as sf
from .polyring import (
    DomainError,
    IntPolynomial,
    ONE_PLUS_T,
    e_r_operator,
    gamma_expansion,
    geometric_expand,
    is_alternatingly_increasing,
    is_gamma_positive,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    palindromic_decomposition,
)

SUITES = ("enumerative", "geometric", "equivariant", "all")


@dataclass
class Check:
    check_id: str
    params: dict
    passed: bool
    witness: str | None = None

    def to_json(self) -> dict:
        out = {
            "id": self.check_id,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "passed": self.passed,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check_id: str, params: dict, ok: bool, witness: str | None = None):
        self.checks.append(Check(check_id, params, ok, None if ok else witness))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: (c.check_id, sorted(c.params.items())))],
            "notes": self.notes,
        }


def _eq(report, check_id, params, a, b):
    report.add(check_id, params, a == b, f"{a!r} != {b!r}")


# -- enumerative suite ------------------------------------------------------


def enumerative_suite(max_n: int = 5, max_r: int = 3) -> VerificationReport:
    rep = VerificationReport("enumerative")
    for n in range(0, max_n + 1):
        for r in range(1, max_r + 1):
            prm = {"n": n, "r": r}
            _eq(
                rep,
                "des-exc-equidistribution",
                prm,
                cp.eulerian_poly(n, r, "des"),
                cp.eulerian_poly(n, r, "exc"),
            )
            _eq(
                rep,
                "derangement-two-methods",
                prm,
                cp.derangement_poly(n, r, "direct"),
                cp.derangement_poly(n, r, "inclusion_exclusion"),
            )
            # Eulerian as binomial sum of derangement polynomials
            total = IntPolynomial.zero()
            for k in range(n + 1):
                total = total + math.comb(n, k) * cp.derangement_poly(k, r)
            _eq(rep, "eulerian-from-derangements", prm, total, cp.eulerian_poly(n, r, "exc"))
            if n >= 1:
                dp, dm = cp.d_plus_minus(n, r)
                _eq(rep, "derangement-split-sum", prm, dp + dm, cp.derangement_poly(n, r))
                ap, am = cp.a_plus_minus(n, r)
                _eq(rep, "eulerian-split-sum", prm, ap + am, cp.eulerian_poly(n, r, "des"))
                bp, bm = cp.binomial_eulerian_pm(n, r)
                _eq(rep, "binomial-split-sum", prm, bp + bm, cp.binomial_eulerian(n, r))
                rep.add(
                    "binomial-plus-palindromic",
                    prm,
                    is_palindromic(bp, n) and is_gamma_positive(bp, n),
                    f"plus part {bp}",
                )
                rep.add(
                    "binomial-minus-palindromic",
                    prm,
                    is_palindromic(bm, n + 1) and bm[0] == 0 and is_gamma_positive(bm, n + 1),
                    f"minus part {bm}",
                )
                rep.add(
                    "binomial-alternating-unimodal",
                    prm,
                    is_alternatingly_increasing(cp.binomial_eulerian(n, r), n)
                    and is_unimodal(cp.binomial_eulerian(n, r)),
                    str(cp.binomial_eulerian(n, r)),
                )
                for method in ("positive_first_des", "flag_exc", "carlitz"):
                    _eq(
                        rep,
                        f"a-plus-{method}",
                        prm,
                        cp.a_plus_alt(n, r, method),
                        cp.a_plus_minus(n, r)[0],
                    )
                # h*-style expansion of A+ against the Ehrhart-type counts
                got = geometric_expand(cp.a_plus_minus(n, r)[0], n, 4)
                want = [(r * k + 1) ** n - (r * k) ** n for k in range(5)]
                _eq(rep, "a-plus-ehrhart", prm, got, want)
    # r = 1 degeneration of the binomial transform
    for n in range(0, max_n + 1):
        direct = IntPolynomial.one()
        for m in range(1, n + 1):
            direct = direct + (math.comb(n, m) * cp.eulerian_poly(m, 1, "des")).shift(1)
        _eq(rep, "binomial-r1-degeneration", {"n": n}, direct, cp.binomial_eulerian(n, 1))
    # Worpitzky
    for n in range(0, min(max_n, 6) + 1):
        got = geometric_expand(cp.eulerian_poly(n, 1, "des"), n + 1, 4)
        _eq(rep, "worpitzky", {"n": n}, got, [(k + 1) ** n for k in range(5)])
    # gamma coefficients of the binomial split: formula vs direct count
    for n in range(1, min(max_n, 5) + 1):
        for r in (2, 3):
            if r > max_r:
                continue
            pf, mf, pd, md = cp.gamma_tilde(n, r)
            _eq(rep, "gamma-tilde-two-ways-plus", {"n": n, "r": r}, pf, pd)
            _eq(rep, "gamma-tilde-two-ways-minus", {"n": n, "r": r}, mf, md)
            bp, bm = cp.binomial_eulerian_pm(n, r)
            _eq(
                rep,
                "gamma-tilde-vs-expansion-plus",
                {"n": n, "r": r},
                tuple(gamma_expansion(bp, n).gammas),
                pf,
            )
            _eq(
                rep,
                "gamma-tilde-vs-expansion-minus",
                {"n": n, "r": r},
                tuple(gamma_expansion(bm, n + 1).gammas),
                mf,
            )
    # signed descent counting
    for n in range(1, max_n + 1):
        gp, gm = cp.gamma_B(n)
        pf, mf, _, _ = cp.gamma_tilde(n, 2)
        _eq(rep, "signed-desB-plus", {"n": n}, gp, pf)
        _eq(rep, "signed-desB-minus", {"n": n}, gm, mf)
    # real-rootedness
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            prm = {"n": n, "r": r}
            rep.add(
                "real-rooted-eulerian", prm, is_real_rooted(cp.eulerian_poly(n, r, "des")), ""
            )
            bp, bm = cp.binomial_eulerian_pm(n, r)
            rep.add("real-rooted-binomial-plus", prm, is_real_rooted(bp), str(bp))
            if not bm.is_zero():
                shifted = IntPolynomial(bm.coeffs[1:])
                rep.add("real-rooted-binomial-minus", prm, is_real_rooted(shifted), str(bm))
    # polynomial-layer sanity on pseudo-random inputs
    rng = random.Random(20240824)
    for trial in range(10):
        n = rng.randrange(1, 5)
        gammas = tuple(rng.randrange(0, 5) for _ in range(n // 2 + 1))
        from .polyring import GammaExpansion

        ge = GammaExpansion(n, gammas)
        back = gamma_expansion(ge.reconstruct(), n)
        _eq(rep, "gamma-roundtrip", {"trial": trial}, back.gammas, gammas)
        rep.add(
            "gamma-positive-implies-unimodal",
            {"trial": trial},
            is_unimodal(ge.reconstruct()),
            str(ge.reconstruct()),
        )
        p = IntPolynomial(rng.randrange(-4, 5) for _ in range(5))
        q = IntPolynomial(rng.randrange(-4, 5) for _ in range(5))
        r_ = rng.randrange(1, 4)
        _eq(
            rep,
            "er-linearity",
            {"trial": trial},
            e_r_operator(p + q, r_),
            e_r_operator(p, r_) + e_r_operator(q, r_),
        )
    return rep


# -- geometric suite --------------------------------------------------------


def geometric_suite(max_n: int = 4, max_r: int = 3) -> VerificationReport:
    rep = VerificationReport("geometric")
    for n in range(1, max_n + 1):
        bary = sx.barycentric_subdivision(n)
        _eq(
            rep,
            "barycentric-h-eulerian",
            {"n": n},
            sx.h_polynomial(bary.complex),
            cp.eulerian_poly(n, 1, "des"),
        )
        _eq(
            rep,
            "barycentric-local-h-derangement",
            {"n": n},
            sx.local_h(bary),
            cp.derangement_poly(n, 1),
        )
        for r in range(1, max_r + 1):
            prm = {"n": n, "r": r}
            tri = sx.gamma_complex(n, r)
            sc = tri.complex
            # facet count: edgewise subdivision scales by r^(dim)
            _eq(
                rep,
                "esd-facet-count",
                prm,
                len(sc.facets),
                math.factorial(n) * r ** (n - 1),
            )
            h = sx.h_polynomial(sc)
            ap = cp.a_plus_minus(n, r)[0]
            _eq(rep, "h-gamma-complex", prm, h, ap)
            lh = sx.local_h(tri)
            _eq(rep, "local-h-gamma-complex", prm, lh, cp.d_plus_minus(n, r)[0])
            rep.add(
                "local-h-palindromic-nonnegative",
                prm,
                is_palindromic(lh, n) and all(c >= 0 for c in lh.coeffs),
                str(lh),
            )
            # inclusion-exclusion back from local h to h
            total = IntPolynomial.zero()
            for k in range(n + 1):
                for face in itertools.combinations(range(1, n + 1), k):
                    total = total + sx.local_h(tri.restrict(face))
            _eq(rep, "h-from-local-h", prm, total, h)
            # restriction: faces of the big complex carried by the subface
            # must coincide with the construction rebuilt on the subface
            for face in ([1], list(range(1, n))):
                if not face:
                    continue
                fs = set(face)
                allowed = {
                    v
                    for v in sc.vertices
                    if all(set(lbl[1]) <= fs for lbl, _m in v[1])
                }
                cands = {f & frozenset(allowed) for f in sc.facets}
                induced = sx.SimplicialComplex(
                    f for f in cands if not any(f < g for g in cands)
                )
                rebuilt = tri.restrict(face).complex
                _eq(
                    rep,
                    "restriction-structural",
                    {**prm, "face": tuple(face)},
                    induced,
                    rebuilt,
                )
            rep.add("gamma-complex-flag", prm, sx.is_flag(sc), "")
            # the sphere construction
            delta = sx.delta_of(tri)
            hd = sx.h_polynomial(delta)
            _eq(rep, "h-delta-binomial-plus", prm, hd, cp.binomial_eulerian_pm(n, r)[0])
            mix = IntPolynomial.zero()
            for k in range(n + 1):
                for face in itertools.combinations(range(1, n + 1), k):
                    hr = sx.h_polynomial(tri.restrict(face).complex, k)
                    mix = mix + hr.shift(n - k)
            _eq(rep, "h-delta-face-sum", prm, mix, hd)
            rep.add("delta-flag", prm, sx.is_flag(delta), "")
            rep.add("delta-pseudomanifold", prm, sx.ridges_in_two_facets(delta), "")
            _eq(
                rep,
                "delta-euler-characteristic",
                prm,
                sx.euler_characteristic(delta),
                1 + (-1) ** (n - 1),
            )
            # group action checks
            if n >= 2:
                w = (2, 1) + tuple(range(3, n + 1))
                action = sx.act(w, sc)
                fixed = sx.fixed_subcomplex(sc, action)
                ref = sx.gamma_complex(n - 1, r).complex
                _eq(
                    rep,
                    "fixed-subcomplex-face-counts",
                    prm,
                    fixed.f_vector(),
                    ref.f_vector(),
                )
                try:
                    da = sx.act(w, delta)
                    sx.fixed_subcomplex(delta, da)
                    rep.add(
                        "delta-action-not-proper",
                        prm,
                        False,
                        "expected DomainError for the antipodal facet",
                    )
                except DomainError:
                    rep.add("delta-action-not-proper", prm, True)
            ident = sx.act(tuple(range(1, n + 1)), sc)
            _eq(rep, "identity-action-fixes-all", prm, sx.fixed_subcomplex(sc, ident), sc)
    # small sanity: esd_1 is the identity on facet counts, esd of a path
    path = sx.SimplicialComplex(
        [[("base", 1), ("base", 2)], [("base", 2), ("base", 3)]]
    )
    _eq(rep, "esd-path", {"r": 2}, len(sx.edgewise_subdivision(path, 2).facets), 4)
    _eq(rep, "esd-identity", {"r": 1}, len(sx.edgewise_subdivision(path, 1).facets), 2)
    return rep


# -- equivariant suite ------------------------------------------------------


def _shadow(series_obj, n: int) -> IntPolynomial:
    return series_obj[n].dimension_poly()


def equivariant_suite(max_n: int = 4, max_r: int = 3, N: int = 5) -> VerificationReport:
    rep = VerificationReport("equivariant")
    N = max(N, max_n)
    cache = {}

    def ser(name, r):
        key = (name, r)
        if key not in cache:
            cache[key] = sf.named_series(name, r, N)
        return cache[key]

    # basis-level sanity
    _eq(rep, "omega-involution", {}, sf.gen("h", 3).omega().omega(), sf.gen("h", 3))
    _eq(rep, "omega-h-is-e", {"n": 2}, sf.gen("h", 2).omega(), sf.gen("e", 2))
    _eq(
        rep,
        "schur-p11",
        {},
        sf.schur_coefficients(sf.SymF.p((1, 1))),
        {(2,): Fraction(1), (1, 1): Fraction(1)},
    )
    _eq(rep, "schur-h2", {}, sf.schur_coefficients(sf.gen("h", 2)), {(2,): Fraction(1)})
    _eq(rep, "exstar-h", {"n": 4}, sf.ex_star(sf.gen("h", 4)), Fraction(1, 24))
    _eq(rep, "exstar-e", {"n": 4}, sf.ex_star(sf.gen("e", 4)), Fraction(1, 24))
    _eq(
        rep,
        "exstar-schur",
        {"lam": (2, 1)},
        sf.ex_star(sf.schur_to_symf((2, 1))),
        Fraction(2, 6),
    )
    # the power sum identity behind the fixed-subcomplex computation
    for k in range(0, 4):
        rep.add("power-sum-identity", {"k": k, "N": min(N, 4)}, sf.power_sum_identity_check(k, min(N, 4)), "")

    shadows = {
        "phi": lambda n, r: cp.eulerian_poly(n, 1, "des"),
        "tphi": lambda n, r: cp.binomial_eulerian(n, 1),
        "psi": lambda n, r: cp.derangement_poly(n, r),
        "psi_plus": lambda n, r: cp.d_plus_minus(n, r)[0] if n else IntPolynomial.one(),
        "psi_minus": lambda n, r: cp.d_plus_minus(n, r)[1] if n else IntPolynomial.zero(),
        "c_gamma": lambda n, r: cp.a_plus_minus(n, r)[0],
        "tphi_nr": lambda n, r: cp.binomial_eulerian(n, r),
        "tphi_plus": lambda n, r: cp.binomial_eulerian_pm(n, r)[0],
        "tphi_minus": lambda n, r: cp.binomial_eulerian_pm(n, r)[1],
        "phi_nr": lambda n, r: cp.eulerian_poly(n, r, "des"),
        # the plus/minus colored Eulerian series realize the canonical
        # palindromic split of A_{n,r} about n/2 and (n+1)/2
        "phi_nr_plus": lambda n, r: palindromic_decomposition(
            cp.eulerian_poly(n, r, "des"), n
        ).plus,
        "phi_nr_minus": lambda n, r: palindromic_decomposition(
            cp.eulerian_poly(n, r, "des"), n
        ).minus,
    }
    for name, oracle in shadows.items():
        for r in range(1, max_r + 1):
            if name in ("phi_nr_plus", "phi_nr_minus") and r < 2:
                continue
            if name in ("phi", "tphi") and r > 1:
                continue
            s = ser(name, r)
            for n in range(0, min(N, 5) + 1):
                _eq(
                    rep,
                    f"shadow-{name}",
                    {"n": n, "r": r},
                    _shadow(s, n),
                    oracle(n, r),
                )
    for r in range(1, max_r + 1):
        prm = {"r": r}
        _eq(rep, "psi-additivity", prm, ser("psi_plus", r) + ser("psi_minus", r), ser("psi", r))
        _eq(
            rep,
            "tphi-additivity",
            prm,
            ser("tphi_plus", r) + ser("tphi_minus", r),
            ser("tphi_nr", r),
        )
        if r >= 2:
            _eq(
                rep,
                "phi-additivity",
                prm,
                ser("phi_nr_plus", r) + ser("phi_nr_minus", r),
                ser("phi_nr", r),
            )
        # structural factorizations
        _eq(
            rep,
            "c-gamma-is-h-times-psi-plus",
            prm,
            sf.series("h", N) * ser("psi_plus", r),
            ser("c_gamma", r),
        )
        _eq(
            rep,
            "tphi-plus-is-ht-times-c-gamma",
            prm,
            sf.series("h", N, 1) * ser("c_gamma", r),
            ser("tphi_plus", r),
        )
        # palindromicity and splits of the z^n coefficients
        for n in range(1, min(N, 5) + 1):
            prmn = {"n": n, "r": r}
            for plus, minus, whole in (
                ("psi_plus", "psi_minus", "psi"),
                ("tphi_plus", "tphi_minus", "tphi_nr"),
            ) + ((("phi_nr_plus", "phi_nr_minus", "phi_nr"),) if r >= 2 else ()):
                pc = ser(plus, r)[n]
                mc = ser(minus, r)[n]
                rep.add(
                    f"palindromic-{plus}",
                    prmn,
                    pc.is_palindromic(n),
                    repr(pc),
                )
                rep.add(
                    f"palindromic-{minus}",
                    prmn,
                    mc.is_palindromic(n + 1) and mc[0].is_zero(),
                    repr(mc),
                )
                sp, sm = sf.sym_palindromic_split(ser(whole, r)[n], n)
                _eq(rep, f"split-matches-{whole}", prmn, (sp, sm), (pc, mc))
            # Schur gamma positivity
            rep.add(
                "schur-gamma-psi-plus",
                prmn,
                sf.is_schur_gamma_positive(ser("psi_plus", r)[n], n),
                "",
            )
            rep.add(
                "schur-gamma-psi-minus",
                prmn,
                sf.is_schur_gamma_positive(ser("psi_minus", r)[n], n + 1),
                "",
            )
            if r == 1:
                rep.add(
                    "schur-gamma-phi",
                    prmn,
                    sf.is_schur_gamma_positive(ser("phi", 1)[n], n - 1),
                    "",
                )
                rep.add(
                    "schur-gamma-tphi",
                    prmn,
                    sf.is_schur_gamma_positive(ser("tphi", 1)[n], n),
                    "",
                )
            if r == 2:
                rep.add(
                    "schur-gamma-tphi-plus",
                    prmn,
                    sf.is_schur_gamma_positive(ser("tphi_plus", 2)[n], n),
                    "",
                )
                rep.add(
                    "schur-gamma-tphi-minus",
                    prmn,
                    sf.is_schur_gamma_positive(ser("tphi_minus", 2)[n], n + 1),
                    "",
                )
                rep.add(
                    "schur-gamma-phi-nr-2",
                    prmn,
                    sf.is_schur_gamma_positive(ser("phi_nr", 2)[n], n),
                    "",
                )
    # classical product relations
    _eq(
        rep,
        "tphi-is-phi-times-ht",
        {},
        ser("phi", 1) * sf.series("h", N, 1),
        ser("tphi", 1),
    )
    _eq(rep, "rees2-equals-tphi-nr-2", {}, ser("rees2", 2), ser("tphi_nr", 2))
    _eq(
        rep,
        "phi-nr-2-product",
        {},
        ser("tphi", 1) * ser("psi_plus", 2),
        ser("phi_nr", 2),
    )
    # fixed-subcomplex assembly against the closed form
    for n in range(1, min(max_n, 4) + 1):
        for r in range(1, max_r + 1):
            prm = {"n": n, "r": r}
            st = sf.stembridge_h(n, r)
            _eq(rep, "stembridge-vs-series", prm, st, ser("c_gamma", r)[n])
            _eq(
                rep,
                "stembridge-dimension-shadow",
                prm,
                st.dimension_poly(),
                sx.h_polynomial(sx.gamma_complex(n, r).complex),
            )
    # equivariant lattice point counting
    for n in range(1, min(max_n, 4) + 1):
        for r in range(1, max_r + 1):
            prm = {"n": n, "r": r}
            _eq(
                rep,
                "stapledon-two-methods",
                prm,
                sf.stapledon_phi(n, r, "per_class"),
                sf.stapledon_phi(n, r, "closed_form"),
            )
    for n in range(1, 4):
        for r in (1, 2):
            for k in range(0, 4):
                for lam in sf.partitions(n):
                    w = sf.cycle_type_permutation(lam)
                    _eq(
                        rep,
                        "lattice-fixed-count",
                        {"n": n, "r": r, "k": k, "lam": lam},
                        sf.lattice_fixed_count(n, r, k, w),
                        (r * k + 1) ** sf.cycle_count(w),
                    )
    # informational: gamma positivity of the plus/minus colored Eulerian
    # parts for r = 3 is an open question; report, never assert
    for n in range(1, min(N, 5) + 1):
        for name, center in (("phi_nr_plus", n), ("phi_nr_minus", n + 1)):
            poly = ser(name, 3)[n].dimension_poly()
            try:
                ok = is_gamma_positive(poly, center)
            except DomainError:
                ok = False
            rep.notes.append(
                f"open-question gamma-positivity {name} n={n} r=3: "
                f"{'holds' if ok else 'FAILS'} for the dimension polynomial"
            )
    return rep


def run_suite(
    suite: str, max_n: int = 4, max_r: int = 3, N: int = 5
) -> list[VerificationReport]:
    if suite == "enumerative":
        return [enumerative_suite(max_n=max(max_n, 5), max_r=max_r)]
    if suite == "geometric":
        return [geometric_suite(max_n=min(max_n, 4), max_r=max_r)]
    if suite == "equivariant":
        return [equivariant_suite(max_n=min(max_n, 4), max_r=max_r, N=N)]
    if suite == "all":
        return (
            run_suite("enumerative", max_n, max_r, N)
            + run_suite("geometric", max_n, max_r, N)
            + run_suite("equivariant", max_n, max_r, N)
        )
    raise DomainError(f"unknown suite {suite!r}")
