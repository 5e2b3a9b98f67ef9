"""Colored permutation groups Z_r wr S_n: statistics and enumerative polynomials.

Elements are pairs (sigma, eps): sigma a one-line permutation of [n], eps the
color vector, eps[k] being the color of sigma(k+1).  Descents use the sentinel
sigma(n+1) = n+1 with color 0.  All polynomial assembly is exact; group sizes
r^n * n! stay well inside desk scale here, but counts are Python ints, so
there is no overflow cliff regardless.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .polyring import (
    DomainError,
    IntPolynomial,
    ONE_PLUS_T,
    e_r_operator,
    palindromic_decomposition,
)


@dataclass(frozen=True)
class ColoredPermutation:
    sigma: tuple[int, ...]
    eps: tuple[int, ...]
    r: int

    @property
    def n(self) -> int:
        return len(self.sigma)


@dataclass(frozen=True)
class SignedPermutation:
    """One-line signed permutation: values w(1)..w(n), |values| a permutation."""

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)


def enumerate_group(n: int, r: int):
    """All r^n * n! elements, lexicographic on (sigma, eps)."""
    if n < 0 or r < 1:
        raise DomainError("need n >= 0 and r >= 1")
    for sigma in itertools.permutations(range(1, n + 1)):
        for eps in itertools.product(range(r), repeat=n):
            yield ColoredPermutation(sigma, eps, r)


def enumerate_signed(n: int):
    for sigma in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, sigma)))


def signed_to_colored(w: SignedPermutation) -> ColoredPermutation:
    """Bijection: positive value = color 0, negative = color 1."""
    return ColoredPermutation(
        tuple(abs(v) for v in w.values),
        tuple(0 if v > 0 else 1 for v in w.values),
        2,
    )


def des_set(w: ColoredPermutation) -> set[int]:
    n = w.n
    out = set()
    for k in range(1, n + 1):
        ek = w.eps[k - 1]
        sk = w.sigma[k - 1]
        en = w.eps[k] if k < n else 0
        sn = w.sigma[k] if k < n else n + 1
        if ek > en or (ek == en and sk > sn):
            out.add(k)
    return out


def asc_set(w: ColoredPermutation) -> set[int]:
    return set(range(1, w.n + 1)) - des_set(w)


def exc(w: ColoredPermutation) -> int:
    return sum(
        1
        for k in range(1, w.n + 1)
        if w.sigma[k - 1] > k or (w.sigma[k - 1] == k and w.eps[k - 1] != 0)
    )


def exc_A(w: ColoredPermutation) -> int:
    return sum(
        1 for k in range(1, w.n + 1) if w.sigma[k - 1] > k and w.eps[k - 1] == 0
    )


def fexc(w: ColoredPermutation) -> int:
    return w.r * exc_A(w) + sum(w.eps)


def is_derangement(w: ColoredPermutation) -> bool:
    """No fixed point of zero color."""
    return all(
        not (w.sigma[k - 1] == k and w.eps[k - 1] == 0) for k in range(1, w.n + 1)
    )


@lru_cache(maxsize=None)
def eulerian_poly(n: int, r: int, stat: str = "des") -> IntPolynomial:
    """A_{n,r}(t) by descents or excedances; A_{0,r} = 1."""
    if stat not in ("des", "exc"):
        raise DomainError(f"unknown statistic {stat!r}")
    f = (lambda w: len(des_set(w))) if stat == "des" else exc
    counts: dict[int, int] = {}
    for w in enumerate_group(n, r):
        s = f(w)
        counts[s] = counts.get(s, 0) + 1
    return IntPolynomial(counts.get(k, 0) for k in range(n + 1))


@lru_cache(maxsize=None)
def derangement_poly(n: int, r: int, method: str = "direct") -> IntPolynomial:
    """d_{n,r}(t), excedance polynomial over colored derangements; d_{0,r} = 1."""
    if method == "direct":
        counts: dict[int, int] = {}
        for w in enumerate_group(n, r):
            if is_derangement(w):
                s = exc(w)
                counts[s] = counts.get(s, 0) + 1
        return IntPolynomial(counts.get(k, 0) for k in range(n + 1))
    if method == "inclusion_exclusion":
        out = IntPolynomial.zero()
        for k in range(n + 1):
            sign = -1 if (n - k) % 2 else 1
            out = out + sign * math.comb(n, k) * eulerian_poly(k, r, "exc")
        return out
    raise DomainError(f"unknown method {method!r}")


def _no_two_consecutive(s: set[int]) -> bool:
    return all(k + 1 not in s for k in s)


@lru_cache(maxsize=None)
def xi_counts(n: int, r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Ascent-set counts behind the two-palindromic split of d_{n,r}.

    Returns (xi_plus, xi_minus), each indexed by i (entry 0 unused, always 0):
    xi_plus[i] counts w with Asc(w) a subset of [2,n] of size i, no two
    consecutive, containing n; xi_minus[i] counts w with Asc(w) a subset of
    [2,n-1] of size i-1, no two consecutive.
    """
    if n < 1 or r < 1:
        raise DomainError("need n >= 1 and r >= 1")
    plus = [0] * (n // 2 + 1)
    minus = [0] * ((n + 1) // 2 + 1)
    for w in enumerate_group(n, r):
        a = asc_set(w)
        if not _no_two_consecutive(a):
            continue
        if 1 not in a and n in a and len(a) <= n // 2:
            plus[len(a)] += 1
        if a <= set(range(2, n)) and len(a) + 1 <= (n + 1) // 2:
            minus[len(a) + 1] += 1
    return tuple(plus), tuple(minus)


def d_plus_minus(n: int, r: int) -> tuple[IntPolynomial, IntPolynomial]:
    """The split d = d+ + d- with centers n/2 and (n+1)/2, from the xi counts."""
    plus, minus = xi_counts(n, r)
    dp = IntPolynomial.zero()
    for i in range(1, len(plus)):
        dp = dp + (plus[i] * ONE_PLUS_T ** (n - 2 * i)).shift(i)
    dm = IntPolynomial.zero()
    for i in range(1, len(minus)):
        dm = dm + (minus[i] * ONE_PLUS_T ** (n + 1 - 2 * i)).shift(i)
    return dp, dm


def a_plus_minus(n: int, r: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Binomial transforms of d+/d-, with d+_0 = 1 and d-_0 = 0."""
    ap = IntPolynomial.one()  # k = 0 term
    am = IntPolynomial.zero()
    for k in range(1, n + 1):
        dp, dm = d_plus_minus(k, r)
        c = math.comb(n, k)
        ap = ap + c * dp
        am = am + c * dm
    return ap, am


@lru_cache(maxsize=None)
def binomial_eulerian(n: int, r: int) -> IntPolynomial:
    """The binomial transform sum_m C(n,m) t^(n-m) A_{m,r}(t)."""
    out = IntPolynomial.zero()
    for m in range(n + 1):
        out = out + (math.comb(n, m) * eulerian_poly(m, r, "des")).shift(n - m)
    return out


def binomial_eulerian_pm(n: int, r: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Same transform applied to the A+/A- parts."""
    outp = IntPolynomial.zero()
    outm = IntPolynomial.zero()
    for m in range(n + 1):
        ap, am = a_plus_minus(m, r)
        c = math.comb(n, m)
        outp = outp + (c * ap).shift(n - m)
        outm = outm + (c * am).shift(n - m)
    return outp, outm


def _decreasing_zero_prefix(w: ColoredPermutation) -> bool:
    """w(1) > w(2) > ... > w(m) = 1 with all of them colored zero."""
    m = w.sigma.index(1) + 1
    if any(w.eps[j] != 0 for j in range(m)):
        return False
    return all(w.sigma[j] > w.sigma[j + 1] for j in range(m - 1))


def gamma_tilde(n: int, r: int):
    """Gamma coefficients of the binomial Eulerian split, two ways.

    Returns (plus_formula, minus_formula, plus_direct, minus_direct).  The
    formula lists are binomial sums of xi counts; the direct lists count
    elements of Z_r wr S_{n+1} with a decreasing zero-colored prefix ending
    at 1 and the prescribed ascent-set shape: plus[i] wants i+1 ascents, no
    two consecutive, the last position n+1 among them; minus[i] wants i
    ascents, no two consecutive, all inside [n].
    """
    plus_f = [0] * (n // 2 + 1)
    minus_f = [0] * ((n + 1) // 2 + 1)
    plus_f[0] = 1  # k = 0 contributes the empty permutation
    for k in range(1, n + 1):
        xp, xm = xi_counts(k, r)
        c = math.comb(n, k)
        for i in range(1, len(xp)):
            if i < len(plus_f):
                plus_f[i] += c * xp[i]
        for i in range(1, len(xm)):
            if i < len(minus_f):
                minus_f[i] += c * xm[i]
    plus_d = [0] * (n // 2 + 1)
    minus_d = [0] * ((n + 1) // 2 + 1)
    for w in enumerate_group(n + 1, r):
        a = asc_set(w)
        if not _no_two_consecutive(a) or not _decreasing_zero_prefix(w):
            continue
        if n + 1 in a and len(a) - 1 < len(plus_d):
            plus_d[len(a) - 1] += 1
        if a <= set(range(1, n + 1)) and 1 <= len(a) < len(minus_d):
            minus_d[len(a)] += 1
    return tuple(plus_f), tuple(minus_f), tuple(plus_d), tuple(minus_d)


def a_plus_alt(n: int, r: int, method: str) -> IntPolynomial:
    """A+_{n,r} by three routes: descents over zero-colored-first elements,
    flag excedances over color-sum-divisible elements, or the Carlitz
    coefficient extraction E_r((1+t+...+t^(r-1))^n A_n(t))."""
    if method == "positive_first_des":
        counts: dict[int, int] = {}
        for w in enumerate_group(n, r):
            if n == 0 or w.eps[0] == 0:
                s = len(des_set(w))
                counts[s] = counts.get(s, 0) + 1
        return IntPolynomial(counts.get(k, 0) for k in range(n + 1))
    if method == "flag_exc":
        counts = {}
        for w in enumerate_group(n, r):
            if sum(w.eps) % r == 0:
                s = fexc(w) // r
                counts[s] = counts.get(s, 0) + 1
        return IntPolynomial(counts.get(k, 0) for k in range(n + 1))
    if method == "carlitz":
        base = IntPolynomial([1] * r) ** n * eulerian_poly(n, 1, "des")
        return e_r_operator(base, r)
    raise DomainError(f"unknown method {method!r}")


def des_B_set(w: SignedPermutation) -> set[int]:
    """Signed descent set with sentinel w(n+1) = 0."""
    n = w.n
    out = set()
    for i in range(1, n + 1):
        a = w.values[i - 1]
        b = w.values[i] if i < n else 0
        if (a > 0 and a > b) or (a < 0 and b < 0 and -a > -b):
            out.add(i)
    return out


def gamma_B(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Gamma coefficients of the r = 2 binomial Eulerian split, counted by
    signed descent sets: plus[i] counts w with |Des_B(w)| = i, no two
    consecutive, n absent; minus[i] the same with n present."""
    plus = [0] * (n // 2 + 1)
    minus = [0] * ((n + 1) // 2 + 1)
    for w in enumerate_signed(n):
        d = des_B_set(w)
        if not _no_two_consecutive(d):
            continue
        if n in d:
            if len(d) < len(minus):
                minus[len(d)] += 1
        elif len(d) < len(plus):
            plus[len(d)] += 1
    return tuple(plus), tuple(minus)


def binomial_eulerian_split(n: int, r: int):
    """Convenience: PalindromicPair of the full binomial Eulerian polynomial."""
    return palindromic_decomposition(binomial_eulerian(n, r), n)
