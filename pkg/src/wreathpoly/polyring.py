"""Exact univariate polynomial arithmetic over arbitrary-precision integers.

Polynomials in t with integer coefficients carry all the enumerative data
in this package.  Everything here is pure and exact: palindromicity tests,
gamma expansions, palindromic decompositions, the E_r coefficient-extraction
operator, geometric series expansion and a Sturm-sequence real-rootedness
test over the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DomainError(ValueError):
    """Raised when an operation is applied outside its mathematical domain."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPolynomial:
    """Dense polynomial in t; coeffs[k] is the coefficient of t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def t(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] - other[k] for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                tk = "t" if k == 1 else f"t^{k}"
                parts.append(tk if c == 1 else f"{c}*{tk}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntPolynomial":
        return cls(int(c) for c in obj["coeffs"])


ONE_PLUS_T = IntPolynomial((1, 1))
ONE_MINUS_T = IntPolynomial((1, -1))


@dataclass(frozen=True)
class GammaExpansion:
    """Coefficients gamma_i in p = sum_i gamma_i t^i (1+t)^(n-2i)."""

    n: int
    gammas: tuple[int, ...]

    def reconstruct(self) -> IntPolynomial:
        out = IntPolynomial.zero()
        for i, g in enumerate(self.gammas):
            out = out + (g * (ONE_PLUS_T ** (self.n - 2 * i))).shift(i)
        return out

    def is_positive(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def to_json(self) -> dict:
        return {"n": self.n, "gammas": [str(g) for g in self.gammas]}


@dataclass(frozen=True)
class PalindromicPair:
    """Unique split p = plus + minus with centers n/2 and (n+1)/2."""

    plus: IntPolynomial
    minus: IntPolynomial
    n: int


def center(p: IntPolynomial) -> Fraction:
    """Half the sum of the lowest and highest exponents with nonzero coefficient."""
    if p.is_zero():
        raise DomainError("center undefined for zero polynomial")
    lo = next(k for k, c in enumerate(p.coeffs) if c != 0)
    return Fraction(lo + p.degree(), 2)


def is_palindromic(p: IntPolynomial, n: int) -> bool:
    """True iff the coefficient of t^j equals that of t^(n-j) for all j."""
    if p.degree() > n:
        return False
    return all(p[j] == p[n - j] for j in range(n + 1))


def gamma_expansion(p: IntPolynomial, n: int) -> GammaExpansion:
    """Peel off gamma_i t^i (1+t)^(n-2i) layers; input must be palindromic."""
    if not is_palindromic(p, n):
        raise DomainError(f"polynomial {p} is not palindromic with center {n}/2")
    rest = p
    gammas = []
    for i in range(n // 2 + 1):
        g = rest[i]
        gammas.append(g)
        rest = rest - (g * (ONE_PLUS_T ** (n - 2 * i))).shift(i)
    assert rest.is_zero()
    return GammaExpansion(n, tuple(gammas))


def is_gamma_positive(p: IntPolynomial, n: int) -> bool:
    return gamma_expansion(p, n).is_positive()


def _split_palindromic_lists(coeffs: Sequence, n: int, zero):
    """Generic palindromic split of a coefficient list; works over any
    commutative group whose elements support - and == against `zero`.

    Returns (a, b) with a palindromic about n/2 (length n+1), b palindromic
    about (n+1)/2 with b[0] == zero (length n+2), a + b == coeffs.
    """
    p = list(coeffs)
    if len(p) > n + 2:
        raise DomainError(f"degree {len(p) - 1} exceeds bound n+1 = {n + 1}")
    p += [zero] * (n + 2 - len(p))
    a = [zero] * (n + 1)
    b = [zero] * (n + 2)
    for j in range((n + 3) // 2):
        a[j] = p[j] - b[j]
        if 0 <= n - j <= n:
            a[n - j] = a[j]
            b[n - j] = p[n - j] - a[n - j]
            if j + 1 <= n + 1:
                b[j + 1] = b[n - j]
    # the recurrence solves the system; verify all constraints hold
    ok = all(a[j] == a[n - j] for j in range(n + 1))
    ok = ok and all(b[j] == b[n + 1 - j] for j in range(n + 2))
    ok = ok and b[0] == zero
    ok = ok and all(a[j] + b[j] == p[j] for j in range(n + 1))
    ok = ok and b[n + 1] == p[n + 1]
    if not ok:
        raise DomainError("no palindromic decomposition within degree bounds")
    return a, b


def palindromic_decomposition(p: IntPolynomial, n: int) -> PalindromicPair:
    """Unique p = plus + minus with plus centered at n/2 and minus at (n+1)/2.

    The constant term goes entirely to the center-n/2 summand.
    """
    a, b = _split_palindromic_lists(p.coeffs, n, 0)
    return PalindromicPair(IntPolynomial(a), IntPolynomial(b), n)


def is_unimodal(p: IntPolynomial) -> bool:
    cs = p.coeffs
    if any(c < 0 for c in cs):
        raise DomainError("unimodality check requires nonnegative coefficients")
    i = 1
    while i < len(cs) and cs[i - 1] <= cs[i]:
        i += 1
    while i < len(cs) and cs[i - 1] >= cs[i]:
        i += 1
    return i >= len(cs)


def is_alternatingly_increasing(p: IntPolynomial, n: int) -> bool:
    """Check a_0 <= a_n <= a_1 <= a_(n-1) <= ... <= a_floor((n+1)/2)."""
    if any(c < 0 for c in p.coeffs):
        raise DomainError("check requires nonnegative coefficients")
    if p.degree() > n:
        return False
    # interleave: a_0, a_n, a_1, a_(n-1), ...
    chain = []
    lo, hi = 0, n
    first = True
    while lo <= hi:
        if first:
            chain.append(p[lo])
            lo += 1
        else:
            chain.append(p[hi])
            hi -= 1
        first = not first
    return all(chain[i] <= chain[i + 1] for i in range(len(chain) - 1))


def e_r_operator(p: IntPolynomial, r: int) -> IntPolynomial:
    """Keep coefficients of t^k with r | k, mapping t^k to t^(k/r)."""
    if r <= 0:
        raise DomainError("E_r requires r >= 1")
    return IntPolynomial(p[k * r] for k in range(p.degree() // r + 2))


def geometric_expand(numer: IntPolynomial, m: int, N: int) -> list[int]:
    """First N+1 coefficients of numer / (1-t)^m."""
    if m <= 0:
        raise DomainError("geometric_expand requires m >= 1")
    out = []
    for k in range(N + 1):
        c = sum(
            numer[j] * math.comb(k - j + m - 1, m - 1)
            for j in range(min(k, numer.degree()) + 1)
        )
        out.append(c)
    return out


def exact_div_one_minus_t(p: IntPolynomial) -> IntPolynomial:
    """Exact quotient p / (1-t); raises if p(1) != 0."""
    q = []
    carry = 0
    for c in p.coeffs:
        carry = c + carry
        q.append(carry)
    if carry != 0:
        raise DomainError("polynomial not divisible by (1-t)")
    return IntPolynomial(q[:-1])


# -- Sturm sequence real-rootedness ---------------------------------------


def _fp(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _ftrim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _fderiv(cs: list[Fraction]) -> list[Fraction]:
    return [k * c for k, c in enumerate(cs)][1:]


def _frem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = _ftrim(a)
        if not a:
            break
    return a


def _fgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _frem(a, b)
    return a


def _sign_variations_at_infinity(chain: list[list[Fraction]], positive: bool) -> int:
    signs = []
    for cs in chain:
        s = 1 if cs[-1] > 0 else -1
        if not positive and (len(cs) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def is_real_rooted(p: IntPolynomial) -> bool:
    """True iff every complex root of p is real (exact Sturm count)."""
    if p.is_zero():
        raise DomainError("real-rootedness undefined for zero polynomial")
    cs = _ftrim(_fp(p))
    if len(cs) <= 1:
        return True
    # count distinct real roots of the square-free part
    g = _fgcd(cs, _fderiv(cs))
    sf = cs if len(g) <= 1 else _ftrim(_frem_quotient(cs, g))
    if len(sf) <= 1:
        return True
    chain = [sf, _fderiv(sf)]
    while len(chain[-1]) > 1:
        r = _frem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    if not chain[-1]:
        chain.pop()
    roots = _sign_variations_at_infinity(chain, False) - _sign_variations_at_infinity(
        chain, True
    )
    return roots == len(sf) - 1


def _frem_quotient(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Exact quotient a / b (b divides a)."""
    a = a[:]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = _ftrim(a)
        if not a:
            break
    return q
