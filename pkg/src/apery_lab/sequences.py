"""Apery, W and Delannoy polynomials, central binomial sums and friends.

Every sum has an exact path (Fractions) and a modular path (residues mod
p^e).  The modular path for integer-coefficient polynomials reduces exact
coefficients; sums over rational binomials use factored ratio updates so
that divisions are only ever by p-units.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Union

from .arith import (
    FactoredResidue,
    Modulus,
    Rational,
    Residue,
    binom_gen,
    binom_int,
    reduce_mod,
    reduce_rational,
)
from .errors import NegativeValuationAtCollapse, NotAUnit, NotPIntegral


class PolySequenceKind(str, enum.Enum):
    APERY = "AperyA"
    NEW_W = "NewW"
    DELANNOY = "DelannoyD"


class CentralFamily(str, enum.Enum):
    """Central-binomial families; the k-th term is c_k * x^k."""

    CB2 = "cb2"  # C(2k,k)^2
    CB3 = "cb3"  # C(2k,k)^3
    QUARTIC = "quartic"  # (4k)!/k!^4


UNIT = "unit"
ODD = "2k+1"


@dataclass(frozen=True)
class SumSpec:
    kind: Union[PolySequenceKind, CentralFamily]
    x: Fraction = Fraction(1)
    sign: int = 1
    weight: str = UNIT
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        if self.power < 1:
            raise ValueError("power must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.weight not in (UNIT, ODD):
            raise ValueError(f"unknown weight {self.weight!r}")


# exact polynomials


@lru_cache(maxsize=None)
def poly_coeffs(kind: PolySequenceKind, n: int) -> tuple[int, ...]:
    """Integer coefficients of A_n(x), W_n(x) or D_n(x), lowest degree first."""
    kind = PolySequenceKind(kind)
    if kind is PolySequenceKind.APERY:
        return tuple((comb(n, k) * comb(n + k, k)) ** 2 for k in range(n + 1))
    if kind is PolySequenceKind.NEW_W:
        return tuple((comb(n, 2 * k) * comb(2 * k, k)) ** 2 for k in range(n // 2 + 1))
    return tuple(comb(n, k) * comb(n + k, k) for k in range(n + 1))


def _eval(coeffs, x: Rational):
    acc = Fraction(0) if isinstance(x, Fraction) else 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def apery_poly(n: int, x: Rational = 1) -> Fraction:
    return Fraction(_eval(poly_coeffs(PolySequenceKind.APERY, n), Fraction(x)))


def w_poly(n: int, x: Rational = 1) -> Fraction:
    return Fraction(_eval(poly_coeffs(PolySequenceKind.NEW_W, n), Fraction(x)))


def delannoy(n: int) -> int:
    return sum(poly_coeffs(PolySequenceKind.DELANNOY, n))


def delannoy_poly(n: int, x: Rational) -> Fraction:
    return Fraction(_eval(poly_coeffs(PolySequenceKind.DELANNOY, n), Fraction(x)))


def poly_value(kind: PolySequenceKind, n: int, x: Rational) -> Fraction:
    return Fraction(_eval(poly_coeffs(kind, n), Fraction(x)))


def apery_number(n: int) -> int:
    return sum(poly_coeffs(PolySequenceKind.APERY, n))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan_square_sum(n: int) -> int:
    """a_n = sum_k C(n,k)^2 C_k."""
    return sum(comb(n, k) ** 2 * catalan(k) for k in range(n + 1))


def catalan_square_sums(n_max: int) -> list[int]:
    """[a_0, ..., a_n_max] from the order-2 recurrence

    (n+3)^2 (4n+7) a_{n+2} = 2(20n^3+117n^2+220n+135) a_{n+1}
                             - 9 (n+1)^2 (4n+11) a_n.
    """
    a = [1, 2][: n_max + 1]
    for n in range(0, n_max - 1):
        num = 2 * (20 * n**3 + 117 * n**2 + 220 * n + 135) * a[n + 1] - 9 * (
            n + 1
        ) ** 2 * (4 * n + 11) * a[n]
        q, r = divmod(num, (n + 3) ** 2 * (4 * n + 7))
        if r:
            raise ArithmeticError(f"recurrence for a_n left a remainder at n={n + 2}")
        a.append(q)
    return a


def s_of_n(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(sum((2 * k + 1) * apery_number(k) for k in range(n)), n)


def hilbert_inverse_trace(n: int) -> Fraction:
    """Trace of (n*H_n)^{-1} by exact Gauss-Jordan elimination."""
    if not 1 <= n <= 30:
        raise ValueError("n must be in 1..30")
    a = [
        [Fraction(n, i + j + 1) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [u - f * v for u, v in zip(a[r], a[col])]
    return sum((a[i][n + i] for i in range(n)), Fraction(0))


def conj43_s(n: int) -> Fraction:
    x = Fraction(1, 4)
    total = sum(((-1) ** k * (2 * k + 1) * apery_poly(k, x) for k in range(n)), Fraction(0))
    return total / n**2


def conj43_t(n: int) -> Fraction:
    x = Fraction(-1, 4)
    total = sum(
        ((-1) ** k * (2 * k + 1) * delannoy_poly(k, x) ** 3 for k in range(n)), Fraction(0)
    )
    return total / n**2


@dataclass(frozen=True)
class QExpansion:
    coefficients: tuple[int, ...]  # a(1), ..., a(N)

    def a(self, n: int) -> int:
        return self.coefficients[n - 1]

    def __len__(self):
        return len(self.coefficients)


def eta_product_coeffs(N: int) -> QExpansion:
    """Coefficients a(1..N) of q * prod_{n>=1} (1-q^{2n})^4 (1-q^{4n})^4."""
    if N < 1:
        raise ValueError("N must be positive")
    # c[i] holds the coefficient of q^(i+1)
    c = [0] * N
    c[0] = 1
    factors = [2 * n for n in range(1, N // 2 + 1)] + [4 * n for n in range(1, N // 4 + 1)]
    for m in factors:
        if m >= N:
            continue
        for _ in range(4):
            for i in range(N - 1, m - 1, -1):
                c[i] -= c[i - m]
    return QExpansion(tuple(c))


# modular evaluation


@lru_cache(maxsize=4096)
def poly_terms_mod(kind: PolySequenceKind, x: Fraction, p: int, e: int, count: int) -> tuple[int, ...]:
    """(S_0(x), ..., S_{count-1}(x)) mod p^e for an integer-coefficient family."""
    M = p**e
    xr = reduce_mod(x, M, p)
    out = []
    for n in range(count):
        acc = 0
        for c in reversed(poly_coeffs(kind, n)):
            acc = (acc * xr + c) % M
        out.append(acc)
    return tuple(out)


def _central_ratio(family: CentralFamily, k: int) -> tuple[int, int]:
    """c_{k+1}/c_k as (numerator, denominator)."""
    if family is CentralFamily.QUARTIC:
        return (4 * k + 1) * (4 * k + 2) * (4 * k + 3) * (4 * k + 4), (k + 1) ** 4
    num, den = 2 * (2 * k + 1), k + 1
    power = 2 if family is CentralFamily.CB2 else 3
    return num**power, den**power


@lru_cache(maxsize=1024)
def central_terms_mod(family: CentralFamily, x: Fraction, p: int, e: int, count: int) -> tuple[int, ...]:
    """c_k x^k mod p^e for k < count via factored ratio updates."""
    family = CentralFamily(family)
    m = Modulus(p, e)
    step_x = FactoredResidue.from_rational(x, m)
    term = FactoredResidue(0, 1, m)
    out = []
    for k in range(count):
        out.append(term.collapse().value)
        num, den = _central_ratio(family, k)
        term = term * FactoredResidue.from_rational(Fraction(num, den), m) * step_x
    return tuple(out)


def central_term_exact(family: CentralFamily, k: int) -> int:
    family = CentralFamily(family)
    if family is CentralFamily.CB2:
        return comb(2 * k, k) ** 2
    if family is CentralFamily.CB3:
        return comb(2 * k, k) ** 3
    return comb(4 * k, 2 * k) * comb(2 * k, k) ** 2


def sequence_terms_mod(spec: SumSpec, p: int, e: int, count: int) -> tuple[int, ...]:
    if isinstance(spec.kind, CentralFamily):
        return central_terms_mod(spec.kind, spec.x, p, e, count)
    return poly_terms_mod(PolySequenceKind(spec.kind), spec.x, p, e, count)


def sum_sequence_mod(spec: SumSpec, m: Modulus, count: int | None = None) -> Residue:
    """sum_{k<count} weight(k) sign^k S_k(x)^power mod p^e (count defaults to p).

    Central families ignore ``power``.
    """
    p, M = m.p, m.value
    if spec.x.denominator % p == 0:
        raise NotPIntegral(f"x = {spec.x} is not {p}-integral")
    count = p if count is None else count
    terms = sequence_terms_mod(spec, p, m.e, count)
    power = 1 if isinstance(spec.kind, CentralFamily) else spec.power
    total = 0
    for k, t in enumerate(terms):
        v = pow(t, power, M) if power > 1 else t
        if spec.weight == ODD:
            v *= 2 * k + 1
        if spec.sign < 0 and k % 2:
            v = -v
        total += v
    return Residue(total % M, m)


def sequence_term_exact(spec: SumSpec, k: int) -> Fraction:
    if isinstance(spec.kind, CentralFamily):
        return central_term_exact(spec.kind, k) * spec.x**k
    return poly_value(PolySequenceKind(spec.kind), k, spec.x) ** spec.power


def sum_sequence_exact(spec: SumSpec, count: int) -> Fraction:
    total = Fraction(0)
    for k in range(count):
        v = sequence_term_exact(spec, k)
        if spec.weight == ODD:
            v *= 2 * k + 1
        if spec.sign < 0 and k % 2:
            v = -v
        total += v
    return total


def _unit_check(x: Fraction, p: int, what: str):
    if x.numerator % p == 0 or x.denominator % p == 0:
        raise NotAUnit(f"{what}={x} is not a {p}-adic unit")


def sum_cb3(p: int, e: int, m: Rational) -> Residue:
    """sum_{k<p} C(2k,k)^3 / m^k mod p^e."""
    m_ = Fraction(m)
    _unit_check(m_, p, "m")
    return sum_sequence_mod(SumSpec(CentralFamily.CB3, 1 / m_), Modulus(p, e))


def sum_cb2(p: int, e: int, m: Rational) -> Residue:
    """sum_{k<p} C(2k,k)^2 / m^k mod p^e."""
    m_ = Fraction(m)
    _unit_check(m_, p, "m")
    return sum_sequence_mod(SumSpec(CentralFamily.CB2, 1 / m_), Modulus(p, e))


def sum_quartic(p: int, e: int, x: Rational) -> Residue:
    """sum_{k<p} (4k)!/(k!^4 (256x)^k) mod p^e."""
    x_ = Fraction(x)
    _unit_check(x_, p, "x")
    return sum_sequence_mod(SumSpec(CentralFamily.QUARTIC, 1 / (256 * x_)), Modulus(p, e))


def sum_cb3_k3(p: int, a: int) -> Residue:
    """sum_{k<p^a} k^3 C(2k,k)^3 / 64^k mod p^(2a)."""
    m = Modulus(p, 2 * a)
    inv64 = FactoredResidue.from_rational(Fraction(1, 64), m)
    term = FactoredResidue(0, 1, m)  # C(2k,k)^3 / 64^k
    total = 0
    for k in range(p**a):
        if k:
            total += (term * FactoredResidue.from_rational(k**3, m)).collapse().value
        num, den = _central_ratio(CentralFamily.CB3, k)
        term = term * FactoredResidue.from_rational(Fraction(num, den), m) * inv64
    return Residue(total, m)


def sum_cb3_k3_exact(p: int, a: int) -> Fraction:
    return sum(
        (Fraction(k**3 * comb(2 * k, k) ** 3, 64**k) for k in range(p**a)), Fraction(0)
    )


def binom_power_terms(p: int, e: int, x: Rational, count: int | None = None) -> Iterator[FactoredResidue]:
    """Yield C(x, r) as factored residues for r < count (default p)."""
    m = Modulus(p, e)
    x = Fraction(x)
    count = p if count is None else count
    term = FactoredResidue(0, 1, m)
    for r in range(count):
        yield term
        term = term * FactoredResidue.from_rational(x - r, m) / FactoredResidue.from_rational(r + 1, m)


def binom_power_sum(p: int, e: int, x: Rational, sign: int, power: int) -> Residue:
    """sum_{r<p} sign^r C(x, r)^power mod p^e.

    Same chain as binom_power_terms, unrolled on plain integers: with
    x = a/b (p not dividing b), x - r = (a - r*b)/b and the running term
    is tracked as p^v * u.
    """
    m = Modulus(p, e)
    x = Fraction(x)
    if x.denominator % p == 0:
        reduce_rational(x, m)  # raises NotPIntegral
    M = m.value
    a, b = x.numerator, x.denominator
    b_inv = pow(b, -1, M)
    total, v, u = 0, 0, 1
    for r in range(p):
        if v < 0:
            raise NegativeValuationAtCollapse(f"C({x}, {r}) is not p-integral")
        if v * power < e:
            t = pow(u, power, M) * p ** (v * power)
            total += -t if sign < 0 and r % 2 else t
        num = a - r * b
        if num == 0:
            break  # C(x, s) = 0 for all s > r
        while num % p == 0:
            num //= p
            v += 1
        den = r + 1
        while den % p == 0:
            den //= p
            v -= 1
        u = u * num % M * b_inv % M * pow(den, -1, M) % M
    return Residue(total, m)


def binom_power_sum_exact(p: int, x: Rational, sign: int, power: int) -> Fraction:
    total = Fraction(0)
    for r in range(p):
        v = binom_gen(x, r) ** power
        total += -v if sign < 0 and r % 2 else v
    return total


# Zeilberger recurrences checked as polynomial identities in y


def _f(p: int, k: int, y: int) -> int:
    n = 2 * k + p * y
    return sum((-1) ** r * binom_int(n, r) ** 2 for r in range(p))


def _g(p: int, k: int, y: int) -> int:
    n = k + p * y
    return sum(binom_int(n, r) ** 2 for r in range(p))


def recurrence_f_holds_at(p: int, k: int, y: int) -> bool:
    F = (
        14 + 34 * k + 20 * k * k - 10 * p - 12 * k * p + 2 * p * p
        + 17 * p * y + 20 * k * p * y - 6 * p * p * y + 5 * p * p * y * y
    )
    lhs = (p * y + 2 * k + 2) * _f(p, k + 1, y) + 4 * (p * y + 2 * k + 1) * _f(p, k, y)
    rhs = Fraction(
        (p * (y - 1) + 2 * k + 3) ** 2 * F * binom_int(p * y + 2 * k + 2, p - 1) ** 2,
        (p * y + 2 * k + 1) * (p * y + 2 * k + 2) ** 2,
    )
    return lhs == rhs


def recurrence_g_holds_at(p: int, k: int, y: int) -> bool:
    lhs = (p * y + k + 1) * _g(p, k + 1, y) - 2 * (2 * p * y + 2 * k + 1) * _g(p, k, y)
    rhs = -Fraction(
        (p * (y - 1) + k + 2) ** 2 * (3 * p * y - 2 * p + 3 * k + 3)
        * binom_int(p * y + k + 1, p - 1) ** 2,
        (p * y + k + 1) ** 2,
    )
    return lhs == rhs


def recurrence_check_f(p: int, k: int) -> bool:
    """Check the f_k recurrence at y = 0..2p+4; cleared of denominators it has degree <= 2p+2."""
    if p < 5 or not 0 <= k <= (p - 3) // 2:
        raise ValueError("need p >= 5 and 0 <= k <= (p-3)/2")
    return all(recurrence_f_holds_at(p, k, y) for y in range(2 * p + 5))


def recurrence_check_g(p: int, k: int) -> bool:
    if p < 5 or not 0 <= k <= p - 2:
        raise ValueError("need p >= 5 and 0 <= k <= p-2")
    return all(recurrence_g_holds_at(p, k, y) for y in range(2 * p + 5))
