"""Exact rationals, residues mod p^e, symbols, binomials and primes.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import (
    DenominatorDivisibleByP,
    NegativeValuationAtCollapse,
    NotInvertible,
    NotPIntegral,
)

Rational = Union[int, Fraction]

INF = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Modulus:
    p: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus base {self.p} is not prime")
        if not 1 <= self.e <= 6:
            raise ValueError(f"exponent {self.e} outside 1..6")

    @property
    def value(self) -> int:
        return self.p**self.e

    def __str__(self):
        return f"{self.p}^{self.e}"


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: Modulus

    def __post_init__(self):
        m = self.modulus.value
        if not 0 <= self.value < m:
            object.__setattr__(self, "value", self.value % m)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError("residues have different moduli")
            return other.value
        if isinstance(other, Fraction):
            return reduce_rational(other, self.modulus).value
        return int(other)

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.modulus)

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return mod_inv(self) ** (-k)
        return Residue(pow(self.value, k, self.modulus.value), self.modulus)

    def __truediv__(self, other):
        inv = mod_inv(Residue(self._coerce(other), self.modulus))
        return self * inv

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def mod_inv(a: Residue) -> Residue:
    if a.value % a.modulus.p == 0:
        raise NotInvertible(f"{a.value} is not invertible mod {a.modulus}")
    return Residue(pow(a.value, -1, a.modulus.value), a.modulus)


def int_valuation(n: int, p: int) -> int:
    """Exponent of p in the nonzero integer n."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_valuation(x: Rational, p: int):
    """nu_p(x) as an int, or math.inf for x == 0."""
    x = Fraction(x)
    if x == 0:
        return INF
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def reduce_rational(x: Rational, m: Modulus) -> Residue:
    x = Fraction(x)
    if x.denominator % m.p == 0:
        raise NotPIntegral(f"{x} is not {m.p}-integral")
    M = m.value
    return Residue(x.numerator * pow(x.denominator, -1, M) % M, m)


def reduce_mod(x: Rational, M: int, p: int) -> int:
    """Integer-level reduce_rational for hot paths; M is a power of p."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPIntegral(f"{x} is not {p}-integral")
    return x.numerator * pow(x.denominator, -1, M) % M


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs an odd positive modulus")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: Rational, p: int) -> int:
    """(a/p) for a p-integral rational a and odd prime p."""
    a = Fraction(a)
    if a.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{a} has denominator divisible by {p}")
    return jacobi(a.numerator, p) * jacobi(a.denominator, p)


def fermat_quotient(p: int, e: int = 1) -> Residue:
    m = Modulus(p, e)
    return Residue((pow(2, p - 1) - 1) // p, m)


def binom_int(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_gen(x: Rational, r: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-r+1)/r!."""
    x = Fraction(x)
    num = Fraction(1)
    for j in range(r):
        num *= x - j
    return num / math.factorial(r)


@lru_cache(maxsize=8)
def _sieve(limit: int) -> bytearray:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = 0
    if limit >= 1:
        flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return flags


def primes_in(lo: int, hi: int) -> list[int]:
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    if hi < 2:
        return []
    flags = _sieve(hi)
    return [n for n in range(max(lo, 2), hi + 1) if flags[n]]


class FactoredResidue:
    """A p-adic number p^valuation * unit with the unit known mod p^e.

    The valuation may go negative in the middle of a product chain; only
    :meth:`collapse` requires it to be non-negative.
    """

    __slots__ = ("valuation", "unit", "modulus")

    def __init__(self, valuation: int, unit: int, modulus: Modulus):
        self.modulus = modulus
        unit %= modulus.value
        if unit == 0:
            self.valuation, self.unit = 0, 0
            return
        if unit % modulus.p == 0:
            raise ValueError("unit part must be prime to p")
        self.valuation, self.unit = valuation, unit

    @classmethod
    def zero(cls, modulus: Modulus) -> FactoredResidue:
        return cls(0, 0, modulus)

    @classmethod
    def from_rational(cls, x: Rational, modulus: Modulus) -> FactoredResidue:
        x = Fraction(x)
        if x == 0:
            return cls.zero(modulus)
        p, M = modulus.p, modulus.value
        num, den = x.numerator, x.denominator
        v = 0
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        return cls(v, num * pow(den, -1, M), modulus)

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    def __mul__(self, other: FactoredResidue) -> FactoredResidue:
        if self.is_zero or other.is_zero:
            return FactoredResidue.zero(self.modulus)
        return FactoredResidue(
            self.valuation + other.valuation,
            self.unit * other.unit,
            self.modulus,
        )

    def __truediv__(self, other: FactoredResidue) -> FactoredResidue:
        if other.is_zero:
            raise ZeroDivisionError("division by the zero element")
        if self.is_zero:
            return self
        return FactoredResidue(
            self.valuation - other.valuation,
            self.unit * pow(other.unit, -1, self.modulus.value),
            self.modulus,
        )

    def __pow__(self, k: int) -> FactoredResidue:
        if self.is_zero:
            return self
        return FactoredResidue(
            self.valuation * k, pow(self.unit, k, self.modulus.value), self.modulus
        )

    def __eq__(self, other):
        if not isinstance(other, FactoredResidue):
            return NotImplemented
        return (self.valuation, self.unit, self.modulus) == (
            other.valuation,
            other.unit,
            other.modulus,
        )

    def __repr__(self):
        return f"FactoredResidue(v={self.valuation}, u={self.unit}, mod {self.modulus})"

    def collapse(self) -> Residue:
        if self.is_zero:
            return Residue(0, self.modulus)
        if self.valuation < 0:
            raise NegativeValuationAtCollapse(
                f"valuation {self.valuation} < 0 at collapse"
            )
        if self.valuation >= self.modulus.e:
            return Residue(0, self.modulus)
        return Residue(self.modulus.p**self.valuation * self.unit, self.modulus)


def factored_mul(a: FactoredResidue, b: FactoredResidue) -> FactoredResidue:
    return a * b


def factored_div(a: FactoredResidue, b: FactoredResidue) -> FactoredResidue:
    return a / b
