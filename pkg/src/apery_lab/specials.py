"""Bernoulli numbers, Euler numbers and harmonic numbers, exact and mod p^e."""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .arith import Modulus, Residue, reduce_rational
from .errors import DenominatorDivisibleByP


class SpecialTable:
    """Grow-only memo of B_0..B_n and E_0..E_n.

    Extension happens under a lock so concurrent readers always see a
    consistent prefix.
    """

    def __init__(self):
        self.bernoulli: list[Fraction] = [Fraction(1)]
        self.euler: list[int] = [1]
        self._lock = threading.Lock()

    def bernoulli_upto(self, n: int) -> list[Fraction]:
        if n >= len(self.bernoulli):
            with self._lock:
                B = self.bernoulli
                for m in range(len(B), n + 1):
                    if m > 1 and m % 2:
                        B.append(Fraction(0))
                        continue
                    # sum_{k<=m} C(m+1,k) B_k = 0
                    s = sum(comb(m + 1, k) * B[k] for k in range(m) if B[k])
                    B.append(-s / (m + 1))
        return self.bernoulli

    def euler_upto(self, n: int) -> list[int]:
        if n >= len(self.euler):
            with self._lock:
                E = self.euler
                for m in range(len(E), n + 1):
                    if m % 2:
                        E.append(0)
                        continue
                    # sum over even k of C(m,k) E_{m-k} = 0
                    E.append(-sum(comb(m, k) * E[m - k] for k in range(2, m + 1, 2)))
        return self.euler


_TABLE = SpecialTable()


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _TABLE.bernoulli_upto(n)[n]


def euler_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _TABLE.euler_upto(n)[n]


def harmonic(n: int, m: int = 1) -> Fraction:
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return sum((Fraction(1, k**m) for k in range(1, n + 1)), Fraction(0))


def bernoulli_mod(p: int, n: int, e: int) -> Residue:
    if n >= 2 and n % 2 == 0 and n % (p - 1) == 0:
        raise DenominatorDivisibleByP(f"(p-1) | {n}: B_{n} has p in its denominator")
    return reduce_rational(bernoulli(n), Modulus(p, e))


def euler_mod(p: int, n: int, e: int) -> Residue:
    return Residue(euler_number(n), Modulus(p, e))


def harmonic_mod(p: int, n: int, m: int, e: int) -> Residue:
    mod = Modulus(p, e)
    if n >= p:
        return reduce_rational(harmonic(n, m), mod)
    M = mod.value
    return Residue(sum(pow(k, -m, M) for k in range(1, n + 1)), mod)


def harmonic_prefix_mod(p: int, n: int, m: int, M: int) -> list[int]:
    """[H_0^(m), ..., H_n^(m)] mod M for n < p."""
    out = [0]
    acc = 0
    for k in range(1, n + 1):
        acc = (acc + pow(k, -m, M)) % M
        out.append(acc)
    return out
