from fractions import Fraction

import pytest


def egcd_inverse(a, m):
    """Modular inverse by the extended Euclidean algorithm (independent of pow)."""
    r0, r1, s0, s1 = m, a % m, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ValueError("not invertible")
    return s0 % m


def reduce_oracle(x, p, e):
    x = Fraction(x)
    M = p**e
    assert x.denominator % p
    return x.numerator * egcd_inverse(x.denominator, M) % M


def small_primes(limit):
    return [n for n in range(2, limit + 1) if all(n % d for d in range(2, int(n**0.5) + 1))]


@pytest.fixture
def primes50():
    return small_primes(50)
