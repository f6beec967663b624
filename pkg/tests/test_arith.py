import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from apery_lab.arith import (
    INF,
    FactoredResidue,
    Modulus,
    Residue,
    binom_gen,
    binom_int,
    factored_div,
    factored_mul,
    fermat_quotient,
    int_valuation,
    is_prime,
    jacobi,
    legendre,
    mod_inv,
    p_valuation,
    primes_in,
    reduce_mod,
    reduce_rational,
)
from apery_lab.errors import (
    DenominatorDivisibleByP,
    NegativeValuationAtCollapse,
    NotInvertible,
    NotPIntegral,
)

from conftest import egcd_inverse, reduce_oracle, small_primes

PRIMES = small_primes(60)


def test_modulus_validation():
    assert Modulus(5, 5).value == 3125
    assert str(Modulus(7, 2)) == "7^2"
    with pytest.raises(ValueError):
        Modulus(6, 1)
    with pytest.raises(ValueError):
        Modulus(5, 7)
    with pytest.raises(ValueError):
        Modulus(5, 0)


def test_mod_inv_example():
    assert mod_inv(Residue(36, Modulus(5, 5))).value == 2691
    assert 36 * 2691 % 3125 == 1


def test_mod_inv_matches_extended_gcd():
    rng = random.Random(1)
    for p in PRIMES[:10]:
        for e in range(1, 5):
            M = p**e
            for _ in range(20):
                a = rng.randrange(1, M)
                if a % p == 0:
                    with pytest.raises(NotInvertible):
                        mod_inv(Residue(a, Modulus(p, e)))
                else:
                    assert mod_inv(Residue(a, Modulus(p, e))).value == egcd_inverse(a, M)


@given(st.sampled_from(PRIMES[:8]), st.integers(1, 4), st.integers(), st.integers(), st.integers())
def test_residue_ring_laws(p, e, a, b, c):
    m = Modulus(p, e)
    A, B, C = Residue(a, m), Residue(b, m), Residue(c, m)
    assert (A + B) * C == A * C + B * C
    assert (A - B).value == (a - b) % m.value
    assert (A * B).value == a * b % m.value
    assert -A + A == Residue(0, m)
    if b % p:
        assert (A / B) * B == A


def test_residue_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        Residue(1, Modulus(5, 1)) + Residue(1, Modulus(5, 2))


def test_reduce_rational():
    assert reduce_rational(Fraction(1, 4), Modulus(5, 2)).value == 19
    with pytest.raises(NotPIntegral):
        reduce_rational(Fraction(1, 5), Modulus(5, 2))


@given(st.sampled_from(PRIMES[:10]), st.integers(1, 5), st.fractions())
def test_reduce_rational_oracle(p, e, x):
    if x.denominator % p == 0:
        with pytest.raises(NotPIntegral):
            reduce_rational(x, Modulus(p, e))
        return
    assert reduce_rational(x, Modulus(p, e)).value == reduce_oracle(x, p, e)
    assert reduce_mod(x, p**e, p) == reduce_oracle(x, p, e)


def test_valuations():
    assert int_valuation(250, 5) == 3
    assert p_valuation(Fraction(3, 50), 5) == -2
    assert p_valuation(0, 7) == INF
    with pytest.raises(ValueError):
        int_valuation(0, 3)


def test_legendre_matches_euler_criterion():
    for p in PRIMES[1:]:
        squares = {k * k % p for k in range(1, p)}
        for a in range(-2 * p, 2 * p):
            expected = 0 if a % p == 0 else (1 if a % p in squares else -1)
            assert legendre(a, p) == expected
            if a % p:
                assert pow(a, (p - 1) // 2, p) == expected % p


def test_legendre_examples_and_rationals():
    assert legendre(-2, 5) == -1
    assert legendre(2, 7) == 1
    assert legendre(Fraction(1, 4), 7) == 1
    assert legendre(Fraction(3, 2), 7) == legendre(3, 7) * legendre(2, 7)
    with pytest.raises(DenominatorDivisibleByP):
        legendre(Fraction(1, 7), 7)


def test_jacobi():
    assert jacobi(5, 3) == -1
    assert jacobi(7, 3) == 1
    assert jacobi(-1, 7) == -1
    for n in range(3, 80, 2):
        factors = [q for q in small_primes(n) if n % q == 0]
        for a in range(-20, 20):
            expected = 1
            m = n
            for q in factors:
                while m % q == 0:
                    expected *= legendre(a, q)
                    m //= q
            assert jacobi(a, n) == expected


def test_fermat_quotient():
    assert fermat_quotient(5).value == 3
    assert fermat_quotient(3).value == 1
    assert fermat_quotient(7).value == 2
    for p in PRIMES[1:]:
        assert fermat_quotient(p, 3).value == (pow(2, p - 1) - 1) // p % p**3


def test_binomials():
    assert binom_int(14, 2) == 91
    assert binom_gen(Fraction(-1, 2), 2) == Fraction(3, 8)
    assert binom_gen(-2, 3) == -4
    for r in range(8):
        assert binom_gen(-2, r) == (-1) ** r * (r + 1)
        assert binom_gen(10, r) == binom_int(10, r)


def test_primes():
    assert len(primes_in(2, 5000)) == 669
    assert primes_in(10, 30) == [11, 13, 17, 19, 23, 29]
    assert primes_in(2, 500) == small_primes(500)
    assert [n for n in range(200) if is_prime(n)] == small_primes(199)


def _random_rational(rng, p):
    num = rng.randint(1, 10**4) * p ** rng.randint(0, 3) * rng.choice((1, -1))
    den = rng.randint(1, 10**3) * p ** rng.randint(0, 2)
    return Fraction(num, den)


def test_factored_residue_chains_match_exact():
    """1000 random product/quotient chains against exact rationals."""
    rng = random.Random(20241016)
    for _ in range(1000):
        p = rng.choice(PRIMES[:8])
        e = rng.randint(1, 4)
        m = Modulus(p, e)
        exact = Fraction(1)
        fr = FactoredResidue.from_rational(1, m)
        for _ in range(rng.randint(1, 12)):
            x = _random_rational(rng, p)
            if rng.random() < 0.5:
                exact *= x
                fr = factored_mul(fr, FactoredResidue.from_rational(x, m))
            else:
                exact /= x
                fr = factored_div(fr, FactoredResidue.from_rational(x, m))
        assert fr.valuation == p_valuation(exact, p)
        if fr.valuation < 0:
            with pytest.raises(NegativeValuationAtCollapse):
                fr.collapse()
        else:
            assert fr.collapse().value == reduce_oracle(exact, p, e)


def test_factored_residue_zero():
    m = Modulus(5, 2)
    z = FactoredResidue.zero(m)
    assert z.is_zero and (z * FactoredResidue.from_rational(3, m)).is_zero
    assert z.collapse().value == 0
    with pytest.raises(ZeroDivisionError):
        FactoredResidue.from_rational(3, m) / z
    assert FactoredResidue.from_rational(125, m).collapse().value == 0
    assert (FactoredResidue.from_rational(Fraction(5, 2), m) ** 2).valuation == 2
