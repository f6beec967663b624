from math import isqrt

import pytest

from apery_lab.arith import primes_in
from apery_lab.errors import ConventionInapplicable
from apery_lab.quadform import (
    X_1_MOD_4,
    X_ODD,
    QuadRep,
    c_of_p,
    cornacchia,
    four_x2_minus_2p,
    normalize_rep,
    sqrt_mod,
)


def brute_reps(p, d):
    return {(x, y) for x in range(1, isqrt(p) + 1) for y in range(1, isqrt(p) + 1) if x * x + d * y * y == p}


def test_sqrt_mod():
    for p in primes_in(3, 400):
        for a in range(p):
            if a == 0 or pow(a, (p - 1) // 2, p) == 1:
                r = sqrt_mod(a, p)
                assert r * r % p == a
            else:
                with pytest.raises(ValueError):
                    sqrt_mod(a, p)


def test_cornacchia_against_brute_force():
    for p in primes_in(3, 2000):
        for d in (1, 2, 3, 4):
            if d == 3 and p == 3:
                continue
            rep = cornacchia(p, d)
            brute = brute_reps(p, d)
            assert (rep is not None) == bool(brute), (p, d)
            if rep is not None:
                assert rep.check() and (rep.x, rep.y) in brute
                if d == 1:
                    assert rep.x % 2 == 1


def test_examples():
    assert cornacchia(13, 1) == QuadRep(13, 1, 3, 2)
    assert cornacchia(11, 2) == QuadRep(11, 2, 3, 1)
    assert normalize_rep(cornacchia(13, 1), X_1_MOD_4) == QuadRep(13, 1, -3, 2)
    assert normalize_rep(QuadRep(13, 1, 2, 3), X_ODD) == QuadRep(13, 1, 3, 2)
    with pytest.raises(ConventionInapplicable):
        normalize_rep(cornacchia(11, 2), X_ODD)
    with pytest.raises(ValueError):
        cornacchia(2, 1)


def test_one_mod_four_convention():
    for p in primes_in(5, 2000):
        if p % 4 == 1:
            r = normalize_rep(cornacchia(p, 1), X_1_MOD_4)
            assert r.x % 4 == 1 and r.check()


def test_c_of_p():
    assert c_of_p(3) == -2
    assert c_of_p(11) == 14
    assert c_of_p(5) == 0 and c_of_p(7) == 0
    for p in primes_in(3, 2000):
        if p % 8 in (1, 3):
            x = min(x for x, _ in brute_reps(p, 2))
            assert c_of_p(p) == 4 * x * x - 2 * p
    # 4x^2 - 2p is independent of which representation is chosen
    assert four_x2_minus_2p(13, 1) == 4 * 9 - 26
