from fractions import Fraction
from math import comb, factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from apery_lab.arith import Modulus
from apery_lab.claims.registry import registered_sum_specs
from apery_lab.errors import NotAUnit, NotPIntegral
from apery_lab.sequences import (
    ODD,
    CentralFamily,
    PolySequenceKind,
    SumSpec,
    apery_number,
    apery_poly,
    binom_power_sum,
    binom_power_sum_exact,
    binom_power_terms,
    catalan,
    catalan_square_sum,
    catalan_square_sums,
    central_term_exact,
    conj43_s,
    conj43_t,
    delannoy,
    delannoy_poly,
    eta_product_coeffs,
    hilbert_inverse_trace,
    poly_coeffs,
    recurrence_check_f,
    recurrence_check_g,
    s_of_n,
    sum_cb2,
    sum_cb3,
    sum_cb3_k3,
    sum_cb3_k3_exact,
    sum_quartic,
    sum_sequence_exact,
    sum_sequence_mod,
    w_poly,
)

from conftest import reduce_oracle, small_primes

F = Fraction
S_TABLE = [1, 8, 127, 2624, 61501, 1552760, 41186755, 1131614720]


def A_direct(n, x):
    return sum(F(comb(n, k) ** 2 * comb(n + k, k) ** 2) * F(x) ** k for k in range(n + 1))


def W_direct(n, x):
    return sum(F(comb(n, 2 * k) ** 2 * comb(2 * k, k) ** 2) * F(x) ** k for k in range(n // 2 + 1))


def D_direct(n, x):
    return sum(F(comb(n, k) * comb(n + k, k)) * F(x) ** k for k in range(n + 1))


def test_polynomials_match_definitions():
    for n in range(15):
        for x in (1, -1, 2, F(1, 4), F(-3, 7)):
            assert apery_poly(n, x) == A_direct(n, x)
            assert w_poly(n, x) == W_direct(n, x)
            assert delannoy_poly(n, x) == D_direct(n, x)


def test_small_values():
    assert apery_poly(2, 1) == 73
    assert poly_coeffs(PolySequenceKind.APERY, 2) == (1, 36, 36)
    assert apery_poly(1, 1) == 5
    assert w_poly(2, 1) == 5 and w_poly(4, 1) == 181
    assert [delannoy(n) for n in range(5)] == [1, 3, 13, 63, 321]
    assert delannoy_poly(1, F(-1, 4)) == F(1, 2)
    assert [catalan(n) for n in range(5)] == [1, 1, 2, 5, 14]
    assert catalan_square_sum(3) == 33
    assert apery_number(3) == 1445


def test_catalan_square_recurrence_matches_direct_sum():
    table = catalan_square_sums(60)
    assert table == [sum(comb(n, k) ** 2 * catalan(k) for k in range(n + 1)) for n in range(61)]


def test_s_table_and_hilbert():
    assert [s_of_n(n) for n in range(1, 9)] == S_TABLE
    for n in range(1, 13):
        H = sympy.Matrix(n, n, lambda i, j: sympy.Rational(n, i + j + 1))
        assert hilbert_inverse_trace(n) == F(str(H.inv().trace()))
        assert hilbert_inverse_trace(n) == s_of_n(n)


def test_conjecture_43_values():
    assert conj43_s(2) == F(-5, 4)
    assert conj43_t(2) == F(5, 32)
    assert conj43_s(1) == 1


def test_eta_product_against_naive_expansion():
    N = 60
    poly = [0] * (N + 1)
    poly[0] = 1
    for m in range(1, N + 1):
        for step, power in ((2 * m, 4), (4 * m, 4)):
            for _ in range(power):
                if step > N:
                    break
                poly = [poly[i] - (poly[i - step] if i >= step else 0) for i in range(N + 1)]
    q = eta_product_coeffs(N)
    # q * prod(...) shifts by one
    assert [q.a(n) for n in range(1, N + 1)] == poly[:N]
    assert q.a(3) == -4 and q.a(5) == -2


def test_central_terms():
    for k in range(12):
        assert central_term_exact(CentralFamily.CB2, k) == comb(2 * k, k) ** 2
        assert central_term_exact(CentralFamily.CB3, k) == comb(2 * k, k) ** 3
        assert central_term_exact(CentralFamily.QUARTIC, k) == factorial(4 * k) // factorial(k) ** 4


def test_point_values():
    m = Modulus
    assert sum_sequence_mod(SumSpec(PolySequenceKind.APERY, 1, 1, ODD), m(5, 5)).value == 1255
    assert sum_sequence_mod(SumSpec(PolySequenceKind.APERY, -1, 1, ODD), m(5, 4)).value == 130
    assert sum_sequence_mod(SumSpec(PolySequenceKind.DELANNOY, 1), m(5, 3)).value == 26
    assert sum_cb3(3, 1, 16).value == 0
    assert sum_cb3(5, 2, 64).value == 19
    assert sum_cb2(5, 2, 16).value == 1
    assert sum_quartic(5, 1, 1).value == sum(apery_number(k) for k in range(5)) % 5 == 0
    with pytest.raises(NotAUnit):
        sum_cb3(5, 1, 5)


def test_k3_sum():
    assert sum_cb3_k3(13, 1).value == 0
    assert sum_cb3_k3(5, 1).value == 15  # p = 5 is outside the p > 5 range
    for p in (5, 13, 17, 29):
        assert sum_cb3_k3(p, 1).value == reduce_oracle(sum_cb3_k3_exact(p, 1), p, 2)
    assert sum_cb3_k3(13, 2).value == reduce_oracle(sum_cb3_k3_exact(13, 2), 13, 4)


def test_binom_power_examples():
    assert binom_power_sum(5, 2, 7, -1, 2).value == 18
    assert binom_power_sum(5, 2, 7, 1, 2).value == 16
    assert binom_power_sum(7, 2, -2, -1, 3).value == 0
    assert binom_power_sum_exact(7, -2, -1, 3) == 784


def test_binom_power_terms_are_binomials():
    m = Modulus(7, 3)
    for x in (F(1, 2), F(-5, 3), 10, 49):
        for r, t in enumerate(binom_power_terms(7, 3, x)):
            from apery_lab.arith import binom_gen

            assert t.collapse().value == reduce_oracle(binom_gen(x, r), 7, 3)


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(small_primes(50)),
    st.integers(1, 4),
    st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100),
    st.sampled_from((1, -1)),
    st.integers(1, 7),
)
def test_binom_power_sum_oracle(p, e, x, sign, power):
    if x.denominator % p == 0:
        with pytest.raises(NotPIntegral):
            binom_power_sum(p, e, x, sign, power)
        return
    assert binom_power_sum(p, e, x, sign, power).value == reduce_oracle(
        binom_power_sum_exact(p, x, sign, power), p, e
    )


def test_modular_sums_match_exact_for_all_registered_specs():
    """Modular evaluators vs exact rationals reduced mod p^e, p <= 50, e <= 4."""
    specs = registered_sum_specs()
    for p in small_primes(50):
        for spec in specs:
            if spec.x.denominator % p == 0:
                with pytest.raises(NotPIntegral):
                    sum_sequence_mod(spec, Modulus(p, 1))
                continue
            exact = sum_sequence_exact(spec, p)
            for e in range(1, 5):
                assert sum_sequence_mod(spec, Modulus(p, e)).value == reduce_oracle(exact, p, e), (spec, p, e)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_recurrences(p):
    assert all(recurrence_check_f(p, k) for k in range((p - 3) // 2 + 1))
    assert all(recurrence_check_g(p, k) for k in range(p - 1))
    with pytest.raises(ValueError):
        recurrence_check_f(p, (p - 1) // 2)

