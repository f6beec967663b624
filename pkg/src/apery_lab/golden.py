"""Known values used by the ``selftest`` command and the test suite.

Each entry is (label, thunk, expected).  Expected values are hand-checked
or come from independent oracles (direct sums, brute force, extended gcd).
"""
from __future__ import annotations

from fractions import Fraction as F

from .arith import (
    Modulus,
    Residue,
    binom_gen,
    binom_int,
    fermat_quotient,
    jacobi,
    legendre,
    mod_inv,
    primes_in,
    reduce_rational,
)
from .claims.registry import IDENTITY, get_claim
from .claims.search import search_remark_1_4
from .claims.sweep import check_ao_beukers, check_claim, check_conjecture_4_3, sweep
from .quadform import X_1_MOD_4, c_of_p, cornacchia, normalize_rep
from .sequences import (
    ODD,
    PolySequenceKind,
    SumSpec,
    apery_poly,
    catalan,
    catalan_square_sum,
    conj43_s,
    conj43_t,
    delannoy,
    delannoy_poly,
    eta_product_coeffs,
    hilbert_inverse_trace,
    recurrence_check_f,
    recurrence_check_g,
    s_of_n,
    sum_cb2,
    sum_cb3,
    sum_cb3_k3,
    sum_quartic,
    sum_sequence_mod,
    binom_power_sum,
    w_poly,
)
from .specials import bernoulli, bernoulli_mod, euler_mod, euler_number, harmonic

S_TABLE = (1, 8, 127, 2624, 61501, 1552760, 41186755, 1131614720)


def _pair(report):
    return (report.passed, report.lhs, report.rhs, report.modulus)


def _rep(rep):
    return (rep.x, rep.y) if rep else None


def golden_cases() -> list[tuple]:
    m = Modulus
    cases = [
        ("mod_inv 36 mod 5^5", lambda: mod_inv(Residue(36, m(5, 5))).value, 2691),
        ("legendre(-2/5)", lambda: legendre(-2, 5), -1),
        ("legendre(2/7)", lambda: legendre(2, 7), 1),
        ("jacobi(5/3)", lambda: jacobi(5, 3), -1),
        ("jacobi(7/3)", lambda: jacobi(7, 3), 1),
        ("q_5(2)", lambda: fermat_quotient(5).value, 3),
        ("q_3(2)", lambda: fermat_quotient(3).value, 1),
        ("q_7(2)", lambda: fermat_quotient(7).value, 2),
        ("1/4 mod 25", lambda: reduce_rational(F(1, 4), m(5, 2)).value, 19),
        ("C(14,2)", lambda: binom_int(14, 2), 91),
        ("C(-1/2,2)", lambda: binom_gen(F(-1, 2), 2), F(3, 8)),
        ("C(-2,3)", lambda: binom_gen(-2, 3), -4),
        ("pi(5000)", lambda: len(primes_in(2, 5000)), 669),
        ("A_2(1)", lambda: apery_poly(2, 1), 73),
        ("A_1(1)", lambda: apery_poly(1, 1), 5),
        ("W_2(1)", lambda: w_poly(2, 1), 5),
        ("W_4(1)", lambda: w_poly(4, 1), 181),
        ("D_0..D_4", lambda: [delannoy(n) for n in range(5)], [1, 3, 13, 63, 321]),
        ("D_1(-1/4)", lambda: delannoy_poly(1, F(-1, 4)), F(1, 2)),
        ("C_0..C_4", lambda: [catalan(n) for n in range(5)], [1, 1, 2, 5, 14]),
        ("a_3", lambda: catalan_square_sum(3), 33),
        ("s_1..s_8", lambda: [s_of_n(n) for n in range(1, 9)], list(S_TABLE)),
        ("Hilbert trace n=2", lambda: hilbert_inverse_trace(2), 8),
        ("Hilbert trace n=5", lambda: hilbert_inverse_trace(5), 61501),
        ("s(2)", lambda: conj43_s(2), F(-5, 4)),
        ("t(2)", lambda: conj43_t(2), F(5, 32)),
        ("eta a(3)", lambda: eta_product_coeffs(10).a(3), -4),
        ("eta a(5)", lambda: eta_product_coeffs(10).a(5), -2),
        (
            "sum (2k+1) A_k mod 5^5",
            lambda: sum_sequence_mod(SumSpec(PolySequenceKind.APERY, F(1), 1, ODD), m(5, 5)).value,
            1255,
        ),
        (
            "sum (2k+1) A_k(-1) mod 5^4",
            lambda: sum_sequence_mod(SumSpec(PolySequenceKind.APERY, F(-1), 1, ODD), m(5, 4)).value,
            130,
        ),
        (
            "sum D_k mod 5^3",
            lambda: sum_sequence_mod(SumSpec(PolySequenceKind.DELANNOY, F(1)), m(5, 3)).value,
            26,
        ),
        ("sum_cb3(3, e=1, m=16)", lambda: sum_cb3(3, 1, 16).value, 0),
        ("sum_cb3(5, e=2, m=64)", lambda: sum_cb3(5, 2, 64).value, 19),
        # the quartic sum at p=5 agrees with sum_{k<5} A_k = 34525 = 0 (mod 5)
        ("sum_quartic(5, e=1, x=1)", lambda: sum_quartic(5, 1, 1).value, 0),
        ("sum_cb2(5, e=2, m=16)", lambda: sum_cb2(5, 2, 16).value, 1),
        # k^3 C(2k,k)^3/64^k vanishes mod p^2 only for p > 5; p = 13 is the first case
        ("sum_cb3_k3(13, a=1)", lambda: sum_cb3_k3(13, 1).value, 0),
        ("sum_cb3_k3(13, a=2)", lambda: sum_cb3_k3(13, 2).value, 0),
        ("binom power p=5 x=7 -,2", lambda: binom_power_sum(5, 2, 7, -1, 2).value, 18),
        ("binom power p=5 x=7 +,2", lambda: binom_power_sum(5, 2, 7, 1, 2).value, 16),
        ("binom power p=7 x=-2 -,3", lambda: binom_power_sum(7, 2, -2, -1, 3).value, 0),
        ("f recurrence p=5 k=0,1", lambda: [recurrence_check_f(5, k) for k in (0, 1)], [True, True]),
        ("f recurrence p=7 k=0..2", lambda: [recurrence_check_f(7, k) for k in range(3)], [True] * 3),
        ("g recurrence p=5 k=0,3; p=7 k=5", lambda: [recurrence_check_g(5, 0), recurrence_check_g(5, 3), recurrence_check_g(7, 5)], [True] * 3),
        ("B_0", lambda: bernoulli(0), 1),
        ("B_2", lambda: bernoulli(2), F(1, 6)),
        ("E_0", lambda: euler_number(0), 1),
        ("E_2, E_4", lambda: (euler_number(2), euler_number(4)), (-1, 5)),
        ("H_4", lambda: harmonic(4), F(25, 12)),
        ("H_2^(2)", lambda: harmonic(2, 2), F(5, 4)),
        # 1/6 mod 5^5 is 521 (6 * 521 = 3126)
        ("bernoulli_mod(5, 2, 5)", lambda: bernoulli_mod(5, 2, 5).value, 521),
        ("euler_mod(5, 2, 1)", lambda: euler_mod(5, 2, 1).value, 4),
        ("cornacchia(13, 1)", lambda: _rep(cornacchia(13, 1)), (3, 2)),
        ("cornacchia(11, 2)", lambda: _rep(cornacchia(11, 2)), (3, 1)),
        ("13 = x^2 + y^2, x = 1 mod 4", lambda: _rep(normalize_rep(cornacchia(13, 1), X_1_MOD_4)), (-3, 2)),
        ("c(3)", lambda: c_of_p(3), -2),
        ("c(11)", lambda: c_of_p(11), 14),
        ("registry 1.6 e", lambda: get_claim("1.6").e, 5),
        ("registry 4.2-44 e", lambda: get_claim("4.2-44").e, 6),
        ("registry 2.6 kind", lambda: get_claim("2.6").kind, IDENTITY),
        ("check 1.6 p=5", lambda: _pair(check_claim("1.6", 5)), (True, "1255", "1255", "5^5")),
        ("check 1.17 p=5", lambda: _pair(check_claim("1.17", 5)), (True, "26", "26", "5^3")),
        ("check 1.8 p=5 x=-2", lambda: _pair(check_claim("1.8", 5, {"x": -2})), (True, "19", "19", "5^2")),
        ("check 1.11 p=3 x=2", lambda: _pair(check_claim("1.11", 3, {"x": 2})), (True, "6", "6", "3^2")),
        ("check 1.9 p=3", lambda: _pair(check_claim("1.9", 3)), (True, "1", "1", "3^1")),
        ("check 1.15 p=5", lambda: _pair(check_claim("1.15", 5)), (True, "0", "0", "5^2")),
        ("sweep 1.11, 1.9, 1.15 to 50", lambda: sweep(["1.11", "1.9", "1.15"], pmax=50)[1].failed, 0),
        ("remark 1.4 search to 100", lambda: search_remark_1_4(100), {"composite_hits": [], "prime_p3_hits": []}),
        ("a_1 + a_2 + a_3 mod 16", lambda: sum(catalan_square_sum(k) for k in (1, 2, 3)) % 16, 42 % 16),
        ("4.3 bundle n=1, n=2", lambda: all(r.passed for n in (1, 2) for r in check_conjecture_4_3(n)), True),
        ("Beukers p=5", lambda: _pair(check_ao_beukers(5, eta_product_coeffs(10))), (True, "23", "23", "5^2")),
        ("Beukers p=7", lambda: check_ao_beukers(7).passed, True),
    ]
    return cases


def run_selftest(emit=print) -> int:
    """Run every golden case; returns the number of failures."""
    failures = 0
    for label, thunk, expected in golden_cases():
        try:
            got = thunk()
        except Exception as exc:  # report and keep going
            got = f"{type(exc).__name__}: {exc}"
        ok = got == expected
        failures += not ok
        emit(f"{'PASS' if ok else 'FAIL'}  {label}" + ("" if ok else f"  got {got!r}, want {expected!r}"))
    return failures
