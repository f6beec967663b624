from fractions import Fraction

import pytest

from apery_lab.claims.registry import (
    CONJECTURE,
    CONJECTURE_SUITE,
    IDENTITY,
    PRESETS,
    REGISTRY,
    THEOREM,
    THEOREM_SUITE,
    SamplerConfig,
    expand_claim_ids,
    get_claim,
    list_claims,
)
from apery_lab.claims.report import ClaimReport, from_csv, from_jsonl, render, to_csv, to_jsonl
from apery_lab.claims.search import catalan_square_stream, search_remark_1_4
from apery_lab.claims.sweep import check_ao_beukers, check_claim, check_conjecture_4_3, sweep
from apery_lab.errors import DomainViolation, UnknownClaim
from apery_lab.sequences import catalan_square_sum, eta_product_coeffs


def test_registry_contents():
    ids = [d.id for d in list_claims()]
    assert len(ids) == len(set(ids))
    assert get_claim("1.6").e == 5
    assert get_claim("4.2-44").e == 6
    assert get_claim("2.6").kind == IDENTITY
    assert all(d.e is None or 1 <= d.e <= 6 for d in list_claims())
    assert set(THEOREM_SUITE) | set(CONJECTURE_SUITE) <= set(REGISTRY)
    assert all(get_claim(c).status == CONJECTURE for c in ("4.1iA", "4.1iB", "4.1ii", "4.2-div", "4.2-44", "4.2-45", "4.3", "4.4", "r1.2-mod-p2"))
    assert all(get_claim(c).status == THEOREM for c in THEOREM_SUITE)
    with pytest.raises(UnknownClaim):
        get_claim("9.9")


def test_presets_expand():
    assert expand_claim_ids("all") == list(REGISTRY)
    assert expand_claim_ids("1.6,1.7,1.6") == ["1.6", "1.7"]
    assert expand_claim_ids("all-theorems") == list(PRESETS["all-theorems"])
    with pytest.raises(UnknownClaim):
        expand_claim_ids("1.6,bogus")


def test_point_checks():
    r = check_claim("1.6", 5)
    assert (r.passed, r.lhs, r.rhs, r.modulus) == (True, "1255", "1255", "5^5")
    r = check_claim("1.7", 5)
    assert (r.lhs, r.rhs, r.modulus) == ("130", "130", "5^4")
    r = check_claim("1.17", 5)
    assert (r.lhs, r.rhs) == ("26", "26")
    r = check_claim("1.8", 5, {"x": -2})
    assert (r.lhs, r.rhs, r.modulus) == ("19", "19", "5^2")
    r = check_claim("1.11", 3, {"x": 2})
    assert (r.lhs, r.rhs, r.modulus) == ("6", "6", "3^2")
    assert check_claim("1.9", 3).rhs == "1"


def test_exact_and_modular_paths_agree():
    for cid in ("1.3", "1.12", "1.13", "1.16", "2.13", "4.1ii", "4.4", "r4.2b-2"):
        desc = get_claim(cid)
        for p in (7, 11, 13):
            if not desc.admits(p):
                continue
            for prm in list(desc.params(p, SamplerConfig(t_depth=2)))[:12]:
                if not desc.in_domain(p, prm):
                    continue
                a = check_claim(cid, p, prm)
                b = check_claim(cid, p, prm, exact=True)
                assert (a.lhs, a.rhs) == (b.lhs, b.rhs), (cid, p, prm)


def test_domain_violations_are_raised():
    with pytest.raises(DomainViolation):
        check_claim("1.6", 3)
    with pytest.raises(DomainViolation):
        check_claim("1.14", 7)
    with pytest.raises(DomainViolation):
        check_claim("1.4a", 5, {"x": 5, "t": 0})
    with pytest.raises(DomainViolation):
        check_claim("1.3", 5, {"x": Fraction(1, 5), "t": 0, "pair": "A=W"})
    with pytest.raises(DomainViolation):
        check_ao_beukers(3)


def test_sweep_records_skips():
    _, s = sweep(["1.4a"], pmax=20)
    assert s.skipped > 0 and s.failed == 0


def test_claim_invariants():
    # the A-sum equals the W-sum separately from the third side
    for p in (7, 11, 13):
        for x in (1, -2, Fraction(1, 4)):
            r = check_claim("1.3", p, {"x": x, "t": 0, "pair": "A=W"})
            assert r.passed
    # for p = 2 (mod 3) both alternating sums vanish mod p^2
    for p in (5, 11, 17, 23):
        assert check_claim("1.10", p, {"part": "zero"}).lhs == "0"
        assert check_claim("1.10", p, {"part": "zero-1/16"}).lhs == "0"


def test_ao_beukers():
    q = eta_product_coeffs(100)
    for p in (5, 7, 11, 13, 97):
        assert check_ao_beukers(p, q).passed
    r = check_ao_beukers(5, q)
    assert r.lhs == r.rhs == str(73 % 25)
    with pytest.raises(DomainViolation):
        check_ao_beukers(101, q)


def test_conjecture_43_bundle():
    reports = check_conjecture_4_3(2)
    parts = {r.params["part"]: r for r in reports if "p" not in r.params}
    assert parts["den-s"].lhs == "4"
    assert parts["den-t"].lhs == "32"
    assert parts["num-s-mod12"].lhs == "7"
    assert all(r.passed for n in range(1, 28) for r in check_conjecture_4_3(n))


def test_report_round_trip():
    reports, _ = sweep(["1.3", "1.5", "4.3"], pmax=13, nmax=5)
    assert from_jsonl(to_jsonl(reports)) == reports
    assert from_csv(to_csv(reports)) == reports
    assert render(Fraction(-5, 4)) == "-5/4" and render(Fraction(6, 1)) == "6"


def test_report_json_shape():
    line = check_claim("1.6", 5).to_json()
    assert line == '{"claim": "1.6", "point": 5, "params": {}, "modulus": "5^5", "lhs": "1255", "rhs": "1255", "pass": true, "us": 0}'
    assert ClaimReport.from_json(line).passed


def test_sweep_is_deterministic_across_jobs():
    ids = ["1.3", "1.12", "2.8", "4.2-div"]
    a, _ = sweep(ids, pmax=40, nmax=12)
    b, _ = sweep(ids, pmax=40, nmax=12, jobs=3)
    assert to_jsonl(a) == to_jsonl(b)


def test_search():
    assert search_remark_1_4(100) == {"composite_hits": [], "prime_p3_hits": []}
    assert sum(catalan_square_sum(k) for k in (1, 2, 3)) == 42
    stream = catalan_square_stream()
    assert [next(stream) for _ in range(30)] == [catalan_square_sum(n) for n in range(30)]
    with pytest.raises(ValueError):
        search_remark_1_4(1)


def test_finding_for_4_4_at_five():
    """(4.4) fails mod 5^6 at p = 5: the difference has 5-adic valuation 5."""
    from apery_lab.arith import p_valuation
    from apery_lab.sequences import apery_number
    from apery_lab.specials import harmonic

    p = 5
    diff = sum((2 * k + 1) * apery_number(k) for k in range(p)) - (p - Fraction(7, 2) * p * p * harmonic(p - 1))
    assert p_valuation(diff, p) == 5
    _, s = sweep(["4.2-44"], pmax=150)
    assert s.findings == 1 and s.finding_reports[0].point == 5 and s.failed == 0
