"""Running claims over ranges of points and collecting reports."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from ..arith import is_prime, primes_in
from ..errors import DomainViolation
from ..sequences import QExpansion, apery_number
from .registry import CONJECTURE, DEFAULT_CONFIG, REGISTRY, ClaimDescriptor, SamplerConfig, get_claim
from .report import ClaimReport, render


@dataclass
class SweepSummary:
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    findings: int = 0
    failures: list = field(default_factory=list)  # theorem failures
    finding_reports: list = field(default_factory=list)  # re-verified conjecture violations

    def as_dict(self) -> dict:
        return {
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "findings": self.findings,
        }


def _render_params(params: dict) -> dict:
    return {k: render(v) for k, v in params.items()}


def _parse_param(text: str):
    v = Fraction(text)
    return int(v) if v.denominator == 1 else v


def check_claim(
    claim_id: str,
    point: int,
    params: Optional[dict] = None,
    *,
    exact: bool = False,
    timed: bool = False,
) -> ClaimReport:
    """Evaluate one claim at one point; DomainViolation when out of domain."""
    desc = get_claim(claim_id)
    params = dict(params or {})
    if not desc.admits(point):
        raise DomainViolation(f"{claim_id}: point {point} outside domain ({desc.domain})")
    if not desc.in_domain(point, params):
        raise DomainViolation(f"{claim_id}: parameters {params} outside domain at {point}")
    start = time.perf_counter_ns()
    out = desc.check(point, params, exact)
    us = (time.perf_counter_ns() - start) // 1000 if timed else 0
    return ClaimReport(
        claim=claim_id,
        point=point,
        params=_render_params(params),
        modulus=out.modulus,
        lhs=render(out.lhs),
        rhs=render(out.rhs),
        passed=out.passed,
        us=int(us),
    )


def check_ao_beukers(p: int, coeffs: Optional[QExpansion] = None) -> ClaimReport:
    """Compare A_{(p-1)/2} with the eta-product coefficient a(p) mod p^2."""
    if not (p > 3 and is_prime(p)):
        raise DomainViolation("the Beukers congruence needs a prime p > 3")
    if coeffs is None:
        return check_claim("ao-beukers", p)
    if p > len(coeffs.coefficients):
        raise DomainViolation(f"expansion too short for p = {p}")
    M = p * p
    lhs, rhs = apery_number((p - 1) // 2) % M, coeffs.a(p) % M
    return ClaimReport("ao-beukers", p, {}, f"{p}^2", str(lhs), str(rhs), lhs == rhs)


def check_conjecture_4_3(n: int) -> list[ClaimReport]:
    desc = get_claim("4.3")
    return [check_claim("4.3", n, prm) for prm in desc.params(n, DEFAULT_CONFIG)]


def points_for(desc: ClaimDescriptor, pmin: int, pmax: int, nmax: int) -> list[int]:
    if desc.point == "n":
        return list(range(1, nmax + 1))
    return [p for p in primes_in(pmin, pmax) if desc.admits(p)]


def _job(args):
    """Worker body: all reports for one (claim, point)."""
    claim_id, point, cfg, timed = args
    desc = REGISTRY[claim_id]
    out = []
    for prm in desc.params(point, cfg):
        try:
            rep = check_claim(claim_id, point, prm, timed=timed)
        except DomainViolation:
            out.append(("skip", None))
            continue
        status = "pass"
        if not rep.passed:
            if desc.status == CONJECTURE:
                # a violation only counts if the exact path agrees
                again = check_claim(claim_id, point, prm, exact=True)
                status = "finding" if not again.passed else "mismatch"
            else:
                status = "fail"
        out.append((status, rep))
    return out


def sweep(
    claim_ids: Iterable[str],
    *,
    pmin: int = 2,
    pmax: int = 100,
    nmax: int = 60,
    config: SamplerConfig = DEFAULT_CONFIG,
    jobs: int = 1,
    timed: bool = False,
) -> tuple[list[ClaimReport], SweepSummary]:
    """Run claims over primes in [pmin, pmax] (or n = 1..nmax).

    Reports come back in registry order, then point, then parameter order,
    whatever the number of workers.  A conjecture row whose sides differ is
    recomputed through exact rationals; only a confirmed violation is a
    finding.  Disagreement between the two paths is a bug and counts as a
    failure.
    """
    if pmin > pmax:
        raise ValueError("pmin must not exceed pmax")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    order = [cid for cid in REGISTRY if cid in set(claim_ids)]
    tasks = []
    for cid in order:
        desc = REGISTRY[cid]
        tasks += [(cid, pt, config, timed) for pt in points_for(desc, pmin, pmax, nmax)]

    if jobs == 1:
        results = [_job(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_job, tasks, chunksize=4))

    reports: list[ClaimReport] = []
    summary = SweepSummary()
    for rows in results:
        for status, rep in rows:
            if status == "skip":
                summary.skipped += 1
                continue
            summary.checked += 1
            reports.append(rep)
            if status == "pass":
                summary.passed += 1
            elif status == "finding":
                summary.findings += 1
                summary.finding_reports.append(rep)
            else:
                summary.failed += 1
                summary.failures.append(rep)
    return reports, summary


def parse_params(items: Iterable[str]) -> dict:
    """key=value pairs to a parameter dict; values are rationals when possible."""
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {item!r}")
        try:
            out[key] = _parse_param(value)
        except (ValueError, ZeroDivisionError):
            out[key] = value
    return out

