from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

FIELDS = ("claim", "point", "params", "modulus", "lhs", "rhs", "pass", "us")


def render(value) -> str:
    """Canonical text for a residue, integer or rational ("num/den")."""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    point: int
    params: dict = field(default_factory=dict)
    modulus: str = "exact"
    lhs: str = ""
    rhs: str = ""
    passed: bool = False
    us: int = 0

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "point": self.point,
            "params": dict(self.params),
            "modulus": self.modulus,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "us": self.us,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(", ", ": "))

    @classmethod
    def from_dict(cls, d: dict) -> ClaimReport:
        return cls(
            claim=d["claim"],
            point=int(d["point"]),
            params={str(k): str(v) for k, v in d["params"].items()},
            modulus=d["modulus"],
            lhs=d["lhs"],
            rhs=d["rhs"],
            passed=bool(d["pass"]),
            us=int(d["us"]),
        )

    @classmethod
    def from_json(cls, line: str) -> ClaimReport:
        return cls.from_dict(json.loads(line))

    def csv_row(self) -> list[str]:
        return [
            self.claim,
            str(self.point),
            json.dumps(self.params, separators=(",", ":")),
            self.modulus,
            self.lhs,
            self.rhs,
            "true" if self.passed else "false",
            str(self.us),
        ]

    @classmethod
    def from_csv_row(cls, row: list[str]) -> ClaimReport:
        claim, point, params, modulus, lhs, rhs, passed, us = row
        return cls(claim, int(point), json.loads(params), modulus, lhs, rhs, passed == "true", int(us))


def to_jsonl(reports) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


def from_jsonl(text: str) -> list[ClaimReport]:
    return [ClaimReport.from_json(line) for line in text.splitlines() if line.strip()]


def from_csv(text: str) -> list[ClaimReport]:
    rows = list(csv.reader(io.StringIO(text)))
    return [ClaimReport.from_csv_row(r) for r in rows[1:]]
