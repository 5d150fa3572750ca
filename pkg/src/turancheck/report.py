"""Check results, suite reports and their serialization.

Rational quantities are kept exact end to end and serialized as "p/q"
strings so that findings (in particular counterexamples) reproduce
bit-for-bit.  Report emission is deterministic: results are sorted
canonically and the JSON/CSV byte streams contain no incidental state
except the timestamp, which is excluded from the config digest.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
HYPOTHESIS_VIOLATION = "hypothesis_violation"

ParamValue = Union[Fraction, int, float, str]


class ReportError(Exception):
    pass


def encode_value(v) -> Union[str, int, float, None]:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (int, float, str)) or v is None:
        return v
    return str(v)


def decode_value(v):
    if isinstance(v, str) and "/" in v:
        num, _, den = v.partition("/")
        try:
            return Fraction(int(num), int(den))
        except ValueError:
            return v
    return v


@dataclass
class CheckResult:
    """Outcome of a single verification."""

    check_id: str
    params: dict
    status: str
    margin: Optional[ParamValue] = None
    counterexample: Optional[dict] = None

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED, HYPOTHESIS_VIOLATION):
            raise ReportError(f"unknown status {self.status!r}")
        if self.status == FAIL and self.counterexample is None:
            self.counterexample = dict(self.params)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        d = {
            "check_id": self.check_id,
            "params": {k: encode_value(v) for k, v in sorted(self.params.items())},
            "status": self.status,
            "margin": encode_value(self.margin),
        }
        if self.counterexample is not None:
            d["counterexample"] = {
                k: encode_value(v) for k, v in sorted(self.counterexample.items())
            }
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        ce = d.get("counterexample")
        return cls(
            check_id=d["check_id"],
            params={k: decode_value(v) for k, v in d["params"].items()},
            status=d["status"],
            margin=decode_value(d.get("margin")),
            counterexample=None if ce is None else {k: decode_value(v) for k, v in ce.items()},
        )

    def sort_key(self):
        return (self.check_id, json.dumps(self.to_dict()["params"], sort_keys=True))


def config_digest(config: dict) -> str:
    """Stable digest of an effective configuration (timestamps excluded)."""
    clean = {k: v for k, v in config.items() if k != "timestamp"}
    blob = json.dumps(clean, sort_keys=True, default=encode_value).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class SuiteReport:
    suite: str
    config_digest: str
    results: list = field(default_factory=list)
    timestamp: str = ""

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0, HYPOTHESIS_VIOLATION: 0}
        for r in self.results:
            counts[r.status] += 1
        return counts

    @property
    def failed(self) -> bool:
        return self.summary[FAIL] > 0

    def canonicalize(self):
        self.results.sort(key=CheckResult.sort_key)
        return self


def emit_report(report: SuiteReport, fmt: str = "json") -> bytes:
    report.canonicalize()
    if fmt == "json":
        doc = {
            "suite": report.suite,
            "config_digest": report.config_digest,
            "timestamp": report.timestamp,
            "summary": report.summary,
            "results": [r.to_dict() for r in report.results],
        }
        return (json.dumps(doc, indent=2, sort_keys=False) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check_id", "params", "status", "margin"])
        for r in report.results:
            params = ";".join(
                f"{k}={encode_value(v)}" for k, v in sorted(r.params.items())
            )
            writer.writerow([r.check_id, params, r.status, encode_value(r.margin)])
        return buf.getvalue().encode()
    raise ReportError(f"unsupported format {fmt!r}")


def parse_report(data: bytes) -> SuiteReport:
    doc = json.loads(data.decode())
    report = SuiteReport(
        suite=doc["suite"],
        config_digest=doc["config_digest"],
        results=[CheckResult.from_dict(d) for d in doc["results"]],
        timestamp=doc.get("timestamp", ""),
    )
    return report
