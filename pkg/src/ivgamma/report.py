"""Verification records and reports."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
CORRECTED = "corrected-form-passes"
INFO = "info"
STATUSES = (PASS, FAIL, CORRECTED, INFO)


def _plain(x):
    """Make witnesses JSON friendly without losing exactness (ints stay ints)."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (frozenset, set)):
        return sorted(_plain(v) for v in x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Record:
    suite: str
    identity: str
    locus: str
    params: dict
    status: str
    witness: dict | None = None
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.status in (FAIL, CORRECTED) and not self.witness:
            raise ValueError(f"{self.identity}: status {self.status} requires a witness")

    def sort_key(self):
        return (self.suite, self.identity, json.dumps(_plain(self.params), sort_keys=True))

    def to_json(self) -> dict:
        d = {
            "suite": self.suite,
            "identity": self.identity,
            "locus": self.locus,
            "params": _plain(self.params),
            "status": self.status,
        }
        if self.witness is not None:
            d["witness"] = _plain(self.witness)
        if self.note:
            d["note"] = self.note
        return d


def check(suite, identity, locus, params, ok: bool, witness=None, note="") -> Record:
    return Record(suite, identity, locus, params, PASS if ok else FAIL, None if ok else witness, note)


def corrected(suite, identity, locus, params, printed_ok: bool, corrected_ok: bool, witness, note="") -> Record:
    """Record for an identity checked both as printed and in corrected form."""
    if printed_ok and corrected_ok:
        return Record(suite, identity, locus, params, PASS, None, note)
    if corrected_ok:
        return Record(suite, identity, locus, params, CORRECTED, witness, note)
    return Record(suite, identity, locus, params, FAIL, witness, note)


@dataclass
class VerificationReport:
    suites: list[str] = field(default_factory=list)
    records: list[Record] = field(default_factory=list)

    def extend(self, recs):
        self.records.extend(recs)

    def sorted_records(self) -> list[Record]:
        return sorted(self.records, key=Record.sort_key)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if r.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for r in self.records:
            out[r.status] += 1
        return out

    def errata(self) -> list[Record]:
        return [r for r in self.sorted_records() if r.status == CORRECTED]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "suites": sorted(self.suites),
            "summary": self.counts(),
            "records": [r.to_json() for r in self.sorted_records()],
        }

    def dumps(self, fmt: str = "json") -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["suite", "identity", "locus", "params", "status", "witness", "note"])
            for r in self.sorted_records():
                j = r.to_json()
                w.writerow([
                    r.suite, r.identity, r.locus,
                    json.dumps(j["params"], sort_keys=True), r.status,
                    json.dumps(j.get("witness"), sort_keys=True) if r.witness is not None else "",
                    r.note,
                ])
            return buf.getvalue()
        raise ValueError(f"unknown format {fmt!r}")
