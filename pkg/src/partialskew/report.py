"""Check results and report serialization shared by the library and the CLI.

The structured form is canonical: keys sorted, checks sorted by name,
timings stripped.  Two runs on the same scenario therefore serialize to
byte-identical output, and parsing the structured form back yields an equal
Report value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ParseError

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    measured: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    seconds: float | None = field(default=None, compare=False)

    def ok(self):
        return self.status != FAIL


def check(name, passed, measured=None, witnesses=None, seconds=None):
    return CheckResult(name, PASS if passed else FAIL,
                       measured or {}, witnesses or [], seconds)


@dataclass
class Report:
    scenario: str
    checks: list

    def passed(self):
        return all(c.ok() for c in self.checks)

    def extend(self, results):
        self.checks.extend(results)

    def named(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def sorted_checks(self):
        return sorted(self.checks, key=lambda c: c.name)

    def canonical(self):
        return Report(self.scenario, self.sorted_checks())


def _measured_str(measured):
    return " ".join(f"{k}={measured[k]}" for k in sorted(measured))


def emit_report(report, fmt="text"):
    """Render a report; fmt is 'text' (table) or 'structured' (canonical JSON)."""
    if fmt == "structured":
        payload = {
            "scenario": report.scenario,
            "checks": [
                {
                    "name": c.name,
                    "status": c.status,
                    "measured": c.measured,
                    "witnesses": list(c.witnesses),
                }
                for c in report.sorted_checks()
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")

    checks = report.sorted_checks()
    name_w = max([len(c.name) for c in checks] + [len("check")])
    lines = [f"scenario: {report.scenario}",
             f"{'check'.ljust(name_w)}  {'status'.ljust(6)}  details"]
    lines.append("-" * len(lines[-1]))
    for c in checks:
        detail = _measured_str(c.measured)
        if c.seconds is not None:
            detail = (detail + f"  [{c.seconds:.3f}s]").strip()
        lines.append(f"{c.name.ljust(name_w)}  {c.status.ljust(6)}  {detail}".rstrip())
        for w in c.witnesses:
            lines.append(f"{''.ljust(name_w)}  {' ' * 6}  ! {w}")
    verdict = "PASS" if report.passed() else "FAIL"
    lines.append(f"result: {verdict} ({sum(1 for c in checks if c.status == PASS)}"
                 f"/{len(checks)} checks passed)")
    return "\n".join(lines) + "\n"


def parse_structured(text):
    """Inverse of emit_report(..., 'structured')."""
    try:
        payload = json.loads(text)
        checks = [CheckResult(c["name"], c["status"], dict(c["measured"]),
                              list(c["witnesses"]))
                  for c in payload["checks"]]
        return Report(payload["scenario"], checks)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad structured report: {exc}") from None
