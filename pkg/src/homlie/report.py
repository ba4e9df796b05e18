"""Verification reports in a human layout and a stable key=value layout.

Machine format, one ``key=value`` per line in this order::

    report.version=1
    command=<verb>
    target=<file or catalog name>
    info.<key>=<value>            (zero or more, verb specific)
    check.count=<N>
    check.<k>.name=<dotted check name>
    check.<k>.status=pass|fail|skip
    check.<k>.witness=<basis labels and residual, empty on pass>
    check.<k>.seconds=<wall time, 6 decimals>
    summary.passed=<count>
    summary.failed=<count>
    summary.skipped=<count>
    status=pass|fail
    emit.<k>=<line k of an emitted structure file>   (when not written to a file)

Values never contain newlines; a literal backslash or newline in a value is
escaped as ``\\\\`` or ``\\n``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .checks import AxiomReport, CheckResult
from .errors import WitnessError
from .multilinear import Tensor, render

REPORT_VERSION = 1
PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class CheckLine:
    name: str
    status: str
    witness: str = ""
    seconds: float = 0.0


@dataclass
class Report:
    command: str
    target: str
    checks: list[CheckLine] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    emitted: str | None = None

    @property
    def passed(self) -> bool:
        return all(ch.status != FAIL for ch in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def count(self, status: str) -> int:
        return sum(ch.status == status for ch in self.checks)

    def add(self, line: CheckLine):
        self.checks.append(line)

    def skip(self, name: str, reason: str):
        self.add(CheckLine(name, SKIP, reason))

    def run(self, name: str, thunk: Callable[[], CheckResult | AxiomReport | None],
            names: Sequence[str] | None = None):
        """Time ``thunk`` and record its outcome; WitnessErrors count as failures.

        Returns the thunk's value (None when it raised).
        """
        start = time.perf_counter()
        try:
            value = thunk()
        except WitnessError as exc:
            self.add(CheckLine(name, FAIL, _error_witness(exc, names), time.perf_counter() - start))
            return None
        elapsed = time.perf_counter() - start
        if isinstance(value, AxiomReport):
            share = elapsed / max(len(value.checks), 1)
            for ch in value.checks:
                label = name if len(value.checks) == 1 else f"{name}[{ch.name}]"
                self.add(_line(ch, names, share, label))
        elif isinstance(value, CheckResult):
            self.add(_line(value, names, elapsed, name))
        else:
            self.add(CheckLine(name, PASS, "", elapsed))
        return value

    # --- rendering ------------------------------------------------------------

    def human(self) -> str:
        out = [f"{self.command} {self.target}"]
        for k, v in self.info.items():
            out.append(f"  {k}: {v}")
        width = max((len(ch.name) for ch in self.checks), default=0)
        for ch in self.checks:
            line = f"  [{ch.status.upper():4}] {ch.name.ljust(width)}  {ch.seconds * 1000:8.1f} ms"
            if ch.witness:
                line += f"  {ch.witness}"
            out.append(line)
        out.append(f"{self.count(PASS)} passed, {self.count(FAIL)} failed, "
                   f"{self.count(SKIP)} skipped: {'PASS' if self.passed else 'FAIL'}")
        if self.emitted is not None:
            out.append("")
            out.append(self.emitted.rstrip("\n"))
        return "\n".join(out) + "\n"

    def machine(self) -> str:
        out = [("report.version", REPORT_VERSION), ("command", self.command), ("target", self.target)]
        out += [(f"info.{k}", v) for k, v in self.info.items()]
        out.append(("check.count", len(self.checks)))
        for k, ch in enumerate(self.checks, start=1):
            out += [(f"check.{k}.name", ch.name), (f"check.{k}.status", ch.status),
                    (f"check.{k}.witness", ch.witness), (f"check.{k}.seconds", f"{ch.seconds:.6f}")]
        out += [("summary.passed", self.count(PASS)), ("summary.failed", self.count(FAIL)),
                ("summary.skipped", self.count(SKIP)), ("status", PASS if self.passed else FAIL)]
        if self.emitted is not None:
            out += [(f"emit.{k}", text) for k, text in enumerate(self.emitted.splitlines(), start=1)]
        return "".join(f"{key}={_escape(str(value))}\n" for key, value in out)

    def render(self, fmt: str) -> str:
        return self.machine() if fmt == "machine" else self.human()


def parse_machine(text: str) -> dict[str, str]:
    """Inverse of the machine layout, for consumers and tests."""
    out = {}
    for line in text.splitlines():
        key, _, value = line.partition("=")
        out[key] = _unescape(value)
    return out


def _line(ch: CheckResult, names, seconds: float, label: str) -> CheckLine:
    return CheckLine(label, PASS if ch.passed else FAIL, ch.witness_text(names), seconds)


def _error_witness(exc: WitnessError, names) -> str:
    parts = [f"{type(exc).__name__}: {exc}"]
    if isinstance(exc.residual, Tensor) and names is not None:
        parts.append("residual " + render(exc.residual, names))
    return "; ".join(parts)


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace("\n", "\\n")


def _unescape(s: str) -> str:
    out, i = [], 0
    while i < len(s):
        if s[i] == "\\" and i + 1 < len(s):
            out.append("\n" if s[i + 1] == "n" else s[i + 1])
            i += 2
        else:
            out.append(s[i])
            i += 1
    return "".join(out)
