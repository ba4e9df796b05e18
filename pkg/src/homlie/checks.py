"""Pass/fail records for axiom checks, with witnesses on failure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .multilinear import LinearMap, Tensor, render
from .scalars import format_scalar


@dataclass(frozen=True)
class CheckResult:
    """One axiom check.

    On failure ``where`` names the basis elements at which the residual is
    nonzero, ``residual`` is that residual and ``component`` is its first
    nonzero coefficient as (index, scalar).
    """

    name: str
    passed: bool
    where: tuple[str, ...] = ()
    residual: object = None
    component: tuple | None = None
    note: str = ""

    def witness_text(self, names: Sequence[str] | None = None) -> str:
        if self.passed:
            return ""
        parts = []
        if self.where:
            parts.append("at (" + ", ".join(self.where) + ")")
        res = self.residual
        if isinstance(res, Tensor) and names is not None:
            parts.append("residual " + render(res, names))
        elif isinstance(res, LinearMap):
            idx, val = self.component
            parts.append(f"entry {idx} = {format_scalar(val)}")
        elif res is not None:
            parts.append(f"residual {res!r}")
        if self.note:
            parts.append(self.note)
        return "; ".join(parts)


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[CheckResult]:
        return [ch for ch in self.checks if not ch.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for ch in self.checks:
            if ch.name == name:
                return ch
        raise KeyError(name)

    def names(self) -> list[str]:
        return [ch.name for ch in self.checks]

    def __add__(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.checks + other.checks)


def first_nonzero(residuals: Mapping) -> tuple | None:
    """(key, residual, (index, scalar)) for the first nonzero residual."""
    for key, res in residuals.items():
        if isinstance(res, Tensor):
            nz = res.nonzero()
            if nz:
                return key, res, nz[0]
        elif isinstance(res, LinearMap):
            for i, row in enumerate(res.entries):
                for j, x in enumerate(row):
                    if x:
                        return key, res, ((i, j), x)
        elif res:
            return key, res, ((), res)
    return None


def check_residuals(name: str, residuals: Mapping, names: Sequence[str] | None = None,
                    note: str = "") -> CheckResult:
    """Summarize a map key -> residual; keys are tuples of basis indices."""
    hit = first_nonzero(residuals)
    if hit is None:
        return CheckResult(name, True)
    key, res, comp = hit
    if isinstance(key, tuple) and names is not None:
        where = tuple(names[k] if isinstance(k, int) else str(k) for k in key)
    elif isinstance(key, tuple):
        where = tuple(str(k) for k in key)
    else:
        where = (str(key),)
    return CheckResult(name, False, where, res, comp, note)


def report(results: Iterable[CheckResult]) -> AxiomReport:
    return AxiomReport(tuple(results))
