"""Structured check results: verdicts, witnesses, and report rendering.

Failing checks always carry a witness (grade tuple, basis indices, both
evaluated sides). Report verdicts aggregate by conjunction; rendering never
changes a verdict, exit codes are the only pass/fail channel for the CLI.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field


#: Tag vocabulary; every tag maps to exactly one check operation.
TAG_OPERATIONS: dict[str, str] = {
    "group": "validate_group",
    "algebra-assoc": "check_associative",
    "algebra-nondegenerate": "check_nondegenerate",
    "2.2-cograded": "check_cograded",
    "coassoc": "check_coassoc",
    "galois": "check_galois_maps",
    "2.1-counit": "derive_counit",
    "2.1-antipode": "derive_antipode",
    "regular": "check_regular",
    "2.2-crossing": "check_crossing",
    "multiplier": "check_multiplier_formalism",
    "QT-invertibility": "check_qt_invertibility",
    "QT-invariance": "check_qt_invariance",
    "QT-commutation": "check_qt_commutation",
    "QT-hexagon-1": "check_qt_hexagons",
    "QT-hexagon-2": "check_qt_hexagons",
    "L4.1-invertibility": "check_braiding_invertibility",
    "L4.1": "check_braiding_module_morphism",
    "L4.2": "check_braiding_crossing_compat",
    "L4.3-1": "check_braiding_hexagons",
    "L4.3-2": "check_braiding_hexagons",
    "naturality": "check_naturality",
    "module": "check_module",
    "crossed-module": "check_crossed",
    "family": "validate_family",
    "morphism": "check_crossed_morphism",
    "pentagon": "check_pentagon",
    "triangle": "check_triangle",
    "unit-constraint": "unit_constraints",
    "theorem-4.4": "check_braided_category",
}

#: Pairs of categorical tags and their generator-side counterparts.
LEMMA_PAIRS: tuple[tuple[str, str], ...] = (
    ("L4.1-invertibility", "QT-invertibility"),
    ("L4.1", "QT-commutation"),
    ("L4.2", "QT-invariance"),
    ("L4.3-1", "QT-hexagon-1"),
    ("L4.3-2", "QT-hexagon-2"),
)


@dataclass(frozen=True)
class Witness:
    """First violated constraint: where it happened and both evaluated sides."""

    grades: tuple[int, ...] = ()
    basis: tuple[int, ...] = ()
    coord: int | None = None
    lhs: str = ""
    rhs: str = ""
    note: str = ""


@dataclass
class CheckResult:
    name: str
    tag: str
    passed: bool
    witness: Witness | None = None
    millis: float = 0.0

    def timed(self, started: float) -> CheckResult:
        self.millis = (time.perf_counter() - started) * 1000.0
        return self


def passed(name: str, tag: str, started: float | None = None) -> CheckResult:
    result = CheckResult(name, tag, True)
    return result.timed(started) if started is not None else result


def failed(name: str, tag: str, witness: Witness, started: float | None = None) -> CheckResult:
    result = CheckResult(name, tag, False, witness)
    return result.timed(started) if started is not None else result


@dataclass
class CheckReport:
    """A labelled list of check results; the verdict is their conjunction."""

    title: str
    results: list[CheckResult] = dc_field(default_factory=list)
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def extend(self, results: list[CheckResult]) -> None:
        self.results.extend(results)

    def result(self, tag: str) -> CheckResult:
        matches = [r for r in self.results if r.tag == tag]
        if not matches:
            raise KeyError(f"no result tagged {tag!r} in report {self.title!r}")
        return matches[0]

    def failing_tags(self) -> list[str]:
        return [r.tag for r in self.results if not r.passed]


def _witness_fields(w: Witness) -> list[tuple[str, str]]:
    fields = []
    if w.grades:
        fields.append(("grades", ",".join(str(g) for g in w.grades)))
    if w.basis:
        fields.append(("basis", ",".join(str(b) for b in w.basis)))
    if w.coord is not None:
        fields.append(("coord", str(w.coord)))
    if w.lhs or w.rhs:
        fields.append(("lhs", w.lhs))
        fields.append(("rhs", w.rhs))
    if w.note:
        fields.append(("note", w.note))
    return fields


def render_text(report: CheckReport) -> str:
    lines = [f"== {report.title} =="]
    for r in report.results:
        mark = "PASS" if r.passed else "FAIL"
        line = f"[{mark}] {r.name} ({r.tag}) {r.millis:.2f} ms"
        if r.witness is not None:
            detail = " ".join(f"{k}={v}" for k, v in _witness_fields(r.witness))
            if detail:
                line += f" :: {detail}"
        lines.append(line)
    verdict = "all checks passed" if report.ok else "CHECKS FAILED"
    seed_note = f" seed={report.seed}" if report.seed is not None else ""
    lines.append(f"== {verdict} ({len(report.results)} checks){seed_note} ==")
    return "\n".join(lines)


def render_machine(report: CheckReport, include_timing: bool = True) -> str:
    """Stable tab-delimited key=value records, one line per check plus a summary."""
    lines = []
    for r in report.results:
        fields = [
            ("check", r.name),
            ("lemma", r.tag),
            ("verdict", "pass" if r.passed else "fail"),
        ]
        if r.witness is not None:
            fields.extend(_witness_fields(r.witness))
        if include_timing:
            fields.append(("ms", f"{r.millis:.2f}"))
        lines.append("\t".join(f"{k}={v}" for k, v in fields))
    failures = sum(1 for r in report.results if not r.passed)
    summary = [
        ("summary", report.title),
        ("verdict", "pass" if report.ok else "fail"),
        ("checks", str(len(report.results))),
        ("failures", str(failures)),
    ]
    if report.seed is not None:
        summary.append(("seed", str(report.seed)))
    lines.append("\t".join(f"{k}={v}" for k, v in summary))
    return "\n".join(lines)
