"""Named verification suites run by ``fullcomm verify``."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .klr import OrientedQuiver, build_module, verify_grading, verify_relations
from .packets import (
    fc_count_formula, verify_identity, verify_packet_sizes, verify_phi_rho,
    verify_same_prefix, verify_sigma_tau, verify_theorem,
)
from .weight_graph import (
    DEFAULT_HEIGHT_CAP, Component, build_graph, component_of, fc_contents,
    homogeneous_components,
)
from .words import DynkinGraph, Word, format_word, homogeneous_forms, realize

__all__ = ["CHECKS", "CheckResult", "run_check"]

CHECKS = ("counts", "packets", "bijections", "identity", "weightgraph", "klr")


@dataclass
class CheckResult:
    name: str
    ok: bool = True
    lines: list[str] = field(default_factory=list)

    def fail(self, line: str) -> None:
        self.ok = False
        self.lines.append(line)

    def to_json(self) -> dict:
        return {"ok": self.ok, "details": self.lines}


def _counts(n: int, **_) -> CheckResult:
    res = CheckResult("counts")
    found = sum(1 for _ in homogeneous_forms(n))
    expected = fc_count_formula(n)
    line = f"homogeneous canonical words of D_{n}: {found}, formula {expected}"
    if found == expected:
        res.lines.append(line)
    else:
        res.fail(line)
    return res


def _packets(n: int, **_) -> CheckResult:
    res = CheckResult("packets")
    report = verify_theorem(n)
    for c in report.violations:
        res.fail(f"k={c.k} suffix {format_word(c.suffix)}: {c.size} words, expected {c.expected}")
    for line in verify_packet_sizes(n) + verify_same_prefix(n):
        res.fail(line)
    if res.ok:
        res.lines.append(f"{len(report.checks)} collections match Catalan's triangle")
    return res


def _bijections(n: int, **_) -> CheckResult:
    res = CheckResult("bijections")
    reports = verify_sigma_tau(n)
    if n >= 5:
        reports += verify_phi_rho(n)
    for rep in reports:
        status = "PASS" if rep.ok else "FAIL"
        line = f"{rep.name} k={rep.k}: {rep.domain_size} -> {rep.codomain_size} {status}"
        if rep.ok:
            res.lines.append(line)
        else:
            res.fail(line)
            res.lines.extend("  " + f for f in rep.failures)
    return res


def _identity(n: int, **_) -> CheckResult:
    res = CheckResult("identity")
    report = verify_identity(n)
    if report.ok:
        res.lines.append(str(report))
    else:
        res.fail(str(report))
    return res


def _weightgraph(n: int, height_cap: int = DEFAULT_HEIGHT_CAP, **_) -> CheckResult:
    """Homogeneous components over the FC contents match the FC canonical words one-to-one."""
    res = CheckResult("weightgraph")
    g = DynkinGraph.type_d(n)
    classes = {}
    for cf in homogeneous_forms(n):
        comp = component_of(realize(cf), g)
        classes[comp.words] = realize(cf)
    found = 0
    for alpha in fc_contents("D", n):
        for comp in homogeneous_components(build_graph(alpha, g, height_cap), g):
            found += 1
            if comp.words not in classes:
                res.fail(f"component of {format_word(comp.representative)} is not a commutation class")
    expected = fc_count_formula(n)
    line = f"{found} homogeneous components, {len(classes)} distinct classes, formula {expected}"
    if found == len(classes) == expected:
        res.lines.append(line)
    else:
        res.fail(line)
    return res


def _klr_one(args: tuple[str, int, tuple[Word, ...]]) -> list[str]:
    kind, n, words = args
    g = DynkinGraph.type_d(n) if kind == "D" else DynkinGraph.type_a(n)
    comp = Component(words, True)
    problems = []
    for label, q in (("default", OrientedQuiver.default(g)),
                     ("reversed", OrientedQuiver.default(g).reversed())):
        m = build_module(comp, q)
        rel = verify_relations(m, q)
        for name, r in rel.results.items():
            if not r.ok:
                problems.append(f"{format_word(words[0])} [{label}] {name}: {r.failures[:3]}")
        grading = verify_grading(m, q)
        if not grading.ok:
            problems.append(f"{format_word(words[0])} [{label}] grading: {grading.failures[:3]}")
    return problems


def _klr(n: int, jobs: int = 1, height_cap: int = DEFAULT_HEIGHT_CAP, **_) -> CheckResult:
    res = CheckResult("klr")
    g = DynkinGraph.type_d(n)
    tasks = [
        ("D", n, comp.words)
        for alpha in fc_contents("D", n)
        for comp in homogeneous_components(build_graph(alpha, g, height_cap), g)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_klr_one, tasks, chunksize=8))
    else:
        outcomes = [_klr_one(t) for t in tasks]
    for problems in outcomes:
        for p in problems:
            res.fail(p)
    if res.ok:
        res.lines.append(f"{len(tasks)} modules pass all relations and grading, both orientations")
    return res


_RUNNERS = {
    "counts": _counts,
    "packets": _packets,
    "bijections": _bijections,
    "identity": _identity,
    "weightgraph": _weightgraph,
    "klr": _klr,
}


def run_check(name: str, n: int, jobs: int = 1,
              height_cap: int = DEFAULT_HEIGHT_CAP) -> CheckResult:
    return _RUNNERS[name](n, jobs=jobs, height_cap=height_cap)
