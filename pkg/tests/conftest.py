"""Shared oracles and the acceptance summary.

The oracles below are deliberately naive and share no code with the package:
neighbor sets are written out from the edge lists, homogeneity is checked over
all equal-letter pairs, and components come from union-find over
``itertools.permutations``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest


# ---------------------------------------------------------------- oracles

def oracle_edges(kind: str, n: int) -> set[frozenset[int]]:
    if kind == "A":
        return {frozenset((i, i + 1)) for i in range(1, n)}
    edges = {frozenset((i, i + 1)) for i in range(1, n - 2)}
    edges |= {frozenset((n - 2, n - 1)), frozenset((n - 2, n))}
    return edges


def oracle_homogeneous(w, kind: str, n: int) -> bool:
    edges = oracle_edges(kind, n)
    for r, s in itertools.combinations(range(len(w)), 2):
        if w[r] != w[s] or w[r] in w[r + 1:s]:
            continue
        hits = sum(1 for t in range(r + 1, s) if frozenset((w[r], w[t])) in edges)
        if hits < 2:
            return False
    return True


def oracle_commutes(kind: str, n: int):
    edges = oracle_edges(kind, n)
    return lambda a, b: a != b and frozenset((a, b)) not in edges


def oracle_components(letters, kind: str, n: int) -> list[frozenset]:
    """Union-find over all distinct rearrangements of ``letters``."""
    words = sorted(set(itertools.permutations(letters)))
    commute = oracle_commutes(kind, n)
    parent = {w: w for w in words}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for w in words:
        for r in range(len(w) - 1):
            if commute(w[r], w[r + 1]):
                v = w[:r] + (w[r + 1], w[r]) + w[r + 2:]
                parent[find(w)] = find(v)
    groups: dict = {}
    for w in words:
        groups.setdefault(find(w), set()).add(w)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def oracle_class(w, kind: str, n: int) -> frozenset:
    """Closure of ``w`` under commuting swaps, by depth-first search."""
    commute = oracle_commutes(kind, n)
    start = tuple(w)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for r in range(len(v) - 1):
            if commute(v[r], v[r + 1]):
                u = v[:r] + (v[r + 1], v[r]) + v[r + 2:]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return frozenset(seen)


def oracle_fc(w, kind: str, n: int) -> bool:
    """No word of the class contains a factor [i, j, i] with i, j neighbors."""
    edges = oracle_edges(kind, n)
    for v in oracle_class(w, kind, n):
        for a, b, c in zip(v, v[1:], v[2:]):
            if a == c and frozenset((a, b)) in edges:
                return False
    return True


def oracle_catalan(n: int, k: int) -> int:
    # ballot-number form, independent of both package methods
    return math.comb(n + k, k) * (n - k + 1) // (n + 1)


def oracle_fc_count(n: int) -> int:
    c_n = math.comb(2 * n, n) // (n + 1)
    value = Fraction(n + 3, 2) * c_n - 1
    assert value.denominator == 1
    return int(value)


# ---------------------------------------------------------- acceptance hook

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    number = getattr(report, "criterion", None)
    if number is None:
        return
    entry = _CRITERIA[number]
    if report.when == "call" or report.outcome != "passed":
        entry["outcomes"].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    _CRITERIA.setdefault(number, {"title": title, "outcomes": []})
    outcome.get_result().criterion = number


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        ok = entry["outcomes"] and all(o == "passed" for o in entry["outcomes"])
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:2d}: {entry['title']}")
