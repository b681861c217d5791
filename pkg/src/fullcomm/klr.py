"""
Homogeneous modules S(C) over KLR (quiver Hecke) algebras.

For a homogeneous component C of the weight graph G_alpha, S(C) has basis
{v_w : w in C}; e(w') projects onto v_w', every y_r acts by zero and psi_r sends
v_w to v_{s_r w} when s_r w is again in C (zero otherwise). Operators are integer
matrices whose column j is the image of the j-th basis vector. All entries are
-1, 0 or 1, so identities that hold over the integers hold over every field.

``verify_relations`` evaluates both sides of every defining relation of R_alpha
on the module and reports the disagreements, if any.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import DomainError, InvalidArgumentError, ResourceLimitError
from .weight_graph import (
    Component, Content, DEFAULT_HEIGHT_CAP, build_graph, fc_contents,
    homogeneous_components, iter_words,
)
from .words import DynkinGraph, Word, format_word, is_homogeneous

__all__ = [
    "OrientedQuiver", "HomogeneousModule", "RelationResult", "RelationReport",
    "GradingReport", "RELATIONS",
    "build_module", "act_e", "act_y", "act_psi", "verify_relations", "verify_grading",
    "q_character", "homogeneous_modules", "op_to_triplets", "report_to_json",
]

# relation names, in the order they are reported
RELATIONS = (
    "e_orthogonal",       # e(w)e(v) = delta e(w)
    "e_complete",         # sum of all e(w) = 1
    "y_e_commute",        # y_k e(w) = e(w) y_k
    "psi_e_intertwine",   # psi_k e(w) = e(s_k w) psi_k
    "y_y_commute",        # y_k y_l = y_l y_k
    "y_psi_commute",      # y_k psi_l = psi_l y_k, k != l, l+1
    "y_psi_left",         # (y_{k+1} psi_k - psi_k y_k) e(w)
    "y_psi_right",        # (psi_k y_{k+1} - y_k psi_k) e(w)
    "psi_square",         # psi_k^2 e(w)
    "psi_far_commute",    # psi_k psi_l = psi_l psi_k, |k - l| > 1
    "braid",              # (psi_{k+1} psi_k psi_{k+1} - psi_k psi_{k+1} psi_k) e(w)
)

# full coverage of <I>_alpha only for small heights
FULL_COVERAGE_HEIGHT = 8
DEFAULT_SAMPLE = 100


@dataclass(frozen=True)
class OrientedQuiver:
    """A Dynkin diagram with one arrow per edge; ``(i, j)`` in arrows means i -> j."""
    graph: DynkinGraph
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self):
        undirected = {(min(a), max(a)) for a in self.arrows}
        if undirected != set(self.graph.edges) or len(self.arrows) != len(self.graph.edges):
            raise InvalidArgumentError("orientation must give exactly one direction per edge")

    @classmethod
    def default(cls, g: DynkinGraph) -> OrientedQuiver:
        """Arrows point from the smaller label to the larger: i -> i+1, n-2 -> n-1, n-2 -> n."""
        return cls(g, frozenset(g.edges))

    def reversed(self) -> OrientedQuiver:
        return OrientedQuiver(self.graph, frozenset((j, i) for i, j in self.arrows))

    def arrow(self, i: int, j: int) -> bool:
        return (i, j) in self.arrows


@dataclass(frozen=True)
class HomogeneousModule:
    alpha: Content
    basis: tuple[Word, ...]
    graph: DynkinGraph
    index: dict[Word, int] = field(repr=False, compare=False, hash=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def height(self) -> int:
        return self.alpha.height


def build_module(c: Component, q: OrientedQuiver) -> HomogeneousModule:
    g = q.graph
    if not c.words:
        raise DomainError("empty component")
    for w in c.words:
        g.check_word(w)
        if not is_homogeneous(w, g):
            raise DomainError(f"{format_word(w)} is not homogeneous")
    members = set(c.words)
    for w in c.words:
        for r in range(len(w) - 1):
            if g.commute(w[r], w[r + 1]) and w[:r] + (w[r + 1], w[r]) + w[r + 2:] not in members:
                raise DomainError(f"component is not closed under admissible swaps at {format_word(w)}")
    basis = tuple(sorted(c.words))
    alpha = Content.of_word(basis[0], g.n)
    if any(Content.of_word(w, g.n) != alpha for w in basis):
        raise DomainError("component mixes contents")
    return HomogeneousModule(alpha, basis, g, {w: i for i, w in enumerate(basis)})


def _zero(m: HomogeneousModule) -> np.ndarray:
    return np.zeros((m.dim, m.dim), dtype=np.int64)


def act_e(m: HomogeneousModule, w: Word) -> np.ndarray:
    w = tuple(w)
    if any(not 1 <= a <= m.graph.n for a in w) or Content.of_word(w, m.graph.n) != m.alpha:
        raise DomainError(f"{format_word(w)} does not have content {m.alpha.counts}")
    op = _zero(m)
    i = m.index.get(w)
    if i is not None:
        op[i, i] = 1
    return op


def act_y(m: HomogeneousModule, r: int) -> np.ndarray:
    if not 1 <= r <= m.height:
        raise InvalidArgumentError(f"y_{r} needs 1 <= r <= {m.height}")
    return _zero(m)


def act_psi(m: HomogeneousModule, r: int) -> np.ndarray:
    if not 1 <= r <= m.height - 1:
        raise InvalidArgumentError(f"psi_{r} needs 1 <= r <= {m.height - 1}")
    op = _zero(m)
    for j, w in enumerate(m.basis):
        v = _swap(w, r)
        i = m.index.get(v)
        if i is not None:
            op[i, j] = 1
    return op


def _swap(w: Word, r: int) -> Word:
    """s_r w for 1-based r."""
    return w[:r - 1] + (w[r], w[r - 1]) + w[r + 1:]


@dataclass
class RelationResult:
    checked: int = 0
    passed: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked == self.passed


@dataclass
class RelationReport:
    basis_size: int
    idempotent_words: int
    results: dict[str, RelationResult] = field(
        default_factory=lambda: {name: RelationResult() for name in RELATIONS})

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def record(self, name: str, lhs: np.ndarray, rhs: np.ndarray, **witness) -> None:
        res = self.results[name]
        res.checked += 1
        if np.array_equal(lhs, rhs):
            res.passed += 1
        else:
            res.failures.append({k: (format_word(v) if k == "word" else v)
                                 for k, v in witness.items()})

    def to_json(self) -> dict:
        return {
            "basis_size": self.basis_size,
            "idempotent_words": self.idempotent_words,
            "ok": self.ok,
            "relations": {
                name: {"checked": r.checked, "passed": r.passed, "failures": r.failures}
                for name, r in self.results.items()
            },
        }


def _idempotent_words(m: HomogeneousModule, full: bool, sample: int) -> list[Word]:
    if full:
        if m.height > FULL_COVERAGE_HEIGHT:
            raise ResourceLimitError(
                f"full idempotent coverage needs height <= {FULL_COVERAGE_HEIGHT}, got {m.height}")
        return list(iter_words(m.alpha))
    outside = (w for w in iter_words(m.alpha) if w not in m.index)
    return list(m.basis) + list(itertools.islice(outside, sample))


def verify_relations(m: HomogeneousModule, q: OrientedQuiver, full: bool = False,
                     sample: int = DEFAULT_SAMPLE) -> RelationReport:
    """
    Evaluate both sides of each defining relation on S(C) as integer matrices.

    Idempotent arguments range over the basis words plus the first ``sample``
    other words of the content in lexicographic order (all words with ``full``).
    """
    d = m.height
    words = _idempotent_words(m, full, sample)
    report = RelationReport(m.dim, len(words))
    ident = np.eye(m.dim, dtype=np.int64)
    zero = _zero(m)
    E = {w: act_e(m, w) for w in words}
    Y = {r: act_y(m, r) for r in range(1, d + 1)}
    P = {r: act_psi(m, r) for r in range(1, d)}

    def e(w: Word) -> np.ndarray:
        return E[w] if w in E else act_e(m, w)

    # idempotents: pairwise orthogonality inside the basis, and each sampled
    # outside word against itself and against the basis
    inside = [w for w in words if w in m.index]
    outside = [w for w in words if w not in m.index]
    for w in inside:
        for v in inside:
            report.record("e_orthogonal", E[w] @ E[v], E[w] if w == v else zero, word=w, other=format_word(v))
    for w in outside:
        report.record("e_orthogonal", E[w] @ E[w], E[w], word=w, other=format_word(w))
        for v in inside:
            report.record("e_orthogonal", E[w] @ E[v], zero, word=w, other=format_word(v))
            report.record("e_orthogonal", E[v] @ E[w], zero, word=v, other=format_word(w))
    total = sum((E[w] for w in words), zero.copy())
    report.record("e_complete", total, ident, words=len(words))

    for k in range(1, d + 1):
        for w in words:
            report.record("y_e_commute", Y[k] @ E[w], E[w] @ Y[k], k=k, word=w)
    for k in range(1, d):
        for w in words:
            report.record("psi_e_intertwine", P[k] @ E[w], e(_swap(w, k)) @ P[k], k=k, word=w)
    for k, l in itertools.product(range(1, d + 1), repeat=2):
        report.record("y_y_commute", Y[k] @ Y[l], Y[l] @ Y[k], k=k, l=l)
    for k in range(1, d + 1):
        for l in range(1, d):
            if k not in (l, l + 1):
                report.record("y_psi_commute", Y[k] @ P[l], P[l] @ Y[k], k=k, l=l)

    for k in range(1, d):
        left = Y[k + 1] @ P[k] - P[k] @ Y[k]
        right = P[k] @ Y[k + 1] - Y[k] @ P[k]
        square = P[k] @ P[k]
        for w in words:
            a, b = w[k - 1], w[k]
            target = E[w] if a == b else zero
            report.record("y_psi_left", left @ E[w], target, k=k, word=w)
            report.record("y_psi_right", right @ E[w], target, k=k, word=w)
            if a == b:
                rhs = zero
            elif q.arrow(a, b):
                rhs = (Y[k] - Y[k + 1]) @ E[w]
            elif q.arrow(b, a):
                rhs = (Y[k + 1] - Y[k]) @ E[w]
            else:
                rhs = E[w]
            report.record("psi_square", square @ E[w], rhs, k=k, word=w)

    for k in range(1, d):
        for l in range(k + 2, d):
            report.record("psi_far_commute", P[k] @ P[l], P[l] @ P[k], k=k, l=l)

    for k in range(1, d - 1):
        lhs = P[k + 1] @ P[k] @ P[k + 1] - P[k] @ P[k + 1] @ P[k]
        for w in words:
            a, b, c = w[k - 1], w[k], w[k + 1]
            if c == a and q.arrow(a, b):
                rhs = E[w]
            elif c == a and q.arrow(b, a):
                rhs = -E[w]
            else:
                rhs = zero
            report.record("braid", lhs @ E[w], rhs, k=k, word=w)
    return report


@dataclass
class GradingReport:
    edges: int = 0
    failures: list[dict] = field(default_factory=list)
    degree: int = 0  # the module is placed in degree 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _psi_degree(g: DynkinGraph, a: int, b: int) -> int:
    if a == b:
        return -2
    return 1 if g.are_neighbors(a, b) else 0


def verify_grading(m: HomogeneousModule, q: OrientedQuiver) -> GradingReport:
    """Every psi_r e(w) acting nontrivially on S(C) must have degree 0."""
    g = q.graph
    report = GradingReport()
    for w in m.basis:
        for r in range(1, m.height):
            if _swap(w, r) in m.index:
                report.edges += 1
                deg = _psi_degree(g, w[r - 1], w[r])
                if deg != 0:
                    report.failures.append({"word": format_word(w), "r": r, "degree": deg})
    return report


def q_character(m: HomogeneousModule) -> dict[Word, dict[int, int]]:
    """ch_q S(C) as {word: {q-degree: multiplicity}}; each weight space is q^0."""
    return {w: {0: 1} for w in m.basis}


def homogeneous_modules(g: DynkinGraph, q: OrientedQuiver | None = None,
                        height_cap: int = DEFAULT_HEIGHT_CAP) -> Iterator[HomogeneousModule]:
    """S(C) for every homogeneous component of G_alpha, alpha ranging over FC contents."""
    q = q or OrientedQuiver.default(g)
    for alpha in fc_contents(g.kind, g.n):
        wg = build_graph(alpha, g, height_cap)
        for comp in homogeneous_components(wg, g):
            yield build_module(comp, q)


def op_to_triplets(op: np.ndarray) -> str:
    """Sparse ``row,col,value`` CSV of the nonzero entries (0-based indices)."""
    rows = ["row,col,value"]
    for i, j in zip(*np.nonzero(op)):
        rows.append(f"{i},{j},{op[i, j]}")
    return "\n".join(rows) + "\n"


def report_to_json(report: RelationReport) -> str:
    return json.dumps(report.to_json())
