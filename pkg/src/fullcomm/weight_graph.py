"""
Weight graphs G_alpha: all words of a fixed content, joined by admissible
transpositions (swapping adjacent letters that are neither equal nor neighbors).

A connected component is homogeneous when its words satisfy the homogeneity
condition; checking one member is enough, and ``paranoid=True`` checks them all.

>>> g = DynkinGraph.type_a(3)
>>> wg = build_graph(Content((1, 2, 1)), g)
>>> len(wg.vertices), len(wg.edges), len(components(wg))
(12, 3, 9)
>>> [c.words for c in homogeneous_components(wg, g)]
[((2, 1, 3, 2), (2, 3, 1, 2))]
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import InvalidArgumentError, ResourceLimitError
from .words import (
    DEFAULT_CLASS_CAP, DynkinGraph, Word, commutation_class, content_of,
    homogeneous_forms, homogeneous_type_a_words, is_homogeneous, realize,
)

__all__ = [
    "Content", "WeightGraph", "Component", "DEFAULT_HEIGHT_CAP",
    "iter_words", "words_of", "build_graph", "components", "homogeneous_components",
    "component_of", "fc_words", "fc_contents", "count_homogeneous_components",
    "components_to_json",
]

# 12! words in the worst case
DEFAULT_HEIGHT_CAP = 12


@dataclass(frozen=True, order=True)
class Content:
    """An element alpha = sum c_i alpha_i of Q_+, stored as (c_1, ..., c_n)."""
    counts: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise InvalidArgumentError(f"negative multiplicity in {self.counts}")

    @classmethod
    def of_word(cls, w: Word, n: int) -> Content:
        return cls(content_of(w, n))

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def height(self) -> int:
        return sum(self.counts)

    def num_words(self) -> int:
        return factorial(self.height) // prod(factorial(c) for c in self.counts)

    def to_json(self) -> dict:
        return {"alpha": {str(i): c for i, c in enumerate(self.counts, start=1)}}

    @classmethod
    def from_json(cls, data: dict, n: int | None = None) -> Content:
        alpha = {int(k): int(v) for k, v in data["alpha"].items()}
        size = n if n is not None else max(alpha, default=0)
        if any(not 1 <= i <= size for i in alpha):
            raise InvalidArgumentError(f"content {alpha} has vertices outside 1..{size}")
        return cls(tuple(alpha.get(i, 0) for i in range(1, size + 1)))


def iter_words(alpha: Content) -> Iterator[Word]:
    """Lazily yield the words of content alpha in lexicographic order."""
    counts = list(alpha.counts)
    d = alpha.height
    buf: list[int] = []

    def rec() -> Iterator[Word]:
        if len(buf) == d:
            yield tuple(buf)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                buf.append(i + 1)
                yield from rec()
                buf.pop()
                counts[i] += 1

    yield from rec()


def words_of(alpha: Content, height_cap: int = DEFAULT_HEIGHT_CAP) -> list[Word]:
    """All distinct multiset permutations of alpha, lexicographically sorted."""
    if alpha.height > height_cap:
        raise ResourceLimitError(f"height {alpha.height} exceeds cap {height_cap}")
    return list(iter_words(alpha))


@dataclass(frozen=True)
class Component:
    words: tuple[Word, ...]
    homogeneous: bool

    @property
    def representative(self) -> Word:
        return self.words[0]

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._members

    @cached_property
    def _members(self) -> frozenset[Word]:
        return frozenset(self.words)


@dataclass
class WeightGraph:
    alpha: Content
    graph: DynkinGraph
    vertices: list[Word]
    edges: list[tuple[Word, Word]]
    # adjacency by vertex index, used by ``components``
    adjacency: list[list[int]] = field(repr=False)


def build_graph(alpha: Content, g: DynkinGraph,
                height_cap: int = DEFAULT_HEIGHT_CAP) -> WeightGraph:
    if alpha.n != g.n:
        raise InvalidArgumentError(f"content has {alpha.n} entries but graph has rank {g.n}")
    vertices = words_of(alpha, height_cap)
    index = {w: i for i, w in enumerate(vertices)}
    adjacency: list[list[int]] = [[] for _ in vertices]
    edges = []
    for u, w in enumerate(vertices):
        for r in range(len(w) - 1):
            a, b = w[r], w[r + 1]
            if g.commute(a, b):
                v_word = w[:r] + (b, a) + w[r + 2:]
                v = index[v_word]
                adjacency[u].append(v)
                if u < v:
                    edges.append((w, v_word))
    return WeightGraph(alpha, g, vertices, edges, adjacency)


def components(wg: WeightGraph) -> list[Component]:
    """Connected components, ordered by their minimal word. Flags are filled in."""
    seen = [False] * len(wg.vertices)
    out = []
    for start in range(len(wg.vertices)):
        if seen[start]:
            continue
        seen[start] = True
        members = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in wg.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    members.append(v)
                    queue.append(v)
        words = tuple(sorted(wg.vertices[i] for i in members))
        out.append(Component(words, is_homogeneous(words[0], wg.graph)))
    # vertices are lexicographic, so discovery order is already by minimal word
    return out


def homogeneous_components(wg: WeightGraph, g: DynkinGraph | None = None,
                           paranoid: bool = False) -> list[Component]:
    """
    Components whose words are homogeneous.

    By default only the minimal word of each component is tested; with
    ``paranoid`` every member is tested and the two verdicts must agree.
    """
    g = g or wg.graph
    out = []
    for comp in components(wg):
        verdict = is_homogeneous(comp.representative, g)
        if paranoid:
            every = all(is_homogeneous(w, g) for w in comp.words)
            if every != verdict:
                raise AssertionError(
                    f"representative check disagrees with full check on {comp.representative}")
        if verdict:
            out.append(comp)
    return out


def component_of(w: Word, g: DynkinGraph, cap: int = DEFAULT_CLASS_CAP) -> Component:
    """The component of G_content(w) containing w, found without building the graph."""
    words = tuple(sorted(commutation_class(w, g, cap)))
    return Component(words, is_homogeneous(words[0], g))


def fc_words(kind: str, n: int) -> list[Word]:
    """Homogeneous canonical words: one per fully commutative element of A_n or D_n."""
    if kind == "A":
        return list(homogeneous_type_a_words(n))
    if kind == "D":
        return [realize(cf) for cf in homogeneous_forms(n)]
    raise InvalidArgumentError(f"unknown Coxeter type {kind!r}")


def fc_contents(kind: str, n: int) -> list[Content]:
    """Contents of the fully commutative elements, sorted."""
    return sorted({Content.of_word(w, n) for w in fc_words(kind, n)})


def count_homogeneous_components(kind: str, n: int,
                                 height_cap: int = DEFAULT_HEIGHT_CAP) -> int:
    """Total number of homogeneous components of G_alpha over the FC contents."""
    g = DynkinGraph.type_a(n) if kind == "A" else DynkinGraph.type_d(n)
    return sum(
        len(homogeneous_components(build_graph(alpha, g, height_cap), g))
        for alpha in fc_contents(kind, n)
    )


def components_to_json(comps: Iterable[Component]) -> str:
    return json.dumps([[list(w) for w in c.words] for c in comps])
