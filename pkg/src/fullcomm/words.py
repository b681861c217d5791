"""
Words over a simply-laced Dynkin alphabet and canonical reduced forms of type D_n.

Letters are 1-based, as in the usual labelling of Dynkin diagrams; a word is a
plain tuple of ints and the empty tuple is the identity element.

Every element of the Coxeter group of type D_n has a unique reduced word

    s_{1,i_1} s_{2,i_2} ... s_{n-1,i_{n-1}}  s_{n,j_1} s_{n-1,j_2} s_{n,j_3} ...

made of descending *segments*: a prefix with one (possibly empty) segment per
k = 1..n-1, and an alternating suffix determined by 1 <= j_1 < ... < j_l <= n-1.

>>> realize(CanonicalForm(5, (2, 1, 3, 4), (2, 3, 4)))
(2, 1, 3, 4, 5, 3, 2, 4, 3, 5)
>>> split((4, 2, 1, 3, 2, 4), 4)
CanonicalForm(n=4, prefix=(2, 3, 4), suffix=(1, 2, 3))
>>> is_homogeneous((2, 1, 3, 2), DynkinGraph.type_a(3))
True
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidArgumentError, ParseError, ResourceLimitError

__all__ = [
    "Word", "DynkinGraph", "CanonicalForm",
    "segment", "realize", "split", "enumerate_canonical", "homogeneous_forms",
    "homogeneous_type_a_words", "is_homogeneous", "commutation_class",
    "is_fully_commutative", "format_word", "parse_word", "content_of",
    "DEFAULT_CLASS_CAP",
]

Word = tuple[int, ...]

# commutation classes of fully commutative elements of finite type are small
DEFAULT_CLASS_CAP = 10**6


@dataclass(frozen=True)
class DynkinGraph:
    """A simply-laced Dynkin diagram on the vertex set {1, ..., n}."""
    n: int
    kind: str  # "A", "D" or "custom"
    edges: frozenset[tuple[int, int]] = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError(f"rank must be positive, got {self.n}")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise InvalidArgumentError(f"bad edge {(i, j)} for rank {self.n}")

    @classmethod
    def type_a(cls, n: int) -> DynkinGraph:
        if n < 1:
            raise InvalidArgumentError(f"type A needs n >= 1, got {n}")
        return cls(n, "A", frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def type_d(cls, n: int) -> DynkinGraph:
        if n < 4:
            raise InvalidArgumentError(f"n must be ≥ 4 for type D, got {n}")
        edges = {(i, i + 1) for i in range(1, n - 2)}
        edges |= {(n - 2, n - 1), (n - 2, n)}
        return cls(n, "D", frozenset(edges))

    @classmethod
    def custom(cls, n: int, edges: Iterable[tuple[int, int]]) -> DynkinGraph:
        normalized = set()
        for i, j in edges:
            if i == j:
                raise InvalidArgumentError(f"loop at vertex {i}")
            normalized.add((min(i, j), max(i, j)))
        return cls(n, "custom", frozenset(normalized))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {i: frozenset(s) for i, s in adj.items()}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, i: int) -> frozenset[int]:
        return self.adjacency[i]

    def are_neighbors(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def commute(self, i: int, j: int) -> bool:
        """True when s_i, s_j are distinct commuting generators (an admissible swap)."""
        return i != j and j not in self.adjacency[i]

    def check_word(self, w: Word) -> None:
        for pos, a in enumerate(w):
            if not 1 <= a <= self.n:
                raise InvalidArgumentError(
                    f"letter {a} at position {pos} outside 1..{self.n}")


def segment(i: int, j: int, n: int) -> Word:
    """
    The descending segment s_{ij} of D_n.

    For i < n this is [i, i-1, ..., j] (empty when i < j); for i = n the
    letter n-1 is skipped: [n, n-2, ..., j], with s_{n,n-1} = s_{n,n} = [n].

    >>> segment(5, 2, 5)
    (5, 3, 2)
    >>> segment(4, 3, 4)
    (4,)
    """
    if not 1 <= i <= n:
        raise InvalidArgumentError(f"segment top {i} outside 1..{n}")
    if j < 1:
        raise InvalidArgumentError(f"segment bottom must be >= 1, got {j}")
    if i < n:
        return tuple(range(i, j - 1, -1))
    if j <= n - 2:
        return (n,) + tuple(range(n - 2, j - 1, -1))
    if j <= n:
        return (n,)
    return ()


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Parameters of a canonical reduced word of D_n.

    ``prefix[k-1]`` is i_k with 1 <= i_k <= k+1; the value k+1 encodes an empty
    segment. ``suffix`` is the strictly increasing tuple (j_1, ..., j_l) with
    values in 1..n-1. A lone [n] in the suffix is stored as j = n-1.
    """
    n: int
    prefix: tuple[int, ...]
    suffix: tuple[int, ...] = ()

    def __post_init__(self):
        n = self.n
        if n < 4:
            raise InvalidArgumentError(f"n must be ≥ 4, got {n}")
        if len(self.prefix) != n - 1:
            raise InvalidArgumentError(f"prefix needs {n - 1} entries, got {len(self.prefix)}")
        for k, i in enumerate(self.prefix, start=1):
            if not 1 <= i <= k + 1:
                raise InvalidArgumentError(f"i_{k} = {i} outside 1..{k + 1}")
        if any(not 1 <= j <= n - 1 for j in self.suffix):
            raise InvalidArgumentError(f"suffix parameters {self.suffix} outside 1..{n - 1}")
        if any(a >= b for a, b in zip(self.suffix, self.suffix[1:])):
            raise InvalidArgumentError(f"suffix parameters {self.suffix} not strictly increasing")

    @classmethod
    def identity(cls, n: int) -> CanonicalForm:
        return cls(n, tuple(range(2, n + 1)), ())

    @property
    def prefix_word(self) -> Word:
        return _prefix_word(self.prefix)

    @property
    def suffix_word(self) -> Word:
        return _suffix_word(self.n, self.suffix)


def _prefix_word(prefix: tuple[int, ...]) -> Word:
    # prefix segments never involve the special top letter n
    out: list[int] = []
    for k, i in enumerate(prefix, start=1):
        out.extend(range(k, i - 1, -1))
    return tuple(out)


def _suffix_word(n: int, params: tuple[int, ...]) -> Word:
    out: list[int] = []
    for pos, j in enumerate(params):
        out.extend(segment(n if pos % 2 == 0 else n - 1, j, n))
    return tuple(out)


def realize(cf: CanonicalForm) -> Word:
    """Concatenate the prefix segments and the alternating suffix segments."""
    return cf.prefix_word + cf.suffix_word


def split(w: Iterable[int], n: int) -> CanonicalForm:
    """
    Parse a canonical reduced word of D_n back into its parameters.

    Prefix segments are read as maximal descending runs in the order
    k = 1, 2, ..., n-1, then the suffix segments alternate between tops n and n-1.
    Raises ParseError when ``w`` is not the realization of a canonical form.
    """
    w = tuple(w)
    if n < 4:
        raise InvalidArgumentError(f"n must be ≥ 4, got {n}")
    pos, length = 0, len(w)

    prefix = []
    for k in range(1, n):
        if pos < length and w[pos] == k:
            low = k
            pos += 1
            while pos < length and low > 1 and w[pos] == low - 1:
                low -= 1
                pos += 1
            prefix.append(low)
        else:
            prefix.append(k + 1)

    suffix: list[int] = []
    while pos < length:
        top = n if len(suffix) % 2 == 0 else n - 1
        if w[pos] != top:
            raise ParseError(f"expected suffix segment starting with {top}, got {w[pos]}", pos)
        start = pos
        pos += 1
        low = top
        nxt = n - 2 if top == n else top - 1
        while pos < length and w[pos] == nxt and nxt >= 1:
            low = nxt
            pos += 1
            nxt -= 1
        j = n - 1 if low == n else low
        if suffix and j <= suffix[-1]:
            raise ParseError(f"suffix parameter {j} does not exceed {suffix[-1]}", start)
        suffix.append(j)

    cf = CanonicalForm(n, tuple(prefix), tuple(suffix))
    if realize(cf) != w:  # pragma: no cover - guarded by the parser above
        raise ParseError("word does not round-trip", 0)
    return cf


def _suffix_params(n: int) -> list[tuple[int, ...]]:
    subsets = [
        combo
        for size in range(n)
        for combo in itertools.combinations(range(1, n), size)
    ]
    return sorted(subsets)


def enumerate_canonical(n: int) -> Iterator[CanonicalForm]:
    """
    Yield all n!·2^(n-1) canonical forms of D_n, lexicographically on
    (i_1, ..., i_{n-1}, j_1, ..., j_l).
    """
    if n < 4:
        raise InvalidArgumentError(f"n must be ≥ 4, got {n}")
    prefixes = itertools.product(*(range(1, k + 2) for k in range(1, n)))
    suffixes = _suffix_params(n)
    for prefix in prefixes:
        for suffix in suffixes:
            yield CanonicalForm(n, prefix, suffix)


class _HomogeneousBuilder:
    """Append/undo letters while keeping the word homogeneous."""

    def __init__(self, g: DynkinGraph):
        self.adj = g.adjacency
        self.letters: list[int] = []
        self.last: dict[int, int] = {}
        self._undo: list[tuple[int, int | None]] = []

    def push(self, a: int) -> bool:
        p = len(self.letters)
        q = self.last.get(a)
        if q is not None:
            nb = self.adj[a]
            hits = 0
            for t in range(q + 1, p):
                if self.letters[t] in nb:
                    hits += 1
                    if hits == 2:
                        break
            if hits < 2:
                return False
        self.letters.append(a)
        self._undo.append((a, q))
        self.last[a] = p
        return True

    def pop(self) -> None:
        self.letters.pop()
        a, q = self._undo.pop()
        if q is None:
            del self.last[a]
        else:
            self.last[a] = q

    def push_all(self, letters: Word) -> int:
        """Push letters in order; on failure roll back and return 0, else the count."""
        for count, a in enumerate(letters):
            if not self.push(a):
                for _ in range(count):
                    self.pop()
                return 0
        return len(letters)

    def pop_n(self, count: int) -> None:
        for _ in range(count):
            self.pop()


def _walk_prefixes(builder: _HomogeneousBuilder, m: int) -> Iterator[tuple[int, ...]]:
    """Homogeneous prefixes s_{1 i_1} ... s_{m i_m}, lexicographic in (i_1, ..., i_m)."""
    chosen: list[int] = []

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k > m:
            yield tuple(chosen)
            return
        for i in range(1, k + 2):
            seg = tuple(range(k, i - 1, -1))
            if seg and not builder.push_all(seg):
                continue
            chosen.append(i)
            yield from rec(k + 1)
            chosen.pop()
            builder.pop_n(len(seg))

    yield from rec(1)


def homogeneous_forms(n: int) -> Iterator[CanonicalForm]:
    """
    Canonical forms of D_n whose word is homogeneous, in the order of
    ``enumerate_canonical``.

    Homogeneity is inherited by left factors, so the search prunes a segment as
    soon as appending it breaks the condition.
    """
    g = DynkinGraph.type_d(n)
    builder = _HomogeneousBuilder(g)
    params: list[int] = []

    def suffixes(prefix: tuple[int, ...]) -> Iterator[CanonicalForm]:
        yield CanonicalForm(n, prefix, tuple(params))
        top = n if len(params) % 2 == 0 else n - 1
        start = params[-1] + 1 if params else 1
        for j in range(start, n):
            seg = segment(top, j, n)
            if not builder.push_all(seg):
                continue
            params.append(j)
            yield from suffixes(prefix)
            params.pop()
            builder.pop_n(len(seg))

    for prefix in _walk_prefixes(builder, n - 1):
        yield from suffixes(prefix)


def homogeneous_type_a_words(m: int) -> Iterator[Word]:
    """
    Homogeneous words s_{1 i_1} ... s_{m i_m} of type A_m.

    These descending-segment products are the standard reduced words of the
    symmetric group S_{m+1}, one per element.
    """
    if m < 1:
        raise InvalidArgumentError(f"type A needs m >= 1, got {m}")
    builder = _HomogeneousBuilder(DynkinGraph.type_a(m))
    for prefix in _walk_prefixes(builder, m):
        yield _prefix_word(prefix)


def is_homogeneous(w: Word, g: DynkinGraph) -> bool:
    """
    Check that between any two consecutive occurrences of a letter there are
    at least two occurrences of its neighbors.

    Consecutive occurrences suffice: any pair r < s of equal letters encloses a
    consecutive pair.
    """
    adj = g.adjacency
    last: dict[int, int] = {}
    for p, a in enumerate(w):
        q = last.get(a)
        if q is not None:
            nb = adj[a]
            if sum(1 for t in range(q + 1, p) if w[t] in nb) < 2:
                return False
        last[a] = p
    return True


def commutation_class(w: Word, g: DynkinGraph, cap: int = DEFAULT_CLASS_CAP) -> frozenset[Word]:
    """All words reachable from ``w`` by swapping adjacent commuting letters."""
    w = tuple(w)
    g.check_word(w)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for r in range(len(u) - 1):
            a, b = u[r], u[r + 1]
            if g.commute(a, b):
                v = u[:r] + (b, a) + u[r + 2:]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > cap:
                        raise ResourceLimitError(f"commutation class exceeds {cap} words")
                    queue.append(v)
    return frozenset(seen)


def is_fully_commutative(w: Word, g: DynkinGraph, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """
    For a reduced word: no word in its commutation class has a factor [i, i', i]
    with i, i' neighbors.
    """
    for u in commutation_class(w, g, cap):
        for r in range(len(u) - 2):
            if u[r] == u[r + 2] and g.are_neighbors(u[r], u[r + 1]):
                return False
    return True


def content_of(w: Word, n: int) -> tuple[int, ...]:
    """Letter multiplicities (c_1, ..., c_n)."""
    counts = [0] * n
    for a in w:
        counts[a - 1] += 1
    return tuple(counts)


def format_word(w: Word) -> str:
    """Serialize as ``[2,1,3,4]``; the empty word is ``[]``."""
    return "[" + ",".join(str(a) for a in w) + "]"


def parse_word(text: str) -> Word:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise InvalidArgumentError(f"word must be bracketed, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError as exc:
        raise InvalidArgumentError(f"bad word {text!r}") from exc
