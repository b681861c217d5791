"""
Collections and packets of fully commutative elements of D_n.

A collection groups the homogeneous canonical words sharing a suffix; a packet
P(n, k) groups collections by an index read off the suffix parameters. Every
collection in P(n, k) has C(n, k) elements (an entry of Catalan's triangle),
which is checked here exhaustively together with the explicit bijections that
prove it.

>>> [len(build_packet(4, k).collections) for k in range(5)]
[3, 2, 1, 1, 1]
>>> sigma((2, 1, 4, 5, 3, 2), 5, 2)
(2, 1, 4, 3, 2, 5, 3, 4)
>>> tau((2, 5, 3, 4), 5, 2)
(2, 3, 4, 5, 3, 2)
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .catalan import catalan, catalan_number
from .errors import DomainError, InvalidArgumentError, ParseError
from .words import (
    CanonicalForm, DynkinGraph, Word, format_word, homogeneous_forms,
    is_homogeneous, realize, split, _suffix_word,
)

__all__ = [
    "Suffix", "Collection", "Packet",
    "packet_index", "all_collections", "build_collection", "build_packet", "packets",
    "packet_sizes",
    "packet_size_formula", "sigma", "tau", "phi", "rho",
    "CollectionCheck", "TheoremReport", "IdentityReport", "BijectionReport",
    "verify_theorem", "verify_identity", "verify_sigma_tau", "verify_phi_rho",
    "verify_same_prefix", "verify_packet_sizes", "fc_count_formula",
    "packets_to_json", "packets_to_csv",
]


@dataclass(frozen=True, order=True)
class Suffix:
    """Suffix s_{n,j_1} s_{n-1,j_2} s_{n,j_3} ... given by its parameters."""
    n: int
    params: tuple[int, ...] = ()

    def __post_init__(self):
        # reuse the range checks of CanonicalForm
        CanonicalForm(self.n, tuple(range(2, self.n + 1)), self.params)

    @property
    def word(self) -> Word:
        return _suffix_word(self.n, self.params)

    @classmethod
    def from_word(cls, w: Word, n: int) -> Suffix:
        cf = split(w, n)
        if cf.prefix_word:
            raise InvalidArgumentError(f"{format_word(w)} has a non-empty prefix")
        return cls(n, cf.suffix)

    def __str__(self) -> str:
        return format_word(self.word)


def packet_index(s: Suffix) -> int:
    """
    k such that the collection labelled by ``s`` lies in P(n, k).

    Empty suffix -> n; one segment s_{n,j} -> j (so [n] -> n-1 and
    [n, n-2] -> n-2); two or more segments -> j_1 - 1.
    """
    if not s.params:
        return s.n
    if len(s.params) == 1:
        return s.params[0]
    return s.params[0] - 1


@dataclass(frozen=True)
class Collection:
    suffix: Suffix
    words: tuple[Word, ...]
    prefixes: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)

    @property
    def k(self) -> int:
        return packet_index(self.suffix)


@dataclass(frozen=True)
class Packet:
    n: int
    k: int
    collections: tuple[Collection, ...]

    @property
    def size(self) -> int:
        return len(self.collections)

    @property
    def collection_sizes(self) -> list[int]:
        return [len(c) for c in self.collections]


@lru_cache(maxsize=None)
def all_collections(n: int) -> dict[tuple[int, ...], Collection]:
    """Every collection of D_n keyed by suffix parameters, in sorted key order."""
    grouped: dict[tuple[int, ...], list[CanonicalForm]] = {}
    for cf in homogeneous_forms(n):
        grouped.setdefault(cf.suffix, []).append(cf)
    out = {}
    for params in sorted(grouped):
        rows = sorted((realize(cf), cf.prefix_word) for cf in grouped[params])
        out[params] = Collection(
            Suffix(n, params),
            tuple(w for w, _ in rows),
            tuple(p for _, p in rows),
        )
    return out


def build_collection(s: Suffix, g: DynkinGraph | None = None) -> Collection:
    if g is not None and (g.kind != "D" or g.n != s.n):
        raise InvalidArgumentError(f"collections need the D_{s.n} diagram")
    return all_collections(s.n)[s.params]


def build_packet(n: int, k: int) -> Packet:
    if n < 4:
        raise InvalidArgumentError(f"n must be ≥ 4, got {n}")
    if not 0 <= k <= n:
        raise InvalidArgumentError(f"packet index k={k} outside 0..{n}")
    members = tuple(c for c in all_collections(n).values() if c.k == k)
    return Packet(n, k, members)


def packets(n: int) -> list[Packet]:
    return [build_packet(n, k) for k in range(n + 1)]


def packet_sizes(n: int) -> list[int]:
    """
    |P(n,k)| for k = 0..n by counting suffixes, without enumerating prefixes.

    Every suffix word is homogeneous, so each suffix labels a nonempty collection;
    this is checked here rather than assumed.
    """
    if n < 4:
        raise InvalidArgumentError(f"n must be ≥ 4, got {n}")
    g = DynkinGraph.type_d(n)
    sizes = [0] * (n + 1)
    for size in range(n):
        for params in itertools.combinations(range(1, n), size):
            s = Suffix(n, params)
            if not is_homogeneous(s.word, g):
                raise AssertionError(f"suffix {s} is not homogeneous")
            sizes[packet_index(s)] += 1
    return sizes


def packet_size_formula(n: int, k: int) -> int:
    if n < 4:
        raise InvalidArgumentError(f"n must be ≥ 4, got {n}")
    if not 0 <= k <= n:
        raise InvalidArgumentError(f"packet index k={k} outside 0..{n}")
    if k == 0:
        return 2 ** (n - 2) - 1
    if k <= n - 2:
        return 2 ** (n - k - 2)
    return 1


def fc_count_formula(n: int) -> int:
    """(n+3)/2 · C_n − 1, the number of fully commutative elements of D_n."""
    value = Fraction(n + 3, 2) * catalan_number(n) - 1
    assert value.denominator == 1
    return int(value)


# -- bijections between collections ---------------------------------------

def _member(w: Word, n: int, params: tuple[int, ...]) -> CanonicalForm:
    """Canonical form of ``w`` after checking that it lies in c^n_{params}."""
    w = tuple(w)
    try:
        cf = split(w, n)
    except (ParseError, InvalidArgumentError) as exc:
        raise DomainError(f"{format_word(w)} is not a canonical word of D_{n}") from exc
    if cf.suffix != params:
        raise DomainError(
            f"{format_word(w)} has suffix {format_word(cf.suffix_word)}, "
            f"expected {format_word(_suffix_word(n, params))}")
    if not is_homogeneous(w, DynkinGraph.type_d(n)):
        raise DomainError(f"{format_word(w)} is not homogeneous")
    return cf


def _empty(j: int) -> int:
    return j + 1


def sigma(w: Word, n: int, k: int) -> Word:
    """
    c^n_{s_{nk}} -> c^n_{s_{n,k+1} s_{n-1}} for 1 <= k <= n-3.

    A prefix ending in the run [m, m+1, ..., n-1] (m >= k minimal) has that run
    replaced by [m, m-1, ..., k]; the suffix becomes [n, n-2, ..., k+1, n-1].
    """
    if not 1 <= k <= n - 3:
        raise InvalidArgumentError(f"sigma needs 1 <= k <= n-3, got n={n}, k={k}")
    cf = _member(w, n, (k,))
    prefix = list(cf.prefix)
    if prefix[n - 2] == n - 1:
        # singleton segments s_m, ..., s_{n-1} spell the ascending run
        m = n - 1
        while m - 1 >= k and prefix[m - 2] == m - 1:
            m -= 1
        prefix[m - 1] = k
        for j in range(m + 1, n):
            prefix[j - 1] = _empty(j)
    else:
        w0 = cf.prefix_word
        assert not w0 or w0[-1] < k, f"prefix of {w} ends with {w0[-1]}"
    return realize(CanonicalForm(n, tuple(prefix), (k + 1, n - 1)))


def tau(w: Word, n: int, k: int) -> Word:
    """
    c^n_{s_{n,k+1} s_{n-1}} -> c^n_{s_{nk}}, the inverse of ``sigma``.

    A final prefix segment [m, ..., k] is replaced by [m, m+1, ..., n-1].
    """
    if not 1 <= k <= n - 3:
        raise InvalidArgumentError(f"tau needs 1 <= k <= n-3, got n={n}, k={k}")
    cf = _member(w, n, (k + 1, n - 1))
    prefix = list(cf.prefix)
    nonempty = [j for j in range(1, n) if prefix[j - 1] <= j]
    if nonempty and prefix[nonempty[-1] - 1] == k:
        m = nonempty[-1]
        for j in range(m, n):
            prefix[j - 1] = j
    else:
        w0 = cf.prefix_word
        assert not w0 or w0[-1] < k, f"prefix of {w} ends with {w0[-1]}"
    return realize(CanonicalForm(n, tuple(prefix), (k,)))


def _check_phi_range(n: int, k: int) -> None:
    if n < 5:
        raise InvalidArgumentError(f"phi/rho relate D_n and D_(n-1); need n >= 5, got {n}")
    if not 1 <= k <= n - 2:
        raise InvalidArgumentError(f"phi/rho need 1 <= k <= n-2, got n={n}, k={k}")


def phi(w: Word, n: int, k: int) -> Word:
    """
    c^n_{w1} ⊔ c^{n-1}_{w3} -> c^n_{w2} with w1 = [n, n-2, ..., k, n-1],
    w2 = [n, n-2, ..., k] and w3 the D_(n-1) suffix [n-1, n-3, ..., k].

    Words of D_n (they contain the letter n) lose their last letter; words of
    D_(n-1) w0 w3 become w0 [n-1] w2.
    """
    _check_phi_range(n, k)
    w = tuple(w)
    if n in w:
        _member(w, n, (k, n - 1))
        return w[:-1]
    cf = _member(w, n - 1, (k,))
    return realize(CanonicalForm(n, cf.prefix + (n - 1,), (k,)))


def rho(w: Word, n: int, k: int) -> Word:
    """Inverse of ``phi``: the result is a D_(n-1) word iff the prefix of w ends with n-1."""
    _check_phi_range(n, k)
    cf = _member(w, n, (k,))
    if cf.prefix[-1] == n - 1:
        return realize(CanonicalForm(n - 1, cf.prefix[:-1], (k,)))
    return realize(CanonicalForm(n, cf.prefix, (k, n - 1)))


# -- verification reports ---------------------------------------------------

@dataclass(frozen=True)
class CollectionCheck:
    k: int
    suffix: Word
    size: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.size == self.expected


@dataclass
class TheoremReport:
    n: int
    checks: list[CollectionCheck]

    @property
    def violations(self) -> list[CollectionCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_theorem(n: int) -> TheoremReport:
    """Compare every collection size of D_n with C(n, k)."""
    checks = [
        CollectionCheck(p.k, c.suffix.word, len(c), catalan(n, p.k))
        for p in packets(n)
        for c in p.collections
    ]
    return TheoremReport(n, checks)


@dataclass
class IdentityReport:
    n: int
    lhs: int
    rhs: int
    enumerated: int | None = None

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs and self.enumerated in (None, self.rhs)

    def __str__(self) -> str:
        line = f"{self.lhs} = {self.rhs} {'PASS' if self.ok else 'FAIL'}"
        if self.enumerated is not None:
            line += f" (enumerated {self.enumerated})"
        return line


def verify_identity(n: int, enumerate_words: bool | None = None) -> IdentityReport:
    """
    Sum of C(n,k)·|P(n,k)| against (n+3)/2 · C_n − 1 in exact integers.

    The right side is also compared with a direct count of homogeneous
    canonical words, by default for n <= 8.
    """
    if n < 4:
        raise InvalidArgumentError(f"n must be ≥ 4, got {n}")
    lhs = sum(catalan(n, k) * packet_size_formula(n, k) for k in range(n + 1))
    rhs = fc_count_formula(n)
    if enumerate_words is None:
        enumerate_words = n <= 8
    enumerated = sum(1 for _ in homogeneous_forms(n)) if enumerate_words else None
    return IdentityReport(n, lhs, rhs, enumerated)


@dataclass
class BijectionReport:
    name: str
    n: int
    k: int
    domain_size: int
    codomain_size: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_sigma_tau(n: int) -> list[BijectionReport]:
    """sigma and tau are inverse bijections for every 1 <= k <= n-3."""
    colls = all_collections(n)
    reports = []
    for k in range(1, n - 2):
        dom = set(colls[(k,)].words)
        cod = set(colls[(k + 1, n - 1)].words)
        rep = BijectionReport("sigma/tau", n, k, len(dom), len(cod))
        images = set()
        for w in sorted(dom):
            v = sigma(w, n, k)
            images.add(v)
            if v not in cod:
                rep.failures.append(f"sigma{format_word(w)} = {format_word(v)} outside codomain")
            elif tau(v, n, k) != w:
                rep.failures.append(f"tau(sigma{format_word(w)}) != {format_word(w)}")
        if images != cod:
            rep.failures.append(f"sigma image has {len(images)} words, codomain {len(cod)}")
        for v in sorted(cod):
            w = tau(v, n, k)
            if w not in dom:
                rep.failures.append(f"tau{format_word(v)} = {format_word(w)} outside domain")
            elif sigma(w, n, k) != v:
                rep.failures.append(f"sigma(tau{format_word(v)}) != {format_word(v)}")
        reports.append(rep)
    return reports


def verify_phi_rho(n: int) -> list[BijectionReport]:
    """phi: c^n_{w1} ⊔ c^{n-1}_{w3} -> c^n_{w2} is a bijection with inverse rho, 1 <= k <= n-2."""
    big, small = all_collections(n), all_collections(n - 1)
    reports = []
    for k in range(1, n - 1):
        d1 = set(big[(k, n - 1)].words)
        d3 = set(small[(k,)].words)
        cod = set(big[(k,)].words)
        rep = BijectionReport("phi/rho", n, k, len(d1) + len(d3), len(cod))
        if d1 & d3:
            rep.failures.append("phi domains overlap")
        im1 = {phi(w, n, k) for w in d1}
        im2 = {phi(w, n, k) for w in d3}
        if im1 & im2:
            rep.failures.append("phi_1 and phi_2 images overlap")
        if im1 | im2 != cod:
            rep.failures.append("phi image differs from the codomain collection")
        for w in sorted(d1 | d3):
            if rho(phi(w, n, k), n, k) != w:
                rep.failures.append(f"rho(phi{format_word(w)}) != {format_word(w)}")
        for v in sorted(cod):
            back = rho(v, n, k)
            if back not in d1 and back not in d3:
                rep.failures.append(f"rho{format_word(v)} outside both domains")
            elif phi(back, n, k) != v:
                rep.failures.append(f"phi(rho{format_word(v)}) != {format_word(v)}")
        if len(d1) + len(d3) != len(cod):
            rep.failures.append(f"sizes {len(d1)} + {len(d3)} != {len(cod)}")
        reports.append(rep)
    return reports


def verify_same_prefix(n: int) -> list[str]:
    """Collections with at least two suffix segments and j_1 = k+1 share their prefix sets."""
    failures = []
    colls = all_collections(n)
    for k in range(0, n - 2):
        group = [c for p, c in colls.items() if len(p) >= 2 and p[0] == k + 1]
        if not group:
            continue
        first = set(group[0].prefixes)
        for c in group[1:]:
            if set(c.prefixes) != first:
                failures.append(f"prefix sets differ: {c.suffix} vs {group[0].suffix}")
    return failures


def verify_packet_sizes(n: int) -> list[str]:
    """Packet sizes against the closed formula, equal collection sizes within packets."""
    failures = []
    for p in packets(n):
        expected = packet_size_formula(n, p.k)
        if p.size != expected:
            failures.append(f"|P({n},{p.k})| = {p.size}, expected {expected}")
        if len(set(p.collection_sizes)) > 1:
            failures.append(f"P({n},{p.k}) has unequal collection sizes {p.collection_sizes}")
    return failures


# -- export -------------------------------------------------------------------

def packets_to_json(n: int, only_k: int | None = None) -> str:
    data = {
        "n": n,
        "packets": [
            {
                "k": p.k,
                "size": p.size,
                "collections": [
                    {"suffix": list(c.suffix.word), "words": [list(w) for w in c.words]}
                    for c in p.collections
                ],
            }
            for p in packets(n)
            if only_k is None or p.k == only_k
        ],
    }
    return json.dumps(data)


def packets_to_csv(n: int, only_k: int | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "k", "suffix", "word"])
    for p in packets(n):
        if only_k is not None and p.k != only_k:
            continue
        for c in p.collections:
            for w in c.words:
                writer.writerow([n, p.k, format_word(c.suffix.word), format_word(w)])
    return buf.getvalue()
