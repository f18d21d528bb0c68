"""Unitrivalent multigraphs: canonical keys, enumeration, and rational vectors."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

# Canonical keys are certified (by the randomized relabeling suite) up to this
# many vertices; 14 covers every k <= 7 edge graph, including pure matchings.
MAX_CANONICAL_VERTICES = 14


class GraphError(ValueError):
    """Violated graph invariant or malformed graph input."""


Edge = tuple[int, int, "int | None"]


@dataclass(frozen=True)
class SimpleGraph:
    """Multigraph with every vertex of valence 1 or 3 and no self-loops.

    Edges may carry the link-component index that produced them; the label is
    construction metadata only and is ignored by canonicalization.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        norm: list[Edge] = []
        for e in self.edges:
            if len(e) == 2:
                u, v = e  # type: ignore[misc]
                label: int | None = None
            else:
                u, v, label = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            norm.append((u, v, label))
        object.__setattr__(self, "edges", tuple(norm))
        for vertex, valence in self.valences().items():
            if valence not in (1, 3):
                raise GraphError(f"vertex {vertex} has valence {valence}, need 1 or 3")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "SimpleGraph":
        return cls(tuple((u, v, None) for u, v in pairs))

    def valences(self) -> dict[int, int]:
        deg: dict[int, int] = {}
        for u, v, _ in self.edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        return deg

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(x for u, v, _ in self.edges for x in (u, v))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def relabeled(self, mapping: Mapping[int, int]) -> "SimpleGraph":
        return SimpleGraph(tuple((mapping[u], mapping[v], lab) for u, v, lab in self.edges))

    def __str__(self) -> str:
        return graph_to_text(self)


def has_isolated_edge(g: SimpleGraph) -> bool:
    """True iff some edge has two univalent endpoints (a split unknot factor)."""
    deg = g.valences()
    return any(deg[u] == 1 and deg[v] == 1 for u, v, _ in g.edges)


def _components(edges: tuple[tuple[int, int], ...]) -> list[tuple[tuple[int, int], ...]]:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    buckets: dict[int, list[tuple[int, int]]] = {}
    for u, v in edges:
        buckets.setdefault(find(u), []).append((u, v))
    return [tuple(b) for _, b in sorted(buckets.items())]


def _min_encoding(comp: tuple[tuple[int, int], ...]) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Minimum edge-list encoding over valence-class-preserving relabelings."""
    deg: dict[int, int] = {}
    for u, v in comp:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    trivalent = sorted(x for x, d in deg.items() if d == 3)
    univalent = sorted(x for x, d in deg.items() if d == 1)
    t = len(trivalent)
    n = t + len(univalent)
    best: tuple[tuple[int, int], ...] | None = None
    for tri_perm in itertools.permutations(range(t)):
        tri_map = dict(zip(trivalent, tri_perm))
        for uni_perm in itertools.permutations(range(t, n)):
            mapping = dict(tri_map)
            mapping.update(zip(univalent, uni_perm))
            enc = tuple(sorted(
                (mapping[u], mapping[v]) if mapping[u] <= mapping[v] else (mapping[v], mapping[u])
                for u, v in comp
            ))
            if best is None or enc < best:
                best = enc
    assert best is not None
    return n, best


@lru_cache(maxsize=None)
def _canonical_key(edges: tuple[tuple[int, int], ...]) -> bytes:
    comps = _components(edges)
    encoded = sorted(_min_encoding(c) for c in comps)
    parts: list[str] = []
    offset = 0
    for nvert, comp_edges in encoded:
        parts.extend(f"{u + offset}-{v + offset}" for u, v in comp_edges)
        offset += nvert
    return ";".join(parts).encode()


def canonicalize(g: SimpleGraph) -> bytes:
    """Canonical byte key of the unlabeled isomorphism class of ``g``.

    Connected components are canonicalized independently by brute-force
    minimum edge-list encoding over valence-preserving vertex relabelings,
    then concatenated in sorted order with consecutive vertex numbering.  The
    key doubles as a readable edge list, so it can be parsed back into a
    representative graph.
    """
    if len(g.vertices) > MAX_CANONICAL_VERTICES:
        raise GraphError(
            f"graph has {len(g.vertices)} vertices; canonical keys are certified "
            f"only up to {MAX_CANONICAL_VERTICES}"
        )
    return _canonical_key(tuple(sorted((u, v) for u, v, _ in g.edges)))


def graph_to_text(g: SimpleGraph) -> str:
    return "sg:" + ";".join(f"{u}-{v}" for u, v, _ in g.edges)


def parse_graph(text: str) -> SimpleGraph:
    if not text.startswith("sg:"):
        raise GraphError("graph text must start with 'sg:'")
    body = text[3:].strip()
    if not body:
        raise GraphError("empty edge list")
    pairs = []
    for part in body.split(";"):
        piece = part.strip()
        m = re.fullmatch(r"(\d+)-(\d+)", piece)
        if not m:
            raise GraphError(f"malformed edge {piece!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
    return SimpleGraph.from_pairs(pairs)


def graph_from_key(key: bytes) -> SimpleGraph:
    """Representative graph of a canonical key (keys are edge-list encodings)."""
    return parse_graph("sg:" + key.decode())


def named_graph(name: str) -> SimpleGraph:
    """One of the small named graphs: ``bubble``, ``switch``, or ``tripod``.

    The bubble is the 4-edge graph made of a double edge plus one leg on each
    trivalent vertex; the switch joins two trivalent vertices by a single edge
    with two legs each; the tripod is one trivalent vertex with three legs.
    """
    if name == "bubble":
        return SimpleGraph.from_pairs([(0, 1), (0, 1), (0, 2), (1, 3)])
    if name == "switch":
        return SimpleGraph.from_pairs([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    if name == "tripod":
        return SimpleGraph.from_pairs([(0, 1), (0, 2), (0, 3)])
    raise GraphError(f"unknown graph name {name!r}")


@lru_cache(maxsize=1)
def _named_keys() -> dict[bytes, str]:
    return {canonicalize(named_graph(n)): n for n in ("tripod", "bubble", "switch")}


def display_name(key: bytes) -> str | None:
    return _named_keys().get(key)


def _degree_multigraphs(degrees: list[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every loop-free edge multiset realizing ``degrees``, each exactly once.

    Edges are emitted as a sorted list: the source is always the lowest vertex
    with remaining degree and its partners are chosen in non-decreasing order.
    """
    n = len(degrees)
    deg = list(degrees)
    edges: list[tuple[int, int]] = []

    def rec(v: int, min_w: int) -> Iterator[tuple[tuple[int, int], ...]]:
        while v < n and deg[v] == 0:
            v += 1
            min_w = v + 1
        if v >= n:
            yield tuple(edges)
            return
        for w in range(max(min_w, v + 1), n):
            if deg[w] == 0:
                continue
            deg[v] -= 1
            deg[w] -= 1
            edges.append((v, w))
            yield from rec(v, w)
            edges.pop()
            deg[v] += 1
            deg[w] += 1

    yield from rec(0, 1)


def enumerate_simple_graphs(k: int, drop_isolated: bool = False) -> list[bytes]:
    """All isomorphism classes with ``k`` edges, as sorted canonical keys.

    With ``drop_isolated`` the classes containing an isolated edge (which
    evaluate to zero downstream) are removed.
    """
    if not 1 <= k <= 7:
        raise GraphError(f"edge count {k} out of supported range 1..7")
    keys: set[bytes] = set()
    for t in range(2 * k // 3 + 1):
        u = 2 * k - 3 * t
        if u < 0:
            continue
        for edges in _degree_multigraphs([3] * t + [1] * u):
            g = SimpleGraph.from_pairs(edges)
            if drop_isolated and has_isolated_edge(g):
                continue
            keys.add(canonicalize(g))
    return sorted(keys)


@dataclass(frozen=True)
class GraphVector:
    """Exact rational linear combination of canonical graph keys.

    Graphs containing an isolated edge vanish identically downstream, so their
    keys are dropped at insertion via :meth:`from_graph` unless the caller
    asks to keep them for debugging.
    """

    coefficients: Mapping[bytes, Fraction]

    def __post_init__(self) -> None:
        clean = {k: Fraction(v) for k, v in self.coefficients.items() if v}
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def zero(cls) -> "GraphVector":
        return cls({})

    @classmethod
    def from_graph(cls, g: SimpleGraph, coeff: "Fraction | int" = 1,
                   keep_isolated: bool = False) -> "GraphVector":
        if not keep_isolated and has_isolated_edge(g):
            return cls({})
        return cls({canonicalize(g): Fraction(coeff)})

    def __add__(self, other: "GraphVector") -> "GraphVector":
        total = dict(self.coefficients)
        for k, v in other.coefficients.items():
            total[k] = total.get(k, Fraction(0)) + v
        return GraphVector(total)

    def __sub__(self, other: "GraphVector") -> "GraphVector":
        return self + other.scale(-1)

    def scale(self, c: "Fraction | int") -> "GraphVector":
        c = Fraction(c)
        if not c:
            return GraphVector.zero()
        return GraphVector({k: v * c for k, v in self.coefficients.items()})

    def get(self, key: bytes) -> Fraction:
        return self.coefficients.get(key, Fraction(0))

    def terms(self) -> tuple[tuple[bytes, Fraction], ...]:
        return tuple(sorted(self.coefficients.items()))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def to_json_terms(self) -> list[dict[str, str]]:
        return [{"key": k.hex(), "coeff": str(v)} for k, v in self.terms()]

    def pretty(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for idx, (key, coeff) in enumerate(self.terms()):
            label = display_name(key) or key.decode()
            body = f"{abs(coeff)}·{label}"
            if idx == 0:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)
