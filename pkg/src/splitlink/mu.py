"""Triple-invariant collections: symmetry bookkeeping, orientation flips, and
reduction to unitrivalent graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from splitlink.graphs import SimpleGraph
from splitlink.words import Presentation


class MuError(ValueError):
    """Violated collection invariant or impossible reduction."""


# even permutations of three positions: cyclic rotations keep the value,
# transpositions negate it
_EVEN = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


@dataclass(frozen=True)
class MuCollection:
    """Integer triple-invariant values, one per unordered 3-subset of components.

    Each value is stored against the increasing representative (a, b, c);
    queries in any index order apply the cyclic/antisymmetry sign rules.
    """

    ambient: frozenset[int]
    values: Mapping[tuple[int, int, int], int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ambient", frozenset(self.ambient))
        clean: dict[tuple[int, int, int], int] = {}
        for rep, v in self.values.items():
            a, b, c = rep
            if not a < b < c:
                raise MuError(f"representative {rep} must be strictly increasing")
            if not {a, b, c} <= self.ambient:
                raise MuError(f"triple {rep} mentions components outside ambient")
            if v:
                clean[rep] = int(v)
        object.__setattr__(self, "values", clean)

    def get(self, i1: int, i2: int, i3: int) -> int:
        if len({i1, i2, i3}) != 3:
            raise MuError("triple indices must be distinct")
        a, b, c = sorted((i1, i2, i3))
        v = self.values.get((a, b, c), 0)
        if not v:
            return 0
        rep = (a, b, c)
        order = tuple(rep.index(x) for x in (i1, i2, i3))
        return v if order in _EVEN else -v

    def triples(self) -> tuple[tuple[tuple[int, int, int], int], ...]:
        return tuple(sorted(self.values.items()))

    @property
    def is_zero(self) -> bool:
        return not self.values


def from_presentation(p: Presentation) -> MuCollection:
    """Localized triple invariants of a circle presentation on component 0.

    A circle [a,b]^e contributes e to the triple (0, a, b); no triple without
    the index 0 is ever nonzero for such presentations.
    """
    vals: dict[tuple[int, int, int], int] = {}
    for c in p.circles:
        rep = (0, c.first, c.second)
        vals[rep] = vals.get(rep, 0) + c.exponent
    return MuCollection(p.ambient, vals)


def mu_to_json(mc: MuCollection) -> dict:
    """JSON form: {"ambient": [0, 1, 2], "triples": [{"c": [0, 1, 2], "v": 1}]}."""
    return {
        "ambient": sorted(mc.ambient),
        "triples": [{"c": list(rep), "v": v} for rep, v in mc.triples()],
    }


def mu_from_json(data: dict) -> MuCollection:
    """Parse the JSON form; triples may list their indices in any cyclic order."""
    try:
        ambient = frozenset(int(x) for x in data["ambient"])
        values: dict[tuple[int, int, int], int] = {}
        for item in data["triples"]:
            i1, i2, i3 = (int(x) for x in item["c"])
            v = int(item["v"])
            if len({i1, i2, i3}) != 3:
                raise MuError(f"triple {[i1, i2, i3]} has repeated indices")
            a, b, c = sorted((i1, i2, i3))
            order = tuple((a, b, c).index(x) for x in (i1, i2, i3))
            sign = 1 if order in _EVEN else -1
            values[(a, b, c)] = values.get((a, b, c), 0) + sign * v
    except (KeyError, TypeError, ValueError) as exc:
        raise MuError(f"malformed collection JSON: {exc}") from None
    return MuCollection(ambient, values)


@dataclass(frozen=True)
class FlipResult:
    collection: MuCollection
    flips: frozenset[int]
    conflicts: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.conflicts


def flip_normalize(mc: MuCollection) -> FlipResult:
    """Orientation flips driving every stored value nonnegative where possible.

    A flip of component i negates every triple containing i.  First a greedy
    sweep runs over indices in increasing order with component 0 deferred to
    last (the expanded component is left alone whenever another flip works),
    repeating while a single flip strictly reduces the number of negative
    entries.  Residual negatives are then repaired by augmenting flips: on
    the graph whose nodes are the triples and whose edges are shared indices,
    flipping a path toggles only its two endpoints, so negatives are paired
    off, and a lone negative is absorbed through any triple owning a private
    index.  Under the at-most-two-triples-per-index requirement this reaches
    an all-nonnegative state exactly when one exists; anything still negative
    is reported as a conflict rather than guessed away.
    """
    counts: dict[int, int] = {}
    for rep in mc.values:
        for i in rep:
            counts[i] = counts.get(i, 0) + 1
    over = sorted(i for i, c in counts.items() if c > 2)
    if over:
        raise MuError(
            f"component {over[0]} appears in {counts[over[0]]} nonzero triples; "
            "normalization requires at most two"
        )
    vals = dict(mc.values)
    flips: set[int] = set()

    def apply(indices: set[int]) -> None:
        nonlocal vals
        for i in indices:
            vals = {rep: (-v if i in rep else v) for rep, v in vals.items()}
            flips.symmetric_difference_update({i})

    candidates = sorted(i for i in counts if i != 0) + ([0] if 0 in counts else [])
    changed = True
    while changed:
        changed = False
        for i in candidates:
            negatives = sum(1 for v in vals.values() if v < 0)
            flipped = {rep: (-v if i in rep else v) for rep, v in vals.items()}
            if sum(1 for v in flipped.values() if v < 0) < negatives:
                vals = flipped
                flips.symmetric_difference_update({i})
                changed = True

    legs = {rep: sorted(i for i in rep if counts[i] == 1) for rep in vals}
    adjacency: dict[tuple[int, int, int], list[tuple[tuple[int, int, int], int]]] = {}
    for i in sorted(counts):
        owners = sorted(rep for rep in vals if i in rep)
        if len(owners) == 2:
            a, b = owners
            adjacency.setdefault(a, []).append((b, i))
            adjacency.setdefault(b, []).append((a, i))
    for start in sorted(vals):
        if vals[start] >= 0:
            continue
        if legs[start]:
            apply({legs[start][0]})
            continue
        previous: dict[tuple[int, int, int], tuple[tuple[int, int, int], int] | None]
        previous = {start: None}
        queue = [start]
        target = None
        target_leg: int | None = None
        while queue and target is None:
            current = queue.pop(0)
            for neighbor, shared in sorted(adjacency.get(current, [])):
                if neighbor in previous:
                    continue
                previous[neighbor] = (current, shared)
                if vals[neighbor] < 0:
                    target = neighbor
                    break
                if legs[neighbor]:
                    target = neighbor
                    target_leg = legs[neighbor][0]
                    break
                queue.append(neighbor)
        if target is None:
            continue  # frustrated component: stays negative, reported below
        toggles: set[int] = set()
        cursor = target
        while previous[cursor] is not None:
            parent, shared = previous[cursor]  # type: ignore[misc]
            toggles ^= {shared}
            cursor = parent
        if target_leg is not None:
            toggles ^= {target_leg}
        apply(toggles)

    conflicts = tuple(sorted(rep for rep, v in vals.items() if v < 0))
    return FlipResult(MuCollection(mc.ambient, vals), frozenset(flips), conflicts)


def to_graph(mc: MuCollection) -> SimpleGraph:
    """Reduce a normal-form collection (all values exactly 1) to its graph.

    Every ambient component becomes one labeled edge; every nonzero triple
    becomes a trivalent vertex lying on its three component edges; edge ends
    not consumed by a triple become univalent vertices.  Values of 2 are
    rejected here: their reduction constant is handled by the engine's
    tagging, not by this map.
    """
    incidence: dict[int, list[int]] = {c: [] for c in mc.ambient}
    for vertex_id, (rep, v) in enumerate(mc.triples()):
        if v != 1:
            raise MuError(
                f"triple {rep} has value {v}; only collections with all values 1 reduce to a graph"
            )
        for c in rep:
            incidence[c].append(vertex_id)
    over = sorted(c for c, vs in incidence.items() if len(vs) > 2)
    if over:
        raise MuError(f"component {over[0]} lies on more than two triples")
    edges: list[tuple[int, int, int]] = []
    next_vertex = len(mc.values)
    for c in sorted(mc.ambient):
        ends = list(incidence[c])
        while len(ends) < 2:
            ends.append(next_vertex)
            next_vertex += 1
        edges.append((ends[0], ends[1], c))
    return SimpleGraph(tuple(edges))
