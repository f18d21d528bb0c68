"""Shared helpers: random generators and independent oracles.

The oracles here deliberately avoid the production code paths they check:
evaluation is redone by literal pair/single enumeration with exhaustive sign
search, and the four-term relations are checked against an index-cycle count
weight system.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from splitlink.graphs import SimpleGraph, canonicalize
from splitlink.words import Presentation, SimpleCommutator, Word


def random_valid_word(rng: random.Random, max_letters: int = 12, max_gen: int = 5) -> Word:
    """Random word built from cancelling letter pairs, so exponent sums vanish."""
    pairs = rng.randint(0, max_letters // 2)
    values = []
    for _ in range(pairs):
        g = rng.randint(1, max_gen)
        values.extend([g, -g])
    rng.shuffle(values)
    return Word.from_ints(values)


def random_presentation(rng: random.Random, max_circles: int = 4,
                        max_component: int = 4) -> Presentation:
    """Random presentation over ambient {0..max_component}, duplicates allowed."""
    n = rng.randint(0, max_circles)
    circles = []
    for _ in range(n):
        a, b = rng.sample(range(1, max_component + 1), 2)
        circles.append(SimpleCommutator.of(a * rng.choice((1, -1)), b))
    return Presentation(tuple(circles), frozenset(range(max_component + 1)))


# --- brute-force evaluation oracle ------------------------------------------

def _oracle_localized_graph(triples: dict[tuple[int, int, int], int],
                            ambient: frozenset[int]):
    """Graph key for triples normalized by exhaustive sign-flip search.

    Tries every subset of ambient as a flip set; returns None when no flip set
    makes all values positive or when the graph has an isolated edge.
    """
    indices = sorted(ambient)
    for r in range(len(indices) + 1):
        for combo in itertools.combinations(indices, r):
            flipped = {
                rep: v * (-1) ** len(set(rep) & set(combo))
                for rep, v in triples.items()
            }
            if all(v > 0 for v in flipped.values()):
                triples = flipped
                break
        else:
            continue
        break
    else:
        return None
    if any(v != 1 for v in triples.values()):
        return None
    vertex_of = {rep: i for i, rep in enumerate(sorted(triples))}
    edges = []
    fresh = len(vertex_of)
    leaves = set()
    for comp in sorted(ambient):
        ends = [vertex_of[rep] for rep in sorted(triples) if comp in rep]
        while len(ends) < 2:
            ends.append(fresh)
            leaves.add(fresh)
            fresh += 1
        edges.append(tuple(ends))
    for u, v in edges:
        if u in leaves and v in leaves:
            return None  # isolated edge: contribution vanishes
    return canonicalize(SimpleGraph.from_pairs(edges))


def oracle_eval_presentation(p: Presentation):
    """Literal pair/single expansion, independent of the engine internals.

    Returns (vector dict, case2 dict) keyed by canonical graph keys.
    """
    amb = p.ambient
    vector: dict[bytes, Fraction] = {}
    case2: dict[bytes, Fraction] = {}

    def add(target, key, coeff):
        if key is None:
            return
        target[key] = target.get(key, Fraction(0)) + coeff
        if not target[key]:
            del target[key]

    n = p.size
    for i in range(n):
        for j in range(i + 1, n):
            ci, cj = p.circles[i], p.circles[j]
            if ci.pair == cj.pair:
                if ci.exponent + cj.exponent == 0:
                    continue
                if amb != frozenset((0, *ci.pair)):
                    continue
                key = _oracle_localized_graph({(0, *ci.pair): 1}, amb)
                add(case2, key, Fraction(1))
                continue
            triples: dict[tuple[int, int, int], int] = {}
            for c in (ci, cj):
                rep = (0, c.first, c.second)
                triples[rep] = triples.get(rep, 0) + c.exponent
            key = _oracle_localized_graph(triples, amb)
            add(vector, key, Fraction(1))
    for i in range(n):
        c = p.circles[i]
        key = _oracle_localized_graph({(0, c.first, c.second): c.exponent}, amb)
        add(vector, key, Fraction(-(n - 2)))
    return vector, case2


# --- weight-system oracle for the four-term relations -----------------------

def gl_cycle_count(labels: tuple[int, ...]) -> int:
    """Number of index cycles of the diagram's matrix-insertion word.

    Placing a matrix unit pair on each chord and tracing the circle gives a
    weight system sending a diagram to N ** cycles; it satisfies every
    four-term relation exactly, for every N, which pins the relation signs.
    """
    n = len(labels)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    positions: dict[int, list[int]] = {}
    for pos, chord in enumerate(labels):
        positions.setdefault(chord, []).append(pos)
    for p, q in positions.values():
        parent[find((p + 1) % n)] = find(q)
        parent[find((q + 1) % n)] = find(p)
    return len({find(i) for i in range(n)})
