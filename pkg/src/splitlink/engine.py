"""Rewriting engine turning circle presentations into exact graph vectors.

A product of n commutator circles expands into the sum of all two-circle
products minus (n-2) times the sum of single circles.  Each surviving term is
sign-normalized to a value-1 collection and read off as a graph; ambient
components missed by a term contribute isolated edges, which kill it.  A
two-circle product over the same pair with equal exponents carries a +-2
value whose reduction constant is not determined by this calculus, so such
terms are kept as tagged multiplicities of the underlying value-1 graph
(``case2_terms``) instead of being resolved to an invented multiple.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from splitlink.diagrams import ChordDiagram, diagram_word
from splitlink.graphs import GraphVector, canonicalize, display_name
from splitlink.mu import MuCollection, flip_normalize, to_graph
from splitlink.words import Presentation, SimpleCommutator, canonical_presentation

TRACE_ENV = "OHTSUKI_TRACE"


@dataclass(frozen=True)
class TraceStep:
    kind: str                  # "single" or "pair"
    circles: tuple[str, ...]
    case: "int | None"
    outcome: str
    coefficient: Fraction = Fraction(1)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "circles": list(self.circles),
            "case": self.case,
            "outcome": self.outcome,
            "coefficient": str(self.coefficient),
        }


@dataclass(frozen=True)
class EvalResult:
    """Graph vector plus tagged unresolved terms and an optional trace."""

    vector: GraphVector
    case2_terms: Mapping[bytes, Fraction]
    trace: "tuple[TraceStep, ...] | None" = None

    def __post_init__(self) -> None:
        clean = {k: Fraction(v) for k, v in self.case2_terms.items() if v}
        object.__setattr__(self, "case2_terms", clean)

    def same_value(self, other: "EvalResult") -> bool:
        """Equality of the mathematical content, ignoring traces."""
        return self.vector == other.vector and self.case2_terms == other.case2_terms

    @property
    def is_zero(self) -> bool:
        return self.vector.is_zero and not self.case2_terms

    def pretty(self) -> str:
        text = self.vector.pretty()
        if self.case2_terms:
            tagged = ", ".join(
                f"{v}×tag({display_name(k) or k.decode()})"
                for k, v in sorted(self.case2_terms.items())
            )
            text += f"  [unresolved: {tagged}]"
        return text


def _graph_label(vec: GraphVector) -> str:
    return vec.pretty()


def single_graph(circle: SimpleCommutator, ambient: Iterable[int]) -> GraphVector:
    """Graph of one commutator circle; zero unless ambient is exactly spanned.

    Ambient components untouched by the circle become isolated edges, so the
    result is nonzero only when ambient equals {0, a, b}.
    """
    amb = frozenset(ambient)
    if amb != frozenset((0, circle.first, circle.second)):
        return GraphVector.zero()
    mc = MuCollection(amb, {(0, circle.first, circle.second): circle.exponent})
    normalized = flip_normalize(mc)
    return GraphVector.from_graph(to_graph(normalized.collection))


def _pair_case(ci: SimpleCommutator, cj: SimpleCommutator) -> int:
    if ci.pair == cj.pair:
        return 1 if ci.exponent + cj.exponent == 0 else 2
    return 3 if set(ci.pair) & set(cj.pair) else 4


def pair_graph(ci: SimpleCommutator, cj: SimpleCommutator,
               ambient: Iterable[int]) -> EvalResult:
    """Two-circle product, split into the four cases by shared indices.

    Same pair with cancelling exponents is trivial; same pair with equal
    exponents is tagged (value +-2); otherwise the two triples normalize to
    value 1 and reduce to a graph, which survives only if the pair spans the
    whole ambient set.
    """
    amb = frozenset(ambient)
    case = _pair_case(ci, cj)
    if case == 1:
        return EvalResult(GraphVector.zero(), {})
    if case == 2:
        if amb != frozenset((0, *ci.pair)):
            return EvalResult(GraphVector.zero(), {})
        base = MuCollection(amb, {(0, ci.first, ci.second): 1})
        key = canonicalize(to_graph(base))
        return EvalResult(GraphVector.zero(), {key: Fraction(1)})
    if amb != frozenset((0, *ci.pair, *cj.pair)):
        return EvalResult(GraphVector.zero(), {})
    vals: dict[tuple[int, int, int], int] = {}
    for c in (ci, cj):
        rep = (0, c.first, c.second)
        vals[rep] = vals.get(rep, 0) + c.exponent
    normalized = flip_normalize(MuCollection(amb, vals))
    return EvalResult(GraphVector.from_graph(to_graph(normalized.collection)), {})


def _trace_wanted(flag: "bool | None") -> bool:
    if flag is None:
        return os.environ.get(TRACE_ENV, "") == "1"
    return flag


def eval_presentation(p: Presentation, trace: "bool | None" = None) -> EvalResult:
    """Expand circles via the sum of pairs minus (n-2) times the singles.

    The formula is applied uniformly for every n >= 0; at n = 1 it returns
    exactly the single-circle graph and at n = 2 exactly the two-circle
    product, so no special cases exist.
    """
    want_trace = _trace_wanted(trace)
    n = p.size
    vector = GraphVector.zero()
    case2: dict[bytes, Fraction] = {}
    steps: list[TraceStep] = []
    for i in range(n):
        for j in range(i + 1, n):
            ci, cj = p.circles[i], p.circles[j]
            res = pair_graph(ci, cj, p.ambient)
            vector = vector + res.vector
            for key, v in res.case2_terms.items():
                case2[key] = case2.get(key, Fraction(0)) + v
            if want_trace:
                if res.case2_terms:
                    outcome = "tagged(" + ", ".join(
                        display_name(k) or k.decode() for k in sorted(res.case2_terms)
                    ) + ")"
                else:
                    outcome = _graph_label(res.vector)
                steps.append(TraceStep("pair", (str(ci), str(cj)), _pair_case(ci, cj), outcome))
    coeff = Fraction(-(n - 2))
    for i in range(n):
        g = single_graph(p.circles[i], p.ambient)
        vector = vector + g.scale(coeff)
        if want_trace:
            steps.append(TraceStep("single", (str(p.circles[i]),), None,
                                   _graph_label(g), coeff))
    return EvalResult(vector, case2, tuple(steps) if want_trace else None)


def eval_diagram(c: ChordDiagram, trace: "bool | None" = None) -> EvalResult:
    """Evaluate a chord diagram through its outer-circle word.

    The ambient components are the outer circle (index 0) plus one component
    per chord, so an m-chord diagram lives at m+1 edges.
    """
    w = diagram_word(c)
    ambient = frozenset(range(c.m + 1))
    return eval_presentation(canonical_presentation(w, ambient), trace=trace)
