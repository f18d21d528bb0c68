"""Alternating-sum combinators, relation harvesting, and exact linear algebra.

Relations are harvested, never hard-coded: the vanishing results downstream
must fall out of four-term rows, presentation-pair rows, and isolated-edge
vanishing alone.  All arithmetic is exact rational.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from splitlink.diagrams import four_t_relations
from splitlink.engine import EvalResult, eval_diagram, eval_presentation
from splitlink.graphs import display_name
from splitlink.words import Presentation, presentation_epsilon


class RelationError(ValueError):
    """Malformed system input or refused harvest."""


@dataclass(frozen=True)
class SubsetAssignment:
    """Exact values attached to every sublink (subset of components 1..n)."""

    n: int
    values: Mapping[frozenset[int], Fraction]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise RelationError("component count must be >= 0")
        full = frozenset(range(1, self.n + 1))
        clean: dict[frozenset[int], Fraction] = {}
        for s, v in self.values.items():
            fs = frozenset(s)
            if not fs <= full:
                raise RelationError(f"subset {sorted(fs)} outside components 1..{self.n}")
            clean[fs] = Fraction(v)
        if len(clean) != 1 << self.n:
            raise RelationError(
                f"need values on all {1 << self.n} subsets, got {len(clean)}"
            )
        object.__setattr__(self, "values", clean)

    def get(self, subset: Iterable[int]) -> Fraction:
        return self.values[frozenset(subset)]


def _subsets_of(s: frozenset[int]) -> Iterable[frozenset[int]]:
    items = sorted(s)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def psi(sa: SubsetAssignment) -> Fraction:
    """Alternating sum of the assignment over all sublinks of the full link."""
    return sum((Fraction(-1) ** len(s)) * v for s, v in sa.values.items()) or Fraction(0)


def moebius_reconstruct(psi_values: SubsetAssignment) -> SubsetAssignment:
    """Invert alternating-sum tables: out(S) = sum over T <= S of (-1)^|T| in(T).

    The transform is an involution, so the same map both reconstructs the
    original values from a full table of alternating sums and produces that
    table from the original values.
    """
    out = {}
    for s in psi_values.values:
        total = Fraction(0)
        for t in _subsets_of(s):
            total += (Fraction(-1) ** len(t)) * psi_values.values[t]
        out[s] = total
    return SubsetAssignment(psi_values.n, out)


@dataclass(frozen=True)
class SolveResult:
    unknowns: tuple[str, ...]
    rank: int
    forced_zero: tuple[str, ...]
    kernel_basis: tuple[dict[str, Fraction], ...]

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "forced_zero": list(self.forced_zero),
            "kernel_dim": len(self.kernel_basis),
            "unknowns": list(self.unknowns),
        }


class RelationSystem:
    """Accumulates exact sparse rows over named unknowns.

    Row order never affects the solved rank or forced-zero set.  Rows flagged
    conjectural are solved like any other but reported separately.
    """

    def __init__(self) -> None:
        self._rows: list[dict[str, Fraction]] = []
        self._flags: list[bool] = []
        self._unknowns: list[str] = []
        self._known: set[str] = set()

    def add_row(self, row: Mapping[str, "Fraction | int | str"],
                conjectural: bool = False) -> dict[str, Fraction]:
        clean: dict[str, Fraction] = {}
        for unknown, coeff in row.items():
            value = Fraction(coeff)
            if value:
                clean[str(unknown)] = value
        for unknown in sorted(clean):
            if unknown not in self._known:
                self._known.add(unknown)
                self._unknowns.append(unknown)
        self._rows.append(clean)
        self._flags.append(bool(conjectural))
        return dict(clean)

    @property
    def rows(self) -> tuple[dict[str, Fraction], ...]:
        return tuple(dict(r) for r in self._rows)

    @property
    def unknowns(self) -> tuple[str, ...]:
        return tuple(self._unknowns)

    @property
    def conjectural_rows(self) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(self._flags) if f)

    def solve(self, unknown_order: "Sequence[str] | None" = None) -> SolveResult:
        """Exact reduced row echelon analysis: rank, forced zeros, kernel basis.

        An unknown is forced to zero exactly when its unit vector lies in the
        row space, i.e. some fully reduced pivot row is supported on it alone.
        """
        unknowns = list(self._unknowns) if unknown_order is None else list(unknown_order)
        if sorted(unknowns) != sorted(self._unknowns):
            raise RelationError("unknown_order must be a permutation of the system's unknowns")
        index = {u: c for c, u in enumerate(unknowns)}
        width = len(unknowns)
        matrix = [[Fraction(0)] * width for _ in self._rows]
        for r, row in enumerate(self._rows):
            for unknown, coeff in row.items():
                matrix[r][index[unknown]] = coeff
        pivots: list[int] = []
        r = 0
        for col in range(width):
            pivot = next((i for i in range(r, len(matrix)) if matrix[i][col]), None)
            if pivot is None:
                continue
            matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
            inv = Fraction(1) / matrix[r][col]
            matrix[r] = [x * inv for x in matrix[r]]
            for i in range(len(matrix)):
                if i != r and matrix[i][col]:
                    f = matrix[i][col]
                    matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[r])]
            pivots.append(col)
            r += 1
            if r == len(matrix):
                break
        forced = []
        for row_i, col in enumerate(pivots):
            support = [c for c in range(width) if matrix[row_i][c]]
            if support == [col]:
                forced.append(unknowns[col])
        pivot_set = set(pivots)
        kernel = []
        for free in range(width):
            if free in pivot_set:
                continue
            vec = {unknowns[free]: Fraction(1)}
            for row_i, col in enumerate(pivots):
                if matrix[row_i][free]:
                    vec[unknowns[col]] = -matrix[row_i][free]
            kernel.append(vec)
        return SolveResult(tuple(unknowns), len(pivots), tuple(sorted(forced)), tuple(kernel))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["row", "unknown", "coeff"])
        for i, row in enumerate(self._rows):
            for unknown in sorted(row):
                writer.writerow([i, unknown, str(row[unknown])])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "RelationSystem":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["row", "unknown", "coeff"]:
            raise RelationError("expected CSV header 'row,unknown,coeff'")
        grouped: dict[str, dict[str, Fraction]] = {}
        order: list[str] = []
        for lineno, parts in enumerate(reader, start=2):
            if not parts:
                continue
            if len(parts) != 3:
                raise RelationError(f"line {lineno}: expected 3 fields, got {len(parts)}")
            rid, unknown, coeff = (p.strip() for p in parts)
            try:
                value = Fraction(coeff)
            except (ValueError, ZeroDivisionError):
                raise RelationError(f"line {lineno}: bad coefficient {coeff!r}") from None
            if rid not in grouped:
                grouped[rid] = {}
                order.append(rid)
            grouped[rid][unknown] = grouped[rid].get(unknown, Fraction(0)) + value
        system = cls()
        for rid in order:
            system.add_row(grouped[rid])
        return system


def graph_symbol(key: bytes) -> str:
    """Readable unknown id for a graph class: its name when it has one."""
    return display_name(key) or "g:" + key.decode()


def case2_symbol(key: bytes) -> str:
    return "case2:" + (display_name(key) or key.decode())


def _result_row(result: EvalResult, coeff: Fraction = Fraction(1)) -> dict[str, Fraction]:
    row: dict[str, Fraction] = {}
    for key, v in result.vector.coefficients.items():
        s = graph_symbol(key)
        row[s] = row.get(s, Fraction(0)) + coeff * v
    for key, v in result.case2_terms.items():
        s = case2_symbol(key)
        row[s] = row.get(s, Fraction(0)) + coeff * v
    return {k: v for k, v in row.items() if v}


def harvest_presentation_pair(p1: Presentation, p2: Presentation,
                              system: RelationSystem) -> dict[str, Fraction]:
    """Row asserting two expansions of the same weight-2 class agree.

    Refuses presentations whose pairwise exponent matrices (or ambient
    components) differ, since those need not describe the same class.  Rows
    over more than five components are flagged conjectural: the calculus is
    certified at desk scale only up to that size.
    """
    if p1.ambient != p2.ambient:
        raise RelationError("presentations must share the same ambient components")
    if presentation_epsilon(p1) != presentation_epsilon(p2):
        raise RelationError(
            "pairwise exponent matrices differ; the presentations do not "
            "describe the same class"
        )
    row = _result_row(eval_presentation(p1))
    for symbol, coeff in _result_row(eval_presentation(p2)).items():
        row[symbol] = row.get(symbol, Fraction(0)) - coeff
    row = {k: v for k, v in row.items() if v}
    system.add_row(row, conjectural=len(p1.ambient) > 5)
    return row


def harvest_4t(m: int, system: RelationSystem) -> list[dict[str, Fraction]]:
    """Substitute diagram evaluations into the four-term relations.

    Each relation becomes one row over graph symbols; rows may reduce to zero
    (and do, identically, once the chord count forces isolated edges).
    """
    rows = []
    cache: dict[tuple, EvalResult] = {}
    for relation in four_t_relations(m):
        row: dict[str, Fraction] = {}
        for diagram, coeff in relation.terms:
            res = cache.get(diagram.slots)
            if res is None:
                res = eval_diagram(diagram)
                cache[diagram.slots] = res
            if res.case2_terms:
                raise RelationError("diagram evaluation produced an unresolved tagged term")
            for key, v in res.vector.coefficients.items():
                s = graph_symbol(key)
                row[s] = row.get(s, Fraction(0)) + coeff * v
        rows.append(system.add_row(row))
    return rows
