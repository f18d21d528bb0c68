"""Chord diagrams: outer-circle words, enumeration up to circle symmetry, and
the four-term relations that constrain weight systems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from splitlink.words import Letter, Word


class DiagramError(ValueError):
    """Malformed chord diagram or unsupported size."""


@dataclass(frozen=True)
class ChordDiagram:
    """2m oriented chord endpoints around a circle.

    Slot sign +1 marks the outgoing endpoint of a chord, -1 the incoming one.
    The orientation of each chord is arbitrary as far as evaluation goes; it
    is kept explicit so the word-reading procedure stays faithful.
    """

    slots: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.slots) % 2:
            raise DiagramError("a diagram needs an even number of slots")
        seen: dict[int, list[int]] = {}
        for chord, sign in self.slots:
            if sign not in (1, -1):
                raise DiagramError(f"slot sign must be +1 or -1, got {sign!r}")
            seen.setdefault(chord, []).append(sign)
        m = len(self.slots) // 2
        if set(seen) != set(range(1, m + 1)):
            raise DiagramError(f"chord indices must be exactly 1..{m}")
        for chord, signs in seen.items():
            if sorted(signs) != [-1, 1]:
                raise DiagramError(f"chord {chord} needs one outgoing and one incoming endpoint")

    @property
    def m(self) -> int:
        return len(self.slots) // 2

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(chord for chord, _ in self.slots)

    def rotated(self, k: int) -> "ChordDiagram":
        k %= len(self.slots)
        return ChordDiagram(self.slots[k:] + self.slots[:k])

    def with_polarity_flipped(self, chord: int) -> "ChordDiagram":
        return ChordDiagram(tuple(
            (c, -s if c == chord else s) for c, s in self.slots
        ))

    def __str__(self) -> str:
        return diagram_to_text(self)


def parse_diagram(text: str) -> ChordDiagram:
    """Parse ``dc:+1,+2,-1,-2`` style diagram text."""
    if not text.startswith("dc:"):
        raise DiagramError("diagram text must start with 'dc:'")
    body = text[3:].strip()
    if not body:
        raise DiagramError("empty slot list")
    slots = []
    for idx, part in enumerate(body.split(",")):
        piece = part.strip()
        if not piece or piece[0] not in "+-" or not piece[1:].isdigit():
            raise DiagramError(f"malformed slot {piece!r} at index {idx}")
        chord = int(piece[1:])
        if chord == 0:
            raise DiagramError(f"zero chord index at slot {idx}")
        slots.append((chord, 1 if piece[0] == "+" else -1))
    return ChordDiagram(tuple(slots))


def diagram_to_text(c: ChordDiagram) -> str:
    return "dc:" + ",".join(f"{'+' if s > 0 else '-'}{chord}" for chord, s in c.slots)


def diagram_to_json(c: ChordDiagram) -> dict:
    return {"m": c.m, "slots": [[chord, "out" if s > 0 else "in"] for chord, s in c.slots]}


def diagram_word(c: ChordDiagram) -> Word:
    """Letters read counterclockwise from slot 0: +i outgoing, -i incoming."""
    return Word(tuple(Letter(chord, sign) for chord, sign in c.slots))


def _relabel(seq: tuple[int, ...]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    out = []
    for x in seq:
        if x not in mapping:
            mapping[x] = len(mapping) + 1
        out.append(mapping[x])
    return tuple(out)


def canonical_sequence(labels: tuple[int, ...], reflection: bool = False) -> tuple[int, ...]:
    """Least first-appearance relabeling over all rotations (and reflections)."""
    n = len(labels)
    candidates = [labels[r:] + labels[:r] for r in range(n)]
    if reflection:
        rev = labels[::-1]
        candidates.extend(rev[r:] + rev[:r] for r in range(n))
    return min(_relabel(c) for c in candidates)


def diagram_from_sequence(seq: tuple[int, ...]) -> ChordDiagram:
    """Representative diagram of a label sequence; first occurrences outgoing."""
    seen: set[int] = set()
    slots = []
    for chord in seq:
        slots.append((chord, 1 if chord not in seen else -1))
        seen.add(chord)
    return ChordDiagram(tuple(slots))


def _matching_sequences(m: int) -> Iterator[tuple[int, ...]]:
    """All pairings of 2m circle points, as chord-label words."""
    seq = [0] * (2 * m)

    def rec(next_chord: int, free: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(seq)
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            seq[a] = seq[b] = next_chord
            yield from rec(next_chord + 1, free[1:idx] + free[idx + 1:])

    yield from rec(1, tuple(range(2 * m)))


def enumerate_diagrams(m: int, up_to: str = "rotation") -> list[ChordDiagram]:
    """One representative per symmetry class of m-chord diagrams.

    Chord orientations are quotiented out (evaluation does not see them);
    representatives orient each chord with its first endpoint outgoing.
    """
    if not 1 <= m <= 7:
        raise DiagramError(f"chord count {m} out of supported range 1..7")
    if up_to not in ("rotation", "rotation+reflection"):
        raise DiagramError(f"unknown symmetry mode {up_to!r}")
    reflection = up_to == "rotation+reflection"
    reps = {canonical_sequence(seq, reflection) for seq in _matching_sequences(m)}
    return [diagram_from_sequence(seq) for seq in sorted(reps)]


@dataclass(frozen=True)
class DiagramRelation:
    """Linear relation among diagram classes with nonzero rational coefficients."""

    terms: tuple[tuple[ChordDiagram, Fraction], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise DiagramError("empty diagram relation")
        if any(not coeff for _, coeff in self.terms):
            raise DiagramError("zero coefficient in diagram relation")

    def __str__(self) -> str:
        parts = []
        for diagram, coeff in self.terms:
            sign = "+" if coeff > 0 else "-"
            parts.append(f"{sign}{abs(coeff)}·{diagram_to_text(diagram)}")
        return " ".join(parts)


def _matchings_of(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    a = points[0]
    for idx in range(1, len(points)):
        b = points[idx]
        rest = points[1:idx] + points[idx + 1:]
        for tail in _matchings_of(rest):
            yield ((a, b),) + tail


def _insert_sequence(points: int, matching: tuple[tuple[int, int], ...], slot: int) -> tuple[int, ...]:
    """Label word after inserting the moving endpoint at linear index ``slot``.

    Position 0 holds the fixed endpoint of the moving chord (chord 1); the
    matching covers positions 1..points-1.
    """
    chord_of = {0: 1}
    for number, (a, b) in enumerate(sorted(matching), start=2):
        chord_of[a] = chord_of[b] = number
    order = list(range(points))
    order.insert(slot, -1)  # -1 marks the moving endpoint of chord 1
    return tuple(1 if p == -1 else chord_of[p] for p in order)


def _four_t_instances(m: int) -> Iterator[tuple[tuple[tuple[int, ...], int], ...]]:
    """Raw four-term instances as ((label sequence, sign) x 4), before merging.

    One endpoint of a distinguished chord is pinned at position 0 while its
    other endpoint visits the four slots adjacent to the two endpoints of
    another chord.  Walking the moving strand around the doubled point shows
    the two one-sided differences agree, giving signs +,-,+,- on the slots
    (before u, after u, before v, after v).
    """
    points = 2 * m - 1
    if points < 3:
        return
    for matching in _matchings_of(tuple(range(1, points))):
        for (u, v) in matching:
            instance = []
            for slot, sign in ((u, 1), (u + 1, -1), (v, 1), (v + 1, -1)):
                instance.append((_insert_sequence(points, matching, slot), sign))
            yield tuple(instance)


def four_t_relations(m: int) -> list[DiagramRelation]:
    """Merged four-term relations among m-chord diagram classes.

    Terms landing in the same symmetry class are combined; relations whose
    terms all cancel are dropped, and duplicates (up to overall sign) appear
    once.  Deterministic output order.
    """
    if not 1 <= m <= 6:
        raise DiagramError(f"chord count {m} out of supported range 1..6")
    rep_cache: dict[tuple[int, ...], ChordDiagram] = {}
    seen: set[tuple[tuple[tuple[int, ...], Fraction], ...]] = set()
    rows: list[tuple[tuple[tuple[int, ...], Fraction], ...]] = []
    for instance in _four_t_instances(m):
        merged: dict[tuple[int, ...], Fraction] = {}
        for labels, sign in instance:
            canon = canonical_sequence(labels)
            merged[canon] = merged.get(canon, Fraction(0)) + sign
        cleaned = {k: v for k, v in merged.items() if v}
        if not cleaned:
            continue
        row = tuple(sorted(cleaned.items()))
        if row[0][1] < 0:
            row = tuple((k, -v) for k, v in row)
        if row in seen:
            continue
        seen.add(row)
        rows.append(row)
    rows.sort()
    out = []
    for row in rows:
        out.append(DiagramRelation(tuple(
            (rep_cache.setdefault(seq, diagram_from_sequence(seq)), coeff)
            for seq, coeff in row
        )))
    return out
