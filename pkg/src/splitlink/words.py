"""Free-group words in meridian letters and their weight-2 commutator data.

A :class:`Word` records the signed meridian letters read off a null-homologous
link component; a :class:`Presentation` is an ordered product of simple
commutator circles.  Everything here is computed modulo commutators of weight
at least 3, where such a word is completely described by the antisymmetric
integer matrix of its pairwise commutator exponents (its degree-2 Magnus
coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class WordError(ValueError):
    """Malformed word or bracket input, or a violated word invariant."""


@dataclass(frozen=True)
class Letter:
    """A single signed occurrence of a meridian generator."""

    generator: int
    sign: int

    def __post_init__(self) -> None:
        if not isinstance(self.generator, int) or self.generator < 1:
            raise WordError(f"generator must be an integer >= 1, got {self.generator!r}")
        if self.sign not in (1, -1):
            raise WordError(f"letter sign must be +1 or -1, got {self.sign!r}")

    @property
    def value(self) -> int:
        return self.generator * self.sign

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Word:
    """Sequence of letters with zero exponent sum for every generator.

    The exponent-sum condition is the algebraic shadow of the component being
    null-homologous in the link complement; words violating it are rejected at
    construction.
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        sums: dict[int, int] = {}
        for letter in self.letters:
            sums[letter.generator] = sums.get(letter.generator, 0) + letter.sign
        for g in sorted(sums):
            if sums[g] != 0:
                raise WordError(f"exponent sum of generator {g} is {sums[g]:+d}, expected 0")

    @classmethod
    def from_ints(cls, values: Iterable[int]) -> "Word":
        letters = []
        for v in values:
            if v == 0:
                raise WordError("zero is not a valid letter")
            letters.append(Letter(abs(v), 1 if v > 0 else -1))
        return cls(tuple(letters))

    @property
    def generators(self) -> frozenset[int]:
        return frozenset(letter.generator for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def rotated(self, k: int) -> "Word":
        """Cyclic rotation moving the first ``k`` letters to the end."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return Word(self.letters[k:] + self.letters[:k])

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


def parse_word(text: str) -> Word:
    """Parse whitespace-separated signed integers into a :class:`Word`.

    Negative integers are inverse letters; zero is rejected, as is any text
    whose exponent sums do not vanish.
    """
    values = []
    for idx, token in enumerate(text.split()):
        try:
            v = int(token)
        except ValueError:
            raise WordError(f"malformed token {token!r} at position {idx}") from None
        if v == 0:
            raise WordError(f"zero generator at position {idx}")
        values.append(v)
    return Word.from_ints(values)


def word_to_text(w: Word) -> str:
    return str(w)


@dataclass(frozen=True)
class EpsilonMatrix:
    """Antisymmetric integer matrix of pairwise commutator exponents.

    Entries are stored on ordered pairs (i, j) with i < j; querying (j, i)
    returns the negated value.  Zero entries are never stored.
    """

    entries: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        clean: dict[tuple[int, int], int] = {}
        for (i, j), v in self.entries.items():
            if i >= j:
                raise WordError(f"entry key ({i},{j}) must satisfy i < j")
            if v:
                clean[(i, j)] = int(v)
        object.__setattr__(self, "entries", clean)

    def get(self, i: int, j: int) -> int:
        if i == j:
            raise WordError("epsilon matrix entries need two distinct generators")
        if i < j:
            return self.entries.get((i, j), 0)
        return -self.entries.get((j, i), 0)

    def pairs(self) -> tuple[tuple[int, int, int], ...]:
        """Nonzero entries as (i, j, value) with i < j, in lexicographic order."""
        return tuple((i, j, self.entries[(i, j)]) for (i, j) in sorted(self.entries))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "EpsilonMatrix") -> "EpsilonMatrix":
        total = dict(self.entries)
        for k, v in other.entries.items():
            total[k] = total.get(k, 0) + v
        return EpsilonMatrix(total)


def magnus_epsilon(w: Word) -> EpsilonMatrix:
    """Pairwise commutator exponents of ``w`` modulo weight >= 3 commutators.

    e[i, j] is the sum of sign(p) * sign(q) over letter positions p < q where
    p carries generator i and q carries generator j.  Only pairs with i < j
    are accumulated; the reversed-order pairs define e[j, i], which equals
    -e[i, j] whenever the exponent sums vanish, so it is derived rather than
    stored.  The explicit double sum is exact and fast at desk scale.
    """
    e: dict[tuple[int, int], int] = {}
    letters = w.letters
    for p in range(len(letters)):
        for q in range(p + 1, len(letters)):
            i, j = letters[p].generator, letters[q].generator
            if i < j:
                e[(i, j)] = e.get((i, j), 0) + letters[p].sign * letters[q].sign
    return EpsilonMatrix(e)


@dataclass(frozen=True)
class SimpleCommutator:
    """A signed simple commutator circle over two distinct meridians.

    Normal form keeps ``first < second``; reversing the pair or inverting one
    meridian flips the exponent (both identities hold modulo weight >= 3).
    """

    first: int
    second: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.first < 1 or self.second < 1:
            raise WordError("commutator entries must be generators >= 1")
        if self.first == self.second:
            raise WordError(f"degenerate commutator [{self.first},{self.second}]")
        if self.first > self.second:
            raise WordError("commutator not in normal form (need first < second)")
        if self.exponent not in (1, -1):
            raise WordError(f"commutator exponent must be +1 or -1, got {self.exponent}")

    @classmethod
    def of(cls, a: int, b: int) -> "SimpleCommutator":
        """Normalize a bracket pair with signed entries into normal form."""
        if a == 0 or b == 0:
            raise WordError("zero generator in commutator")
        exponent = (1 if a > 0 else -1) * (1 if b > 0 else -1)
        i, j = abs(a), abs(b)
        if i == j:
            raise WordError(f"commutator entries must be distinct, got [{a},{b}]")
        if i > j:
            i, j = j, i
            exponent = -exponent
        return cls(i, j, exponent)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.first, self.second)

    def inverse(self) -> "SimpleCommutator":
        return SimpleCommutator(self.first, self.second, -self.exponent)

    def __str__(self) -> str:
        base = f"[{self.first},{self.second}]"
        return base if self.exponent == 1 else base + "^-1"


@dataclass(frozen=True)
class Presentation:
    """Ordered product of simple commutator circles over ambient components.

    Component 0 carries the word being expanded; it never appears inside a
    circle but always belongs to the ambient set.
    """

    circles: tuple[SimpleCommutator, ...]
    ambient: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "circles", tuple(self.circles))
        object.__setattr__(self, "ambient", frozenset(self.ambient))
        if any(not isinstance(c, int) or c < 0 for c in self.ambient):
            raise WordError("ambient components must be integers >= 0")
        if 0 not in self.ambient:
            raise WordError("ambient must contain component 0 (the expanded component)")
        for circle in self.circles:
            for g in circle.pair:
                if g not in self.ambient:
                    raise WordError(f"generator {g} outside ambient components")

    @property
    def size(self) -> int:
        return len(self.circles)

    def with_ambient(self, ambient: Iterable[int]) -> "Presentation":
        return Presentation(self.circles, frozenset(ambient))

    def __str__(self) -> str:
        return " ".join(
            f"[{c.first}, {c.second}]" if c.exponent == 1 else f"[{c.first}, -{c.second}]"
            for c in self.circles
        )


def canonical_presentation(w: Word, ambient: Iterable[int]) -> Presentation:
    """Expand ``w`` into |e_ij| copies of [i,j]^sign(e_ij) in lexicographic order.

    The expansion realizes the weight-2 normal form of the word, so its
    epsilon matrix coincides with ``magnus_epsilon(w)`` by construction.  The
    fixed circle order exists only to make outputs reproducible; evaluation
    downstream is order-independent.
    """
    amb = frozenset(ambient)
    for g in sorted(w.generators):
        if g not in amb or g == 0:
            raise WordError(f"generator {g} outside ambient components")
    eps = magnus_epsilon(w)
    circles: list[SimpleCommutator] = []
    for i, j, v in eps.pairs():
        circles.extend([SimpleCommutator(i, j, 1 if v > 0 else -1)] * abs(v))
    return Presentation(tuple(circles), amb)


def parse_bracket(text: str, ambient: Iterable[int] | None = None) -> Presentation:
    """Parse bracket expressions like ``[1, 2 3 4][2, 3 4]`` into circles.

    Each bracket [a, b1 ... br] distributes left to right into the simple
    commutators [a,b1][a,b2]...[a,br]; negative integers are inverse letters
    and flip the exponent.  Inverse pairs are deliberately NOT cancelled, so
    the circle count of the result is exactly the number of entries.
    """
    circles: list[SimpleCommutator] = []
    pos = 0
    n = len(text)

    def skip_ws(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    def scan_int(p: int) -> tuple[int, int]:
        start = p
        if p < n and text[p] in "+-":
            p += 1
        digits_at = p
        while p < n and text[p].isdigit():
            p += 1
        if p == digits_at:
            raise WordError(f"expected integer at position {start}")
        v = int(text[start:p])
        if v == 0:
            raise WordError(f"zero generator at position {start}")
        return v, p

    pos = skip_ws(pos)
    if pos >= n:
        raise WordError("empty bracket expression")
    while pos < n:
        if text[pos] != "[":
            raise WordError(f"expected '[' at position {pos}")
        head_pos = pos
        pos = skip_ws(pos + 1)
        head, pos = scan_int(pos)
        pos = skip_ws(pos)
        if pos >= n or text[pos] != ",":
            raise WordError(f"expected ',' after bracket head at position {pos}")
        pos = skip_ws(pos + 1)
        tail: list[int] = []
        while True:
            if pos >= n:
                raise WordError(f"unterminated bracket starting at position {head_pos}")
            if text[pos] == "]":
                pos += 1
                break
            if text[pos] == ",":
                pos = skip_ws(pos + 1)
                continue
            entry_pos = pos
            v, pos = scan_int(pos)
            if abs(v) == abs(head):
                raise WordError(
                    f"bracket entry at position {entry_pos} repeats the head generator {abs(head)}"
                )
            tail.append(v)
            pos = skip_ws(pos)
        if not tail:
            raise WordError(f"bracket starting at position {head_pos} needs at least one entry")
        circles.extend(SimpleCommutator.of(head, b) for b in tail)
        pos = skip_ws(pos)
    gens = {g for c in circles for g in c.pair}
    amb = frozenset(ambient) if ambient is not None else frozenset(gens) | {0}
    return Presentation(tuple(circles), amb)


def presentation_to_text(p: Presentation) -> str:
    """Print a presentation in the bracket grammar; parses back to itself."""
    return str(p)


def presentation_epsilon(p: Presentation) -> EpsilonMatrix:
    """Sum of exponent times the unit matrix at each circle's pair."""
    e: dict[tuple[int, int], int] = {}
    for c in p.circles:
        e[c.pair] = e.get(c.pair, 0) + c.exponent
    return EpsilonMatrix(e)
