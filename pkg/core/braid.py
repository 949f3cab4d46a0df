"""
Positive braid monoid Bₙ⁺ with permutation simple elements.

Responsibilities:
- Simple elements as permutations, with starting (left descent) and
  finishing (right descent) sets
- Left-greedy normal form: adjacent factors (s, s') satisfy S(s') ⊆ F(s)
- Subword reversing of den⁻¹·num, recorded cell by cell in a ReversingGrid
- Right lcm, left cancellation and gcd's on normal forms

Letters are 0-based: letter i stands for σ_{i+1}, whose permutation swaps
positions i and i+1. Permutations are kept in 1-based one-line notation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Iterable, Mapping, Sequence

from core.errors import DomainError, NotLeftMultiple, ParseError, StepBoundExceeded
from core.monoid import Element, LcmCertificate, Monoid, MonoidCapabilities

logger = logging.getLogger(__name__)

DEFAULT_STEP_CAP = 100_000


@dataclass(frozen=True)
class Simple:
    """A permutation braid, stored as a permutation of 1..n in one-line notation."""

    perm: tuple[int, ...]

    @classmethod
    def identity(cls, strands: int) -> Simple:
        return cls(tuple(range(1, strands + 1)))

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.perm))

    @property
    def finishing_set(self) -> frozenset[int]:
        """Letters i with σ_{i+1} right-dividing the simple."""
        p = self.perm
        return frozenset(i for i in range(len(p) - 1) if p[i] > p[i + 1])

    @property
    def starting_set(self) -> frozenset[int]:
        """Letters i with σ_{i+1} left-dividing the simple."""
        position = {v: i for i, v in enumerate(self.perm)}
        return frozenset(i for i in range(len(self.perm) - 1) if position[i + 1] > position[i + 2])

    def times(self, letter: int) -> Simple:
        """Right multiplication by σ_{letter+1} (swap positions)."""
        p = list(self.perm)
        p[letter], p[letter + 1] = p[letter + 1], p[letter]
        return Simple(tuple(p))

    def under(self, letter: int) -> Simple:
        """Left multiplication by σ_{letter+1} or its inverse (swap values)."""
        a, b = letter + 1, letter + 2
        return Simple(tuple(b if v == a else a if v == b else v for v in self.perm))

    @property
    def inversions(self) -> int:
        p = self.perm
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])

    def reduced_word(self) -> list[int]:
        word: list[int] = []
        current = self
        while not current.is_identity:
            letter = min(current.finishing_set)
            word.insert(0, letter)
            current = current.times(letter)
        return word


@dataclass(frozen=True)
class BraidElement(Element):
    strands: int
    factors: tuple[Simple, ...]


@dataclass(frozen=True)
class GridCell:
    """One reversing step t⁻¹s → (t\\s)(s\\t)⁻¹."""

    neg_letter: int
    pos_letter: int
    pos_out: tuple[int, ...]
    neg_out: tuple[int, ...]


@dataclass(frozen=True)
class ReversingGrid:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: tuple[GridCell, ...]


@dataclass(frozen=True)
class ReversingResult:
    """den⁻¹·num = pos·neg⁻¹, hence num·neg = den·pos is a right lcm."""

    pos: tuple[int, ...]
    neg: tuple[int, ...]
    grid: ReversingGrid

    @property
    def steps(self) -> int:
        return len(self.grid.cells)


def simple_complement(s: int, t: int) -> tuple[int, ...]:
    """s\\t, the word with s·(s\\t) = t·(t\\s) = lcm(s, t)."""
    if s == t:
        return ()
    if abs(s - t) == 1:
        return (t, s)
    return (t,)


def normalize_pair(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    """Move letters from the front of b to the back of a until S(b) ⊆ F(a)."""
    while True:
        movable = b.starting_set - a.finishing_set
        if not movable:
            return a, b
        letter = min(movable)
        a, b = a.times(letter), b.under(letter)


def is_left_weighted(factors: Sequence[Simple]) -> bool:
    if any(s.is_identity for s in factors):
        return False
    return all(factors[i + 1].starting_set <= factors[i].finishing_set for i in range(len(factors) - 1))


def normalize_factors(factors: Iterable[Simple]) -> tuple[Simple, ...]:
    """Left-greedy normal form of an arbitrary product of simples."""
    seq = [s for s in factors if not s.is_identity]
    changed = True
    while changed:
        changed = False
        for j in range(len(seq) - 1):
            a, b = normalize_pair(seq[j], seq[j + 1])
            if (a, b) != (seq[j], seq[j + 1]):
                seq[j], seq[j + 1] = a, b
                changed = True
        # identities only ever drift to the right
        seq = [s for s in seq if not s.is_identity]
    return tuple(seq)


def append_simple(factors: Sequence[Simple], x: Simple) -> tuple[Simple, ...]:
    """Normal form of (normal form)·x by one right-to-left sweep."""
    seq = list(factors) + [x]
    for j in range(len(seq) - 2, -1, -1):
        seq[j], seq[j + 1] = normalize_pair(seq[j], seq[j + 1])
    if not is_left_weighted(seq):
        return normalize_factors(seq)
    return tuple(seq)


def reverse(
    den: Sequence[int],
    num: Sequence[int],
    step_cap: int = DEFAULT_STEP_CAP,
    complements: Mapping[tuple[int, int], tuple[int, ...]] | None = None,
) -> ReversingResult:
    """Subword reversing of den⁻¹·num into pos·neg⁻¹.

    Works on signed letters (letter, ±1); the leftmost negative-positive
    pattern t⁻¹s is replaced by (t\\s)(s\\t)⁻¹ until none remains.
    `complements` maps (s, t) to s\\t; without it each step computes them.
    """
    word: list[tuple[int, int]] = [(letter, -1) for letter in reversed(den)] + [(letter, 1) for letter in num]
    cells: list[GridCell] = []
    start = 0
    while True:
        j = next((i for i in range(max(start, 0), len(word) - 1) if word[i][1] < 0 < word[i + 1][1]), None)
        if j is None:
            break
        if len(cells) >= step_cap:
            raise StepBoundExceeded(f"reversing exceeded {step_cap} steps")
        t, s = word[j][0], word[j + 1][0]
        if complements is None:
            pos_out, neg_out = simple_complement(t, s), simple_complement(s, t)
        else:
            pos_out, neg_out = complements[t, s], complements[s, t]
        cells.append(GridCell(neg_letter=t, pos_letter=s, pos_out=pos_out, neg_out=neg_out))
        word[j : j + 2] = [(c, 1) for c in pos_out] + [(c, -1) for c in reversed(neg_out)]
        # word[:j - 1] holds no pattern, so rescanning from j - 1 finds the leftmost one
        start = j - 1
    pos = tuple(letter for letter, sign in word if sign > 0)
    neg = tuple(letter for letter, sign in reversed(word) if sign < 0)
    logger.debug("reversed %s^-1 %s in %d steps", list(den), list(num), len(cells))
    return ReversingResult(pos=pos, neg=neg, grid=ReversingGrid(tuple(den), tuple(num), tuple(cells)))


def braid_relations(strands: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Defining relations of Bₙ⁺ as pairs of equal words."""
    relations = []
    for i in range(strands - 1):
        for j in range(i + 1, strands - 1):
            if j - i == 1:
                relations.append(((i, j, i), (j, i, j)))
            else:
                relations.append(((i, j), (j, i)))
    return relations


class BraidMonoid(Monoid[BraidElement]):
    """Bₙ⁺ = ⟨σ1..σ(n-1) | σiσjσi = σjσiσj for |i-j| = 1, σiσj = σjσi otherwise⟩⁺."""

    element_type = BraidElement

    def __init__(self, strands: int, max_strands: int = 8, step_cap: int = DEFAULT_STEP_CAP) -> None:
        if strands < 2:
            raise DomainError("braid needs n >= 2 strands")
        if strands > max_strands:
            raise DomainError(f"braid:{strands} exceeds the strand bound {max_strands}")
        super().__init__(
            f"braid:{strands}",
            MonoidCapabilities(has_trivial_units=True, supports_left_gcd=True, generator_count=strands - 1),
        )
        self.strands = strands
        self.step_cap = step_cap
        gens = range(strands - 1)
        self.complements = {(s, t): simple_complement(s, t) for s in gens for t in gens}
        self._letters = [Simple.identity(strands).times(i) for i in gens]

    def _element(self, factors: tuple[Simple, ...]) -> BraidElement:
        return BraidElement(self.key, self.strands, factors)

    def _check_letter(self, letter: int) -> None:
        if not 0 <= letter < self.strands - 1:
            raise DomainError(f"generator s{letter + 1} out of range s1..s{self.strands - 1}")

    def simple(self, perm: Sequence[int]) -> Simple:
        if sorted(perm) != list(range(1, self.strands + 1)):
            raise DomainError(f"{tuple(perm)} is not a permutation of 1..{self.strands}")
        return Simple(tuple(perm))

    def delta(self) -> BraidElement:
        """Garside element Δ, the half twist."""
        return self._element((Simple(tuple(range(self.strands, 0, -1))),))

    def one(self) -> BraidElement:
        return self._element(())

    def generator(self, index: int) -> BraidElement:
        self._check_letter(index)
        return self._element((self._letters[index],))

    def normal_form(self, word: Iterable[int]) -> BraidElement:
        factors: tuple[Simple, ...] = ()
        for letter in word:
            self._check_letter(letter)
            factors = append_simple(factors, self._letters[letter])
        return self._element(factors)

    def from_word(self, letters: Iterable[int]) -> BraidElement:
        return self.normal_form(letters)

    def from_factors(self, perms: Iterable[Sequence[int]]) -> BraidElement:
        factors: tuple[Simple, ...] = ()
        for perm in perms:
            factors = append_simple(factors, self.simple(perm))
        return self._element(factors)

    def _mul(self, a: BraidElement, b: BraidElement) -> BraidElement:
        factors = a.factors
        for x in b.factors:
            factors = append_simple(factors, x)
        return self._element(factors)

    def _strip_letter(self, c: BraidElement, letter: int) -> BraidElement:
        """σ⁻¹·c for σ = σ_{letter+1}; NotLeftMultiple unless σ left-divides c."""
        if not c.factors or letter not in c.factors[0].starting_set:
            raise NotLeftMultiple(f"s{letter + 1} does not left-divide {self.render(c)}")
        head = c.factors[0].under(letter)
        return self._element(normalize_factors((head,) + c.factors[1:]))

    def _left_cancel(self, a: BraidElement, c: BraidElement) -> BraidElement:
        if self.length(a) > self.length(c):
            raise NotLeftMultiple(f"{self.render(a)} is longer than {self.render(c)}")
        for letter in self.word_of(a):
            c = self._strip_letter(c, letter)
        return c

    def reverse(self, den: Sequence[int], num: Sequence[int]) -> ReversingResult:
        for letter in (*den, *num):
            self._check_letter(letter)
        return reverse(den, num, self.step_cap, self.complements)

    def _right_lcm(self, a: BraidElement, b: BraidElement) -> LcmCertificate[BraidElement]:
        result = reverse(self.word_of(b), self.word_of(a), self.step_cap, self.complements)
        left_comp = self.normal_form(result.neg)
        right_comp = self.normal_form(result.pos)
        return LcmCertificate(left=a, right=b, left_comp=left_comp, right_comp=right_comp, join=self._mul(a, left_comp))

    def _is_unit(self, a: BraidElement) -> bool:
        return not a.factors

    def left_gcd(self, a: BraidElement, b: BraidElement) -> BraidElement:
        self.check(a, b)
        common: list[int] = []
        while a.factors and b.factors:
            shared = a.factors[0].starting_set & b.factors[0].starting_set
            if not shared:
                break
            letter = min(shared)
            common.append(letter)
            a, b = self._strip_letter(a, letter), self._strip_letter(b, letter)
        return self.normal_form(common)

    def rev(self, a: BraidElement) -> BraidElement:
        """Image under the anti-automorphism reversing words."""
        return self.normal_form(reversed(self.word_of(a)))

    def right_gcd(self, a: BraidElement, b: BraidElement) -> BraidElement:
        return self.rev(self.left_gcd(self.rev(a), self.rev(b)))

    def right_cancel(self, c: BraidElement, g: BraidElement) -> BraidElement:
        """b with b·g = c."""
        self.check(c, g)
        return self.rev(self._left_cancel(self.rev(g), self.rev(c)))

    def length(self, a: BraidElement) -> int:
        return sum(s.inversions for s in a.factors)

    def word_of(self, a: BraidElement) -> list[int]:
        return [letter for s in a.factors for letter in s.reduced_word()]

    def relations(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return braid_relations(self.strands)

    def token(self, index: int) -> str:
        return f"s{index + 1}"

    def parse_token(self, token: str) -> tuple[int, ...]:
        if token in ("1", "ε"):
            return ()
        if not token.startswith("s") or not token[1:].isdigit():
            raise ParseError(f"unknown braid generator {token!r}")
        index = int(token[1:]) - 1
        if not 0 <= index < self.strands - 1:
            raise ParseError(f"generator {token!r} out of range s1..s{self.strands - 1}")
        return (index,)

    def form_to_json(self, a: BraidElement) -> dict[str, Any]:
        return {"strands": a.strands, "factors": [list(s.perm) for s in a.factors]}

    def form_from_json(self, data: dict[str, Any]) -> BraidElement:
        if int(data.get("strands", self.strands)) != self.strands:
            raise DomainError(f"strand count {data['strands']} does not match {self.key}")
        element = self.from_factors(data["factors"])
        if [list(s.perm) for s in element.factors] != [list(p) for p in data["factors"]]:
            raise DomainError("factors are not in left-greedy normal form")
        return element

    def render_normal_form(self, a: BraidElement) -> str:
        if not a.factors:
            return "1"
        return " ".join("[" + ",".join(str(v) for v in s.perm) + "]" for s in a.factors)
