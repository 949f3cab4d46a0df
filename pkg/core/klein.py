"""
The monoid K⁺ = ⟨x, y | x² = y²⟩⁺ and its abelianization.

Every element is Δ^d·w with Δ = x² = y² central and w an alternating word,
so an element is stored as (d, first letter of w, length of w). The group
satisfies the lcm hypotheses, yet x and y are not conjugate in it; the
abelianization ℤ ⊕ ℤ/2 separates them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Sequence

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from core.errors import DomainError, InternalInvariantViolation, NotLeftMultiple, ParseError
from core.monoid import Element, LcmCertificate, Monoid, MonoidCapabilities

X, Y = 0, 1
LETTERS = ("x", "y")

# signed letters (generator, ±1)
SignedLetter = tuple[int, int]


@dataclass(frozen=True)
class KleinElement(Element):
    delta_power: int
    start: int | None
    length: int

    def __post_init__(self) -> None:
        if self.delta_power < 0 or self.length < 0:
            raise DomainError("negative Δ-power or tail length")
        if (self.length == 0) != (self.start is None):
            raise DomainError("tail length is 0 exactly when it has no first letter")

    @property
    def tail(self) -> tuple[int, ...]:
        if self.start is None:
            return ()
        return tuple(self.start if i % 2 == 0 else 1 - self.start for i in range(self.length))


@dataclass(frozen=True)
class AbelianImage:
    degree: int
    parity: int

    def __post_init__(self) -> None:
        if self.parity not in (0, 1):
            raise DomainError(f"parity must be 0 or 1, got {self.parity}")


class Conjugacy(Enum):
    NON_CONJUGATE = "NonConjugate"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ConjugacyCertificate:
    verdict: Conjugacy
    left_image: AbelianImage
    right_image: AbelianImage


def _alternating(letters: Sequence[int]) -> bool:
    return all(letters[i] != letters[i + 1] for i in range(len(letters) - 1))


def _common_prefix(u: Sequence[int], w: Sequence[int]) -> int:
    k = 0
    while k < len(u) and k < len(w) and u[k] == w[k]:
        k += 1
    return k


def relation_matrix() -> np.ndarray:
    """Exponent sums of the relator x²y⁻² over the generators (x, y)."""
    return np.array([[2, -2]], dtype=np.int64)


def abelian_invariants() -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion coefficients) of the abelianization, via Smith normal form."""
    relations = relation_matrix()
    snf = smith_normal_form(Matrix(relations.tolist()), domain=ZZ)
    rows, cols = relations.shape
    diagonal = [abs(int(snf[i, i])) for i in range(min(rows, cols))]
    nonzero = [d for d in diagonal if d != 0]
    return cols - len(nonzero), tuple(d for d in nonzero if d > 1)


def abelianize(word: Iterable[SignedLetter]) -> AbelianImage:
    """Image in ℤ ⊕ ℤ/2: x ↦ (1, 0), y ↦ (1, 1)."""
    degree = 0
    y_count = 0
    for letter, exponent in word:
        degree += exponent
        if letter == Y:
            y_count += exponent
    return AbelianImage(degree=degree, parity=y_count % 2)


def certify_nonconjugate(a: Iterable[SignedLetter], b: Iterable[SignedLetter]) -> ConjugacyCertificate:
    """NON_CONJUGATE when the abelian images differ; never claims conjugacy."""
    left, right = abelianize(a), abelianize(b)
    verdict = Conjugacy.NON_CONJUGATE if left != right else Conjugacy.INCONCLUSIVE
    return ConjugacyCertificate(verdict=verdict, left_image=left, right_image=right)


class KleinMonoid(Monoid[KleinElement]):
    element_type = KleinElement

    def __init__(self) -> None:
        super().__init__("klein", MonoidCapabilities(has_trivial_units=True, supports_left_gcd=False, generator_count=2))

    def make(self, delta_power: int, tail: Sequence[int]) -> KleinElement:
        if not _alternating(tail):
            raise DomainError(f"tail {tail} is not alternating")
        return KleinElement(self.key, delta_power, tail[0] if tail else None, len(tail))

    def delta(self) -> KleinElement:
        return self.make(1, ())

    def normal_form(self, word: Iterable[int]) -> KleinElement:
        """Cascade rewriting: an adjacent equal pair becomes a central Δ."""
        delta_power = 0
        tail: list[int] = []
        for letter in word:
            if letter not in (X, Y):
                raise DomainError(f"letter {letter} is not x or y")
            if tail and tail[-1] == letter:
                tail.pop()
                delta_power += 1
            else:
                tail.append(letter)
        return self.make(delta_power, tail)

    def rewrite_normal_form(self, tokens: Sequence[str], rng: random.Random) -> KleinElement:
        """Normal form reached by applying rewriting moves in a random order.

        Moves are xx → D, yy → D and D commuting one step to the left; the
        process stops once no move applies.
        """
        word = list(tokens)
        while True:
            moves = [("collapse", i) for i in range(len(word) - 1) if word[i] == word[i + 1] != "D"]
            moves += [("commute", i) for i in range(1, len(word)) if word[i] == "D" and word[i - 1] != "D"]
            if not moves:
                break
            kind, i = moves[rng.randrange(len(moves))]
            if kind == "collapse":
                word[i : i + 2] = ["D"]
            else:
                word[i - 1], word[i] = word[i], word[i - 1]
        letters = [LETTERS.index(c) for c in word if c != "D"]
        return self.make(word.count("D"), letters)

    def one(self) -> KleinElement:
        return self.make(0, ())

    def generator(self, index: int) -> KleinElement:
        if index not in (X, Y):
            raise DomainError(f"generator index {index} out of range")
        return self.make(0, (index,))

    def from_word(self, letters: Iterable[int]) -> KleinElement:
        return self.normal_form(letters)

    def _mul(self, a: KleinElement, b: KleinElement) -> KleinElement:
        head = self.normal_form(a.tail + b.tail)
        return self.make(a.delta_power + b.delta_power + head.delta_power, head.tail)

    def _left_cancel(self, a: KleinElement, c: KleinElement) -> KleinElement:
        # In the group, (Δ^p u)⁻¹ Δ^r w = Δ^(r-p-|u|+k) rev(u[k:]) w[k:] with k the common prefix of u and w.
        u, w = a.tail, c.tail
        k = _common_prefix(u, w)
        power = c.delta_power - a.delta_power - len(u) + k
        if power < 0:
            raise NotLeftMultiple(f"{self.render(a)} does not left-divide {self.render(c)}")
        return self.make(power, tuple(reversed(u[k:])) + w[k:])

    def _right_lcm(self, a: KleinElement, b: KleinElement) -> LcmCertificate[KleinElement]:
        """Shortest common right multiple, found over the finitely many useful tails.

        A common multiple Δ^r w needs r ≥ p + |u| − k(u, w) for a = Δ^p u and
        likewise for b; only the first letter and length of w matter, and
        lengths beyond max(|u|, |v|) only cost more.
        """
        u, v = a.tail, b.tail
        best: dict[int, set[KleinElement]] = {}
        for start in (X, Y):
            for size in range(max(len(u), len(v)) + 1):
                w = tuple(start if i % 2 == 0 else 1 - start for i in range(size))
                r = max(0, a.delta_power + len(u) - _common_prefix(u, w), b.delta_power + len(v) - _common_prefix(v, w))
                best.setdefault(2 * r + size, set()).add(self.make(r, w))
        shortest = best[min(best)]
        if len(shortest) != 1:
            raise InternalInvariantViolation(
                "several shortest common right multiples", {"left": self.render(a), "right": self.render(b)}
            )
        join = next(iter(shortest))
        return LcmCertificate(
            left=a, right=b, left_comp=self._left_cancel(a, join), right_comp=self._left_cancel(b, join), join=join
        )

    def _is_unit(self, a: KleinElement) -> bool:
        return a.delta_power == 0 and a.length == 0

    def length(self, a: KleinElement) -> int:
        return 2 * a.delta_power + a.length

    def word_of(self, a: KleinElement) -> list[int]:
        return [X, X] * a.delta_power + list(a.tail)

    def token(self, index: int) -> str:
        return LETTERS[index]

    def parse_token(self, token: str) -> tuple[int, ...]:
        if token in ("1", "ε"):
            return ()
        if token == "D":
            return (X, X)
        if token not in LETTERS:
            raise ParseError(f"unknown Klein generator {token!r}")
        return (LETTERS.index(token),)

    def form_to_json(self, a: KleinElement) -> dict[str, Any]:
        return {
            "deltaPower": a.delta_power,
            "start": None if a.start is None else LETTERS[a.start],
            "length": a.length,
        }

    def form_from_json(self, data: dict[str, Any]) -> KleinElement:
        start = data.get("start")
        if start is not None and start not in LETTERS:
            raise DomainError(f"unknown start letter {start!r}")
        return KleinElement(self.key, int(data["deltaPower"]), None if start is None else LETTERS.index(start), int(data["length"]))

    def render(self, a: KleinElement) -> str:
        tokens = ["D"] * a.delta_power + [LETTERS[c] for c in a.tail]
        return " ".join(tokens) if tokens else "1"
