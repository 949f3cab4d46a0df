"""
Abstract contract of a left-cancellative monoid with right lcm's.

Responsibilities:
- Element base type tagged with the key of its parent monoid
- LcmCertificate and MonoidCapabilities value types
- Monoid base class: public operations validate operands, then delegate to
  per-instance hooks
- Composition of lcm certificates along a grid, and a wrapper that twists
  the lcm choice by random units
"""

from __future__ import annotations

import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Generic, Iterable, Sequence, TypeVar

from core.errors import DomainError, NotLeftMultiple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Element:
    """Canonical form of a monoid element; `monoid` is the parent's key."""

    monoid: str


E = TypeVar("E", bound=Element)


@dataclass(frozen=True)
class LcmCertificate(Generic[E]):
    """Witness of left·left_comp = right·right_comp = join, join a right lcm."""

    left: E
    right: E
    left_comp: E
    right_comp: E
    join: E


@dataclass(frozen=True)
class MonoidCapabilities:
    has_trivial_units: bool
    supports_left_gcd: bool
    generator_count: int
    # Number of elements for finite instances, None otherwise.
    finite_order: int | None = None
    # All defining relations preserve word length.
    homogeneous: bool = True


class Monoid(ABC, Generic[E]):
    """A concrete monoid instance.

    Instances are immutable after construction. Every public operation first
    checks that its operands belong to this instance and raises DomainError
    otherwise; the underscore hooks may assume valid operands.
    """

    element_type: type[Element] = Element

    def __init__(self, key: str, capabilities: MonoidCapabilities) -> None:
        self.key = key
        self.capabilities = capabilities

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.key!r})"

    # ----- validation -------------------------------------------------
    def check(self, *elements: Element) -> None:
        for element in elements:
            if not isinstance(element, self.element_type) or element.monoid != self.key:
                owner = getattr(element, "monoid", type(element).__name__)
                raise DomainError(f"element of {owner!r} used with monoid {self.key!r}")

    # ----- instance hooks ---------------------------------------------
    @abstractmethod
    def one(self) -> E: ...

    @abstractmethod
    def generator(self, index: int) -> E: ...

    @abstractmethod
    def _mul(self, a: E, b: E) -> E: ...

    @abstractmethod
    def _left_cancel(self, a: E, c: E) -> E:
        """Return b with a·b = c or raise NotLeftMultiple."""

    @abstractmethod
    def _right_lcm(self, a: E, b: E) -> LcmCertificate[E]: ...

    @abstractmethod
    def _is_unit(self, a: E) -> bool: ...

    @abstractmethod
    def length(self, a: E) -> int:
        """Length of the shortest generator word representing a."""

    @abstractmethod
    def word_of(self, a: E) -> list[int]:
        """A generator word (0-based generator indices) representing a."""

    @abstractmethod
    def token(self, index: int) -> str:
        """CLI token of generator `index`."""

    @abstractmethod
    def parse_token(self, token: str) -> tuple[int, ...]:
        """Generator word denoted by one CLI token; raises ParseError."""

    @abstractmethod
    def form_to_json(self, a: E) -> dict[str, Any]: ...

    @abstractmethod
    def form_from_json(self, data: dict[str, Any]) -> E: ...

    # ----- public operations ------------------------------------------
    def mul(self, a: E, b: E) -> E:
        self.check(a, b)
        return self._mul(a, b)

    def left_cancel(self, a: E, c: E) -> E:
        self.check(a, c)
        return self._left_cancel(a, c)

    def right_lcm(self, a: E, b: E) -> LcmCertificate[E]:
        self.check(a, b)
        return self._right_lcm(a, b)

    def is_unit(self, a: E) -> bool:
        self.check(a)
        return self._is_unit(a)

    def left_divides(self, a: E, c: E) -> bool:
        try:
            self.left_cancel(a, c)
        except NotLeftMultiple:
            return False
        return True

    def units(self) -> list[E]:
        """All units. Instances with nontrivial units must override."""
        if not self.capabilities.has_trivial_units:
            raise NotImplementedError(f"{self.key} does not enumerate its units")
        return [self.one()]

    def unit_inverse(self, u: E) -> E:
        self.check(u)
        if u == self.one():
            return u
        raise DomainError(f"{self.render(u)} is not a unit of {self.key}")

    def elements(self) -> list[E]:
        """All elements of a finite instance."""
        raise NotImplementedError(f"{self.key} is infinite")

    def generators(self) -> list[E]:
        return [self.generator(i) for i in range(self.capabilities.generator_count)]

    def from_word(self, letters: Iterable[int]) -> E:
        result = self.one()
        for letter in letters:
            result = self._mul(result, self.generator(letter))
        return result

    def power(self, a: E, k: int) -> E:
        self.check(a)
        result = self.one()
        for _ in range(k):
            result = self._mul(result, a)
        return result

    def product(self, elements: Sequence[E]) -> E:
        result = self.one()
        for element in elements:
            result = self.mul(result, element)
        return result

    def random_element(self, rng: random.Random, max_len: int) -> E:
        count = self.capabilities.generator_count
        word = [rng.randrange(count) for _ in range(rng.randint(0, max_len))]
        return self.from_word(word)

    def render_word(self, a: E) -> str:
        word = self.word_of(a)
        return " ".join(self.token(i) for i in word) if word else "1"

    def render(self, a: E) -> str:
        return self.render_word(a)

    def render_normal_form(self, a: E) -> str:
        return self.render(a)


def certificate_is_sound(monoid: Monoid[E], cert: LcmCertificate[E]) -> bool:
    """left·left_comp = join = right·right_comp, exactly."""
    return monoid.mul(cert.left, cert.left_comp) == cert.join == monoid.mul(cert.right, cert.right_comp)


def compose_certificates(monoid: Monoid[E], first: LcmCertificate[E], second: LcmCertificate[E]) -> LcmCertificate[E]:
    """Glue two grid cells together.

    From x·y1' = y1·x' (first) and x'·y2' = y2·x'' (second) build
    x·y1'y2' = y1y2·x'', a right lcm of x and y1y2.
    """
    if second.left != first.right_comp:
        raise DomainError("second certificate must start from the first one's right complement")
    left_comp = monoid.mul(first.left_comp, second.left_comp)
    return LcmCertificate(
        left=first.left,
        right=monoid.mul(first.right, second.right),
        left_comp=left_comp,
        right_comp=second.right_comp,
        join=monoid.mul(first.left, left_comp),
    )


class UnitTwistedMonoid(Monoid[E]):
    """Delegates to `base` but multiplies every lcm join by a pseudo-random unit.

    The unit depends only on (seed, a, b), so the wrapper stays a pure function
    of its arguments. With trivial units it behaves exactly like `base`.
    """

    def __init__(self, base: Monoid[E], seed: int = 0) -> None:
        super().__init__(base.key, base.capabilities)
        self.base = base
        self.seed = seed
        self.element_type = base.element_type

    def _twist(self, a: E, b: E) -> E:
        units = self.base.units()
        rng = random.Random(f"{self.seed}:{a!r}:{b!r}")
        return units[rng.randrange(len(units))]

    def one(self) -> E:
        return self.base.one()

    def generator(self, index: int) -> E:
        return self.base.generator(index)

    def _mul(self, a: E, b: E) -> E:
        return self.base._mul(a, b)

    def _left_cancel(self, a: E, c: E) -> E:
        return self.base._left_cancel(a, c)

    def _right_lcm(self, a: E, b: E) -> LcmCertificate[E]:
        cert = self.base._right_lcm(a, b)
        u = self._twist(a, b)
        logger.debug("twisting lcm of %r and %r by unit %r", a, b, u)
        return LcmCertificate(
            left=a,
            right=b,
            left_comp=self.base._mul(cert.left_comp, u),
            right_comp=self.base._mul(cert.right_comp, u),
            join=self.base._mul(cert.join, u),
        )

    def _is_unit(self, a: E) -> bool:
        return self.base._is_unit(a)

    def units(self) -> list[E]:
        return self.base.units()

    def unit_inverse(self, u: E) -> E:
        return self.base.unit_inverse(u)

    def elements(self) -> list[E]:
        return self.base.elements()

    def from_word(self, letters: Iterable[int]) -> E:
        return self.base.from_word(letters)

    def random_element(self, rng: random.Random, max_len: int) -> E:
        return self.base.random_element(rng, max_len)

    def length(self, a: E) -> int:
        return self.base.length(a)

    def word_of(self, a: E) -> list[int]:
        return self.base.word_of(a)

    def token(self, index: int) -> str:
        return self.base.token(index)

    def parse_token(self, token: str) -> tuple[int, ...]:
        return self.base.parse_token(token)

    def form_to_json(self, a: E) -> dict[str, Any]:
        return self.base.form_to_json(a)

    def form_from_json(self, data: dict[str, Any]) -> E:
        return self.base.form_from_json(data)

    def render(self, a: E) -> str:
        return self.base.render(a)

    def render_normal_form(self, a: E) -> str:
        return self.base.render_normal_form(a)
