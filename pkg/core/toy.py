"""
Toy instances: the free abelian monoid ℕᵏ and the cyclic group ℤ/n.

ℕᵏ is the positive cone of ℤᵏ, where the componentwise maximum is the right
lcm. ℤ/n is the one shipped monoid with nontrivial units and torsion, used
as the test bed for torsion witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any

import numpy as np

from core.errors import DomainError, NotLeftMultiple, ParseError
from core.monoid import Element, LcmCertificate, Monoid, MonoidCapabilities


@dataclass(frozen=True)
class VecElement(Element):
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.coords):
            raise DomainError(f"negative coordinate in {self.coords}")


@dataclass(frozen=True)
class CyclicElement(Element):
    residue: int


def _unit_token_index(token: str, count: int) -> int:
    if not token.startswith("e") or not token[1:].isdigit():
        raise ParseError(f"unknown generator token {token!r}")
    index = int(token[1:]) - 1
    if not 0 <= index < count:
        raise ParseError(f"generator {token!r} out of range e1..e{count}")
    return index


def nk_lcm(a: VecElement, b: VecElement) -> LcmCertificate[VecElement]:
    """Componentwise max, with complements join − a and join − b."""
    if a.monoid != b.monoid or len(a.coords) != len(b.coords):
        raise DomainError(f"dimension mismatch: {a.coords} vs {b.coords}")
    va, vb = np.array(a.coords, dtype=np.int64), np.array(b.coords, dtype=np.int64)
    join = np.maximum(va, vb)

    def vec(values: np.ndarray) -> VecElement:
        return VecElement(a.monoid, tuple(int(v) for v in values))

    return LcmCertificate(left=a, right=b, left_comp=vec(join - va), right_comp=vec(join - vb), join=vec(join))


def cyclic_lcm(a: CyclicElement, b: CyclicElement, modulus: int) -> LcmCertificate[CyclicElement]:
    """Canonical join 0; every residue is an lcm, they differ by units."""
    if a.monoid != b.monoid:
        raise DomainError(f"modulus mismatch: {a.monoid} vs {b.monoid}")
    key = a.monoid
    return LcmCertificate(
        left=a,
        right=b,
        left_comp=CyclicElement(key, (-a.residue) % modulus),
        right_comp=CyclicElement(key, (-b.residue) % modulus),
        join=CyclicElement(key, 0),
    )


class FreeAbelianMonoid(Monoid[VecElement]):
    """ℕᵏ under addition; generator e_i is the i-th unit vector."""

    element_type = VecElement

    def __init__(self, dimension: int) -> None:
        if dimension < 1:
            raise DomainError("nk needs dimension k >= 1")
        super().__init__(
            f"nk:{dimension}",
            MonoidCapabilities(has_trivial_units=True, supports_left_gcd=False, generator_count=dimension),
        )
        self.dimension = dimension

    def vector(self, coords: tuple[int, ...] | list[int]) -> VecElement:
        if len(coords) != self.dimension:
            raise DomainError(f"expected {self.dimension} coordinates, got {len(coords)}")
        return VecElement(self.key, tuple(int(c) for c in coords))

    def one(self) -> VecElement:
        return VecElement(self.key, (0,) * self.dimension)

    def generator(self, index: int) -> VecElement:
        if not 0 <= index < self.dimension:
            raise DomainError(f"generator index {index} out of range")
        coords = [0] * self.dimension
        coords[index] = 1
        return VecElement(self.key, tuple(coords))

    def _mul(self, a: VecElement, b: VecElement) -> VecElement:
        return VecElement(self.key, tuple(int(v) for v in np.add(a.coords, b.coords)))

    def _left_cancel(self, a: VecElement, c: VecElement) -> VecElement:
        diff = np.subtract(c.coords, a.coords)
        if (diff < 0).any():
            raise NotLeftMultiple(f"{self.render(a)} does not divide {self.render(c)}")
        return VecElement(self.key, tuple(int(v) for v in diff))

    def _right_lcm(self, a: VecElement, b: VecElement) -> LcmCertificate[VecElement]:
        return nk_lcm(a, b)

    def _is_unit(self, a: VecElement) -> bool:
        return not any(a.coords)

    def length(self, a: VecElement) -> int:
        return sum(a.coords)

    def word_of(self, a: VecElement) -> list[int]:
        return [i for i, c in enumerate(a.coords) for _ in range(c)]

    def from_word(self, letters) -> VecElement:
        coords = [0] * self.dimension
        for letter in letters:
            if not 0 <= letter < self.dimension:
                raise DomainError(f"generator index {letter} out of range")
            coords[letter] += 1
        return VecElement(self.key, tuple(coords))

    def token(self, index: int) -> str:
        return f"e{index + 1}"

    def parse_token(self, token: str) -> tuple[int, ...]:
        if token in ("1", "ε"):
            return ()
        return (_unit_token_index(token, self.dimension),)

    def form_to_json(self, a: VecElement) -> dict[str, Any]:
        return {"coords": list(a.coords)}

    def form_from_json(self, data: dict[str, Any]) -> VecElement:
        return self.vector(list(data["coords"]))

    def render(self, a: VecElement) -> str:
        return "(" + ",".join(str(c) for c in a.coords) + ")"


class CyclicGroup(Monoid[CyclicElement]):
    """ℤ/n written additively; generator e1 is the residue 1."""

    element_type = CyclicElement

    def __init__(self, modulus: int) -> None:
        if modulus < 1:
            raise DomainError("cyclic needs modulus n >= 1")
        super().__init__(
            f"cyclic:{modulus}",
            MonoidCapabilities(
                has_trivial_units=modulus == 1,
                supports_left_gcd=False,
                generator_count=1,
                finite_order=modulus,
                homogeneous=False,
            ),
        )
        self.modulus = modulus

    def residue(self, value: int) -> CyclicElement:
        return CyclicElement(self.key, value % self.modulus)

    def one(self) -> CyclicElement:
        return self.residue(0)

    def generator(self, index: int) -> CyclicElement:
        if index != 0:
            raise DomainError(f"generator index {index} out of range")
        return self.residue(1)

    def _mul(self, a: CyclicElement, b: CyclicElement) -> CyclicElement:
        return self.residue(a.residue + b.residue)

    def _left_cancel(self, a: CyclicElement, c: CyclicElement) -> CyclicElement:
        return self.residue(c.residue - a.residue)

    def _right_lcm(self, a: CyclicElement, b: CyclicElement) -> LcmCertificate[CyclicElement]:
        return cyclic_lcm(a, b, self.modulus)

    def _is_unit(self, a: CyclicElement) -> bool:
        return True

    def units(self) -> list[CyclicElement]:
        return self.elements()

    def unit_inverse(self, u: CyclicElement) -> CyclicElement:
        self.check(u)
        return self.residue(-u.residue)

    def elements(self) -> list[CyclicElement]:
        return [self.residue(r) for r in range(self.modulus)]

    def length(self, a: CyclicElement) -> int:
        return a.residue

    def word_of(self, a: CyclicElement) -> list[int]:
        return [0] * a.residue

    def random_element(self, rng: random.Random, max_len: int) -> CyclicElement:
        return self.residue(rng.randrange(self.modulus))

    def token(self, index: int) -> str:
        return "e1"

    def parse_token(self, token: str) -> tuple[int, ...]:
        if token in ("1", "ε"):
            return ()
        return (_unit_token_index(token, 1),)

    def form_to_json(self, a: CyclicElement) -> dict[str, Any]:
        return {"residue": a.residue}

    def form_from_json(self, data: dict[str, Any]) -> CyclicElement:
        value = int(data["residue"])
        if not 0 <= value < self.modulus:
            raise DomainError(f"residue {value} out of range for {self.key}")
        return self.residue(value)

    def render(self, a: CyclicElement) -> str:
        return str(a.residue)
