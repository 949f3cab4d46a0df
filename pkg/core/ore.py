"""
Group of right fractions of an lcm monoid.

Responsibilities:
- Fraction values num·den⁻¹, kept unreduced
- Equality by cross multiplication through the lcm of the denominators
- Product, inverse, powers and evaluation of signed words
- Optional normalization for instances that compute gcd's
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, Iterable

from core.errors import DomainError
from core.monoid import E, Monoid


@dataclass(frozen=True)
class Fraction(Generic[E]):
    """num·den⁻¹ in the group of right fractions; equality is semantic, see OreGroup.eq."""

    num: E
    den: E

    def __post_init__(self) -> None:
        if self.num.monoid != self.den.monoid:
            raise DomainError(f"fraction mixes {self.num.monoid!r} and {self.den.monoid!r}")


class OreGroup(Generic[E]):
    """Arithmetic in the group G of right fractions of `monoid`."""

    def __init__(self, monoid: Monoid[E]) -> None:
        self.monoid = monoid

    def check(self, *fractions: Fraction[E]) -> None:
        for f in fractions:
            self.monoid.check(f.num, f.den)

    def identity(self) -> Fraction[E]:
        one = self.monoid.one()
        return Fraction(one, one)

    def embed(self, a: E) -> Fraction[E]:
        """a/1; the monoid embeds in its group of fractions."""
        self.monoid.check(a)
        return Fraction(a, self.monoid.one())

    def eq(self, f: Fraction[E], g: Fraction[E]) -> bool:
        self.check(f, g)
        m = self.monoid
        cert = m.right_lcm(f.den, g.den)
        return m.mul(f.num, cert.left_comp) == m.mul(g.num, cert.right_comp)

    def is_identity(self, f: Fraction[E]) -> bool:
        self.check(f)
        return f.num == f.den

    def mul(self, f: Fraction[E], g: Fraction[E]) -> Fraction[E]:
        """f·g, turning den(f)⁻¹·num(g) into num'·den'⁻¹ with num(g)·den' = den(f)·num'."""
        self.check(f, g)
        m = self.monoid
        cert = m.right_lcm(g.num, f.den)
        return Fraction(m.mul(f.num, cert.right_comp), m.mul(g.den, cert.left_comp))

    def inv(self, f: Fraction[E]) -> Fraction[E]:
        self.check(f)
        return Fraction(f.den, f.num)

    def pow_direct(self, f: Fraction[E], k: int) -> Fraction[E]:
        if k < 0:
            raise DomainError("exponent must be a natural number")
        result = self.identity()
        for _ in range(k):
            result = self.mul(result, f)
        return result

    def conjugate(self, x: Fraction[E], t: Fraction[E]) -> Fraction[E]:
        """x·t·x⁻¹."""
        return self.mul(self.mul(x, t), self.inv(x))

    def eval_signed_word(self, word: Iterable[tuple[int, int]]) -> Fraction[E]:
        result = self.identity()
        one = self.monoid.one()
        for letter, exponent in word:
            g = self.monoid.generator(letter)
            result = self.mul(result, Fraction(g, one) if exponent > 0 else Fraction(one, g))
        return result

    def normalize(self, f: Fraction[E]) -> Fraction[E]:
        """Strip the greatest common right divisor of num and den.

        num = n'·g and den = d'·g give the same fraction n'·d'⁻¹. Instances
        without gcd support get f back unchanged.
        """
        self.check(f)
        m = self.monoid
        if not m.capabilities.supports_left_gcd:
            return f
        g = m.right_gcd(f.num, f.den)
        return Fraction(m.right_cancel(f.num, g), m.right_cancel(f.den, g))
