"""
Torsion witnesses in the group of right fractions.

Responsibilities:
- Build the pair chain (x_i, y_i) with x_i·y_(i+1) = y_i·x_(i+1) a right lcm
- Check the three chain identities: the lcm of partial products, the
  conjugation of z by x_1⋯x_k, and z^k = (x_1⋯x_k)(y_1⋯y_k)⁻¹
- Detect z^p = 1 as x_1⋯x_p = y_1⋯y_p and extract z = x·t·x⁻¹ with t ∈ M
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Generic, Union

from core.errors import DomainError, InsufficientPairs, InternalInvariantViolation
from core.monoid import E, LcmCertificate, Monoid
from core.oracle import BfsOracle
from core.ore import Fraction, OreGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairSequence(Generic[E]):
    """pairs[i] is (x_(i+1), y_(i+1)); certs[i] links pairs[i] to pairs[i+1]."""

    pairs: tuple[tuple[E, E], ...]
    certs: tuple[LcmCertificate[E], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def x(self, i: int) -> E:
        """x_i, 1-based."""
        return self.pairs[i - 1][0]

    def y(self, i: int) -> E:
        return self.pairs[i - 1][1]


@dataclass(frozen=True)
class TorsionWitness(Generic[E]):
    order: int
    conjugator: E
    torsion: E


@dataclass(frozen=True)
class NoTorsionUpTo:
    p_max: int


@dataclass(frozen=True)
class Witness(Generic[E]):
    witness: TorsionWitness[E]


TorsionVerdict = Union[NoTorsionUpTo, Witness]


def _require(seq: PairSequence, needed: int) -> None:
    if len(seq) < needed:
        raise InsufficientPairs(f"need {needed} pairs, chain has {len(seq)}")


def x_product(monoid: Monoid[E], seq: PairSequence[E], first: int, last: int) -> E:
    """x_first⋯x_last (1 when last < first)."""
    return monoid.product([seq.x(i) for i in range(first, last + 1)])


def y_product(monoid: Monoid[E], seq: PairSequence[E], first: int, last: int) -> E:
    return monoid.product([seq.y(i) for i in range(first, last + 1)])


def build_pairs(group: OreGroup[E], z: Fraction[E], count: int) -> PairSequence[E]:
    """The first `count` pairs of the chain starting at (num(z), den(z))."""
    if count < 1:
        raise DomainError("a pair chain has at least one pair")
    group.check(z)
    m = group.monoid
    pairs = [(z.num, z.den)]
    certs: list[LcmCertificate[E]] = []
    while len(pairs) < count:
        x, y = pairs[-1]
        cert = m.right_lcm(x, y)
        nxt = (cert.right_comp, cert.left_comp)
        if not (m.mul(x, nxt[1]) == cert.join == m.mul(y, nxt[0])):
            raise InternalInvariantViolation("unsound lcm certificate in pair chain", {"step": len(pairs)})
        pairs.append(nxt)
        certs.append(cert)
    logger.debug("built %d pairs for %s / %s", count, m.render(z.num), m.render(z.den))
    return PairSequence(tuple(pairs), tuple(certs))


def check_eq1(
    group: OreGroup[E], seq: PairSequence[E], k: int, l: int, oracle: BfsOracle[E] | None = None
) -> bool:
    """x_1⋯x_k·y_(k+1)⋯y_(k+l) = y_1⋯y_l·x_(l+1)⋯x_(l+k), a right lcm of x_1⋯x_k and y_1⋯y_l.

    The lcm part is only checked when an oracle is given.
    """
    _require(seq, k + l)
    m = group.monoid
    lhs = m.mul(x_product(m, seq, 1, k), y_product(m, seq, k + 1, k + l))
    rhs = m.mul(y_product(m, seq, 1, l), x_product(m, seq, l + 1, l + k))
    if lhs != rhs:
        return False
    if oracle is None:
        return True
    return lhs in oracle.lcm_set(x_product(m, seq, 1, k), y_product(m, seq, 1, l))


def check_eq2(group: OreGroup[E], seq: PairSequence[E], z: Fraction[E], k: int) -> bool:
    """z = (x_1⋯x_k)(x_(k+1)·y_(k+1)⁻¹)(x_1⋯x_k)⁻¹."""
    _require(seq, k + 1)
    m = group.monoid
    conjugator = group.embed(x_product(m, seq, 1, k))
    t = Fraction(seq.x(k + 1), seq.y(k + 1))
    return group.eq(z, group.conjugate(conjugator, t))


def check_eq3(group: OreGroup[E], seq: PairSequence[E], z: Fraction[E], k: int) -> bool:
    """z^k = (x_1⋯x_k)(y_1⋯y_k)⁻¹, against repeated multiplication."""
    _require(seq, k)
    m = group.monoid
    return group.eq(group.pow_direct(z, k), Fraction(x_product(m, seq, 1, k), y_product(m, seq, 1, k)))


def torsion_check(group: OreGroup[E], z: Fraction[E], p_max: int) -> TorsionVerdict:
    """Witness for the least p <= p_max with z^p = 1, or NoTorsionUpTo(p_max)."""
    if p_max < 1:
        raise DomainError("p_max must be at least 1")
    m = group.monoid
    seq = build_pairs(group, z, p_max + 1)
    xs, ys = m.one(), m.one()
    for p in range(1, p_max + 1):
        xs, ys = m.mul(xs, seq.x(p)), m.mul(ys, seq.y(p))
        if xs != ys:
            continue
        y_next = seq.y(p + 1)
        dump = {"z": f"{m.render(z.num)} / {m.render(z.den)}", "order": p, "y_next": m.render(y_next)}
        if not m.is_unit(y_next):
            raise InternalInvariantViolation(f"z^{p} = 1 but y_{p + 1} is not invertible", dump)
        torsion = m.mul(seq.x(p + 1), m.unit_inverse(y_next))
        witness = TorsionWitness(order=p, conjugator=xs, torsion=torsion)
        if not witness_is_sound(group, z, witness):
            raise InternalInvariantViolation("torsion witness failed its recheck", dump)
        logger.debug("z has order %d; torsion element %s", p, m.render(torsion))
        return Witness(witness)
    return NoTorsionUpTo(p_max)


def witness_is_sound(group: OreGroup[E], z: Fraction[E], witness: TorsionWitness[E]) -> bool:
    """t^order = 1 and z = x·t·x⁻¹."""
    m = group.monoid
    if m.power(witness.torsion, witness.order) != m.one():
        return False
    return group.eq(z, group.conjugate(group.embed(witness.conjugator), group.embed(witness.torsion)))


def monoid_torsion_free(monoid: Monoid) -> bool | None:
    """Whether M, hence its group of fractions, has no torsion; None if undecided.

    Trivial units suffice: t^p = 1 makes t invertible. A finite monoid is
    torsion free only when it is trivial.
    """
    if monoid.capabilities.has_trivial_units:
        return True
    if monoid.capabilities.finite_order is not None:
        return monoid.capabilities.finite_order == 1
    return None
