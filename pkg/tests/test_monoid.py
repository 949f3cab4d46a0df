from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from core.braid import BraidMonoid
from core.errors import DomainError, ParseError
from core.instances import MonoidSelector, build_monoid, parse_monoid_selector
from core.klein import KleinMonoid
from core.monoid import UnitTwistedMonoid, certificate_is_sound, compose_certificates
from core.toy import CyclicGroup, FreeAbelianMonoid
from core.words import parse_positive_word, parse_signed_word, render_signed_word
from tests.strategies import elements

INSTANCES = [BraidMonoid(3), BraidMonoid(4), KleinMonoid(), FreeAbelianMonoid(3), CyclicGroup(6)]


@pytest.mark.parametrize("monoid", INSTANCES, ids=lambda m: m.key)
def test_monoid_laws(monoid):
    @settings(max_examples=60, deadline=None)
    @given(elements(monoid, 5), elements(monoid, 5), elements(monoid, 5))
    def laws(a, b, c):
        one = monoid.one()
        assert monoid.mul(monoid.mul(a, b), c) == monoid.mul(a, monoid.mul(b, c))
        assert monoid.mul(one, a) == a == monoid.mul(a, one)
        assert monoid.left_cancel(a, monoid.mul(a, b)) == b
        assert monoid.left_divides(a, monoid.mul(a, b))
        assert certificate_is_sound(monoid, monoid.right_lcm(a, b))

    laws()


@pytest.mark.parametrize("monoid", INSTANCES, ids=lambda m: m.key)
def test_grid_composition(monoid):
    @settings(max_examples=60, deadline=None)
    @given(elements(monoid, 4), elements(monoid, 4), elements(monoid, 4))
    def composition(x, y1, y2):
        first = monoid.right_lcm(x, y1)
        second = monoid.right_lcm(first.right_comp, y2)
        composed = compose_certificates(monoid, first, second)
        assert certificate_is_sound(monoid, composed)
        assert composed.right == monoid.mul(y1, y2)
        direct = monoid.right_lcm(x, composed.right)
        assert composed.join in {monoid.mul(direct.join, u) for u in monoid.units()}

    composition()


def test_compose_requires_matching_cells():
    b3 = BraidMonoid(3)
    first = b3.right_lcm(b3.generator(0), b3.generator(1))
    with pytest.raises(DomainError):
        compose_certificates(b3, first, b3.right_lcm(b3.generator(0), b3.generator(0)))


def test_units_and_inverses():
    b3 = BraidMonoid(3)
    assert b3.units() == [b3.one()]
    assert b3.unit_inverse(b3.one()) == b3.one()
    with pytest.raises(DomainError):
        b3.unit_inverse(b3.generator(0))
    assert not b3.is_unit(b3.generator(0))
    assert b3.is_unit(b3.one())


def test_cross_monoid_operations_are_rejected():
    b3, b4 = BraidMonoid(3), BraidMonoid(4)
    with pytest.raises(DomainError):
        b3.mul(b3.one(), b4.one())
    with pytest.raises(DomainError):
        FreeAbelianMonoid(2).right_lcm(FreeAbelianMonoid(2).one(), KleinMonoid().one())


def test_unit_twisted_lcms():
    base = CyclicGroup(6)
    twisted = UnitTwistedMonoid(base, seed=3)
    a, b = base.residue(2), base.residue(5)
    cert = twisted.right_lcm(a, b)
    assert certificate_is_sound(twisted, cert)
    assert cert == twisted.right_lcm(a, b)
    joins = {twisted.right_lcm(a, b).join} | {UnitTwistedMonoid(base, s).right_lcm(a, b).join for s in range(20)}
    assert len(joins) > 1


def test_unit_twist_is_neutral_with_trivial_units():
    b3 = BraidMonoid(3)
    twisted = UnitTwistedMonoid(b3, seed=1)
    a, b = b3.generator(0), b3.generator(1)
    assert twisted.right_lcm(a, b) == b3.right_lcm(a, b)


def test_random_elements_are_reproducible():
    b4 = BraidMonoid(4)
    first = [b4.random_element(random.Random(7), 6) for _ in range(3)]
    second = [b4.random_element(random.Random(7), 6) for _ in range(3)]
    assert first == second


def test_word_parsing():
    b4 = BraidMonoid(4)
    assert parse_signed_word(b4, "s1 s3^-1") == [(0, 1), (2, -1)]
    assert parse_signed_word(b4, "1") == []
    assert parse_signed_word(KleinMonoid(), "D^-1 y") == [(0, -1), (0, -1), (1, 1)]
    assert render_signed_word(b4, [(0, 1), (2, -1)]) == "s1 s3^-1"
    assert render_signed_word(b4, []) == "1"
    with pytest.raises(ParseError):
        parse_positive_word(b4, "s1 s2^-1")
    with pytest.raises(ParseError):
        parse_signed_word(b4, "s1 s1 s1", max_len=2)
    with pytest.raises(ParseError):
        parse_signed_word(b4, "t1")
    with pytest.raises(ParseError):
        parse_signed_word(b4, "^-1")


@pytest.mark.parametrize(
    "text, key",
    [("braid:3", "braid:3"), ("klein", "klein"), ("nk:2", "nk:2"), ("cyclic:6", "cyclic:6")],
)
def test_monoid_selectors(text, key):
    selector = parse_monoid_selector(text)
    assert str(selector) == text
    assert build_monoid(selector).key == key


@pytest.mark.parametrize("text", ["braid", "klein:2", "nk:x", "torus:3", "braid:-1"])
def test_bad_selectors(text):
    with pytest.raises(ParseError):
        parse_monoid_selector(text)


def test_selector_ranges():
    with pytest.raises(DomainError):
        MonoidSelector("braid", 1)
    with pytest.raises(DomainError):
        MonoidSelector("cyclic", 0)
