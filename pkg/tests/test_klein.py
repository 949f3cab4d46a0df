from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from core.errors import DomainError, NotLeftMultiple
from core.klein import (
    X,
    Y,
    AbelianImage,
    Conjugacy,
    KleinElement,
    KleinMonoid,
    abelian_invariants,
    abelianize,
    certify_nonconjugate,
)
from core.monoid import certificate_is_sound
from core.oracle import BfsOracle
from core.ore import Fraction, OreGroup
from core.words import parse_signed_word
from tests.strategies import elements

K = KleinMonoid()
GROUP = OreGroup(K)


def up_to(length: int) -> list[KleinElement]:
    oracle = BfsOracle(K, bound=length)
    return [a for n in range(length + 1) for a in oracle.level(n)]


def test_normal_form_examples():
    assert K.normal_form([X, X, Y]) == K.make(1, (Y,))
    assert K.normal_form([X, Y, Y, X]) == K.make(2, ())
    assert K.normal_form([X, Y, X, Y]) == K.make(0, (X, Y, X, Y))
    assert K.mul(K.generator(X), K.generator(X)) == K.delta()


def test_element_invariants():
    with pytest.raises(DomainError):
        KleinElement("klein", 0, X, 0)
    with pytest.raises(DomainError):
        K.make(0, (X, X))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from("xy"), max_size=10), st.integers(0, 2**32))
def test_rewriting_in_any_order_is_confluent(tokens, seed):
    expected = K.normal_form(["xy".index(c) for c in tokens])
    assert K.rewrite_normal_form(tokens, random.Random(seed)) == expected


@settings(max_examples=100, deadline=None)
@given(elements(K, 10))
def test_delta_is_central(w):
    assert K.mul(K.delta(), w) == K.mul(w, K.delta())


@pytest.mark.parametrize(
    "a, b, join, left_comp, right_comp",
    [
        ("x", "y", "D", "x", "y"),
        ("x", "x", "x", "1", "1"),
        ("x", "D", "D", "x", "1"),
        ("x y", "y x", "D D", "y x", "x y"),
    ],
)
def test_right_lcm_examples(a, b, join, left_comp, right_comp):
    cert = K.right_lcm(K.from_word(letters(a)), K.from_word(letters(b)))
    assert K.render(cert.join) == join
    assert K.render(cert.left_comp) == left_comp
    assert K.render(cert.right_comp) == right_comp


def letters(text: str) -> list[int]:
    return [letter for letter, _ in parse_signed_word(K, text)]


def test_left_cancel_examples():
    x, y = K.generator(X), K.generator(Y)
    with pytest.raises(NotLeftMultiple):
        K.left_cancel(x, y)
    assert not K.left_divides(K.mul(x, y), K.delta())
    assert K.left_cancel(x, K.delta()) == x
    assert K.left_cancel(K.from_word([X, Y]), K.from_word([X, Y, X])) == x


def test_closed_form_lcm_matches_oracle():
    # a of length n left-divides D^n, so lcms of words up to 8 letters have at most 16
    oracle = BfsOracle(K, bound=16)
    small = up_to(8)
    for a, b in product(small, repeat=2):
        assert oracle.lcm_set(a, b) == {K.right_lcm(a, b).join}


def test_cancellation_and_lcms_exhaustively_up_to_six_letters():
    small = up_to(6)
    assert len(small) == sum(n + 1 for n in range(7))
    for a, b in product(small, repeat=2):
        assert K.left_cancel(a, K.mul(a, b)) == b
        assert certificate_is_sound(K, K.right_lcm(a, b))


def test_abelianization():
    assert abelian_invariants() == (1, (2,))
    assert abelianize([(X, 1)]) == AbelianImage(1, 0)
    assert abelianize([(Y, 1)]) == AbelianImage(1, 1)
    assert abelianize(parse_signed_word(K, "x x y^-1 y^-1")) == AbelianImage(0, 0)
    assert abelianize(parse_signed_word(K, "x y x^-1 y^-1")) == AbelianImage(0, 0)
    with pytest.raises(DomainError):
        AbelianImage(0, 2)


def test_x_and_y_are_not_conjugate():
    cert = certify_nonconjugate([(X, 1)], [(Y, 1)])
    assert cert.verdict is Conjugacy.NON_CONJUGATE
    assert certify_nonconjugate([(X, 1)], [(X, 1)]).verdict is Conjugacy.INCONCLUSIVE
    squares = certify_nonconjugate(parse_signed_word(K, "x x"), parse_signed_word(K, "y y"))
    assert squares.verdict is Conjugacy.INCONCLUSIVE


def test_squares_agree_in_the_group():
    x2 = GROUP.embed(K.from_word([X, X]))
    y2 = GROUP.embed(K.from_word([Y, Y]))
    assert GROUP.eq(x2, y2)
    assert GROUP.eq(x2, GROUP.embed(K.delta()))
    assert GROUP.is_identity(GROUP.eval_signed_word(parse_signed_word(K, "x x y^-1 y^-1")))


def test_x_over_y_differs_from_y_over_x():
    x, y = K.generator(X), K.generator(Y)
    assert not GROUP.eq(Fraction(x, y), Fraction(y, x))
    f = Fraction(x, y)
    assert GROUP.is_identity(GROUP.mul(GROUP.inv(f), f))


def test_rendering_and_json():
    a = K.make(2, (Y, X))
    assert K.render(a) == "D D y x"
    assert K.render(K.one()) == "1"
    assert K.form_to_json(a) == {"deltaPower": 2, "start": "y", "length": 2}
    assert K.form_from_json(K.form_to_json(a)) == a
    assert K.from_word(letters("D D y x")) == a
