from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given, settings

from core.braid import (
    BraidMonoid,
    Simple,
    is_left_weighted,
    reverse,
    simple_complement,
)
from core.errors import DomainError, NotLeftMultiple, ParseError, StepBoundExceeded
from core.monoid import certificate_is_sound
from core.oracle import BfsOracle, word_class
from tests.strategies import elements, words

B3 = BraidMonoid(3)
B4 = BraidMonoid(4)
B3_ORACLE = BfsOracle(B3, bound=12)
B4_ORACLE = BfsOracle(B4, bound=8)


def test_normal_form_examples():
    assert B3.normal_form([1, 0, 1]).factors == (Simple((3, 2, 1)),)
    assert B3.normal_form([0, 0]).factors == (Simple((2, 1, 3)), Simple((2, 1, 3)))
    assert B4.normal_form([0, 2]).factors == (Simple((2, 1, 4, 3)),)
    assert B3.normal_form([1, 0, 1]) == B3.delta()


def test_generator_out_of_range():
    with pytest.raises(DomainError):
        B3.normal_form([2])
    with pytest.raises(ParseError):
        B3.parse_token("s3")


def test_strand_bounds():
    with pytest.raises(DomainError):
        BraidMonoid(1)
    with pytest.raises(DomainError):
        BraidMonoid(9)
    assert BraidMonoid(9, max_strands=9).strands == 9


def test_simple_descents():
    delta = Simple((3, 2, 1))
    assert delta.starting_set == delta.finishing_set == frozenset({0, 1})
    s1s2 = Simple.identity(3).times(0).times(1)
    assert s1s2.starting_set == frozenset({0})
    assert s1s2.finishing_set == frozenset({1})
    assert s1s2.reduced_word() == [0, 1]


@pytest.mark.parametrize("s, t, expected", [(0, 0, ()), (0, 1, (1, 0)), (0, 2, (2,)), (2, 1, (1, 2))])
def test_simple_complement(s, t, expected):
    assert simple_complement(s, t) == expected


@pytest.mark.parametrize(
    "den, num, pos, neg",
    [
        ((1,), (0,), (0, 1), (1, 0)),
        ((0,), (0,), (), ()),
        ((2,), (0,), (0,), (2,)),
    ],
)
def test_reverse_examples(den, num, pos, neg):
    result = reverse(den, num)
    assert (result.pos, result.neg) == (pos, neg)


def test_reverse_records_cells():
    result = reverse((1,), (0,))
    assert result.steps == 1
    cell = result.grid.cells[0]
    assert (cell.neg_letter, cell.pos_letter) == (1, 0)
    assert result.grid.rows == (1,) and result.grid.cols == (0,)


def test_reverse_step_cap():
    with pytest.raises(StepBoundExceeded):
        reverse((1, 1), (0, 0), step_cap=2)


def test_right_lcm_of_generators_is_delta():
    s1, s2 = B3.generator(0), B3.generator(1)
    cert = B3.right_lcm(s1, s2)
    assert cert.join == B3.delta()
    assert cert.left_comp == B3.normal_form([1, 0])
    assert cert.right_comp == B3.normal_form([0, 1])


def test_right_lcm_identity_and_divisor_cases():
    a = B3.normal_form([0, 1, 1])
    cert = B3.right_lcm(a, B3.one())
    assert (cert.join, cert.left_comp, cert.right_comp) == (a, B3.one(), a)
    s1s2 = B3.normal_form([0, 1])
    cert = B3.right_lcm(s1s2, B3.generator(0))
    assert (cert.join, cert.left_comp, cert.right_comp) == (s1s2, B3.one(), B3.generator(1))


def test_left_cancel_examples():
    delta = B3.delta()
    assert B3.left_cancel(B3.generator(0), delta) == B3.normal_form([1, 0])
    assert B3.left_cancel(delta, delta) == B3.one()
    with pytest.raises(NotLeftMultiple):
        B3.left_cancel(B3.normal_form([1, 1]), delta)
    assert B3.left_divides(B3.generator(1), B3.normal_form([0, 1, 0]))


def test_gcds_and_right_cancel():
    assert B4.left_gcd(B4.normal_form([0, 1]), B4.normal_form([0, 2])) == B4.generator(0)
    assert B3.right_gcd(B3.normal_form([0, 1]), B3.normal_form([1, 1])) == B3.generator(1)
    assert B3.right_cancel(B3.normal_form([0, 1]), B3.generator(1)) == B3.generator(0)
    assert B3.left_gcd(B3.generator(0), B3.generator(1)) == B3.one()


@pytest.mark.parametrize("monoid, length", [(B3, 5), (B4, 4)])
def test_normal_form_matches_relation_classes(monoid, length):
    relations = monoid.relations()
    forms = {w: monoid.normal_form(w) for w in product(range(monoid.strands - 1), repeat=length)}
    for word, form in forms.items():
        assert word_class(word, relations) == {w for w, f in forms.items() if f == form}


@settings(max_examples=100, deadline=None)
@given(words(B4, 8), words(B4, 8))
def test_normal_form_is_left_weighted(u, v):
    a = B4.mul(B4.from_word(u), B4.from_word(v))
    assert is_left_weighted(a.factors)
    assert B4.normal_form(u + v) == a
    assert B4.length(a) == len(u) + len(v)


@settings(max_examples=100, deadline=None)
@given(elements(B4, 6), elements(B4, 6))
def test_lcm_certificates_are_sound(a, b):
    cert = B4.right_lcm(a, b)
    assert certificate_is_sound(B4, cert)
    assert B4.left_cancel(a, B4.mul(a, b)) == b


@pytest.mark.parametrize("monoid, oracle", [(B3, B3_ORACLE), (B4, B4_ORACLE)])
def test_generator_lcms_match_oracle(monoid, oracle):
    for a, b in product(monoid.generators(), repeat=2):
        assert oracle.lcm_set(a, b) == {monoid.right_lcm(a, b).join}


@pytest.mark.parametrize("monoid", [B3, B4], ids=lambda m: m.key)
def test_lcm_matches_shortest_common_multiple(monoid):
    # a word of n letters left-divides D^n
    oracle = BfsOracle(monoid, bound=5 * monoid.length(monoid.delta()), slack=0)
    rng = random.Random(f"lcm:{monoid.key}")
    for _ in range(500):
        a, b = monoid.random_element(rng, 5), monoid.random_element(rng, 5)
        assert oracle.lcm_set(a, b) == {monoid.right_lcm(a, b).join}, (monoid.render(a), monoid.render(b))


@settings(max_examples=30, deadline=None)
@given(elements(B3, 3), elements(B3, 3))
def test_b3_lcm_divides_every_common_multiple(a, b):
    assert B3_ORACLE.lcm_set(a, b) == {B3.right_lcm(a, b).join}


def test_b5_normal_form_matches_relation_classes():
    b5 = BraidMonoid(5)
    relations = b5.relations()
    rng = random.Random("nf:braid:5")
    for _ in range(200):
        u = [rng.randrange(4) for _ in range(rng.randint(1, 7))]
        cls = word_class(u, relations)
        assert all(b5.normal_form(w) == b5.normal_form(u) for w in cls)
        v = list(u)
        rng.shuffle(v)
        assert (b5.normal_form(v) == b5.normal_form(u)) == (tuple(v) in cls)


def test_complement_table_drives_reversing():
    assert B4.complements == {(s, t): simple_complement(s, t) for s in range(3) for t in range(3)}
    crossed = {key: tuple(reversed(value)) for key, value in B4.complements.items()}
    assert reverse([0], [1], complements=crossed).pos == (0, 1)
    assert B4.reverse([0], [1]).pos == (1, 0) == reverse([0], [1]).pos


def test_json_form_validation():
    a = B3.normal_form([0, 0, 1])
    assert B3.form_from_json(B3.form_to_json(a)) == a
    with pytest.raises(DomainError):
        B3.form_from_json({"strands": 3, "factors": [[1, 2, 3]]})
    with pytest.raises(DomainError):
        B3.form_from_json({"strands": 4, "factors": []})


def test_rendering():
    assert B3.render(B3.delta()) == "s1 s2 s1"
    assert B3.render_normal_form(B3.delta()) == "[3,2,1]"
    assert B3.render(B3.one()) == "1"
