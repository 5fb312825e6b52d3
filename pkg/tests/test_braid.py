import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import words
from quandlebounds.braid import (
    BraidWord,
    Permutation,
    PowerBlockWord,
    closure_components,
    delta_order,
    exponent_sums,
    format_braid_word,
    full_twist,
    is_knot,
    parse_blocks,
    parse_braid_word,
    permutation,
)
from quandlebounds.errors import BraidSyntaxError


def test_parse_simple():
    assert parse_braid_word("m=3: s1 s2^-1").letters == ((1, 1), (2, -1))


def test_parse_group_power():
    b = parse_braid_word("m=3: (s1 s2^-1)^4")
    assert len(b) == 8
    assert b.letters == ((1, 1), (2, -1)) * 4


def test_parse_letter_power():
    assert parse_braid_word("m=2: s1^3").letters == ((1, 1),) * 3


def test_parse_negative_group_power_inverts():
    b = parse_braid_word("m=3: (s1 s2)^-2")
    assert b == (BraidWord(3, ((1, 1), (2, 1))) ** 2).inverse()


def test_parse_nested_and_empty():
    assert parse_braid_word("m=3: ((s1)^2 s2)^2").letters == ((1, 1), (1, 1), (2, 1)) * 2
    assert parse_braid_word("m=4:").letters == ()
    assert parse_braid_word("  m = 1 :  ").degree == 1


@pytest.mark.parametrize(
    "text, pos",
    [
        ("m=3: s3", 5),
        ("m=3: (s1 s2", 11),
        ("m=3: s1)", 7),
        ("m=3: (s1 s2) s1", 5),
        ("3: s1", 0),
        ("m=3: ^2", 5),
        ("m=3: 1:1", 5),
        ("m=3: s1 x", 8),
        ("m=0:", 2),
    ],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(BraidSyntaxError) as exc:
        parse_braid_word(text)
    assert exc.value.position == pos


def test_parse_blocks():
    w = parse_blocks("m=3: 1:1 2:-2", 5)
    assert w.blocks == ((1, 1), (2, -2))
    assert w.expand().letters == ((1, 1),) * 5 + ((2, -1),) * 10
    assert str(w) == "m=3: 1:1 2:-2"


@pytest.mark.parametrize("text", ["m=3: 3:1", "m=3: 1:0", "m=3: s1", "m=1: ", "m=3: 1:"])
def test_parse_blocks_errors(text):
    with pytest.raises(BraidSyntaxError):
        parse_blocks(text, 3)


def test_word_validation():
    with pytest.raises(ValueError):
        BraidWord(0)
    with pytest.raises(ValueError):
        BraidWord(3, ((3, 1),))
    with pytest.raises(ValueError):
        BraidWord(3, ((1, 2),))
    with pytest.raises(ValueError):
        PowerBlockWord(3, ((1, 0),), 3)
    with pytest.raises(ValueError):
        BraidWord(3) * BraidWord(4)


def test_full_twist_examples():
    assert full_twist(2, 1).letters == ((1, 1), (1, 1))
    d = full_twist(3, 1)
    assert d.letters == ((1, 1), (2, 1)) * 3
    dinv = full_twist(3, -1)
    assert len(dinv) == 6
    assert all(e == -1 for _, e in dinv)
    assert dinv == d.inverse()


def test_permutation_examples():
    assert permutation(BraidWord(3)).is_identity()
    assert permutation(BraidWord(2, ((1, 1),))).cycles() == [(1, 2)]
    p = permutation(BraidWord(3, ((1, 1), (2, 1))))
    assert len(p.cycles()) == 1 and len(p.cycles()[0]) == 3


def test_closure_components_examples():
    assert closure_components(BraidWord(3)) == 3
    assert closure_components(BraidWord(3, ((1, 1), (2, 1)))) == 1
    assert closure_components(parse_braid_word("m=2: s1^3")) == 1
    assert is_knot(parse_braid_word("m=3: (s1 s2^-1)^4"))
    assert not is_knot(parse_braid_word("m=2: s1^2"))


def test_exponent_sums_examples():
    assert exponent_sums(parse_braid_word("m=3: (s1 s2^-1)^4")) == (4, -4)
    assert exponent_sums(full_twist(3, 1)) == (3, 3)
    assert exponent_sums(parse_braid_word("m=5: s1^3 s2^3 s3^3 s4^3")) == (3, 3, 3, 3)


def test_delta_order_parity():
    assert delta_order(3, 5) == 2
    assert delta_order(2, 3) == 3
    assert delta_order(5, 3) == 2


@pytest.mark.parametrize("m", range(1, 7))
def test_full_twist_is_pure(m):
    assert permutation(full_twist(m, 1)).is_identity()


def test_permutation_composition_validates():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    a = Permutation((2, 1, 3))
    assert a.compose(a).is_identity()
    assert a(1) == 2


@settings(max_examples=80)
@given(st.data())
def test_permutation_of_concatenation(data):
    b = data.draw(words())
    c = data.draw(words(max_degree=b.degree, min_degree=b.degree))
    assert permutation(b * c) == permutation(c).compose(permutation(b))


@settings(max_examples=80)
@given(words(max_degree=6, max_len=12))
def test_parse_print_roundtrip(b):
    text = format_braid_word(b)
    assert parse_braid_word(text) == b
    assert str(b) == text


@given(words(max_degree=5))
def test_components_match_cycle_count(b):
    assert closure_components(b) == len(permutation(b).cycles())
    assert closure_components(b * b.inverse()) == b.degree


@given(words())
def test_stabilization_preserves_components(b):
    assert closure_components(b.stabilized(1)) == closure_components(b)
    assert closure_components(b.stabilized(-1)) == closure_components(b)


def test_format_runs():
    assert format_braid_word(parse_braid_word("m=3: s1 s1 s1 s2^-1 s2^-1 s1")) == "m=3: s1^3 s2^-2 s1"
    assert format_braid_word(BraidWord(3)) == "m=3:"
    assert math.prod(len(c) for c in permutation(full_twist(4, 1)).cycles()) == 1
