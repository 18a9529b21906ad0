import random

import pytest
from hypothesis import given, settings, strategies as st

from braidhom.braids import (
    BraidWord,
    FreeWord,
    WordError,
    artin_action,
    format_normal_form,
    fox_derivative,
    fox_derivative_right,
    garside_normal_form,
    is_left_weighted,
    nf_multiply,
    nf_to_word,
    parse_word,
    words_equal,
)
from braidhom.coxeter import type_a, type_b

A3 = type_a(4)
B3 = type_b(3)


def letters(rank, max_size=14):
    nonzero = st.integers(1, rank).flatmap(lambda k: st.sampled_from([k, -k]))
    return st.lists(nonzero, max_size=max_size)


def test_parse_word():
    assert parse_word("1 -2  3", A3).letters == (1, -2, 3)
    assert parse_word("", A3).letters == ()


@pytest.mark.parametrize("text", ["1 0", "1 x", "4", "-7"])
def test_parse_word_rejects(text):
    with pytest.raises(WordError):
        parse_word(text, A3)


def test_braid_relation_equal():
    assert words_equal(parse_word("1 2 1", A3), parse_word("2 1 2", A3))
    assert words_equal(parse_word("1 3", A3), parse_word("3 1", A3))
    assert words_equal(parse_word("2 3 2 3", B3), parse_word("3 2 3 2", B3))
    assert not words_equal(parse_word("1 2", A3), parse_word("2 1", A3))


def test_words_over_different_systems():
    with pytest.raises(WordError):
        words_equal(BraidWord((1,), A3), BraidWord((1,), B3))


def test_rendering():
    assert format_normal_form(A3, garside_normal_form(parse_word("1 -1", A3))) == "Δ^0 · ()"
    assert format_normal_form(A3, garside_normal_form(parse_word("1 1", A3))) == "Δ^0 · (1)(1)"


@settings(max_examples=80, deadline=None)
@given(letters(3))
def test_normal_form_round_trip_a(ls):
    w = BraidWord(tuple(ls), A3)
    nf = garside_normal_form(w)
    assert is_left_weighted(A3, nf)
    assert garside_normal_form(nf_to_word(A3, nf)) == nf
    assert garside_normal_form(w * w.inverse()).is_identity()


@settings(max_examples=80, deadline=None)
@given(letters(3), letters(3))
def test_normal_form_multiplicative_b(u, v):
    a, b = BraidWord(tuple(u), B3), BraidWord(tuple(v), B3)
    assert nf_multiply(B3, garside_normal_form(a), garside_normal_form(b)) == garside_normal_form(a * b)


def test_delta_is_central_squared():
    rng = random.Random(3)
    d2 = BraidWord(A3.reduced_word(A3.longest) * 2, A3)
    for _ in range(20):
        w = BraidWord(tuple(rng.choice([1, -1]) * rng.randint(1, 3) for _ in range(8)), A3)
        assert words_equal(d2 * w, w * d2)


def test_artin_action_preserves_product():
    # sigma fixes x_1 x_2 ... x_n
    rng = random.Random(0)
    n = 4
    for _ in range(20):
        w = BraidWord(tuple(rng.choice([1, -1]) * rng.randint(1, 3) for _ in range(6)), A3)
        prod = FreeWord((), n)
        for i in range(1, n + 1):
            prod = prod * artin_action(w, i)
        assert prod.letters == (1, 2, 3, 4)


def test_artin_action_respects_relations():
    for i in range(1, 5):
        assert artin_action(parse_word("1 2 1", A3), i) == artin_action(parse_word("2 1 2", A3), i)
        assert artin_action(parse_word("1 -1", A3), i) == FreeWord((i,), 4)


def test_artin_action_type_b_rejected():
    with pytest.raises(WordError):
        artin_action(BraidWord((1,), B3), 1)


def test_fox_fundamental_formula():
    # sum_i D_i(w) (x_i - 1) = w - 1 for the left derivative
    w = FreeWord((1, 2, -1, 3, -2, -2), 3)
    from braidhom.braids import FreeGroupRingElement as E
    total = E({}, 3)
    for i in range(1, 4):
        total = total + fox_derivative(w, i) * (E.of(FreeWord((i,), 3)) - E.of(FreeWord((), 3)))
    assert total == E.of(w) - E.of(FreeWord((), 3))


def test_right_fox_derivative():
    w = FreeWord((1, 2), 2)
    # D^R(x1 x2)/dx1 = x2
    assert fox_derivative_right(w, 1).terms == {(2,): 1}
    assert fox_derivative_right(w, 2).terms == {(): 1}
