import itertools

import pytest
from hypothesis import given, settings, strategies as st

from braidhom.coxeter import CoxeterSystem, type_a, type_b


def test_orders():
    assert type_a(4).order() == 24
    assert type_b(3).order() == 48
    assert type_b(3).order([1, 2]) == 6
    assert type_a(1).order() == 1


def test_longest_element_lengths():
    assert type_a(5).length(type_a(5).longest) == 10
    assert type_b(4).length(type_b(4).longest) == 16


def test_coxeter_matrix_b3():
    m = type_b(3).coxeter_matrix
    assert m[1][2] == 4 and m[0][1] == 3 and m[0][2] == 2


def test_bad_rank_rejected():
    with pytest.raises(ValueError):
        CoxeterSystem("B", 0)
    with pytest.raises(ValueError):
        CoxeterSystem("C", 2)


def test_coset_reps_count_and_minimality():
    s = type_b(3)
    reps = s.minimal_coset_reps((1, 2, 3), (1, 2))
    assert len(reps) == s.order() // s.order([1, 2])
    assert all(not (s.descent_set(w, "left") & {1, 2}) for w in reps)
    assert reps[0] == s.identity


def test_coset_reps_need_subset():
    with pytest.raises(ValueError):
        type_a(4).minimal_coset_reps((1, 2), (3,))


def test_reduced_word_is_reduced():
    s = type_b(3)
    for w in s.elements():
        word = s.reduced_word(w)
        assert len(word) == s.length(w)
        assert s.from_word(word) == w


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=12), st.lists(st.integers(1, 3), max_size=12))
def test_length_subadditive_b3(u, v):
    s = type_b(3)
    a, b = s.from_word(u), s.from_word(v)
    assert s.length(s.multiply(a, b)) <= s.length(a) + s.length(b)
    assert s.length(s.inverse(a)) == s.length(a)


def test_descent_iff_length_drops():
    s = type_a(4)
    for w in s.elements():
        for i in s.generators:
            drops = s.length(s.multiply(w, s.generator(i))) < s.length(w)
            assert drops == (i in s.descent_set(w, "right"))


def test_braid_relations_hold_in_w():
    for s in (type_a(4), type_b(3)):
        for i, j in itertools.combinations(s.generators, 2):
            m = s.coxeter_matrix[i - 1][j - 1]
            x = s.from_word([i, j] * m)
            assert x == s.identity
