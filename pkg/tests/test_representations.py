import json
import random

import pytest

from braidhom.braids import BraidWord, parse_word
from braidhom.coxeter import type_a, type_b
from braidhom.oracle import random_word
from braidhom.representations import (
    RepresentationError,
    RepresentationSpec,
    burau_minus1,
    burau_unreduced_minus1,
    charpoly_of_word,
    dump_representation,
    find_intertwiner,
    intertwines,
    is_unipotent_of_index_two,
    load_representation,
    sign_cover_rep,
    symplectic_rep,
    trivial_rep,
)


def test_symplectic_n3_matrices():
    rep = symplectic_rep(3)
    assert [list(map(list, g)) for g in rep.generator_images] == [[[1, -1], [0, 1]], [[1, 0], [1, 1]]]


@pytest.mark.parametrize("n", [3, 5, 7])
def test_transvections_unipotent(n):
    assert all(is_unipotent_of_index_two(g) for g in symplectic_rep(n).generator_images)


def test_symplectic_needs_odd_n():
    with pytest.raises(ValueError):
        symplectic_rep(4)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_intertwiner(n):
    sym, bur = symplectic_rep(n), burau_minus1(n)
    P = find_intertwiner(sym, bur)
    assert P is not None and intertwines(P, sym, bur)
    rng = random.Random(n)
    for _ in range(30):
        w = random_word(sym.system, 10, rng)
        assert charpoly_of_word(sym, w) == charpoly_of_word(bur, w)


def test_burau_unreduced_fixes_row_sums():
    rep = burau_unreduced_minus1(4)
    w = parse_word("1 -2 3 2", rep.system)
    img = rep.image(w)
    assert all(sum(row) == 1 for row in img)


def test_bad_images_rejected():
    s = type_a(3)
    with pytest.raises(RepresentationError):
        RepresentationSpec(s, 1, ([[1]], [[2]]))
    with pytest.raises(RepresentationError):
        RepresentationSpec(s, 2, ([[1, 1], [0, 1]], [[1, 0], [2, 1]]))
    with pytest.raises(RepresentationError):
        RepresentationSpec(s, 1, ([[1]],))


def test_word_system_mismatch():
    with pytest.raises(RepresentationError):
        trivial_rep(type_a(3)).image(BraidWord((1,), type_a(4)))


def test_sign_cover():
    rep = sign_cover_rep(3)
    assert rep.image(parse_word("3 3", type_b(3))) == ((1, 0), (0, 1))
    assert rep.image(parse_word("1 2 3", type_b(3))) == ((0, 1), (1, 0))


def test_custom_file_round_trip(tmp_path):
    path = tmp_path / "rep.json"
    path.write_text(dump_representation(symplectic_rep(3)))
    rep = load_representation(path, type_a(3))
    assert rep.generator_images == symplectic_rep(3).generator_images


@pytest.mark.parametrize("content", [
    "not json",
    json.dumps({"dimension": 1}),
    json.dumps({"dimension": 1, "generator_images": [[[1]], [[2]]]}),
    json.dumps({"dimension": 1, "generator_images": [[[1.5]], [[1]]]}),
])
def test_custom_file_invalid(tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    with pytest.raises(RepresentationError):
        load_representation(path, type_a(3))
