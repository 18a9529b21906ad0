import pytest

from braidhom.coxeter import type_a, type_b
from braidhom.linalg import HomologyGroup, homology
from braidhom.oracle import (
    artin_presentation,
    compare_homology,
    corrupted_rep,
    fox_resolution_complex,
    random_custom_reps,
    relation_fuzz,
)
from braidhom.representations import symplectic_rep, trivial_rep


def test_presentation_order():
    pres = artin_presentation(4)
    assert pres.generators == 3
    assert [r.letters for r in pres.relators] == [(1, 2, 1, -2, -1, -2), (1, 3, -1, -3), (2, 3, 2, -3, -2, -3)]


def test_br3_trivial():
    hs = homology(fox_resolution_complex(3, trivial_rep(type_a(3))))
    assert [str(h) for h in hs] == ["Z", "Z", "0"]


@pytest.mark.parametrize("n", [2, 4, 6])
def test_abelianization(n):
    assert str(homology(fox_resolution_complex(n, trivial_rep(type_a(n))), [1])[0]) == "Z"


def test_symplectic_h0():
    assert homology(fox_resolution_complex(3, symplectic_rep(3)), [0])[0].is_zero()


def test_wrong_system():
    with pytest.raises(ValueError):
        fox_resolution_complex(3, trivial_rep(type_a(4)))
    with pytest.raises(ValueError):
        fox_resolution_complex(1, trivial_rep(type_a(1)))


def test_compare():
    a = [HomologyGroup(1, 1, (2,))]
    assert compare_homology(a, a).ok
    assert compare_homology([HomologyGroup(1, 0, (2,))], [HomologyGroup(1, 0, (4,))]).mismatches[0][0] == 1


def test_custom_reps_are_valid_and_seeded():
    a = random_custom_reps(3, 5, 7)
    b = random_custom_reps(3, 5, 7)
    assert len(a) == 5
    assert [r.generator_images for r in a] == [r.generator_images for r in b]


def test_fuzz():
    assert relation_fuzz(symplectic_rep(5), 150, 0).ok
    assert relation_fuzz(trivial_rep(type_b(3)), 100, 1).ok
    assert not relation_fuzz(corrupted_rep(symplectic_rep(5)), 100, 2, check_normal_forms=False).ok
