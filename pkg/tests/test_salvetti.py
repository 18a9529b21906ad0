import pytest

from braidhom import config
from braidhom.coxeter import type_a, type_b
from braidhom.linalg import homology
from braidhom.representations import RepresentationError, symplectic_rep, trivial_rep
from braidhom.salvetti import (
    ResourceLimitError,
    build_complex,
    cache_path,
    discover_sign_convention,
    is_augmented,
    load_or_build,
    serialize_complex,
    specialize,
    verify_d_squared,
)


def _trivial(system):
    return [str(h) for h in homology(specialize(build_complex(system), trivial_rep(system)))]


@pytest.mark.parametrize("system", [type_a(r + 1) for r in range(1, 6)] + [type_b(r) for r in range(1, 6)],
                         ids=str)
def test_d_squared(system):
    assert verify_d_squared(build_complex(system)).ok


def test_frozen_convention_is_the_unique_one():
    assert discover_sign_convention() == config.SIGN_CONVENTION


def test_wrong_conventions_caught():
    assert not verify_d_squared(build_complex(type_a(4), (1, 0))).ok
    assert not is_augmented(build_complex(type_a(3), (0, 1)))


def test_trivial_homology_known_groups():
    assert _trivial(type_a(2)) == ["Z", "Z"]
    assert _trivial(type_a(3)) == ["Z", "Z", "0"]
    assert _trivial(type_a(4)) == ["Z", "Z", "Z/2", "0"]
    assert _trivial(type_b(2)) == ["Z", "Z^2", "Z"]


def test_symplectic_br3():
    cx = specialize(build_complex(type_a(3)), symplectic_rep(3))
    assert [str(h) for h in homology(cx)] == ["0", "Z/2", "0"]


def test_rep_system_mismatch():
    with pytest.raises(RepresentationError):
        specialize(build_complex(type_a(3)), trivial_rep(type_b(2)))


def test_rank_guardrail():
    with pytest.raises(ResourceLimitError):
        specialize(build_complex(type_a(5)), symplectic_rep(5), limit=10)


def test_cache_round_trip_bit_identical(tmp_path):
    system = type_b(3)
    first = load_or_build(system, tmp_path)
    path = cache_path(tmp_path, system)
    raw = path.read_bytes()
    second = load_or_build(system, tmp_path)
    assert path.read_bytes() == raw
    assert serialize_complex(second) == serialize_complex(first) == serialize_complex(build_complex(system))


def test_cache_key_depends_on_convention(tmp_path):
    assert cache_path(tmp_path, type_a(3), (1, 1)) != cache_path(tmp_path, type_a(3), (0, 1))
    assert cache_path(tmp_path, type_a(3)) != cache_path(tmp_path, type_b(2))


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(config.CACHE_ENV_VAR, str(tmp_path))
    load_or_build(type_a(4))
    assert cache_path(tmp_path, type_a(4)).exists()
