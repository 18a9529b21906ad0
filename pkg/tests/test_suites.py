import json

import pytest

from braidhom.suites import (
    suite_double_cover,
    suite_engine_integrity,
    suite_splitting_lemma,
    suite_torsion_theorem,
)


def test_torsion_n3():
    r = suite_torsion_theorem(3, 2)
    assert r.passed
    assert set(r.data["annihilator_exponent"].values()) <= {1, 2}
    assert r.data["homology"][0]["group"] == "0"


def test_torsion_needs_odd():
    with pytest.raises(ValueError):
        suite_torsion_theorem(4, 2)


def test_splitting_small():
    r = suite_splitting_lemma(2, 1)
    assert r.passed
    assert r.data["B_n"][1]["group"] == "Z^2"


def test_double_cover_n3():
    assert suite_double_cover(3, 3).passed


def test_double_cover_even_n_is_reported_not_raised():
    r = suite_double_cover(2, 2)
    assert not r.passed
    assert any(v.assertion.startswith("eps_*") and not v.passed for v in r.verdicts)


def test_integrity_deterministic():
    a = suite_engine_integrity(3, seed=11, fuzz_trials=40)
    b = suite_engine_integrity(3, seed=11, fuzz_trials=40)
    assert a.passed
    assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)
