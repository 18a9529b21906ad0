import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from braidhom.linalg import (
    ChainComplexError,
    HomologyGroup,
    IntegerComplex,
    SparseIntMatrix,
    annihilator_exponent,
    det,
    direct_sum,
    elementary_divisors,
    homology,
    in_lattice,
    invariant_factors,
    kernel_basis,
    mat_mul,
    rank_mod_p,
    snf,
)

small_matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_snf_transforms(a):
    res = snf(a)
    m, n = len(a), len(a[0])
    d = mat_mul(mat_mul(res.U, a), res.V)
    for i in range(m):
        for j in range(n):
            want = res.divisors[i] if i == j and i < res.rank else 0
            assert d[i][j] == want
    assert all(res.divisors[i + 1] % res.divisors[i] == 0 for i in range(res.rank - 1))
    assert mat_mul(res.U, res.U_inv) == [[int(i == j) for j in range(m)] for i in range(m)]
    assert mat_mul(res.V, res.V_inv) == [[int(i == j) for j in range(n)] for i in range(n)]


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_fast_divisors_match_snf(a):
    assert elementary_divisors(a) == snf(a).divisors


def test_invariant_factors():
    assert invariant_factors([2, 3]) == [1, 6]
    assert invariant_factors([4, 6, 0]) == [2, 12]


def test_det_and_rank_mod_p():
    a = [[2, 0], [0, 3]]
    assert det(a) == 6
    assert rank_mod_p(a, 2) == 1
    assert rank_mod_p(a, 5) == 2


def test_kernel_and_lattice():
    a = [[1, 2, 3]]
    ker = kernel_basis(a)
    assert len(ker) == 2
    assert all(sum(x * y for x, y in zip(a[0], v)) == 0 for v in ker)
    assert in_lattice([2, 4], [[1, 2]])
    assert not in_lattice([1, 3], [[1, 2]])


def test_circle_homology():
    d1 = SparseIntMatrix.from_dense([[0]])
    cx = IntegerComplex([1, 1], {1: d1})
    assert [str(h) for h in homology(cx)] == ["Z", "Z"]


def test_rp2_homology():
    cx = IntegerComplex([1, 1, 1], {1: SparseIntMatrix.from_dense([[0]]), 2: SparseIntMatrix.from_dense([[2]])})
    assert [str(h) for h in homology(cx)] == ["Z", "Z/2", "0"]


def test_bad_complex_detected():
    cx = IntegerComplex([1, 1, 1], {1: SparseIntMatrix.from_dense([[1]]), 2: SparseIntMatrix.from_dense([[1]])})
    with pytest.raises(ChainComplexError):
        homology(cx)


def test_exponent_and_sum():
    assert annihilator_exponent(HomologyGroup(1, 0, (2, 4))) == 4
    assert annihilator_exponent(HomologyGroup(1, 1, ())) == math.inf
    s = direct_sum(HomologyGroup(1, 0, (2,)), HomologyGroup(1, 1, (3,)))
    assert (s.free_rank, s.torsion) == (1, (6,))


def test_random_complex_euler_characteristic():
    rng = random.Random(5)
    for _ in range(10):
        # d2 = 0 trivially when we take d1 with kernel and d2 inside it
        a = [[rng.randint(-3, 3) for _ in range(4)] for _ in range(3)]
        k = kernel_basis(a)
        if not k:
            continue
        d2 = [[v[i] * 2 for v in k] for i in range(4)]
        cx = IntegerComplex([3, 4, len(k)], {1: SparseIntMatrix.from_dense(a), 2: SparseIntMatrix.from_dense(d2)})
        hs = homology(cx)
        assert sum((-1) ** h.degree * h.free_rank for h in hs) == cx.euler_characteristic()
        assert hs[1].torsion and all(t == 2 for t in hs[1].torsion)
