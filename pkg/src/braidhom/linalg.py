"""Exact integer linear algebra: Smith normal form, homology, induced maps.

Dense matrices are plain lists of rows of Python ints; chain complexes keep
their boundaries as ``SparseIntMatrix``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels

Matrix = list  # list of rows of ints


class ChainComplexError(ValueError):
    """Boundaries do not compose to zero, or a map is not a chain map."""


# -- dense helpers --------------------------------------------------------


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    ncols = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else [()] * ncols
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum(x * col[k] for k, x in nz) for col in bt])
    return out


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def scale(a: Sequence[Sequence[int]], c: int) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_add(a, b) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def freeze(a: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in a)


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly(a: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of ``det(x I - a)``, highest degree first (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [1]
    m = zeros(n, n)
    c = 1
    for k in range(1, n + 1):
        m = mat_add(mat_mul(a, m), scale(identity(n), c)) if k > 1 else identity(n)
        am = mat_mul(a, m)
        tr = sum(am[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs.append(c)
    return coeffs


# -- sparse matrices ------------------------------------------------------


@dataclass
class SparseIntMatrix:
    nrows: int
    ncols: int
    rows: list = field(default_factory=list)  # one {col: value} dict per row

    def __post_init__(self):
        if not self.rows:
            self.rows = [{} for _ in range(self.nrows)]
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        for r in self.rows:
            for c, v in list(r.items()):
                if not 0 <= c < self.ncols:
                    raise ValueError(f"column index {c} out of range")
                if v == 0:
                    del r[c]

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> SparseIntMatrix:
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, [{c: v for c, v in enumerate(r) if v} for r in rows])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> SparseIntMatrix:
        return cls(nrows, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def to_dense(self) -> Matrix:
        out = zeros(self.nrows, self.ncols)
        for i, r in enumerate(self.rows):
            for c, v in r.items():
                out[i][c] = v
        return out

    def entries(self):
        for i, r in enumerate(self.rows):
            for c in sorted(r):
                yield i, c, r[c]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def add_to(self, i: int, j: int, v: int) -> None:
        if v:
            r = self.rows[i]
            x = r.get(j, 0) + v
            if x:
                r[j] = x
            else:
                del r[j]

    def __matmul__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.rows:
            acc: dict[int, int] = {}
            for k, x in r.items():
                for c, y in other.rows[k].items():
                    acc[c] = acc.get(c, 0) + x * y
            out.append({c: v for c, v in acc.items() if v})
        return SparseIntMatrix(self.nrows, other.ncols, out)

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, SparseIntMatrix) and self.shape == other.shape and self.rows == other.rows


def _dense(a) -> Matrix:
    return a.to_dense() if isinstance(a, SparseIntMatrix) else [list(r) for r in a]


def _shape(a) -> tuple[int, int]:
    if isinstance(a, SparseIntMatrix):
        return a.shape
    return (len(a), len(a[0]) if a else 0)


# -- Smith normal form ----------------------------------------------------


@dataclass
class SNFResult:
    divisors: list[int]  # d_1 | d_2 | ... | d_r, all positive
    U: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix

    @property
    def rank(self) -> int:
        return len(self.divisors)


def invariant_factors(pivots: Iterable[int]) -> list[int]:
    """Arrange positive diagonal entries into a divisibility chain."""
    d = sorted(abs(p) for p in pivots if p)
    big = [x for x in d if x > 1]
    ones = len(d) - len(big)
    for i in range(len(big)):
        for j in range(i + 1, len(big)):
            g = math.gcd(big[i], big[j])
            big[i], big[j] = g, big[i] * big[j] // g
    ones += sum(1 for x in big if x == 1)
    return [1] * ones + [x for x in big if x > 1]


def snf(a) -> SNFResult:
    """Smith normal form with unimodular transforms, ``U A V = diag(divisors)``."""
    m, n = _shape(a)
    A = _dense(a)
    U, Ui, V, Vi = identity(m), identity(m), identity(n), identity(n)

    def row_add(i, j, q):  # row_i += q row_j
        if not q:
            return
        Ai, Aj = A[i], A[j]
        for c in range(n):
            if Aj[c]:
                Ai[c] += q * Aj[c]
        Ui_, Uj = U[i], U[j]
        for c in range(m):
            if Uj[c]:
                Ui_[c] += q * Uj[c]
        for r in Ui:
            if r[i]:
                r[j] -= q * r[i]

    def row_swap(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]
            for r in Ui:
                r[i], r[j] = r[j], r[i]

    def row_neg(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    def col_add(j, i, q):  # col_j += q col_i
        if not q:
            return
        for r in A:
            if r[i]:
                r[j] += q * r[i]
        for r in V:
            if r[i]:
                r[j] += q * r[i]
        Vi_, Vj = Vi[i], Vi[j]
        for c in range(n):
            if Vj[c]:
                Vi_[c] -= q * Vj[c]

    def col_swap(i, j):
        if i != j:
            for r in A:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    divisors = []
    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        row_swap(t, best[1])
        col_swap(t, best[2])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
            rest = [(abs(A[i][t]), i) for i in range(t + 1, m) if A[i][t]]
            if rest:
                row_swap(t, min(rest)[1])
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
            rest = [(abs(A[t][j]), j) for j in range(t + 1, n) if A[t][j]]
            if rest:
                col_swap(t, min(rest)[1])
                continue
            bad = next((i for i in range(t + 1, m) if any(x % p for x in A[i][t + 1:])), None)
            if bad is None:
                break
            row_add(t, bad, 1)
        if A[t][t] < 0:
            row_neg(t)
        divisors.append(A[t][t])
    return SNFResult(divisors, U, V, Ui, Vi)


def elementary_divisors(a) -> list[int]:
    """Invariant factors of ``a`` (including the 1s), via the fast kernel."""
    m, n = _shape(a)
    if m == 0 or n == 0:
        return []
    return invariant_factors(kernels.elementary_divisors(_dense(a), n))


def rank_mod_p(a, p: int) -> int:
    """Rank over GF(p); a cross-check of the divisor computation."""
    A = [[x % p for x in row] for row in _dense(a)]
    m, n = _shape(a)
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        r += 1
    return r


def kernel_basis(a) -> list[list[int]]:
    """Basis of the integer kernel (a saturated lattice), as column vectors."""
    m, n = _shape(a)
    res = snf(a)
    return [[res.V[i][j] for i in range(n)] for j in range(res.rank, n)]


def in_lattice(vec: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    """Whether ``vec`` is an integer combination of the column vectors ``gens``."""
    if not gens:
        return not any(vec)
    G = transpose(gens)
    res = snf(G)
    y = mat_vec(res.U, vec)
    for i, v in enumerate(y):
        if i < res.rank:
            if v % res.divisors[i]:
                return False
        elif v:
            return False
    return True


# -- chain complexes and homology -----------------------------------------


@dataclass
class IntegerComplex:
    """Chain complex of free abelian groups ``C_0 <- C_1 <- ... <- C_top``.

    ``boundaries[k]`` maps ``C_k`` to ``C_{k-1}`` for ``1 <= k <= top``.
    """

    dims: list[int]
    boundaries: dict = field(default_factory=dict)

    def __post_init__(self):
        for k, d in self.boundaries.items():
            if d.shape != (self.dims[k - 1], self.dims[k]):
                raise ValueError(f"boundary {k} has shape {d.shape}, expected {(self.dims[k - 1], self.dims[k])}")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary(self, k: int) -> SparseIntMatrix:
        if k in self.boundaries:
            return self.boundaries[k]
        rows = self.dims[k - 1] if 0 <= k - 1 <= self.top else 0
        cols = self.dims[k] if 0 <= k <= self.top else 0
        return SparseIntMatrix.zero(rows, cols)

    def check(self) -> None:
        for k in range(2, self.top + 1):
            if not (self.boundary(k - 1) @ self.boundary(k)).is_zero():
                raise ChainComplexError(f"boundary {k - 1} o boundary {k} is nonzero")

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.dims))


@dataclass
class HomologyBasis:
    """Generators of ``H_k`` as chains, plus the coordinate map on cycles."""

    generators: list[list[int]]  # one chain vector per generator
    coords: Matrix  # rows: cycle -> coordinate of each generator
    orders: list[int]  # order of each generator, 0 for infinite

    def coordinates(self, cycle: Sequence[int]) -> list[int]:
        raw = mat_vec(self.coords, cycle)
        return [x % o if o else x for x, o in zip(raw, self.orders)]


@dataclass
class HomologyGroup:
    degree: int
    free_rank: int
    torsion: tuple[int, ...] = ()
    basis: HomologyBasis | None = field(default=None, compare=False, repr=False)

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"


def annihilator_exponent(h: HomologyGroup) -> int | float:
    """Least ``N`` with ``N H = 0``; ``math.inf`` when ``H`` has free part."""
    if h.free_rank:
        return math.inf
    out = 1
    for d in h.torsion:
        out = out * d // math.gcd(out, d)
    return out


def homology(cx: IntegerComplex, degrees: Iterable[int] | None = None, with_basis: bool = False,
             check: bool = True) -> list[HomologyGroup]:
    if check:
        cx.check()
    degrees = range(cx.top + 1) if degrees is None else sorted(degrees)
    if with_basis:
        return [_homology_with_basis(cx, k) for k in degrees]
    rank_cache: dict[int, int] = {}
    div_cache: dict[int, list[int]] = {}

    def divisors(k):
        if k not in div_cache:
            d = cx.boundary(k) if 1 <= k <= cx.top else None
            div_cache[k] = elementary_divisors(d) if d is not None and d.nnz() else []
            rank_cache[k] = len(div_cache[k])
        return div_cache[k]

    out = []
    for k in degrees:
        rk = len(divisors(k))
        below = divisors(k + 1)
        free = cx.dims[k] - rk - len(below)
        out.append(HomologyGroup(k, free, tuple(d for d in below if d > 1)))
    return out


def _homology_with_basis(cx: IntegerComplex, k: int) -> HomologyGroup:
    cache = cx.__dict__.setdefault("_basis_cache", {})
    if k in cache:
        return cache[k]
    n = cx.dims[k]
    dk = cx.boundary(k).to_dense() if k >= 1 else zeros(0, n)
    if dk:
        res = snf(dk)
        r = res.rank
        K = [[res.V[i][j] for j in range(r, n)] for i in range(n)]  # n x z
        L = [res.V_inv[i] for i in range(r, n)]  # z x n, L K = I
    else:
        K, L = identity(n), identity(n)
    z = n - (res.rank if dk else 0)
    up = cx.boundary(k + 1).to_dense() if k + 1 <= cx.top else zeros(n, 0)
    M = mat_mul(L, up) if z and up and up[0] else zeros(z, 0)
    if M and M[0]:
        res2 = snf(M)
        U2, U2i, divs = res2.U, res2.U_inv, res2.divisors
    else:
        U2, U2i, divs = identity(z), identity(z), []
    gens = mat_mul(K, U2i) if z else []
    coords = mat_mul(U2, L) if z else []
    keep = [(i, divs[i] if i < len(divs) else 0) for i in range(z) if not (i < len(divs) and divs[i] == 1)]
    basis = HomologyBasis(
        generators=[[gens[row][i] for row in range(n)] for i, _ in keep],
        coords=[coords[i] for i, _ in keep],
        orders=[o for _, o in keep],
    )
    h = HomologyGroup(k, sum(1 for _, o in keep if o == 0), tuple(o for _, o in keep if o), basis)
    cache[k] = h
    return h


# -- chain maps and induced maps ------------------------------------------


@dataclass
class ChainMap:
    source: IntegerComplex
    target: IntegerComplex
    maps: dict  # degree -> SparseIntMatrix (target dim x source dim)

    def check(self) -> None:
        for k in range(self.source.top + 1):
            f = self.maps[k]
            if f.shape != (self.target.dims[k], self.source.dims[k]):
                raise ChainComplexError(f"chain map has wrong shape in degree {k}")
            if k >= 1:
                lhs = self.maps[k - 1] @ self.source.boundary(k)
                rhs = self.target.boundary(k) @ f
                if lhs != rhs:
                    raise ChainComplexError(f"chain map does not commute with the boundary in degree {k}")

    def __matmul__(self, other: ChainMap) -> ChainMap:
        return ChainMap(other.source, self.target, {k: self.maps[k] @ other.maps[k] for k in self.maps})


@dataclass
class InducedMap:
    matrix: Matrix  # target generators x source generators, reduced
    source_orders: list[int]
    target_orders: list[int]

    def _reduce(self, m: Matrix) -> Matrix:
        return [[x % o if o else x for x in row] for row, o in zip(m, self.target_orders)]

    def compose(self, inner: InducedMap) -> InducedMap:
        """``self o inner``."""
        m = mat_mul(self.matrix, inner.matrix) if self.matrix and inner.matrix else \
            zeros(len(self.target_orders), len(inner.source_orders))
        out = InducedMap(m, inner.source_orders, self.target_orders)
        out.matrix = out._reduce(out.matrix)
        return out

    def is_multiplication_by(self, c: int) -> bool:
        if self.source_orders != self.target_orders:
            return False
        n = len(self.source_orders)
        want = self._reduce(scale(identity(n), c))
        return self.matrix == want

    def is_identity(self) -> bool:
        return self.is_multiplication_by(1)

    def _relation_matrix(self) -> Matrix:
        # columns: images of source generators, then target relations
        b = len(self.target_orders)
        a = len(self.source_orders)
        rows = []
        for i in range(b):
            rel = [0] * b
            rel[i] = self.target_orders[i]
            rows.append(list(self.matrix[i]) + rel if a else rel)
        return rows

    def kernel_killed_by(self, m: int) -> bool:
        """Whether ``m x = 0`` for every ``x`` in the kernel."""
        a = len(self.source_orders)
        if a == 0:
            return True
        b = len(self.target_orders)
        if b == 0:
            lattice = [[1 if i == j else 0 for i in range(a)] for j in range(a)]
        else:
            lattice = [v[:a] for v in kernel_basis(self._relation_matrix())]
        for v in lattice:
            for x, o in zip(v, self.source_orders):
                if (o and (m * x) % o) or (not o and x):
                    return False
        return True

    def image_contains_multiples(self, m: int) -> bool:
        """Whether ``m H_target`` lies in the image."""
        b = len(self.target_orders)
        if b == 0:
            return True
        cols = transpose(self._relation_matrix())
        for j in range(b):
            e = [0] * b
            e[j] = m
            if not in_lattice(e, cols):
                return False
        return True


def induced_map(f: ChainMap | SparseIntMatrix, source: IntegerComplex, target: IntegerComplex, degree: int,
                check: bool = True) -> InducedMap:
    if isinstance(f, ChainMap):
        if check:
            f.check()
        fk = f.maps[degree]
    else:
        fk = f
    hs = _homology_with_basis(source, degree)
    ht = _homology_with_basis(target, degree)
    cols = []
    dense = fk.to_dense()
    for g in hs.basis.generators:
        img = mat_vec(dense, g)
        if check and degree >= 1 and any(mat_vec(target.boundary(degree).to_dense(), img)):
            raise ChainComplexError("image of a cycle is not a cycle")
        cols.append(ht.basis.coordinates(img))
    matrix = transpose(cols) if cols else [[] for _ in ht.basis.orders]
    return InducedMap(matrix, hs.basis.orders, ht.basis.orders)


def direct_sum(*groups: HomologyGroup, degree: int | None = None) -> HomologyGroup:
    """Direct sum as an abstract group, torsion rewritten as invariant factors."""
    free = sum(h.free_rank for h in groups)
    torsion = [d for h in groups for d in h.torsion]
    deg = degree if degree is not None else (groups[0].degree if groups else 0)
    return HomologyGroup(deg, free, tuple(d for d in invariant_factors(torsion) if d > 1))
