"""Integer matrix representations of braid and annular braid groups.

A representation sends the ``i``-th Artin generator to an invertible integer
matrix acting on column vectors; a word maps to the product of its letters'
images in word order.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from . import config
from .braids import BraidWord, FreeWord, NormalForm, artin_action, fox_derivative
from .coxeter import CoxeterElement, CoxeterSystem, type_a, type_b
from .linalg import (
    charpoly,
    det,
    freeze,
    identity,
    kernel_basis,
    mat_mul,
    mat_sub,
    transpose,
)

IntMatrix = tuple  # tuple of row tuples


class RepresentationError(ValueError):
    """Generator images that do not define a representation."""


def matrix_inverse(a: Sequence[Sequence[int]]) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            raise RepresentationError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    out = [row[n:] for row in m]
    if any(x.denominator != 1 for row in out for x in row):
        raise RepresentationError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in row) for row in out)


def braid_relation_pairs(system: CoxeterSystem):
    """``(i, j, m_ij)`` for every pair of generators ``i < j``."""
    m = system.coxeter_matrix
    for i in range(system.rank):
        for j in range(i + 1, system.rank):
            yield i + 1, j + 1, m[i][j]


def relation_sides(i: int, j: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two alternating words of length ``m`` in the relation between ``i`` and ``j``."""
    left = tuple(i if k % 2 == 0 else j for k in range(m))
    right = tuple(j if k % 2 == 0 else i for k in range(m))
    return left, right


@dataclass
class RepresentationSpec:
    system: CoxeterSystem
    dimension: int
    generator_images: tuple
    preserved_form: IntMatrix | None = None
    name: str = "custom"
    validate: bool = True
    inverse_images: tuple = field(init=False)
    _simple_cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        self.generator_images = tuple(freeze(g) for g in self.generator_images)
        if self.preserved_form is not None:
            self.preserved_form = freeze(self.preserved_form)
        if len(self.generator_images) != self.system.rank:
            raise RepresentationError(
                f"{len(self.generator_images)} generator images for a system of rank {self.system.rank}")
        for g in self.generator_images:
            if len(g) != self.dimension or any(len(row) != self.dimension for row in g):
                raise RepresentationError("generator image has the wrong size")
        if self.validate:
            for g in self.generator_images:
                if det(g) not in (1, -1):
                    raise RepresentationError("generator image is not unimodular")
            bad = self.relation_failures()
            if bad:
                raise RepresentationError(f"braid relations fail for generator pairs {bad}")
            if self.preserved_form is not None and not all(self.preserves_form(g) for g in self.generator_images):
                raise RepresentationError("generator image does not preserve the form")
        try:
            self.inverse_images = tuple(matrix_inverse(g) for g in self.generator_images)
        except RepresentationError:
            if self.validate:
                raise
            self.inverse_images = tuple(None for _ in self.generator_images)

    def relation_failures(self) -> list[tuple[int, int]]:
        bad = []
        for i, j, m in braid_relation_pairs(self.system):
            left, right = relation_sides(i, j, m)
            if self._product(left) != self._product(right):
                bad.append((i, j))
        return bad

    def preserves_form(self, g: Sequence[Sequence[int]]) -> bool:
        J = self.preserved_form
        return freeze(mat_mul(mat_mul(transpose(g), J), g)) == J

    def _product(self, letters: Iterable[int]) -> IntMatrix:
        out = identity(self.dimension)
        for k in letters:
            g = self.generator_images[k - 1] if k > 0 else self.inverse_images[-k - 1]
            out = mat_mul(out, g)
        return freeze(out)

    def image(self, w: BraidWord) -> IntMatrix:
        if w.system != self.system:
            raise RepresentationError(f"word over {w.system} applied to a representation of {self.system}")
        return self._product(w.letters)

    def image_of_simple(self, w: CoxeterElement) -> IntMatrix:
        """Image of the positive lift of a Coxeter element (memoized)."""
        hit = self._simple_cache.get(w)
        if hit is None:
            system = self.system
            if w == system.identity:
                hit = freeze(identity(self.dimension))
            else:
                word = system.reduced_word(w)
                prefix = system.from_word(word[:-1])
                hit = freeze(mat_mul(self.image_of_simple(prefix), self.generator_images[word[-1] - 1]))
            self._simple_cache[w] = hit
        return hit

    def image_of_normal_form(self, nf: NormalForm) -> IntMatrix:
        system = self.system
        d = self.image_of_simple(system.longest)
        if nf.delta_power < 0:
            d = matrix_inverse(d)
        out = identity(self.dimension)
        for _ in range(abs(nf.delta_power)):
            out = mat_mul(out, d)
        for f in nf.factors:
            out = mat_mul(out, self.image_of_simple(f))
        return freeze(out)


def apply_rep(rep: RepresentationSpec, w: BraidWord) -> IntMatrix:
    return rep.image(w)


def chain_intersection_form(g: int) -> IntMatrix:
    """Intersection form on the classes of a chain of ``2g`` curves."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    n = 2 * g
    s = config.INTERSECTION_SIGN
    J = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        J[i][i + 1] = s
        J[i + 1][i] = -s
    return freeze(J)


def symplectic_rep(n: int) -> RepresentationSpec:
    """``Br_n`` (``n = 2g + 1``) acting on ``H_1`` of the genus-``g`` surface by transvections."""
    if n < 3 or n % 2 == 0:
        raise ValueError("the symplectic representation needs odd n >= 3")
    g = (n - 1) // 2
    J = chain_intersection_form(g)
    d = 2 * g
    s = config.TRANSVECTION_SIGN
    gens = []
    for i in range(d):
        # v -> v + s <v, c_i> c_i with <v, w> = v^T J w
        T = identity(d)
        for a in range(d):
            T[i][a] += s * J[a][i]
        gens.append(T)
    return RepresentationSpec(type_a(n), d, tuple(gens), preserved_form=J, name=f"symplectic({n})")


def burau_unreduced_minus1(n: int) -> RepresentationSpec:
    """Unreduced Burau at ``t = -1``: abelianized Fox Jacobian of the Artin action."""
    system = type_a(n)
    gens = []
    for k in range(1, n):
        w = BraidWord((k,), system)
        rows = []
        for i in range(1, n + 1):
            image = artin_action(w, i)
            row = []
            for j in range(1, n + 1):
                d = fox_derivative(image, j)
                row.append(sum(c * (-1) ** (sum(1 if x > 0 else -1 for x in key) % 2) for key, c in d.terms.items()))
            rows.append(row)
        gens.append(rows)
    return RepresentationSpec(system, n, tuple(gens), name=f"burau_unreduced(-1, {n})")


def burau_minus1(n: int) -> RepresentationSpec:
    """Reduced Burau at ``t = -1``: the quotient by the fixed all-ones vector."""
    if n < 3 or n % 2 == 0:
        raise ValueError("burau_minus1 needs odd n >= 3")
    full = burau_unreduced_minus1(n)
    gens = []
    for g in full.generator_images:
        gens.append([[g[i][j] - g[n - 1][j] for j in range(n - 1)] for i in range(n - 1)])
    return RepresentationSpec(full.system, n - 1, tuple(gens), name=f"burau(-1, {n})")


def trivial_rep(system: CoxeterSystem, dimension: int = 1) -> RepresentationSpec:
    I = identity(dimension)
    return RepresentationSpec(system, dimension, tuple(I for _ in system.generators), name="trivial")


def sign_cover_rep(n: int) -> RepresentationSpec:
    """Permutation module of the deck group of the double cover, for type ``B_n``.

    The node moving the white point around a black point swaps the two
    sheets; the swaps of black points act trivially.
    """
    system = type_b(n)
    gens = [identity(2) for _ in range(n - 1)] + [[[0, 1], [1, 0]]]
    return RepresentationSpec(system, 2, tuple(gens), name=f"sign_cover({n})")


def intertwines(P: Sequence[Sequence[int]], rep1: RepresentationSpec, rep2: RepresentationSpec) -> bool:
    """``P rep1(s) = rep2(s) P`` for every generator ``s``."""
    return all(mat_mul(P, a) == mat_mul(b, P) for a, b in zip(rep1.generator_images, rep2.generator_images))


def find_intertwiner(rep1: RepresentationSpec, rep2: RepresentationSpec,
                     samples: Iterable[BraidWord] = (), box: int = 2) -> list[list[int]] | None:
    """A unimodular ``P`` with ``P rep1(s) = rep2(s) P``, or ``None``.

    Solves the linear system on ``P`` exactly, then searches the solution
    lattice (coefficients in ``[-box, box]``) for a matrix of determinant +-1.
    """
    if rep1.dimension != rep2.dimension:
        raise RepresentationError("dimension mismatch")
    if rep1.system != rep2.system:
        raise RepresentationError("system mismatch")
    d = rep1.dimension
    rows = []
    for A, B in zip(rep1.generator_images, rep2.generator_images):
        for r in range(d):
            for c in range(d):
                eq = [0] * (d * d)
                for k in range(d):
                    eq[r * d + k] += A[k][c]
                    eq[k * d + c] -= B[r][k]
                rows.append(eq)
    basis = kernel_basis(rows) if rows else [[int(i == j) for i in range(d * d)] for j in range(d * d)]
    if not basis:
        return None
    m = len(basis)
    coeff_ranges = range(-box, box + 1)
    candidates = sorted(itertools.product(coeff_ranges, repeat=m), key=lambda c: (max(map(abs, c)), c))
    samples = list(samples)
    for coeffs in candidates:
        if not any(coeffs):
            continue
        vec = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(d * d)]
        P = [vec[r * d:(r + 1) * d] for r in range(d)]
        if det(P) in (1, -1):
            for w in samples:
                w1 = BraidWord(w.letters, rep1.system)
                if mat_mul(P, rep1.image(w1)) != mat_mul(rep2.image(w1), P):
                    raise RepresentationError("intertwiner fails on a sample word")
            return P
    return None


def direct_sum(r1: RepresentationSpec, r2: RepresentationSpec, name: str = "sum") -> RepresentationSpec:
    d1, d2 = r1.dimension, r2.dimension
    gens = []
    for a, b in zip(r1.generator_images, r2.generator_images):
        g = [list(row) + [0] * d2 for row in a] + [[0] * d1 + list(row) for row in b]
        gens.append(g)
    return RepresentationSpec(r1.system, d1 + d2, tuple(gens), name=name)


def tensor_product(r1: RepresentationSpec, r2: RepresentationSpec, name: str = "tensor") -> RepresentationSpec:
    d1, d2 = r1.dimension, r2.dimension
    gens = []
    for a, b in zip(r1.generator_images, r2.generator_images):
        gens.append([[a[i][k] * b[j][l] for k in range(d1) for l in range(d2)] for i in range(d1) for j in range(d2)])
    return RepresentationSpec(r1.system, d1 * d2, tuple(gens), name=name)


def conjugate(rep: RepresentationSpec, P: Sequence[Sequence[int]], name: str = "conjugate") -> RepresentationSpec:
    Pi = matrix_inverse(P)
    gens = [mat_mul(mat_mul(P, g), Pi) for g in rep.generator_images]
    form = None
    if rep.preserved_form is not None:
        form = mat_mul(mat_mul(transpose(Pi), rep.preserved_form), Pi)
    return RepresentationSpec(rep.system, rep.dimension, tuple(gens), preserved_form=form, name=name)


def sign_twist(rep: RepresentationSpec, name: str = "sign_twist") -> RepresentationSpec:
    """``rep`` tensored with the character sending every generator to -1."""
    gens = [[[-x for x in row] for row in g] for g in rep.generator_images]
    return RepresentationSpec(rep.system, rep.dimension, tuple(gens), name=name)


def random_unimodular(d: int, rng, steps: int = 6) -> list[list[int]]:
    P = identity(d)
    for _ in range(steps):
        i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
        if i == j:
            P[i] = [-x for x in P[i]]
            continue
        q = rng.choice([-2, -1, 1, 2])
        P[i] = [x + q * y for x, y in zip(P[i], P[j])]
    return P


def load_representation(path: str | Path, system: CoxeterSystem) -> RepresentationSpec:
    """Read a custom representation file.

    The file is JSON with fields ``dimension`` (int) and ``generator_images``
    (one row-major integer matrix per generator, in generator order).
    Images must be unimodular and satisfy the braid relations.
    """
    try:
        data = json.loads(Path(path).read_text())
        dim = int(data["dimension"])
        images = data["generator_images"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise RepresentationError(f"cannot read representation file {path}: {exc}") from exc
    if not isinstance(images, list) or any(not isinstance(x, int) for g in images for row in g for x in row):
        raise RepresentationError("generator_images must be integer matrices")
    return RepresentationSpec(system, dim, tuple(images), name=f"custom:{path}")


def dump_representation(rep: RepresentationSpec) -> str:
    return json.dumps({"dimension": rep.dimension,
                       "generator_images": [[list(r) for r in g] for g in rep.generator_images]})


def charpoly_of_word(rep: RepresentationSpec, w: BraidWord) -> list[int]:
    return charpoly(rep.image(w))


def is_unipotent_of_index_two(g: Sequence[Sequence[int]]) -> bool:
    n = len(g)
    N = mat_sub(g, identity(n))
    return all(not any(row) for row in mat_mul(N, N))


def free_word_image(rep: RepresentationSpec, w: FreeWord) -> IntMatrix:
    """Image of a free word, reading ``x_i`` as the ``i``-th generator."""
    return rep._product(w.letters)
