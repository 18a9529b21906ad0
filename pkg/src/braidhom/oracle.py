"""Independent checks of the Salvetti engine.

The presentation complex of the Artin presentation of ``Br_n`` gives the
first three terms of a free resolution, with boundaries built from Fox
derivatives of the relators.  It computes ``H_0`` and ``H_1`` for every
``n``, and all of ``H_*`` for ``n = 3``: the single relator of ``Br_3`` is not
a proper power, so the one-relator presentation complex is aspherical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .braids import BraidWord, FreeWord, fox_derivative_right, garside_normal_form, words_equal
from .coxeter import CoxeterSystem, type_a
from .linalg import HomologyGroup, IntegerComplex, SparseIntMatrix, homology, mat_mul
from .representations import (
    RepresentationSpec,
    braid_relation_pairs,
    burau_unreduced_minus1,
    conjugate,
    direct_sum,
    free_word_image,
    random_unimodular,
    relation_sides,
    sign_twist,
    symplectic_rep,
    tensor_product,
    trivial_rep,
)


@dataclass(frozen=True)
class PresentationData:
    generators: int
    relators: tuple[BraidWord, ...]


def artin_presentation(n: int) -> PresentationData:
    """Generators ``sigma_1..sigma_{n-1}``; one relator per pair ``i < j``, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    system = type_a(n)
    relators = []
    for i, j, m in braid_relation_pairs(system):
        left, right = relation_sides(i, j, m)
        relators.append(BraidWord(left + tuple(-k for k in reversed(right)), system))
    return PresentationData(n - 1, tuple(relators))


def fox_resolution_complex(n: int, rep: RepresentationSpec) -> IntegerComplex:
    """Presentation complex of ``Br_n`` tensored with ``rep`` (degrees 0..2)."""
    if n < 2:
        raise ValueError("the presentation complex needs n >= 2")
    if rep.system != type_a(n):
        raise ValueError(f"representation is over {rep.system}, not the braid group on {n} strands")
    pres = artin_presentation(n)
    d = rep.dimension
    g = pres.generators
    dims = [d, g * d, len(pres.relators) * d]

    d1 = SparseIntMatrix.zero(d, g * d)
    for i, img in enumerate(rep.generator_images):
        for a in range(d):
            for b in range(d):
                d1.add_to(a, i * d + b, img[a][b] - (a == b))

    d2 = SparseIntMatrix.zero(g * d, len(pres.relators) * d)
    for r, rel in enumerate(pres.relators):
        w = FreeWord(rel.letters, g)
        for i in range(1, g + 1):
            deriv = fox_derivative_right(w, i)
            for key, coeff in deriv.terms.items():
                img = free_word_image(rep, FreeWord(key, g))
                for a in range(d):
                    for b in range(d):
                        d2.add_to((i - 1) * d + a, r * d + b, coeff * img[a][b])
    return IntegerComplex(dims, {1: d1, 2: d2})


@dataclass
class ComparisonReport:
    mismatches: list = field(default_factory=list)  # (degree, left group, right group)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_homology(a: Sequence[HomologyGroup], b: Sequence[HomologyGroup],
                     degrees: Iterable[int] | None = None) -> ComparisonReport:
    """Degreewise comparison of free rank and torsion multiset."""
    left = {h.degree: h for h in a}
    right = {h.degree: h for h in b}
    if degrees is None:
        degrees = sorted(set(left) | set(right))
    report = ComparisonReport()
    for k in degrees:
        x, y = left.get(k), right.get(k)
        kx = (x.free_rank, sorted(x.torsion)) if x is not None else None
        ky = (y.free_rank, sorted(y.torsion)) if y is not None else None
        if kx != ky:
            report.mismatches.append((k, x, y))
    return report


def random_word(system: CoxeterSystem, length: int, rng: random.Random) -> BraidWord:
    if system.rank == 0:
        return BraidWord((), system)
    return BraidWord(tuple(rng.choice((1, -1)) * rng.randint(1, system.rank) for _ in range(length)), system)


def random_custom_reps(n: int, count: int, seed: int) -> list[RepresentationSpec]:
    """Valid integer representations of ``Br_n`` (odd ``n``) assembled from known ones."""
    rng = random.Random(seed)
    system = type_a(n)
    sym = symplectic_rep(n)
    bu = burau_unreduced_minus1(n)
    builders = [
        lambda: conjugate(sym, random_unimodular(sym.dimension, rng), name="conjugated symplectic"),
        lambda: sign_twist(sym, name="sign-twisted symplectic"),
        lambda: conjugate(direct_sum(sym, trivial_rep(system)), random_unimodular(sym.dimension + 1, rng),
                          name="conjugated symplectic + trivial"),
        lambda: tensor_product(sym, sym, name="symplectic tensor square"),
        lambda: conjugate(bu, random_unimodular(bu.dimension, rng), name="conjugated unreduced Burau(-1)"),
        lambda: direct_sum(sign_twist(trivial_rep(system)), sym, name="sign + symplectic"),
    ]
    order = list(range(len(builders)))
    rng.shuffle(order)
    return [builders[i % len(builders)]() for i in (order * (count // len(order) + 1))[:count]]


@dataclass
class FuzzReport:
    trials: int
    failures: list = field(default_factory=list)  # (original word, rewritten word, which check failed)

    @property
    def ok(self) -> bool:
        return not self.failures


def _random_rewrite(w: BraidWord, rng: random.Random) -> BraidWord:
    """Insert a defining relation or a cancelling pair at a random position."""
    system = w.system
    pos = rng.randint(0, len(w.letters))
    pairs = list(braid_relation_pairs(system))
    if pairs and rng.random() < 0.7:
        i, j, m = rng.choice(pairs)
        left, right = relation_sides(i, j, m)
        if rng.random() < 0.5:
            left, right = right, left
        insert = left + tuple(-k for k in reversed(right))
    else:
        k = rng.choice((1, -1)) * rng.randint(1, system.rank)
        insert = (k, -k)
    return BraidWord(w.letters[:pos] + insert + w.letters[pos:], system)


def relation_fuzz(rep: RepresentationSpec, trials: int, seed: int, max_length: int = 10,
                  check_normal_forms: bool = True) -> FuzzReport:
    rng = random.Random(seed)
    report = FuzzReport(trials)
    system = rep.system
    if system.rank == 0:
        return report
    for _ in range(trials):
        w = random_word(system, rng.randint(0, max_length), rng)
        v = _random_rewrite(w, rng)
        if rep.image(w) != rep.image(v):
            report.failures.append((w, v, "matrix"))
        elif check_normal_forms and not words_equal(w, v):
            report.failures.append((w, v, "normal form"))
    return report


def corrupted_rep(rep: RepresentationSpec) -> RepresentationSpec:
    """Negative control: the first generator image replaced by its square."""
    gens = list(rep.generator_images)
    gens[0] = mat_mul(gens[0], gens[0])
    return RepresentationSpec(rep.system, rep.dimension, tuple(gens), name=f"corrupted {rep.name}",
                              validate=False)
