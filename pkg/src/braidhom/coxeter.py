"""Finite Coxeter groups of types A and B.

Elements are plain tuples in window notation (see ``_pykernels``).  Type
``A`` of rank ``r`` acts on ``r + 1`` letters; type ``B`` of rank ``n`` acts
by signed permutations of ``n`` letters, generator ``n`` being the sign
change of the last letter.  Generators are numbered from 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels

CoxeterElement = tuple  # window notation, see module docstring


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


@dataclass(frozen=True)
class CoxeterSystem:
    type: str
    rank: int
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.type not in ("A", "B"):
            raise ValueError(f"unsupported Coxeter type {self.type!r}")
        # rank 0 in type A is the trivial group (one strand)
        if self.rank < 0 or (self.type == "B" and self.rank < 1):
            raise ValueError(f"invalid rank {self.rank} for type {self.type}")

    @property
    def is_b(self) -> bool:
        return self.type == "B"

    @property
    def degree(self) -> int:
        """Number of letters permuted by the window notation."""
        return self.rank + 1 if self.type == "A" else self.rank

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @cached_property
    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        r = self.rank
        m = [[1 if i == j else 2 for j in range(r)] for i in range(r)]
        for i in range(r - 1):
            m[i][i + 1] = m[i + 1][i] = 3
        if self.type == "B" and r >= 2:
            m[r - 2][r - 1] = m[r - 1][r - 2] = 4
        return tuple(tuple(row) for row in m)

    def __str__(self):
        return f"{self.type}{self.rank}"

    # -- elements ---------------------------------------------------------

    @cached_property
    def identity(self) -> CoxeterElement:
        return tuple(range(1, self.degree + 1))

    @cached_property
    def longest(self) -> CoxeterElement:
        if self.type == "A":
            return tuple(range(self.degree, 0, -1))
        return tuple(-i for i in range(1, self.degree + 1))

    def generator(self, i: int) -> CoxeterElement:
        if not 1 <= i <= self.rank:
            raise ValueError(f"generator {i} out of range for {self}")
        w = list(self.identity)
        if self.type == "B" and i == self.rank:
            w[-1] = -w[-1]
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return tuple(w)

    def multiply(self, u: CoxeterElement, v: CoxeterElement) -> CoxeterElement:
        return kernels.multiply(u, v)

    def inverse(self, w: CoxeterElement) -> CoxeterElement:
        return kernels.inverse(w)

    def from_word(self, word: Iterable[int]) -> CoxeterElement:
        w = self.identity
        for i in word:
            w = kernels.multiply(w, self.generator(i))
        return w

    def conjugate_by_longest(self, w: CoxeterElement) -> CoxeterElement:
        """``w0 w w0``, the diagram automorphism induced by the Garside element."""
        if self.type == "B":
            return w  # w0 = -1 is central
        n = self.degree
        return tuple(n + 1 - w[n - i] for i in range(1, n + 1))

    def is_element(self, w: Sequence[int]) -> bool:
        if len(w) != self.degree:
            return False
        if self.type == "A" and any(x <= 0 for x in w):
            return False
        return sorted(abs(x) for x in w) == list(range(1, self.degree + 1))

    # -- combinatorics ----------------------------------------------------

    def length(self, w: CoxeterElement) -> int:
        return kernels.length(w, self.is_b)

    def descent_set(self, w: CoxeterElement, side: str = "right") -> frozenset[int]:
        if side == "right":
            return _mask_to_set(kernels.right_descent_mask(w, self.is_b))
        if side == "left":
            return _mask_to_set(kernels.left_descent_mask(w, self.is_b))
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def reduced_word(self, w: CoxeterElement) -> tuple[int, ...]:
        """Greedy reduced word: repeatedly strip the smallest left descent."""
        cache = self._cache.setdefault("rw", {})
        hit = cache.get(w)
        if hit is not None:
            return hit
        word = []
        cur = w
        b = self.is_b
        while True:
            mask = kernels.left_descent_mask(cur, b)
            if not mask:
                break
            i = (mask & -mask).bit_length()
            word.append(i)
            cur = kernels.multiply(self.generator(i), cur)
        out = tuple(word)
        cache[w] = out
        return out

    def elements(self, subset: Iterable[int] | None = None) -> list[CoxeterElement]:
        """All elements of the parabolic subgroup ``W_T`` (whole group by default)."""
        gens = self.generators if subset is None else tuple(sorted(subset))
        return self.minimal_coset_reps(gens, ())

    def minimal_coset_reps(self, T: Iterable[int], T_prime: Iterable[int]) -> list[CoxeterElement]:
        """Minimal-length representatives of the right cosets ``W_{T'} \\ W_T``.

        A representative has no left descent in ``T'``.  The set is closed
        under taking prefixes of reduced words, so it is grown from the
        identity by right multiplication inside ``W_T``.  Output is sorted by
        length, then by the greedy reduced word.
        """
        T = tuple(sorted(set(T)))
        Tp = frozenset(T_prime)
        if not Tp <= set(T):
            raise ValueError(f"{sorted(Tp)} is not a subset of {list(T)}")
        for i in T:
            if not 1 <= i <= self.rank:
                raise ValueError(f"generator {i} out of range for {self}")
        key = (T, tuple(sorted(Tp)))
        cache = self._cache.setdefault("cosets", {})
        hit = cache.get(key)
        if hit is not None:
            return hit

        b = self.is_b
        tp_mask = 0
        for i in Tp:
            tp_mask |= 1 << (i - 1)
        gens = [(i, self.generator(i)) for i in T]
        layer = [self.identity]
        seen = {self.identity}
        out = [self.identity]
        while layer:
            nxt = []
            for w in layer:
                rdes = kernels.right_descent_mask(w, b)
                for i, s in gens:
                    if rdes >> (i - 1) & 1:
                        continue
                    ws = kernels.multiply(w, s)
                    if ws in seen or kernels.left_descent_mask(ws, b) & tp_mask:
                        continue
                    seen.add(ws)
                    nxt.append(ws)
            nxt.sort(key=self.reduced_word)
            out.extend(nxt)
            layer = nxt
        cache[key] = out
        return out

    def order(self, subset: Iterable[int] | None = None) -> int:
        """Order of the parabolic subgroup, from its connected components."""
        gens = sorted(self.generators if subset is None else set(subset))
        total = 1
        for _, run in itertools.groupby(enumerate(gens), key=lambda p: p[1] - p[0]):
            block = [g for _, g in run]
            k = len(block)
            if self.type == "B" and block[-1] == self.rank:
                total *= 2**k * _factorial(k)
            else:
                total *= _factorial(k + 1)
        return total


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def type_a(strands: int) -> CoxeterSystem:
    """The Coxeter system of the braid group on ``strands`` strands."""
    return CoxeterSystem("A", strands - 1)


def type_b(n: int) -> CoxeterSystem:
    return CoxeterSystem("B", n)
