"""Salvetti resolution of a finite-type Artin group and its specializations.

The degree-``k`` module is free on the ``k``-subsets ``T`` of generators, and

    d(e_T) = sum_{t in T} sum_{b} (-1)^(l(b) + pos(t, T)) * e_{T - t} * lift(b)

where ``b`` runs over the minimal representatives of ``W_{T-t} \\ W_T`` and
``lift(b)`` is the positive braid of a reduced word of ``b``.  Modules are
right modules, so composing boundaries multiplies coefficients in matrix
order, and tensoring with a representation replaces ``lift(b)`` by its
matrix.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from . import config
from .braids import NormalForm, nf_multiply, nf_of_simple
from .coxeter import CoxeterSystem
from .linalg import ChainMap, IntegerComplex, SparseIntMatrix, freeze
from .representations import RepresentationError, RepresentationSpec, intertwines

Cell = tuple  # sorted tuple of generator indices


class ResourceLimitError(RuntimeError):
    """A chain group would exceed the configured rank ceiling."""


class GroupRingElement:
    """Integer combination of group elements keyed by their normal forms."""

    __slots__ = ("system", "terms")

    def __init__(self, system: CoxeterSystem, terms: dict | None = None):
        self.system = system
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GroupRingElement(self.system, out)

    def __neg__(self):
        return GroupRingElement(self.system, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.system, {k: v * other for k, v in self.terms.items()})
        out: dict = {}
        system = self.system
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = nf_multiply(system, a, b)
                out[k] = out.get(k, 0) + x * y
        return GroupRingElement(system, out)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __repr__(self):
        return " ".join(f"{v:+d}*{k}" for k, v in sorted(self.terms.items(), key=_term_key)) or "0"

    def augmentation(self) -> int:
        return sum(self.terms.values())


def _term_key(item):
    nf, coeff = item
    return (nf.delta_power, nf.factors, coeff)


@dataclass
class FreeComplex:
    system: CoxeterSystem
    sign_convention: tuple[int, int]
    cells: list  # cells[k] = sorted list of k-subsets
    boundaries: dict = field(default_factory=dict)  # k -> {(row, col): GroupRingElement}

    @property
    def top(self) -> int:
        return len(self.cells) - 1

    def ranks(self) -> list[int]:
        return [len(c) for c in self.cells]

    def entry(self, k: int, row: int, col: int) -> GroupRingElement:
        return self.boundaries[k].get((row, col), GroupRingElement(self.system))


def boundary_sign(length: int, position: int, convention: tuple[int, int]) -> int:
    a, b = convention
    return -1 if (a * length + b * position) % 2 else 1


def build_complex(system: CoxeterSystem, sign_convention: tuple[int, int] | None = None) -> FreeComplex:
    if sign_convention is None:
        sign_convention = config.SIGN_CONVENTION
    gens = system.generators
    cells = [list(itertools.combinations(gens, k)) for k in range(system.rank + 1)]
    index = [{c: i for i, c in enumerate(cs)} for cs in cells]
    boundaries = {}
    for k in range(1, system.rank + 1):
        bk = {}
        for col, T in enumerate(cells[k]):
            for pos, t in enumerate(T):
                Tp = T[:pos] + T[pos + 1:]
                row = index[k - 1][Tp]
                terms = {}
                for b in system.minimal_coset_reps(T, Tp):
                    s = boundary_sign(system.length(b), pos, sign_convention)
                    nf = nf_of_simple(system, b)
                    terms[nf] = terms.get(nf, 0) + s
                bk[(row, col)] = GroupRingElement(system, terms)
        boundaries[k] = bk
    return FreeComplex(system, tuple(sign_convention), cells, boundaries)


@dataclass
class DSquaredReport:
    system: CoxeterSystem
    sign_convention: tuple[int, int]
    nonzero: list = field(default_factory=list)  # (degree, row cell, col cell, element)

    @property
    def ok(self) -> bool:
        return not self.nonzero


def verify_d_squared(cx: FreeComplex, stop_at_first: bool = False) -> DSquaredReport:
    """Compute every entry of ``d_{k-1} d_k`` in the group ring."""
    report = DSquaredReport(cx.system, cx.sign_convention)
    for k in range(2, cx.top + 1):
        lower = {}
        for (r, c), e in cx.boundaries[k - 1].items():
            lower.setdefault(c, []).append((r, e))
        upper = {}
        for (r, c), e in cx.boundaries[k].items():
            upper.setdefault(c, []).append((r, e))
        for col in sorted(upper):
            acc: dict[int, GroupRingElement] = {}
            for mid, e_up in upper[col]:
                for row, e_low in lower.get(mid, ()):
                    prod = e_low * e_up
                    acc[row] = acc[row] + prod if row in acc else prod
            for row in sorted(acc):
                if acc[row]:
                    report.nonzero.append((k, cx.cells[k - 2][row], cx.cells[k][col], acc[row]))
                    if stop_at_first:
                        return report
    return report


def is_augmented(cx: FreeComplex) -> bool:
    """Whether every degree-1 boundary entry has augmentation 0."""
    return all(e.augmentation() == 0 for e in cx.boundaries.get(1, {}).values())


def discover_sign_convention(systems=None) -> tuple[int, int]:
    """The unique (length parity, position parity) choice giving a resolution of Z.

    Both position-parity choices give d o d = 0; only one of them is
    compatible with the augmentation onto the trivial module.
    """
    if systems is None:
        systems = [CoxeterSystem("A", 2), CoxeterSystem("A", 3), CoxeterSystem("B", 2), CoxeterSystem("B", 3)]
    passing = []
    for conv in itertools.product((0, 1), repeat=2):
        cxs = [build_complex(s, conv) for s in systems]
        if all(is_augmented(cx) and verify_d_squared(cx, stop_at_first=True).ok for cx in cxs):
            passing.append(conv)
    if len(passing) != 1:
        raise RuntimeError(f"expected exactly one valid sign convention, found {passing}")
    return passing[0]


def check_rank_limit(cx: FreeComplex, dimension: int, limit: int | None = None) -> None:
    limit = config.MAX_CHAIN_RANK if limit is None else limit
    biggest = max(cx.ranks()) * dimension
    if biggest > limit:
        raise ResourceLimitError(f"chain group of rank {biggest} exceeds the limit {limit}")


def specialize(cx: FreeComplex, rep: RepresentationSpec, limit: int | None = None) -> IntegerComplex:
    """Tensor the resolution with ``rep``, giving an integer chain complex."""
    if rep.system != cx.system:
        raise RepresentationError(f"representation of {rep.system} used with a complex over {cx.system}")
    check_rank_limit(cx, rep.dimension, limit)
    d = rep.dimension
    dims = [len(c) * d for c in cx.cells]
    boundaries = {}
    for k in range(1, cx.top + 1):
        m = SparseIntMatrix.zero(dims[k - 1], dims[k])
        for (r, c), e in cx.boundaries[k].items():
            block = [[0] * d for _ in range(d)]
            for nf, coeff in e.terms.items():
                img = rep.image_of_normal_form(nf)
                for i in range(d):
                    bi, gi = block[i], img[i]
                    for j in range(d):
                        bi[j] += coeff * gi[j]
            for i in range(d):
                for j in range(d):
                    m.add_to(r * d + i, c * d + j, block[i][j])
        boundaries[k] = m
    return IntegerComplex(dims, boundaries)


def coefficient_chain_map(cx: FreeComplex, rep_source: RepresentationSpec, rep_target: RepresentationSpec,
                          module_map, source: IntegerComplex | None = None,
                          target: IntegerComplex | None = None) -> ChainMap:
    """Chain map induced by a module homomorphism ``module_map: source -> target``."""
    M = freeze(module_map)
    if len(M) != rep_target.dimension or any(len(r) != rep_source.dimension for r in M):
        raise RepresentationError("module map has the wrong shape")
    if not intertwines(M, rep_source, rep_target):
        raise RepresentationError("module map does not intertwine the representations")
    source = specialize(cx, rep_source) if source is None else source
    target = specialize(cx, rep_target) if target is None else target
    ds, dt = rep_source.dimension, rep_target.dimension
    maps = {}
    for k, cells in enumerate(cx.cells):
        f = SparseIntMatrix.zero(len(cells) * dt, len(cells) * ds)
        for c in range(len(cells)):
            for i in range(dt):
                for j in range(ds):
                    f.add_to(c * dt + i, c * ds + j, M[i][j])
        maps[k] = f
    return ChainMap(source, target, maps)


def scalar_chain_map(cx: IntegerComplex, c: int) -> ChainMap:
    maps = {}
    for k, d in enumerate(cx.dims):
        f = SparseIntMatrix.zero(d, d)
        for i in range(d):
            f.add_to(i, i, c)
        maps[k] = f
    return ChainMap(cx, cx, maps)


# -- on-disk cache --------------------------------------------------------


def cache_key(system: CoxeterSystem, sign_convention=None) -> dict:
    conv = config.SIGN_CONVENTION if sign_convention is None else sign_convention
    return {"type": system.type, "rank": system.rank, "sign_convention": list(conv),
            "engine_version": config.ENGINE_VERSION}


def serialize_complex(cx: FreeComplex) -> str:
    boundaries = {}
    for k, bk in sorted(cx.boundaries.items()):
        entries = []
        for (r, c), e in sorted(bk.items()):
            terms = [[nf.delta_power, [list(f) for f in nf.factors], v]
                     for nf, v in sorted(e.terms.items(), key=_term_key)]
            entries.append([r, c, terms])
        boundaries[str(k)] = entries
    doc = {"key": cache_key(cx.system, cx.sign_convention),
           "cells": [[list(c) for c in cs] for cs in cx.cells],
           "boundaries": boundaries}
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def deserialize_complex(text: str) -> FreeComplex:
    doc = json.loads(text)
    key = doc["key"]
    system = CoxeterSystem(key["type"], key["rank"])
    boundaries = {}
    for k, entries in doc["boundaries"].items():
        bk = {}
        for r, c, terms in entries:
            bk[(r, c)] = GroupRingElement(
                system, {NormalForm(p, tuple(tuple(f) for f in fs)): v for p, fs, v in terms})
        boundaries[int(k)] = bk
    cells = [[tuple(c) for c in cs] for cs in doc["cells"]]
    return FreeComplex(system, tuple(key["sign_convention"]), cells, boundaries)


def cache_path(cache_dir: str | Path, system: CoxeterSystem, sign_convention=None) -> Path:
    key = json.dumps(cache_key(system, sign_convention), sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(key.encode()).hexdigest()[:24]
    return Path(cache_dir) / f"salvetti-{system.type}{system.rank}-{digest}.json"


def default_cache_dir() -> Path | None:
    value = os.environ.get(config.CACHE_ENV_VAR)
    return Path(value) if value else None


def load_or_build(system: CoxeterSystem, cache_dir: str | Path | None = None) -> FreeComplex:
    """Build the resolution, going through the file cache when a directory is given."""
    if cache_dir is None:
        cache_dir = default_cache_dir()
    if cache_dir is None:
        return build_complex(system)
    path = cache_path(cache_dir, system)
    if path.exists():
        cx = deserialize_complex(path.read_text())
        if cache_key(cx.system, cx.sign_convention) == cache_key(system):
            return cx
    cx = build_complex(system)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(serialize_complex(cx))
    tmp.replace(path)
    return cx
