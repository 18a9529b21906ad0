"""Pass/fail verification suites over computed homology.

Topological objects are replaced by their group-theoretic models: the space
of ``n`` black points and one white point in the disc by the Artin group of
type ``B_n``, the unordered configuration space of ``n`` points by ``Br_n``,
and the double cover of the former by the ``B_n`` complex with coefficients
in the permutation module of the deck group.  These are the standard
``K(pi, 1)`` identifications; every report carries this note in its header.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import config
from .coxeter import CoxeterSystem, type_a, type_b
from .linalg import HomologyGroup, annihilator_exponent, direct_sum, homology, induced_map
from .oracle import (
    compare_homology,
    corrupted_rep,
    fox_resolution_complex,
    random_custom_reps,
    random_word,
    relation_fuzz,
)
from .representations import (
    burau_minus1,
    charpoly_of_word,
    find_intertwiner,
    sign_cover_rep,
    symplectic_rep,
    trivial_rep,
)
from .salvetti import (
    build_complex,
    coefficient_chain_map,
    is_augmented,
    load_or_build,
    specialize,
    verify_d_squared,
)

MODEL_NOTE = ("spaces are modelled by Artin groups via the standard K(pi,1) identifications: "
              "C_{n,1} ~ type B_n, C_n ~ Br_n (type A_{n-1}), T_n ~ type B_n with sign-cover coefficients")


@dataclass
class Verdict:
    assertion: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    name: str
    parameters: dict
    verdicts: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    header: str = MODEL_NOTE

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def check(self, assertion: str, passed: bool, detail: str = "") -> bool:
        self.verdicts.append(Verdict(assertion, bool(passed), detail))
        return passed

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "header": self.header,
            "parameters": self.parameters,
            "passed": self.passed,
            "verdicts": [{"assertion": v.assertion, "passed": v.passed, "detail": v.detail}
                         for v in self.verdicts],
            "data": self.data,
            "engine_version": config.ENGINE_VERSION,
            "sign_convention": list(config.SIGN_CONVENTION),
        }


def _table(groups) -> list[dict]:
    return [{"degree": h.degree, "rank": h.free_rank, "torsion": sorted(h.torsion), "group": str(h)}
            for h in groups]


def _trivial_homology(system: CoxeterSystem, degrees, cache_dir=None) -> list[HomologyGroup]:
    cx = load_or_build(system, cache_dir)
    degrees = [k for k in degrees if 0 <= k <= cx.top]
    return homology(specialize(cx, trivial_rep(system)), degrees)


def suite_torsion_theorem(n: int, max_degree: int, cache_dir=None) -> SuiteReport:
    """``4 H_k(Br_n; H) = 0`` with ``H`` the symplectic representation, ``n`` odd."""
    if n < 3 or n % 2 == 0:
        raise ValueError("the torsion suite needs odd n >= 3")
    top = min(max_degree, n - 1)
    report = SuiteReport("torsion-theorem", {"n": n, "degrees": list(range(top + 1))})
    cx = load_or_build(type_a(n), cache_dir)
    groups = homology(specialize(cx, symplectic_rep(n)), range(top + 1))
    exponents = {}
    for h in groups:
        e = annihilator_exponent(h)
        exponents[h.degree] = e if h.free_rank == 0 else "inf"
        report.check(f"4 * H_{h.degree} = 0", h.free_rank == 0 and 4 % e == 0, str(h))
    report.data = {"homology": _table(groups), "annihilator_exponent": exponents,
                   "max_observed_exponent": max((e for e in exponents.values() if e != "inf"), default=1)}
    return report


def suite_splitting_lemma(n: int, max_degree: int, cache_dir=None) -> SuiteReport:
    """``H_k(B_n) = H_k(A_{n-1}) + H_{k-1}(B_{n-1})`` degreewise, trivial coefficients."""
    if n < 2:
        raise ValueError("the splitting suite needs n >= 2")
    top = min(max_degree, n)
    degrees = list(range(top + 1))
    report = SuiteReport("splitting", {"n": n, "degrees": degrees})
    hb = _trivial_homology(type_b(n), degrees, cache_dir)
    ha = {h.degree: h for h in _trivial_homology(type_a(n), degrees, cache_dir)}
    hc = {h.degree: h for h in _trivial_homology(type_b(n - 1), [k - 1 for k in degrees], cache_dir)}
    rhs = []
    for k in degrees:
        parts = [g for g in (ha.get(k), hc.get(k - 1)) if g is not None]
        rhs.append(direct_sum(*parts, degree=k))
    cmp = compare_homology(hb, rhs, degrees)
    bad = {m[0] for m in cmp.mismatches}
    for k, (x, y) in enumerate(zip(hb, rhs)):
        report.check(f"H_{k}(B_{n}) = H_{k}(A_{n - 1}) + H_{k - 1}(B_{n - 1})", k not in bad, f"{x} vs {y}")
    report.data = {"B_n": _table(hb), "A_n-1": _table(ha.values()), "B_n-1": _table(hc.values()),
                   "sum": _table(rhs)}
    return report


def suite_double_cover(n: int, max_degree: int, cache_dir=None) -> SuiteReport:
    """Deck involution, projection and transfer on the type-``B_n`` avatars."""
    if n < 2:
        raise ValueError("the double-cover suite needs n >= 2")
    system = type_b(n)
    top = min(max_degree, n)
    report = SuiteReport("double-cover", {"n": n, "degrees": list(range(top + 1))})
    cx = load_or_build(system, cache_dir)
    cover, base = sign_cover_rep(n), trivial_rep(system)
    c_cover, c_base = specialize(cx, cover), specialize(cx, base)
    sq = coefficient_chain_map(cx, cover, base, [[1, 1]], c_cover, c_base)
    tr = coefficient_chain_map(cx, base, cover, [[1], [1]], c_base, c_cover)
    eps = coefficient_chain_map(cx, cover, cover, [[0, 1], [1, 0]], c_cover, c_cover)
    for f in (sq, tr, eps):
        f.check()
    tables = {"cover": [], "base": []}
    for k in range(top + 1):
        sq_k = induced_map(sq, c_cover, c_base, k, check=False)
        tr_k = induced_map(tr, c_base, c_cover, k, check=False)
        eps_k = induced_map(eps, c_cover, c_cover, k, check=False)
        tables["cover"].append(_table(homology(c_cover, [k]))[0])
        tables["base"].append(_table(homology(c_base, [k]))[0])
        report.check(f"eps_* = id on H_{k}", eps_k.is_identity())
        report.check(f"Sq_* Sq^! = 2 on H_{k}", sq_k.compose(tr_k).is_multiplication_by(2))
        report.check(f"Sq^! Sq_* = 2 on H_{k}", tr_k.compose(sq_k).is_multiplication_by(2))
        report.check(f"2 ker(Sq_*) = 0 in H_{k}", sq_k.kernel_killed_by(2))
        report.check(f"2 H_{k} in im(Sq_*)", sq_k.image_contains_multiples(2))
    report.data = tables
    return report


def suite_engine_integrity(max_rank: int, seed: int = 0, fuzz_trials: int = 200, cache_dir=None) -> SuiteReport:
    """d^2 = 0, oracle agreement, relation fuzzing and representation checks up to ``max_rank``."""
    rng = random.Random(seed)
    report = SuiteReport("integrity", {"max_rank": max_rank, "seed": seed, "fuzz_trials": fuzz_trials})
    data: dict = {"d_squared": {}, "oracle": {}, "fuzz": {}}

    systems = [CoxeterSystem(t, r) for t in ("A", "B") for r in range(1, max_rank + 1)]
    for s in systems:
        ok = verify_d_squared(load_or_build(s, cache_dir)).ok
        data["d_squared"][str(s)] = ok
        report.check(f"d^2 = 0 over {s}", ok)

    # every convention other than the frozen one must be caught
    for conv in ((0, 0), (0, 1), (1, 0), (1, 1)):
        if conv == config.SIGN_CONVENTION:
            continue
        caught = any(not is_augmented(cx) or not verify_d_squared(cx, stop_at_first=True).ok
                     for cx in (build_complex(s, conv) for s in (type_a(3), type_b(2), type_b(3))))
        report.check(f"corrupted sign convention {conv} detected", caught)

    for n in range(2, max_rank + 2):
        system = type_a(n)
        cx = load_or_build(system, cache_dir)
        reps = [trivial_rep(system)]
        if n % 2:
            reps.append(symplectic_rep(n))
        if n == 3:
            reps += random_custom_reps(3, 5, rng.randrange(2 ** 31))
        degrees = [0, 1, 2] if n == 3 else [0, 1]
        for rep in reps:
            a = homology(specialize(cx, rep), degrees)
            b = homology(fox_resolution_complex(n, rep), degrees)
            ok = compare_homology(a, b, degrees).ok
            data["oracle"][f"n={n} {rep.name}"] = _table(a)
            report.check(f"Salvetti = presentation complex, n={n}, {rep.name}, degrees {degrees}", ok)

    for s in systems:
        reps = [trivial_rep(s)]
        if s.type == "A" and s.degree % 2 == 1 and s.degree >= 3:
            reps.append(symplectic_rep(s.degree))
        for rep in reps:
            fz = relation_fuzz(rep, fuzz_trials, rng.randrange(2 ** 31))
            data["fuzz"][f"{s} {rep.name}"] = len(fz.failures)
            report.check(f"relation fuzz on {s}, {rep.name}", fz.ok)

    for n in range(3, max_rank + 2, 2):
        sym, bur = symplectic_rep(n), burau_minus1(n)
        words = [random_word(sym.system, rng.randint(1, 12), rng) for _ in range(200)]
        report.check(f"symplectic form preserved on 200 words, n={n}",
                     all(sym.preserves_form(sym.image(w)) for w in words))
        report.check(f"charpolys agree with reduced Burau(-1) on 100 words, n={n}",
                     all(charpoly_of_word(sym, w) == charpoly_of_word(bur, w) for w in words[:100]))
        P = find_intertwiner(sym, bur, samples=words[:20])
        data.setdefault("intertwiner", {})[n] = P
        report.check(f"unimodular intertwiner exists, n={n}", P is not None)
        bad = relation_fuzz(corrupted_rep(sym), 50, rng.randrange(2 ** 31), check_normal_forms=False)
        report.check(f"corrupted symplectic({n}) caught by fuzzing", not bad.ok)

    report.data = data
    return report


SUITES = {
    "torsion-theorem": suite_torsion_theorem,
    "splitting": suite_splitting_lemma,
    "double-cover": suite_double_cover,
    "integrity": suite_engine_integrity,
}
