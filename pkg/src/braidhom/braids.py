"""Words in Artin generators and the Garside normal form.

A braid word is stored as a tuple of signed integers, ``k`` standing for
``sigma_|k|`` raised to the sign of ``k``.  The normal form of an element of a
finite-type Artin group is ``Delta^p A_1 ... A_m`` where each ``A_i`` is a
simple element, stored as the Coxeter element it lifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from . import kernels
from .coxeter import CoxeterElement, CoxeterSystem


class WordError(ValueError):
    """Raised for malformed or out-of-range braid words."""


class ArtinLetter(NamedTuple):
    index: int
    sign: int


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]
    system: CoxeterSystem

    def __post_init__(self):
        r = self.system.rank
        for k in self.letters:
            if k == 0 or abs(k) > r:
                raise WordError(f"letter {k} out of range for {self.system}")

    @classmethod
    def identity(cls, system: CoxeterSystem) -> BraidWord:
        return cls((), system)

    def artin_letters(self) -> Iterator[ArtinLetter]:
        for k in self.letters:
            yield ArtinLetter(abs(k), 1 if k > 0 else -1)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.system != self.system:
            raise WordError("cannot multiply words over different systems")
        return BraidWord(self.letters + other.letters, self.system)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.letters * k, self.system)

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(-k for k in reversed(self.letters)), self.system)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(k) for k in self.letters)


def parse_word(text: str, system: CoxeterSystem) -> BraidWord:
    """Parse whitespace-separated signed nonzero integers, e.g. ``"1 2 -1"``."""
    letters = []
    for token in text.split():
        try:
            k = int(token)
        except ValueError:
            raise WordError(f"malformed token {token!r}") from None
        if k == 0:
            raise WordError("letter 0 is not a generator")
        if abs(k) > system.rank:
            raise WordError(f"letter {k} out of range for rank {system.rank}")
        letters.append(k)
    return BraidWord(tuple(letters), system)


def positive_lift(system: CoxeterSystem, w: CoxeterElement) -> BraidWord:
    """Positive braid word of the deterministic reduced word of ``w``."""
    return BraidWord(system.reduced_word(w), system)


def delta(system: CoxeterSystem) -> BraidWord:
    return positive_lift(system, system.longest)


# -- free groups ----------------------------------------------------------


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for k in letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in ``x_1..x_n``; letters are signed indices."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        reduced = free_reduce(self.letters)
        if reduced != self.letters:
            object.__setattr__(self, "letters", reduced)

    @classmethod
    def generator(cls, i: int, n: int) -> FreeWord:
        return cls((i,), n)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters, self.n)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-k for k in reversed(self.letters)), self.n)

    def reversed(self) -> FreeWord:
        """Image under the anti-automorphism fixing every generator."""
        return FreeWord(tuple(reversed(self.letters)), self.n)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{k}" if k > 0 else f"x{-k}^-1" for k in self.letters)


def _sigma_images(j: int, sign: int) -> dict[int, tuple[int, ...]]:
    if sign > 0:
        return {j: (j, j + 1, -j), j + 1: (j,)}
    return {j: (j + 1,), j + 1: (-(j + 1), j, j + 1)}


def _substitute(letters: tuple[int, ...], images: dict[int, tuple[int, ...]]) -> tuple[int, ...]:
    out: list[int] = []
    for k in letters:
        img = images.get(abs(k))
        if img is None:
            out.append(k)
        elif k > 0:
            out.extend(img)
        else:
            out.extend(-x for x in reversed(img))
    return free_reduce(out)


def artin_action(word: BraidWord, i: int) -> FreeWord:
    """Image of ``x_i`` under the automorphism of ``F_n`` induced by ``word``.

    ``sigma_j`` sends ``x_j -> x_j x_{j+1} x_j^-1`` and ``x_{j+1} -> x_j``; the
    letters of ``word`` are applied in order, each one substituted into the
    result of the previous ones.
    """
    if word.system.type != "A":
        raise WordError("the Artin action is defined for type A only")
    n = word.system.rank + 1
    if not 1 <= i <= n:
        raise WordError(f"free generator {i} out of range 1..{n}")
    letters: tuple[int, ...] = (i,)
    for k in word.letters:
        letters = _substitute(letters, _sigma_images(abs(k), 1 if k > 0 else -1))
    return FreeWord(letters, n)


class FreeGroupRingElement:
    """Finite integer combination of reduced free words."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: dict[tuple[int, ...], int] | None = None, n: int = 0):
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self.n = n

    @classmethod
    def of(cls, w: FreeWord, coeff: int = 1) -> FreeGroupRingElement:
        return cls({w.letters: coeff}, w.n)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FreeGroupRingElement(out, self.n or other.n)

    def __neg__(self):
        return FreeGroupRingElement({k: -v for k, v in self.terms.items()}, self.n)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict[tuple[int, ...], int] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = free_reduce(a + b)
                out[k] = out.get(k, 0) + x * y
        return FreeGroupRingElement(out, self.n or other.n)

    def reversed(self) -> FreeGroupRingElement:
        return FreeGroupRingElement({tuple(reversed(k)): v for k, v in self.terms.items()}, self.n)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        return isinstance(other, FreeGroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        parts = [f"{v:+d}*[{FreeWord(k, self.n)}]" for k, v in sorted(self.terms.items())]
        return " ".join(parts) or "0"


def fox_derivative(w: FreeWord, i: int) -> FreeGroupRingElement:
    """Left Fox derivative ``d w / d x_i``."""
    out: dict[tuple[int, ...], int] = {}
    letters = w.letters
    for m, k in enumerate(letters):
        if k == i:
            key = free_reduce(letters[:m])
            out[key] = out.get(key, 0) + 1
        elif k == -i:
            key = free_reduce(letters[: m + 1])
            out[key] = out.get(key, 0) - 1
    return FreeGroupRingElement(out, w.n)


def fox_derivative_right(w: FreeWord, i: int) -> FreeGroupRingElement:
    """Right Fox derivative: ``D(uv) = D(u) v + D(v)``; the left one conjugated by word reversal."""
    return fox_derivative(w.reversed(), i).reversed()


# -- Garside normal form --------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    delta_power: int
    factors: tuple[CoxeterElement, ...]

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors


def _stabilize(system: CoxeterSystem, factors: list) -> None:
    e = system.identity
    b = system.is_b
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            x, y = kernels.left_weight(factors[i], factors[i + 1], b)
            if x != factors[i]:
                factors[i], factors[i + 1] = x, y
                changed = True
        if e in factors:
            factors[:] = [f for f in factors if f != e]
            changed = True


def _append_simple(system: CoxeterSystem, factors: list, x: CoxeterElement) -> None:
    e = system.identity
    if x == e:
        return
    b = system.is_b
    factors.append(x)
    i = len(factors) - 1
    emptied = False
    while i > 0:
        a, c = kernels.left_weight(factors[i - 1], factors[i], b)
        if a == factors[i - 1]:
            break
        factors[i - 1], factors[i] = a, c
        if c == e:
            emptied = True
        i -= 1
    if emptied:
        _stabilize(system, factors)


def _finish(system: CoxeterSystem, p: int, factors: list) -> NormalForm:
    w0 = system.longest
    k = 0
    while k < len(factors) and factors[k] == w0:
        k += 1
    return NormalForm(p + k, tuple(factors[k:]))


def _tau(system: CoxeterSystem, factors: list, times: int) -> list:
    if times % 2 == 0 or system.type == "B":
        return list(factors)
    return [system.conjugate_by_longest(f) for f in factors]


def garside_normal_form(word: BraidWord) -> NormalForm:
    system = word.system
    w0 = system.longest
    p = 0
    factors: list = []
    for k in word.letters:
        if k > 0:
            _append_simple(system, factors, system.generator(k))
        else:
            # sigma^-1 = Delta^-1 (w0 s), and F Delta^-1 = Delta^-1 tau(F)
            factors = _tau(system, factors, 1)
            p -= 1
            _append_simple(system, factors, kernels.multiply(w0, system.generator(-k)))
    return _finish(system, p, factors)


def nf_multiply(system: CoxeterSystem, a: NormalForm, b: NormalForm) -> NormalForm:
    factors = _tau(system, list(a.factors), b.delta_power)
    for f in b.factors:
        _append_simple(system, factors, f)
    return _finish(system, a.delta_power + b.delta_power, factors)


def nf_of_simple(system: CoxeterSystem, w: CoxeterElement) -> NormalForm:
    if w == system.identity:
        return NormalForm(0, ())
    if w == system.longest:
        return NormalForm(1, ())
    return NormalForm(0, (w,))


def nf_to_word(system: CoxeterSystem, nf: NormalForm) -> BraidWord:
    letters = delta(system).letters * nf.delta_power if nf.delta_power >= 0 else \
        delta(system).inverse().letters * (-nf.delta_power)
    for f in nf.factors:
        letters += system.reduced_word(f)
    return BraidWord(letters, system)


def is_left_weighted(system: CoxeterSystem, nf: NormalForm) -> bool:
    e, w0 = system.identity, system.longest
    if any(f in (e, w0) for f in nf.factors):
        return False
    for u, v in zip(nf.factors, nf.factors[1:]):
        if not system.descent_set(v, "left") <= system.descent_set(u, "right"):
            return False
    return True


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.system != b.system:
        raise WordError("words over different systems")
    return garside_normal_form(a) == garside_normal_form(b)


def format_normal_form(system: CoxeterSystem, nf: NormalForm) -> str:
    body = "".join("(" + " ".join(map(str, system.reduced_word(f))) + ")" for f in nf.factors)
    return f"Δ^{nf.delta_power} · {body or '()'}"
