"""Characters of W_n = (Z/d) wr S_n over Q(zeta_d).

Irreducible characters are computed by splitting the cycles of a class
among the d characters of Z/d and evaluating symmetric-group characters
(Murnaghan-Nakayama) on each block. Induction from W_a x W_b uses the same
cycle-splitting count.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Mapping

from .combinat import (
    LabeledCycleType,
    MultiPartition,
    WreathElement,
    class_representative,
    class_size,
    centralizer_order,
    enumerate_classes,
    enumerate_multipartitions,
    group_order,
)
from .exactnum import Cyclotomic, as_cyclotomic, cyclotomic_to_json


class ShapeMismatchError(ValueError):
    """Class functions on different groups were combined."""


class NotACharacterError(ValueError):
    """A class function has non-integral or negative multiplicities."""

    def __init__(self, message: str, multiplicities: Mapping | None = None):
        super().__init__(message)
        self.multiplicities = dict(multiplicities or {})


# symmetric group characters ----------------------------------------------------


def _beta_set(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    lam = lam + (0,) * (length - len(lam))
    return tuple(lam[k] + length - 1 - k for k in range(length))


def _from_beta(beta: Iterable[int]) -> tuple[int, ...]:
    beads = sorted(beta, reverse=True)
    ell = len(beads)
    parts = tuple(b - (ell - 1 - k) for k, b in enumerate(beads))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _rim_hooks(lam: tuple[int, ...], r: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (lam minus a rim hook of size r, sign (-1)^height)."""
    ell = len(lam)
    beta = _beta_set(lam, ell)
    occupied = set(beta)
    out = []
    for b in beta:
        if b - r >= 0 and (b - r) not in occupied:
            between = sum(1 for x in beta if b - r < x < b)
            new = (occupied - {b}) | {b - r}
            out.append((_from_beta(new), -1 if between % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    return sum(sign * _mn(sub, rest) for sub, sign in _rim_hooks(lam, r))


def sn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Value of the S_m irreducible indexed by ``lam`` on cycle type ``mu``."""
    lam, mu = tuple(lam), tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ShapeMismatchError(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


# class functions ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _class_index(d: int, n: int) -> dict[LabeledCycleType, int]:
    return {t: k for k, t in enumerate(enumerate_classes(d, n))}


@dataclass(frozen=True)
class ClassFunction:
    """Values on every class of (d, n), aligned with ``enumerate_classes(d, n)``."""

    d: int
    n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(_class_index(self.d, self.n)):
            raise ShapeMismatchError(f"expected one value per class of (d={self.d}, n={self.n})")

    @classmethod
    def from_function(cls, d: int, n: int, fn: Callable[[LabeledCycleType], object]) -> "ClassFunction":
        return cls(d, n, tuple(as_cyclotomic(fn(t), d) for t in enumerate_classes(d, n)))

    @classmethod
    def from_mapping(cls, d: int, n: int, values: Mapping) -> "ClassFunction":
        return cls(d, n, tuple(as_cyclotomic(values[t], d) for t in enumerate_classes(d, n)))

    @property
    def classes(self) -> list[LabeledCycleType]:
        return enumerate_classes(self.d, self.n)

    def __getitem__(self, t: LabeledCycleType):
        return self.values[_class_index(self.d, self.n)[t]]

    def items(self):
        return zip(self.classes, self.values)

    def _check(self, other: "ClassFunction"):
        if not isinstance(other, ClassFunction) or (self.d, self.n) != (other.d, other.n):
            raise ShapeMismatchError("class functions live on different groups")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.d, self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.d, self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return ClassFunction(self.d, self.n, tuple(-a for a in self.values))

    def __mul__(self, scalar):
        if isinstance(scalar, ClassFunction):
            self._check(scalar)
            return ClassFunction(self.d, self.n, tuple(a * b for a, b in zip(self.values, scalar.values)))
        return ClassFunction(self.d, self.n, tuple(a * scalar for a in self.values))

    __rmul__ = __mul__

    def dimension(self):
        return self.values[0] if self.n == 0 else self[_identity(self.d, self.n)]

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.d, self.n, tuple(a.conjugate() for a in self.values))

    def to_json(self) -> list[dict]:
        return [{"class": t.to_json(), "value": cyclotomic_to_json(v)} for t, v in self.items()]


def _identity(d: int, n: int) -> LabeledCycleType:
    return LabeledCycleType(d, ((1,) * n,) + ((),) * (d - 1))


def zero(d: int, n: int) -> ClassFunction:
    return ClassFunction.from_function(d, n, lambda t: 0)


def trivial(d: int, n: int) -> ClassFunction:
    return ClassFunction.from_function(d, n, lambda t: 1)


def regular(d: int, n: int) -> ClassFunction:
    ident = _identity(d, n)
    order = group_order(d, n)
    return ClassFunction.from_function(d, n, lambda t: order if t == ident else 0)


def sum_class_functions(fs: Iterable[ClassFunction], d: int, n: int) -> ClassFunction:
    total = zero(d, n)
    for f in fs:
        total = total + f
    return total


# irreducible characters --------------------------------------------------------


def _irr_value(lam: MultiPartition, t: LabeledCycleType) -> Cyclotomic:
    d = lam.d
    targets = [sum(p) for p in lam.parts]
    types = list(t.mult().items())
    counts = [0] * d  # coefficient of zeta^k

    def rec(pos: int, sizes: list[int], blocks: list[list[int]], weight: int, expo: int):
        if pos == len(types):
            if sizes != targets:
                return
            val = weight
            for j in range(d):
                if targets[j]:
                    val *= sn_character(lam.parts[j], tuple(sorted(blocks[j], reverse=True)))
                    if not val:
                        return
            counts[expo % d] += val
            return
        (i, c), m = types[pos]
        for split in _weak_compositions(m, d):
            ok = True
            for j, k in enumerate(split):
                if k and sizes[j] + i * k > targets[j]:
                    ok = False
                    break
            if not ok:
                continue
            w = factorial(m)
            e = expo
            new_sizes = list(sizes)
            new_blocks = [list(b) for b in blocks]
            for j, k in enumerate(split):
                w //= factorial(k)
                if k:
                    new_sizes[j] += i * k
                    new_blocks[j].extend([i] * k)
                    e += j * c * k
            rec(pos + 1, new_sizes, new_blocks, weight * w, e)

    rec(0, [0] * d, [[] for _ in range(d)], 1, 0)
    return Cyclotomic.from_exponent_counts(d, counts)


@lru_cache(maxsize=None)
def _weak_compositions(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    if k == 1:
        return ((m,),)
    return tuple((a,) + rest for a in range(m, -1, -1) for rest in _weak_compositions(m - a, k - 1))


@lru_cache(maxsize=None)
def irr_character(d: int, n: int, lam: MultiPartition) -> ClassFunction:
    """Character of the irreducible L(lam) of (Z/d) wr S_n."""
    if lam.d != d or lam.norm != n:
        raise ShapeMismatchError(f"{lam} is not a {d}-multipartition of {n}")
    return ClassFunction(d, n, tuple(_irr_value(lam, t) for t in enumerate_classes(d, n)))


def character_table(d: int, n: int) -> dict[MultiPartition, ClassFunction]:
    return {lam: irr_character(d, n, lam) for lam in enumerate_multipartitions(d, n)}


def inner_product(f: ClassFunction, g: ClassFunction):
    """<f, g> = |W_n|^-1 sum_w f(w) conj(g(w))."""
    f._check(g)
    total = Cyclotomic.rational(f.d, 0)
    for t, a, b in zip(f.classes, f.values, g.values):
        if a and b:
            total = total + a * b.conjugate() / centralizer_order(t)
    return total


# induction ---------------------------------------------------------------------


def _sub_multisets(t: LabeledCycleType, size: int):
    """Yield (A, B, multiplicity) with A of total length ``size``."""
    types = list(t.mult().items())
    d = t.d

    def rec(pos, remaining, chosen, weight):
        if pos == len(types):
            if remaining == 0:
                a = {k: v for k, v in chosen.items() if v}
                b = {k: m - chosen.get(k, 0) for k, m in types if m - chosen.get(k, 0)}
                yield LabeledCycleType.from_mult(d, a), LabeledCycleType.from_mult(d, b), weight
            return
        (i, c), m = types[pos]
        for k in range(min(m, remaining // i), -1, -1):
            chosen[(i, c)] = k
            yield from rec(pos + 1, remaining - i * k, chosen, weight * comb(m, k))
        chosen.pop((i, c), None)

    yield from rec(0, size, {}, 1)


def induce_product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Character of Ind from W_a x W_b to W_{a+b} of f (x) g."""
    if f.d != g.d:
        raise ShapeMismatchError("cannot induce across different d")
    d, a, b = f.d, f.n, g.n

    def value(t):
        total = Cyclotomic.rational(d, 0)
        for A, B, w in _sub_multisets(t, a):
            fa = f[A]
            if fa:
                gb = g[B]
                if gb:
                    total = total + fa * gb * w
        return total

    return ClassFunction.from_function(d, a + b, value)


def ind_fig_character(V: ClassFunction, n: int) -> ClassFunction:
    """n-th term of the induced FI_G-module generated by V on W_m."""
    if n < V.n:
        raise ValueError(f"n={n} is smaller than the generating degree {V.n}")
    return induce_product(V, trivial(V.d, n - V.n))


def free_module_character(d: int, m: int, n: int) -> ClassFunction:
    """Character of M(m)_n, the permutation module on Hom([m], [n])."""
    return ind_fig_character(regular(d, m), n)


# decomposition -----------------------------------------------------------------


def multiplicities(f: ClassFunction) -> dict[MultiPartition, object]:
    """Raw inner products <f, chi_lam> for every lam (no integrality check)."""
    return {lam: inner_product(f, chi) for lam, chi in character_table(f.d, f.n).items()}


def decompose(f: ClassFunction) -> dict[MultiPartition, int]:
    """Multiplicities of the irreducibles in f; raises if f is not a character."""
    raw = multiplicities(f)
    out: dict[MultiPartition, int] = {}
    for lam, m in raw.items():
        if not m.is_integer() or m.to_fraction() < 0:
            raise NotACharacterError(f"multiplicity of {lam} is {m}", raw)
        k = int(m.to_fraction())
        if k:
            out[lam] = k
    recon = sum_class_functions((irr_character(f.d, f.n, lam) * k for lam, k in out.items()), f.d, f.n)
    if recon != f:
        raise NotACharacterError("f is not in the span of the irreducible characters", raw)
    return out


def decomposition_to_json(dec: Mapping[MultiPartition, int]) -> list[dict]:
    return [{"lambda": lam.to_json(), "mult": k} for lam, k in sorted(dec.items(), key=lambda kv: _order_key(kv[0]))]


@lru_cache(maxsize=None)
def _mp_position(d: int, n: int) -> dict[MultiPartition, int]:
    return {lam: k for k, lam in enumerate(enumerate_multipartitions(d, n))}


def _order_key(lam: MultiPartition) -> int:
    return _mp_position(lam.d, lam.norm)[lam]


# explicit small modules --------------------------------------------------------


def _e_action(w: WreathElement, a: int) -> int:
    """Image of u_a = e_{1,a,2} under w in W_2, reduced to the i<j representative."""
    d = w.d
    i, j = w.sigma[0], w.sigma[1]
    new = (a - w.labels[0] + w.labels[1]) % d
    if i < j:
        return new
    return (-new) % d


def kG_module_character(d: int) -> ClassFunction:
    """Character of W_2 on k[Z/d], the span of the hyperplane classes e_{1,a,2}."""

    def value(t):
        w = class_representative(t)
        return sum(1 for a in range(d) if _e_action(w, a) == a)

    return ClassFunction.from_function(d, 2, value)


def brute_force_class_function(d: int, n: int, trace: Callable[[WreathElement], object]) -> ClassFunction:
    """Class function from a trace evaluated on one representative per class."""
    return ClassFunction.from_function(d, n, lambda t: trace(class_representative(t)))


def class_sizes(d: int, n: int) -> list[int]:
    return [class_size(t) for t in enumerate_classes(d, n)]


def is_integral_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) and Fraction(x).denominator == 1
