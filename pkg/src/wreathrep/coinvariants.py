"""Multigraded pieces of the diagonal coinvariant algebra of (Z/d) wr S_n.

Polynomials live in k[x_i^(s)] for points i < n and copies s < r. A
monomial is an exponent tuple indexed by s * n + i. The group acts by
x_i^(s) -> zeta^(c_i) x_sigma(i)^(s).
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .combinat import WreathElement, class_representative, group_order, iter_group
from .exactnum import Cyclotomic, zeta
from .linalg import EchelonBasis
from .wreathchar import ClassFunction

DEFAULT_GROUP_CAP = 10**4
CAP_ENV_VAR = "WREATHREP_GROUP_CAP"


MultiDegree = tuple  # (j_1, ..., j_r), compared componentwise


def as_multidegree(J: Sequence[int]) -> MultiDegree:
    J = tuple(int(j) for j in J)
    if not J or any(j < 0 for j in J):
        raise ValueError(f"multidegree must be a nonempty tuple of nonnegative integers, got {J}")
    return J


class ResourceError(RuntimeError):
    """The group is larger than the configured enumeration cap."""


def group_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    return int(raw) if raw else DEFAULT_GROUP_CAP


def _check_cap(d: int, n: int, cap: int | None):
    cap = group_cap() if cap is None else cap
    if group_order(d, n) > cap:
        raise ResourceError(f"|W_{n}| = {group_order(d, n)} for d={d} exceeds the cap {cap}")


def _degree_monomials(n: int, deg: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``deg`` in n variables, lex descending."""
    if n == 0:
        return [()] if deg == 0 else []
    out = []
    for first in range(deg, -1, -1):
        for rest in _degree_monomials(n - 1, deg - first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def monomials(n: int, J: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Monomials of multidegree J, as exponent tuples of length n * r."""
    blocks = [_degree_monomials(n, j) for j in J]
    return tuple(tuple(itertools.chain.from_iterable(combo)) for combo in itertools.product(*blocks))


@lru_cache(maxsize=None)
def _monomial_index(n: int, J: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return {m: k for k, m in enumerate(monomials(n, J))}


def group_action_on_monomials(w: WreathElement, J: Sequence[int]) -> list[tuple[int, int]]:
    """For each monomial of multidegree J: (index of its image, exponent k of the scalar zeta^k)."""
    J = as_multidegree(J)
    n, d = w.n, w.d
    index = _monomial_index(n, J)
    out = []
    for mono in monomials(n, J):
        image = [0] * len(mono)
        k = 0
        for pos, e in enumerate(mono):
            if e:
                s, i = divmod(pos, n)
                image[s * n + w.sigma[i]] = e
                k += w.labels[i] * e
        out.append((index[tuple(image)], k % d))
    return out


@dataclass
class PolySpace:
    """A subspace of the multidegree-J polynomials, as reduced rows over the monomial basis."""

    d: int
    n: int
    r: int
    J: tuple
    rows: list
    pivots: list

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def ambient_dimension(self) -> int:
        return len(monomials(self.n, self.J))


def _space(d, n, J, basis: EchelonBasis) -> PolySpace:
    return PolySpace(d, n, len(J), J, basis.rows, basis.pivots)


def act_on_vector(w: WreathElement, J: Sequence[int], vec: Sequence, action=None) -> list:
    """Image of a coordinate vector over the multidegree-J monomials."""
    action = action or group_action_on_monomials(w, J)
    out = [Cyclotomic.rational(w.d, 0)] * len(vec)
    for k, c in enumerate(vec):
        if c:
            img, e = action[k]
            out[img] = out[img] + c * zeta(w.d, e)
    return out


@lru_cache(maxsize=None)
def _group(d: int, n: int) -> tuple[WreathElement, ...]:
    return tuple(iter_group(d, n))


@lru_cache(maxsize=None)
def _invariants(d: int, n: int, J: tuple, cap: int) -> PolySpace:
    _check_cap(d, n, cap)
    monos = monomials(n, J)
    size = len(monos)
    group = _group(d, n)
    actions = [group_action_on_monomials(w, J) for w in group]
    basis = EchelonBasis(size)
    seen: set[int] = set()
    order = len(group)
    for k in range(size):
        if k in seen:
            continue
        counts: dict[int, list[int]] = {}
        for act in actions:
            img, e = act[k]
            seen.add(img)
            counts.setdefault(img, [0] * d)[e] += 1
        vec = [Cyclotomic.rational(d, 0)] * size
        for img, c in counts.items():
            vec[img] = Cyclotomic.from_exponent_counts(d, c) / order
        if any(vec):
            basis.add(vec)
    return _space(d, n, J, basis)


def invariant_subspace(d: int, n: int, J: Sequence[int], cap: int | None = None) -> PolySpace:
    """W_n-invariants of multidegree J, via the Reynolds average."""
    return _invariants(d, n, as_multidegree(J), group_cap() if cap is None else cap)


@lru_cache(maxsize=None)
def _ideal(d: int, n: int, J: tuple, cap: int) -> PolySpace:
    size = len(monomials(n, J))
    basis = EchelonBasis(size)
    if not any(J):
        return _space(d, n, J, basis)
    _check_cap(d, n, cap)
    for row in _invariants(d, n, J, cap).rows:
        basis.add(row)
    # I_J = Inv_J + sum_s x^(s) * I_{J - e_s}
    index = _monomial_index(n, J)
    for s, js in enumerate(J):
        if not js:
            continue
        lower = J[:s] + (js - 1,) + J[s + 1:]
        lower_space = _ideal(d, n, lower, cap)
        lower_monos = monomials(n, lower)
        for row in lower_space.rows:
            for i in range(n):
                vec = [Cyclotomic.rational(d, 0)] * size
                for k, c in enumerate(row):
                    if c:
                        m = list(lower_monos[k])
                        m[s * n + i] += 1
                        vec[index[tuple(m)]] = c
                basis.add(vec)
                if len(basis) == size:
                    return _space(d, n, J, basis)
    return _space(d, n, J, basis)


def ideal_subspace(d: int, n: int, J: Sequence[int], cap: int | None = None) -> PolySpace:
    """Multidegree-J part of the ideal generated by positive-degree invariants."""
    return _ideal(d, n, as_multidegree(J), group_cap() if cap is None else cap)


def _trace_on_space(w: WreathElement, space: PolySpace) -> Cyclotomic:
    action = group_action_on_monomials(w, space.J)
    total = Cyclotomic.rational(w.d, 0)
    for row, p in zip(space.rows, space.pivots):
        # coordinates in a reduced basis are read off at the pivots
        acc = Cyclotomic.rational(w.d, 0)
        for k, c in enumerate(row):
            if c:
                img, e = action[k]
                if img == p:
                    acc = acc + c * zeta(w.d, e)
        total = total + acc
    return total


def _trace_on_monomials(w: WreathElement, J: tuple) -> Cyclotomic:
    counts = [0] * w.d
    for k, (img, e) in enumerate(group_action_on_monomials(w, J)):
        if img == k:
            counts[e] += 1
    return Cyclotomic.from_exponent_counts(w.d, counts)


@lru_cache(maxsize=None)
def _coinvariant_character(d: int, n: int, J: tuple, cap: int) -> ClassFunction:
    ideal = _ideal(d, n, J, cap)

    def value(t):
        w = class_representative(t)
        return _trace_on_monomials(w, J) - _trace_on_space(w, ideal)

    return ClassFunction.from_function(d, n, value)


def coinvariant_character(d: int, n: int, J: Sequence[int], cap: int | None = None) -> ClassFunction:
    """Character of W_n on the multidegree-J piece of the coinvariant algebra."""
    return _coinvariant_character(d, n, as_multidegree(J), group_cap() if cap is None else cap)


def coinvariant_dimension(d: int, n: int, J: Sequence[int], cap: int | None = None) -> int:
    J = as_multidegree(J)
    return len(monomials(n, J)) - ideal_subspace(d, n, J, cap).dimension


def top_degree(d: int, n: int) -> int:
    """Degree of the top piece of the r = 1 coinvariant algebra: sum of (d i - 1)."""
    return sum(d * i - 1 for i in range(1, n + 1))


def hilbert_series(d: int, n: int, cap: int | None = None) -> list[int]:
    """Graded dimensions of the r = 1 coinvariant algebra, degree 0 upward."""
    out = [coinvariant_dimension(d, n, (j,), cap) for j in range(top_degree(d, n) + 2)]
    while out and out[-1] == 0:
        out.pop()
    return out


def multidegrees(r: int, max_total: int) -> list[tuple[int, ...]]:
    """All r-tuples with total degree <= max_total, graded then lex."""
    out = [J for J in itertools.product(range(max_total + 1), repeat=r) if sum(J) <= max_total]
    return sorted(out, key=lambda J: (sum(J), tuple(-x for x in J)))
