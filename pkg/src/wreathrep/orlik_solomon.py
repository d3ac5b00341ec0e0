"""Orlik-Solomon algebras of central arrangements over Q(zeta_d).

Hyperplanes carry a symbolic name so the monomial group can act on them:
``("z", i)`` is {v_i = 0} and ``("e", i, a, j)`` with i < j is
{v_i = zeta^a v_j}. Indices in names are 0-based; printed symbols are 1-based.
"""
from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .combinat import WreathElement, class_representative, enumerate_classes
from .exactnum import Cyclotomic, as_cyclotomic, cyclotomic_to_json, zeta
from .linalg import EchelonBasis, rank as matrix_rank
from .wreathchar import ClassFunction

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class ArrangementShapeError(ValueError):
    """The operation needs a monomial (or braid) arrangement."""


def _normalize(coeffs: Sequence, d: int) -> tuple:
    coeffs = tuple(as_cyclotomic(c, d) for c in coeffs)
    lead = next((c for c in coeffs if c), None)
    if lead is None:
        raise ValueError("the zero form does not define a hyperplane")
    inv = lead.inverse()
    return tuple(c * inv for c in coeffs)


@dataclass(frozen=True)
class Hyperplane:
    """A linear hyperplane, stored as its form scaled so the first nonzero entry is 1."""

    coeffs: tuple

    @classmethod
    def from_form(cls, coeffs: Sequence, d: int) -> "Hyperplane":
        return cls(_normalize(coeffs, d))

    @property
    def support(self) -> int:
        return sum(1 << k for k, c in enumerate(self.coeffs) if c)


def sign_sort(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort, returning (sign of the sorting permutation, sorted tuple); sign 0 on repeats."""
    arr = list(seq)
    sign = 1
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(arr, arr[1:]):
        if a == b:
            return 0, tuple(arr)
    return sign, tuple(arr)


class Arrangement:
    """An ordered central arrangement with lazily computed matroid data."""

    def __init__(self, d: int, n: int, hyperplanes: Sequence[Hyperplane], names: Sequence | None = None,
                 kind: str = "custom"):
        self.d = d
        self.n = n
        self.hyperplanes = tuple(hyperplanes)
        if len(set(self.hyperplanes)) != len(self.hyperplanes):
            raise ValueError("hyperplanes must be distinct")
        self.names = tuple(names) if names is not None else tuple(("H", k) for k in range(len(self.hyperplanes)))
        self.kind = kind
        self._index = {name: k for k, name in enumerate(self.names)}
        self._circuits: dict[int, list[tuple[int, ...]]] = {}
        self._circuit_bound = 1
        self._broken_by_max: dict[int, list[tuple[frozenset, tuple[int, ...]]]] = {}
        self._nbc: dict[int, list[tuple[int, ...]]] = {}
        self._reduced: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
        self._rank: int | None = None

    def __len__(self):
        return len(self.hyperplanes)

    def index(self, name) -> int:
        return self._index[name]

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = matrix_rank([list(h.coeffs) for h in self.hyperplanes]) if self.hyperplanes else 0
        return self._rank

    def reordered(self, order: Sequence[int]) -> "Arrangement":
        """Same hyperplanes listed in the order ``order`` (a permutation of indices)."""
        if sorted(order) != list(range(len(self))):
            raise ValueError("order must be a permutation of the hyperplane indices")
        return Arrangement(self.d, self.n, [self.hyperplanes[k] for k in order],
                           [self.names[k] for k in order], self.kind)

    def symbol(self, k: int) -> str:
        name = self.names[k]
        if name[0] == "z":
            return f"z_{name[1] + 1}"
        if name[0] == "e":
            return f"e_{{{name[1] + 1},{name[2]},{name[3] + 1}}}"
        return f"H_{name[1]}"

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "kind": self.kind,
            "order": "list position",
            "hyperplanes": [
                {"name": self.symbol(k), "form": [cyclotomic_to_json(c) for c in h.coeffs]}
                for k, h in enumerate(self.hyperplanes)
            ],
        }

    # matroid data ----------------------------------------------------------
    def circuits(self, max_size: int | None = None) -> list[tuple[int, ...]]:
        """Minimal dependent index sets of size <= max_size (default: all)."""
        top = self.rank + 1 if max_size is None else min(max_size, self.rank + 1)
        if top > self._circuit_bound:
            self._compute_circuits(top)
        return [c for s in sorted(self._circuits) if s <= top for c in self._circuits[s]]

    def _compute_circuits(self, top: int):
        n_h = len(self.hyperplanes)
        forms = [list(h.coeffs) for h in self.hyperplanes]
        supports = [h.support for h in self.hyperplanes]
        zero = Cyclotomic.rational(self.d, 0)
        one = Cyclotomic.rational(self.d, 1)
        found: dict[int, list[tuple[int, ...]]] = {s: [] for s in range(2, top + 1)}
        # an independent set is stored with rows [form | combination of its members]
        level = []
        for k in range(n_h):
            basis = EchelonBasis(self.n + 1)
            basis.add(forms[k] + [one])
            level.append(((k,), basis, supports[k]))
        for size in range(2, top + 1):
            nxt = []
            keep = size < top
            for members, basis, supp in level:
                width = self.n + len(members) + 1
                for c in range(members[-1] + 1, n_h):
                    if supports[c] & ~supp:
                        if keep:
                            nxt.append(self._extend(members, basis, forms[c], c, supp | supports[c]))
                        continue
                    v = basis.reduce(forms[c] + [zero] * len(members))
                    if any(v[: self.n]):
                        if keep:
                            nxt.append(self._extend(members, basis, forms[c], c, supp | supports[c]))
                        continue
                    if all(v[self.n:self.n + len(members)]):
                        found[size].append(members + (c,))
            level = nxt
        for s in range(self._circuit_bound + 1, top + 1):
            self._circuits[s] = found[s]
        self._circuit_bound = top
        self._broken_by_max = {}
        for s in sorted(self._circuits):
            for circ in self._circuits[s]:
                broken = circ[1:]
                self._broken_by_max.setdefault(broken[-1], []).append((frozenset(broken[:-1]), circ))

    def _extend(self, members, basis, form, c, supp):
        nb = EchelonBasis(self.n + len(members) + 1)
        zero = Cyclotomic.rational(self.d, 0)
        one = Cyclotomic.rational(self.d, 1)
        for row in basis.rows:
            nb.rows.append(row[: self.n] + row[self.n:] + [zero])
        nb.pivots = list(basis.pivots)
        nb.add(form + [zero] * len(members) + [one])
        return members + (c,), nb, supp

    def _broken_circuit_in(self, subset: tuple[int, ...]):
        s = set(subset)
        for x in subset:
            for rest, circ in self._broken_by_max.get(x, ()):
                if rest <= s:
                    return circ
        return None

    def nbc_basis(self, k: int) -> list[tuple[int, ...]]:
        """k-subsets containing no broken circuit, in lexicographic order."""
        if k < 0 or k > self.rank:
            raise ValueError(f"degree {k} outside 0..{self.rank}")
        if k not in self._nbc:
            self.circuits(k + 1)
            out: list[tuple[int, ...]] = []

            def rec(prefix: list[int], pset: set[int]):
                if len(prefix) == k:
                    out.append(tuple(prefix))
                    return
                start = prefix[-1] + 1 if prefix else 0
                for x in range(start, len(self.hyperplanes) - (k - len(prefix) - 1)):
                    if any(rest <= pset for rest, _ in self._broken_by_max.get(x, ())):
                        continue
                    prefix.append(x)
                    pset.add(x)
                    rec(prefix, pset)
                    prefix.pop()
                    pset.discard(x)

            rec([], set())
            self._nbc[k] = out
        return self._nbc[k]

    def reduce_monomial(self, subset: tuple[int, ...]) -> Mapping[tuple[int, ...], int]:
        """NBC expansion of e_S for a strictly increasing index tuple S (integer coefficients)."""
        hit = self._reduced.get(subset)
        if hit is not None:
            return hit
        if self._circuit_bound < len(subset) + 1:
            self.circuits(len(subset) + 1)
        circ = self._broken_circuit_in(subset)
        if circ is None:
            result = {subset: 1}
        else:
            broken = circ[1:]
            rest = tuple(x for x in subset if x not in broken)
            # e_S = sign * e_broken ^ e_rest
            sign0, _ = sign_sort(broken + rest)
            acc: dict[tuple[int, ...], int] = {}
            # e_broken = sum_{l>=1} (-1)^(l+1) e_{C minus c_l}
            for l in range(1, len(circ)):
                term = circ[:l] + circ[l + 1:]
                s, srt = sign_sort(term + rest)
                if not s:
                    continue
                coeff = sign0 * s * (1 if l % 2 else -1)
                for mono, v in self.reduce_monomial(srt).items():
                    acc[mono] = acc.get(mono, 0) + coeff * v
            result = {m: v for m, v in acc.items() if v}
        self._reduced[subset] = result
        return result

    def poincare_polynomial(self) -> list[int]:
        return [len(self.nbc_basis(k)) for k in range(self.rank + 1)]


@dataclass
class OSElement:
    """Homogeneous element of degree k: coordinates on sorted k-subsets of hyperplane indices."""

    degree: int
    coords: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, OSElement):
            return NotImplemented
        return self.degree == other.degree and {k: v for k, v in self.coords.items() if v} == {
            k: v for k, v in other.coords.items() if v
        }

    @classmethod
    def monomial(cls, indices: Sequence[int], coeff=1) -> "OSElement":
        s, srt = sign_sort(indices)
        return cls(len(indices), {srt: coeff * s} if s else {})

    def __add__(self, other):
        acc = dict(self.coords)
        for k, v in other.coords.items():
            acc[k] = acc.get(k, 0) + v
        return OSElement(self.degree, {k: v for k, v in acc.items() if v})

    def __mul__(self, scalar):
        return OSElement(self.degree, {k: v * scalar for k, v in self.coords.items() if v * scalar})

    __rmul__ = __mul__


def straighten(arr: Arrangement, x: OSElement) -> OSElement:
    """Rewrite x onto the NBC basis using the relations of dependent sets."""
    acc: dict = {}
    for subset, coeff in x.coords.items():
        s, srt = sign_sort(subset)
        if not s or not coeff:
            continue
        for mono, v in arr.reduce_monomial(srt).items():
            acc[mono] = acc.get(mono, 0) + coeff * s * v
    return OSElement(x.degree, {k: v for k, v in acc.items() if v})


def circuits(arr: Arrangement, max_size: int | None = None) -> list[tuple[int, ...]]:
    return arr.circuits(max_size)


def nbc_basis(arr: Arrangement, k: int) -> list[tuple[int, ...]]:
    return arr.nbc_basis(k)


def poincare_polynomial(arr: Arrangement) -> list[int]:
    """Coefficients of sum_k dim OS^k t^k, lowest degree first."""
    return arr.poincare_polynomial()


# constructors ------------------------------------------------------------------


@lru_cache(maxsize=None)
def monomial_arrangement(d: int, n: int) -> Arrangement:
    """The full monomial arrangement: v_i = 0 and v_i = zeta^a v_j.

    Order: z_1..z_n, then e_{i,a,j} lexicographically by (i, j, a).
    """
    if d < 1 or n < 1:
        raise ValueError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    zero, one = Cyclotomic.rational(d, 0), Cyclotomic.rational(d, 1)
    hyperplanes, names = [], []
    for i in range(n):
        form = [zero] * n
        form[i] = one
        hyperplanes.append(Hyperplane.from_form(form, d))
        names.append(("z", i))
    for i in range(n):
        for j in range(i + 1, n):
            for a in range(d):
                form = [zero] * n
                form[i] = one
                form[j] = -zeta(d, a)
                hyperplanes.append(Hyperplane.from_form(form, d))
                names.append(("e", i, a, j))
    return Arrangement(d, n, hyperplanes, names, kind="monomial")


@lru_cache(maxsize=None)
def braid_arrangement(n: int) -> Arrangement:
    """Hyperplanes z_i = z_j in C^n, ordered lexicographically by (i, j)."""
    if n < 2:
        raise ValueError("the braid arrangement needs n >= 2")
    hyperplanes, names = [], []
    for i in range(n):
        for j in range(i + 1, n):
            form = [0] * n
            form[i], form[j] = 1, -1
            hyperplanes.append(Hyperplane.from_form(form, 1))
            names.append(("e", i, 0, j))
    return Arrangement(1, n, hyperplanes, names, kind="braid")


# group action ------------------------------------------------------------------


def _act_on_name(name, w: WreathElement):
    sigma, b, d = w.sigma, w.labels, w.d
    if name[0] == "z":
        return ("z", sigma[name[1]])
    _, i, a, j = name
    si, sj = sigma[i], sigma[j]
    new = (a - b[i] + b[j]) % d
    if si < sj:
        return ("e", si, new, sj)
    return ("e", sj, (-new) % d, si)


def wreath_action_on_hyperplanes(arr: Arrangement, w: WreathElement) -> tuple[int, ...]:
    """Permutation of hyperplane indices induced by w.

    z_i -> z_sigma(i); e_{i,a,j} -> e_{sigma(i), a - b_i + b_j, sigma(j)},
    rewritten with i < j via e_{i,a,j} = e_{j,-a,i}.
    """
    if arr.kind not in ("monomial", "braid"):
        raise ArrangementShapeError("the wreath action is defined only on monomial or braid arrangements")
    if w.n != arr.n or (arr.kind == "monomial" and w.d != arr.d) or (arr.kind == "braid" and w.d != 1):
        raise ArrangementShapeError("group element does not match the arrangement")
    return tuple(arr.index(_act_on_name(name, w)) for name in arr.names)


def trace_on_os(arr: Arrangement, w: WreathElement, k: int) -> int:
    perm = wreath_action_on_hyperplanes(arr, w)
    total = 0
    for mono in arr.nbc_basis(k):
        s, srt = sign_sort([perm[x] for x in mono])
        if not s:
            continue
        v = arr.reduce_monomial(srt).get(mono)
        if v:
            total += s * v
    return total


def arrangement_character(arr: Arrangement, k: int) -> ClassFunction:
    """Character of the group on degree k of the OS algebra of ``arr``."""
    return ClassFunction.from_function(arr.d, arr.n, lambda t: trace_on_os(arr, class_representative(t), k))


@lru_cache(maxsize=None)
def equivariant_character(d: int, n: int, k: int) -> ClassFunction:
    """Character of W_n on H^k of the complement of the monomial arrangement."""
    arr = monomial_arrangement(d, n)
    if k > arr.rank:
        raise ValueError(f"degree {k} exceeds the rank {arr.rank}")
    return arrangement_character(arr, k)


# independent oracle -------------------------------------------------------------


def _restrict(forms: frozenset, h: tuple, d: int) -> frozenset:
    p = next(k for k, c in enumerate(h) if c)
    out = set()
    for f in forms:
        fp = f[p]
        new = [f[k] - fp * h[k] for k in range(len(h)) if k != p]
        out.add(_normalize(new, d))
    return frozenset(out)


def _poly_add(a: list[int], b: list[int], shift: int = 0) -> list[int]:
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for k, v in enumerate(b):
        out[k + shift] += v
    return out


def poincare_by_deletion_restriction(arr: Arrangement) -> list[int]:
    """Poincare polynomial via pi(A) = pi(A - H) + t pi(A^H); independent of NBC."""
    d = arr.d
    memo: dict = {}

    def key(f):
        return tuple(c.coeffs for c in f)

    def pi(forms: frozenset, dim: int) -> list[int]:
        if not forms:
            return [1]
        if dim == 1:
            return [1, 1]
        if dim == 2:
            m = len(forms)
            return [1, 1] if m == 1 else [1, m, m - 1]
        hit = memo.get(forms)
        if hit is not None:
            return hit
        h = max(forms, key=key)
        deleted = forms - {h}
        res = _poly_add(pi(deleted, dim), pi(_restrict(deleted, h, d), dim - 1), 1)
        memo[forms] = res
        return res

    out = pi(frozenset(h.coeffs for h in arr.hyperplanes), arr.n)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
