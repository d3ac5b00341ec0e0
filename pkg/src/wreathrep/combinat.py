"""Partitions, multipartitions and the conjugacy classes of (Z/d) wr S_n.

Conventions used throughout the package:

* a partition is a weakly decreasing tuple of positive ints;
* a :class:`MultiPartition` holds one partition per character chi_j of Z/d,
  where chi_j(c) = zeta_d^(j*c) and index 0 is the trivial character;
* a :class:`LabeledCycleType` holds one partition per label c in Z/d: the
  lengths of the cycles whose label sum is c. The label-major layout makes
  classes and multipartitions line up one-to-one;
* a :class:`WreathElement` stores a 0-based permutation in one-line form and
  an additive label in Z/d for every point.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

Partition = tuple


class RangeError(ValueError):
    """A padding or size precondition does not hold."""


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, bound: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n in reverse-lexicographic order.

    >>> enumerate_partitions(3)
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_partitions_bounded(n, n))


def is_partition(parts) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into k parts, first part largest first."""
    if k == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _tuples_of_partitions(d: int, n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    out = []
    for sizes in _compositions(n, d):
        for combo in itertools.product(*(_partitions_bounded(s, s) for s in sizes)):
            out.append(tuple(combo))
    return tuple(out)


@dataclass(frozen=True, order=True)
class MultiPartition:
    """A d-tuple of partitions; slot j belongs to the character chi_j."""

    d: int
    parts: tuple

    def __post_init__(self):
        if len(self.parts) != self.d:
            raise ValueError(f"expected {self.d} partitions, got {len(self.parts)}")
        for p in self.parts:
            if not is_partition(p):
                raise ValueError(f"{p!r} is not a partition")

    @classmethod
    def from_slots(cls, d: int, slots: dict[int, tuple[int, ...]]) -> "MultiPartition":
        """Build from a sparse map {character index: partition}."""
        parts = [()] * d
        for j, p in slots.items():
            parts[j % d] = tuple(p)
        return cls(d, tuple(parts))

    @property
    def norm(self) -> int:
        return sum(sum(p) for p in self.parts)

    def __str__(self):
        return "(" + " | ".join(",".join(map(str, p)) if p else "-" for p in self.parts) + ")"

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


def enumerate_multipartitions(d: int, n: int) -> list[MultiPartition]:
    """All d-multipartitions of total size n.

    Ordered by the size vector (slot 0 largest first), then reverse-lex
    within each slot.
    """
    if d < 1 or n < 0:
        raise ValueError(f"need d >= 1 and n >= 0, got d={d}, n={n}")
    return [MultiPartition(d, t) for t in _tuples_of_partitions(d, n)]


def pad(lam: MultiPartition, n: int) -> MultiPartition:
    """The padded label lam[n]: prepend n - |lam| to the trivial slot."""
    first = lam.parts[0][0] if lam.parts[0] else 0
    if n < lam.norm + first:
        raise RangeError(f"cannot pad {lam} to n={n}: need n >= {lam.norm + first}")
    head = n - lam.norm
    slot0 = ((head,) if head else ()) + lam.parts[0]
    return MultiPartition(lam.d, (slot0,) + lam.parts[1:])


def unpad(lam: MultiPartition) -> MultiPartition:
    """Inverse of :func:`pad`: drop the first part of the trivial slot."""
    return MultiPartition(lam.d, (lam.parts[0][1:],) + lam.parts[1:])


@dataclass(frozen=True, order=True)
class LabeledCycleType:
    """Conjugacy class of (Z/d) wr S_n; ``parts[c]`` lists the cycle lengths with label c."""

    d: int
    parts: tuple

    def __post_init__(self):
        if len(self.parts) != self.d:
            raise ValueError(f"expected {self.d} label slots, got {len(self.parts)}")

    @property
    def n(self) -> int:
        return sum(sum(p) for p in self.parts)

    @classmethod
    def from_mult(cls, d: int, mult: dict[tuple[int, int], int]) -> "LabeledCycleType":
        slots: list[list[int]] = [[] for _ in range(d)]
        for (i, c), m in mult.items():
            if m < 0 or i < 1:
                raise ValueError(f"bad cycle entry {(i, c)}: {m}")
            slots[c % d].extend([i] * m)
        return cls(d, tuple(tuple(sorted(s, reverse=True)) for s in slots))

    def mult(self) -> dict[tuple[int, int], int]:
        """Map (length, label) -> multiplicity, zero entries omitted."""
        out: dict[tuple[int, int], int] = {}
        for c, p in enumerate(self.parts):
            for i, m in Counter(p).items():
                out[(i, c)] = m
        return dict(sorted(out.items()))

    def count(self, i: int, c: int) -> int:
        return self.parts[c % self.d].count(i)

    def cycles(self) -> list[tuple[int, int]]:
        """Flat list of (length, label), sorted."""
        return sorted((i, c) for c, p in enumerate(self.parts) for i in p)

    def to_json(self) -> list[dict]:
        return [{"i": i, "c": c, "m": m} for (i, c), m in self.mult().items()]

    def __str__(self):
        if not any(self.parts):
            return "{}"
        return "{" + ", ".join(f"{i}^{c}" + (f"x{m}" if m > 1 else "") for (i, c), m in self.mult().items()) + "}"


def enumerate_classes(d: int, n: int) -> list[LabeledCycleType]:
    """All labeled cycle types of (d, n), label-major order."""
    if d < 1 or n < 0:
        raise ValueError(f"need d >= 1 and n >= 0, got d={d}, n={n}")
    return [LabeledCycleType(d, t) for t in _tuples_of_partitions(d, n)]


def identity_class(d: int, n: int) -> LabeledCycleType:
    return LabeledCycleType(d, ((1,) * n,) + ((),) * (d - 1))


def centralizer_order(t: LabeledCycleType) -> int:
    """Order of the centralizer of any element of class t."""
    z = 1
    for (i, _c), m in t.mult().items():
        z *= factorial(m) * (i * t.d) ** m
    return z


def group_order(d: int, n: int) -> int:
    return d**n * factorial(n)


def class_size(t: LabeledCycleType) -> int:
    return group_order(t.d, t.n) // centralizer_order(t)


# wreath elements ---------------------------------------------------------------


@dataclass(frozen=True)
class WreathElement:
    """(sigma, labels) in (Z/d) wr S_n.

    ``sigma`` is 0-based one-line notation; ``labels[i]`` is the Z/d label on
    point i. Composition follows G-maps: applying (a, g) then (b, h) gives
    (b.a, g_i + h_{a(i)}).
    """

    d: int
    sigma: tuple
    labels: tuple

    def __post_init__(self):
        n = len(self.sigma)
        if len(self.labels) != n or sorted(self.sigma) != list(range(n)):
            raise ValueError("sigma must be a permutation with one label per point")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def identity(cls, d: int, n: int) -> "WreathElement":
        return cls(d, tuple(range(n)), (0,) * n)


def compose(w1: WreathElement, w2: WreathElement) -> WreathElement:
    """w1 after w2: the G-map composite of applying w2 first, then w1."""
    if w1.d != w2.d or w1.n != w2.n:
        raise ValueError("elements belong to different groups")
    a, g = w2.sigma, w2.labels
    b, h = w1.sigma, w1.labels
    d = w1.d
    return WreathElement(
        d,
        tuple(b[a[i]] for i in range(w1.n)),
        tuple((g[i] + h[a[i]]) % d for i in range(w1.n)),
    )


def inverse(w: WreathElement) -> WreathElement:
    n, d = w.n, w.d
    inv = [0] * n
    labels = [0] * n
    for i, j in enumerate(w.sigma):
        inv[j] = i
        labels[j] = (-w.labels[i]) % d
    return WreathElement(d, tuple(inv), tuple(labels))


def permutation_cycles(sigma) -> list[list[int]]:
    seen = [False] * len(sigma)
    cycles = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = sigma[i]
        cycles.append(cyc)
    return cycles


def cycle_type(w: WreathElement) -> LabeledCycleType:
    """Labeled cycle type: each cycle carries the sum of its labels mod d."""
    mult: Counter = Counter()
    for cyc in permutation_cycles(w.sigma):
        mult[(len(cyc), sum(w.labels[i] for i in cyc) % w.d)] += 1
    return LabeledCycleType.from_mult(w.d, dict(mult))


def class_representative(t: LabeledCycleType) -> WreathElement:
    """A canonical element of class t.

    Cycles are laid out on consecutive points in the order of
    ``t.cycles()``; each cycle's label sits on its first point.
    """
    sigma: list[int] = []
    labels: list[int] = []
    pos = 0
    for i, c in t.cycles():
        sigma.extend(pos + (k + 1) % i for k in range(i))
        labels.extend([c] + [0] * (i - 1))
        pos += i
    return WreathElement(t.d, tuple(sigma), tuple(labels))


def iter_group(d: int, n: int) -> Iterator[WreathElement]:
    """Every element of (Z/d) wr S_n; brute force, for oracles."""
    for sigma in itertools.permutations(range(n)):
        for labels in itertools.product(range(d), repeat=n):
            yield WreathElement(d, sigma, labels)


def multipartition_count(d: int, n: int) -> int:
    return len(_tuples_of_partitions(d, n))
