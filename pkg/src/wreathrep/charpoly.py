"""Character polynomials in the labeled cycle-counting variables X_i^c.

A monomial is a sorted tuple of ((i, c), e) pairs; its degree is the sum of
i * e. Polynomials keep only nonzero coefficients.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .combinat import LabeledCycleType, enumerate_classes
from .exactnum import Cyclotomic, as_cyclotomic, cyclotomic_to_json, format_cyclotomic, zeta
from .linalg import rref
from .wreathchar import ClassFunction, centralizer_order

Monomial = tuple  # tuple of ((i, c), exponent), sorted


class InconsistentDataError(ValueError):
    """No polynomial of the requested degree matches the data."""


class UnderdeterminedError(ValueError):
    """The data do not pin down a unique polynomial."""


class InstabilityError(ValueError):
    """Inner products changed across the requested range of n."""

    def __init__(self, message: str, values: Mapping | None = None):
        super().__init__(message)
        self.values = dict(values or {})


def monomial_degree(mono: Monomial) -> int:
    return sum(i * e for (i, _c), e in mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    acc = dict(a)
    for var, e in b:
        acc[var] = acc.get(var, 0) + e
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class CharacterPolynomial:
    d: int
    terms: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mono, c in self.terms.items():
            c = as_cyclotomic(c, self.d)
            if c:
                clean[tuple(sorted(mono))] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    # constructors --------------------------------------------------------
    @classmethod
    def constant(cls, d: int, value) -> "CharacterPolynomial":
        return cls(d, {(): value})

    @classmethod
    def variable(cls, d: int, i: int, c: int) -> "CharacterPolynomial":
        return cls(d, {(((i, c % d), 1),): 1})

    @classmethod
    def binomial(cls, d: int, i: int, c: int, k: int) -> "CharacterPolynomial":
        """binom(X_i^c, k) expanded into powers of X_i^c."""
        x = cls.variable(d, i, c)
        out = cls.constant(d, 1)
        for r in range(k):
            out = out * (x - r)
        return out * Fraction(1, factorial(k))

    # arithmetic ----------------------------------------------------------
    def _lift(self, other) -> "CharacterPolynomial":
        if isinstance(other, CharacterPolynomial):
            if other.d != self.d:
                raise ValueError("character polynomials for different d")
            return other
        return CharacterPolynomial.constant(self.d, other)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc[m] + c if m in acc else c
        return CharacterPolynomial(self.d, acc)

    __radd__ = __add__

    def __neg__(self):
        return CharacterPolynomial(self.d, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc[m] + c1 * c2 if m in acc else c1 * c2
        return CharacterPolynomial(self.d, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CharacterPolynomial):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, tuple(self.terms.items())))

    @property
    def degree(self) -> int:
        """Largest monomial degree; -1 for the zero polynomial."""
        return max((monomial_degree(m) for m in self.terms), default=-1)

    def __call__(self, t: LabeledCycleType):
        return evaluate(self, t)

    def to_json(self) -> list[dict]:
        return [
            {"monomial": [{"i": i, "c": c, "e": e} for (i, c), e in m], "coeff": cyclotomic_to_json(v)}
            for m, v in self.terms.items()
        ]

    def __str__(self):
        return render(self)


def evaluate(P: CharacterPolynomial, t: LabeledCycleType):
    """Substitute X_i^c := number of cycles of length i with label c."""
    if t.d != P.d:
        raise ValueError("class and polynomial have different d")
    mult = t.mult()
    total = Cyclotomic.rational(P.d, 0)
    for mono, coeff in P.terms.items():
        v = 1
        for var, e in mono:
            v *= mult.get(var, 0) ** e
            if not v:
                break
        if v:
            total = total + coeff * v
    return total


def to_class_function(P: CharacterPolynomial, n: int) -> ClassFunction:
    return ClassFunction.from_function(P.d, n, lambda t: evaluate(P, t))


def render(P: CharacterPolynomial) -> str:
    if not P.terms:
        return "0"
    pieces = []
    for mono, c in P.terms.items():
        vars_ = "*".join(f"X{i}^{c_}" + (f"**{e}" if e > 1 else "") for (i, c_), e in mono)
        coeff = format_cyclotomic(c)
        if not vars_:
            pieces.append(coeff)
        elif coeff == "1":
            pieces.append(vars_)
        elif coeff == "-1":
            pieces.append("-" + vars_)
        elif " " in coeff:
            pieces.append(f"({coeff})*{vars_}")
        else:
            pieces.append(f"{coeff}*{vars_}")
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def from_induced(V: ClassFunction) -> CharacterPolynomial:
    """Character polynomial of the induced FI_G-module generated by V.

    Sum over classes mu of W_m of V(mu) times the product of
    binom(X_i^c, multiplicity of (i, c) in mu).
    """
    d = V.d
    total = CharacterPolynomial(d, {})
    cache: dict = {}
    for t, val in V.items():
        if not val:
            continue
        term = CharacterPolynomial.constant(d, val)
        for (i, c), k in t.mult().items():
            key = (i, c, k)
            if key not in cache:
                cache[key] = CharacterPolynomial.binomial(d, i, c, k)
            term = term * cache[key]
        total = total + term
    return total


def twisted_variable(d: int, j: int, i: int) -> CharacterPolynomial:
    """X_i^chi_j = sum_c chi_j(c) X_i^c with chi_j(c) = zeta_d^(j c)."""
    if not 0 <= j < d:
        raise ValueError(f"character index {j} out of range for d={d}")
    return CharacterPolynomial(d, {(((i, c), 1),): zeta(d, j * c) for c in range(d)})


def monomials_up_to(d: int, max_degree: int) -> list[Monomial]:
    """All monomials in X_i^c of degree at most ``max_degree``, graded order."""
    variables = [(i, c) for i in range(1, max_degree + 1) for c in range(d)]
    out: list[Monomial] = []

    def rec(pos: int, budget: int, acc: list):
        if pos == len(variables):
            out.append(tuple(acc))
            return
        i, c = variables[pos]
        for e in range(budget // i + 1):
            if e:
                acc.append(((i, c), e))
            rec(pos + 1, budget - i * e, acc)
            if e:
                acc.pop()

    rec(0, max_degree, [])
    return sorted(out, key=lambda m: (monomial_degree(m), m))


def fit(sequence: Sequence[tuple[int, ClassFunction]], max_degree: int) -> CharacterPolynomial:
    """The unique polynomial of degree <= max_degree matching every class function."""
    if len({n for n, _ in sequence}) < 2:
        raise ValueError("need class functions for at least two distinct n")
    ds = {f.d for _, f in sequence}
    if len(ds) != 1:
        raise ValueError("class functions have different d")
    d = ds.pop()
    monos = monomials_up_to(d, max_degree)
    rows = []
    rhs = []
    for _n, f in sequence:
        for t, v in f.items():
            mult = t.mult()
            row = []
            for mono in monos:
                x = 1
                for var, e in mono:
                    x *= mult.get(var, 0) ** e
                row.append(Fraction(x))
            rows.append(row)
            rhs.append(as_cyclotomic(v, d))
    width = len(monos)
    # solve one rational system per power-basis coordinate of the right side
    phi = len(rhs[0].coeffs) if rhs else 1
    aug = [row + [v.coeffs[k] for k in range(phi)] for row, v in zip(rows, rhs)]
    red, pivots = rref(aug, ncols=width)
    if len(pivots) < width:
        raise UnderdeterminedError(
            f"data determine only {len(pivots)} of {width} coefficients; supply a wider range of n"
        )
    for r in red[len(pivots):]:
        if any(r[width:]):
            raise InconsistentDataError(f"no polynomial of degree <= {max_degree} fits the data")
    terms = {}
    for row_idx, col in enumerate(pivots):
        terms[monos[col]] = Cyclotomic(d, red[row_idx][width:], _reduced=True)
    return CharacterPolynomial(d, terms)


def stable_inner_product(
    P: CharacterPolynomial,
    family: Callable[[int], ClassFunction],
    n_start: int,
    n_stop: int,
):
    """<P, family(n)> for n in [n_start, n_stop]; returns the common value."""
    if n_stop < n_start + 2:
        raise ValueError("need at least three values of n")
    values = {}
    for n in range(n_start, n_stop + 1):
        f = family(n)
        total = Cyclotomic.rational(P.d, 0)
        for t, v in f.items():
            p = evaluate(P, t)
            if p and v:
                total = total + p * v.conjugate() / centralizer_order(t)
        values[n] = total
    distinct = set(values.values())
    if len(distinct) != 1:
        raise InstabilityError(
            "inner products differ across n: " + ", ".join(f"n={n}: {v}" for n, v in values.items()),
            values,
        )
    return values[n_start]
