"""Headline computations: cohomology of the pure monomial braid group P(d,1,n),
stability reports, the Gauss-sum series and the Fouxe-Rabinovitch module for G = Z.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from .charpoly import stable_inner_product, twisted_variable
from .combinat import (
    LabeledCycleType,
    MultiPartition,
    RangeError,
    WreathElement,
    class_representative,
    pad,
    unpad,
)
from .exactnum import Cyclotomic, cyclotomic_to_json, format_cyclotomic
from .orlik_solomon import equivariant_character, sign_sort
from .wreathchar import (
    ClassFunction,
    decompose,
    decomposition_to_json,
    ind_fig_character,
    irr_character,
    sum_class_functions,
    trivial,
    zero,
)


# induced displays ----------------------------------------------------------------


@dataclass(frozen=True)
class DisplayTerm:
    """coeff copies of Ind^{FI_G}(L(label)), generated in degree |label|."""

    label: MultiPartition
    coeff: int = 1

    @property
    def generated_in(self) -> int:
        return self.label.norm

    def character(self, n: int) -> ClassFunction:
        m = self.generated_in
        if n < m:
            return zero(self.label.d, n)
        return ind_fig_character(irr_character(self.label.d, m, self.label), n) * self.coeff

    def to_json(self, n: int | None = None) -> dict:
        out = {"label": self.label.to_json(), "coeff": self.coeff, "generated_in": self.generated_in}
        if n is not None:
            out["dimension"] = _dim(self.character(n))
        return out


def h1_display(d: int) -> list[DisplayTerm]:
    """Ind((1)_chi0) plus Ind((2)_chi) for every chi."""
    terms = [DisplayTerm(MultiPartition.from_slots(d, {0: (1,)}))]
    terms += [DisplayTerm(MultiPartition.from_slots(d, {j: (2,)})) for j in range(d)]
    return terms


def h2_display(d: int) -> list[DisplayTerm]:
    """The eight families of induced terms asserted for H^2.

    The term written ((1)_chi, (1,1)_chi) is read as ((1)_chi0, (1,1)_chi),
    the only reading that gives a label of size 3 for chi != chi0.
    """
    mp = MultiPartition.from_slots
    terms = [DisplayTerm(mp(d, {0: (2, 1)})), DisplayTerm(mp(d, {0: (3,)}))]
    for j in range(d):
        terms.append(DisplayTerm(mp(d, {j: (3, 1)})))
        terms.append(DisplayTerm(mp(d, {j: (2,)})))
    for j in range(1, d):
        terms.append(DisplayTerm(mp(d, {j: (2,)})))
        terms.append(DisplayTerm(mp(d, {0: (1,), j: (2,)}), 2))
        terms.append(DisplayTerm(mp(d, {0: (1,), j: (1, 1)})))
        terms.append(DisplayTerm(mp(d, {0: (2,), j: (2,)})))
    return terms


def display_character(terms: Iterable[DisplayTerm], d: int, n: int) -> ClassFunction:
    return sum_class_functions((t.character(n) for t in terms), d, n)


DISPLAYS = {1: h1_display, 2: h2_display}


def h1_irreducible_claim(d: int, n: int) -> tuple[dict[MultiPartition, int], list[str]]:
    """L((n)) + L((n-1,1)) + sum over chi of L((n-2)_chi0, (2)_chi), all at chi0 unless noted.

    For chi = chi0 the last label is (2)_chi0 padded to n, i.e. (n-2, 2) in
    the trivial slot. Returns the claimed multiplicities and a list of terms
    that do not name a valid label at this n.
    """
    claim: dict[MultiPartition, int] = {}
    invalid: list[str] = []
    stable = [MultiPartition.from_slots(d, {}), MultiPartition.from_slots(d, {0: (1,)})]
    stable += [MultiPartition.from_slots(d, {j: (2,)}) for j in range(d)]
    for lam in stable:
        try:
            full = pad(lam, n)
        except RangeError:
            invalid.append(f"{lam}[{n}]")
            continue
        claim[full] = claim.get(full, 0) + 1
    return claim, invalid


@dataclass
class Mismatch:
    cls: LabeledCycleType
    expected: Cyclotomic
    computed: Cyclotomic

    def to_json(self) -> dict:
        return {
            "class": self.cls.to_json(),
            "expected": cyclotomic_to_json(self.expected),
            "computed": cyclotomic_to_json(self.computed),
        }


@dataclass
class DisplayCheck:
    d: int
    n: int
    k: int
    terms: list[DisplayTerm]
    expected_dimension: int
    computed_dimension: int
    mismatches: list[Mismatch]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "n": self.n,
            "degree": self.k,
            "terms": [t.to_json(self.n) for t in self.terms],
            "expected_dimension": self.expected_dimension,
            "computed_dimension": self.computed_dimension,
            "pass": self.passed,
            "mismatches": [m.to_json() for m in self.mismatches],
        }


def _dim(f: ClassFunction) -> int:
    return int(f.dimension().to_fraction())


def compare(expected: ClassFunction, computed: ClassFunction) -> list[Mismatch]:
    return [Mismatch(t, e, c) for (t, e), (_t, c) in zip(expected.items(), computed.items()) if e != c]


def check_display(d: int, n: int, k: int) -> DisplayCheck:
    terms = DISPLAYS[k](d)
    expected = display_character(terms, d, n)
    computed = equivariant_character(d, n, k)
    return DisplayCheck(d, n, k, terms, _dim(expected), _dim(computed), compare(expected, computed))


@dataclass
class VerificationReport:
    checks: list[DisplayCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_json() for c in self.checks]}


def verify_h_decompositions(d: int, n_range: Iterable[int], degrees: Sequence[int] = (1, 2)) -> VerificationReport:
    """Compare H^k with the displayed induced decompositions; mismatches are reported, not raised."""
    checks = []
    for n in n_range:
        if n < 2:
            raise ValueError("the displays describe n >= 2")
        for k in degrees:
            if k not in DISPLAYS:
                raise ValueError(f"no displayed decomposition for degree {k}")
            checks.append(check_display(d, n, k))
    return VerificationReport(checks)


# FI_G# generators --------------------------------------------------------------------


def sharp_generators(family: Callable[[int], ClassFunction], m_max: int, d: int) -> dict[int, dict[MultiPartition, int]]:
    """Decompose V as a sum of Ind(W_m): W_m = V_m minus the part induced from lower W_m'."""
    gens: dict[int, ClassFunction] = {}
    out: dict[int, dict[MultiPartition, int]] = {}
    for m in range(m_max + 1):
        rest = sum_class_functions((ind_fig_character(w, m) for w in gens.values()), d, m)
        w = family(m) - rest
        dec = decompose(w)
        gens[m] = w
        if dec:
            out[m] = dec
    return out


def display_generators(terms: Iterable[DisplayTerm]) -> dict[int, dict[MultiPartition, int]]:
    out: dict[int, dict[MultiPartition, int]] = {}
    for t in terms:
        slot = out.setdefault(t.generated_in, {})
        slot[t.label] = slot.get(t.label, 0) + t.coeff
    return out


def h_family(d: int, k: int) -> Callable[[int], ClassFunction]:
    def family(n: int) -> ClassFunction:
        if n == 0:
            return trivial(d, 0) if k == 0 else zero(d, 0)
        if k > n:
            return zero(d, n)
        return equivariant_character(d, n, k)

    return family


def generator_discrepancy(d: int, k: int, m_max: int) -> list[dict]:
    """Rows (m, label, displayed multiplicity, computed multiplicity) where the two differ."""
    shown = display_generators(DISPLAYS[k](d))
    actual = sharp_generators(h_family(d, k), m_max, d)
    rows = []
    for m in range(m_max + 1):
        a, b = shown.get(m, {}), actual.get(m, {})
        for lam in sorted(set(a) | set(b)):
            if a.get(lam, 0) != b.get(lam, 0):
                rows.append({"m": m, "label": lam.to_json(), "displayed": a.get(lam, 0), "computed": b.get(lam, 0)})
    return rows


# stability ------------------------------------------------------------------------


@dataclass
class StabilityReport:
    family: str
    i: int
    bound: int | None
    table: list[tuple[int, dict[MultiPartition, int]]]
    stabilized_at: int | None

    @property
    def passed(self) -> bool:
        if self.stabilized_at is None:
            return False
        return self.bound is None or self.stabilized_at <= self.bound

    @property
    def stable_decomposition(self) -> dict[MultiPartition, int] | None:
        """Multiplicities by unpadded label once stable."""
        if self.stabilized_at is None:
            return None
        dec = dict(self.table)[self.stabilized_at]
        return {unpad(lam): k for lam, k in dec.items()}

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "i": self.i,
            "bound": self.bound,
            "stabilized_at": self.stabilized_at,
            "table": [{"n": n, "decomposition": decomposition_to_json(dec)} for n, dec in self.table],
            "pass": self.passed,
        }


def _unpadded(dec: Mapping[MultiPartition, int]) -> dict[MultiPartition, int]:
    return {unpad(lam): k for lam, k in dec.items()}


def stability_report(
    family: Callable[[int], ClassFunction],
    i: int,
    n_range: Iterable[int],
    name: str = "",
    bound: int | None = None,
) -> StabilityReport:
    """First n from which the multiplicities of every lam[n] stay constant.

    A point counts as stable only if at least one later n confirms it.
    ``bound`` defaults to 4i.
    """
    ns = sorted(n_range)
    bound = 4 * i if bound is None else bound
    table = [(n, decompose(family(n))) for n in ns]
    keyed = [_unpadded(dec) for _n, dec in table]
    stabilized_at = None
    for pos in range(len(ns) - 2, -1, -1):
        if keyed[pos] != keyed[-1]:
            break
        stabilized_at = ns[pos]
    return StabilityReport(name, i, bound, table, stabilized_at)


# Gauss-sum series -------------------------------------------------------------------


DISPLAYED_GAUSS_COEFFICIENTS = {1: Fraction(1, 2), 2: Fraction(2)}
GAUSS_PROVENANCE = "displayed series 1/(2q) + 2/q^2 for the stable inner products of X_2^(conj chi) with H^i"


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(p for p in range(2, q + 1) if q % p == 0)
    while q % p == 0:
        q //= p
    return q == 1


@dataclass
class GaussTerm:
    i: int
    coeff: Cyclotomic
    window: tuple[int, int]
    displayed: Fraction | None

    @property
    def agrees(self) -> bool | None:
        return None if self.displayed is None else self.coeff == self.displayed

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "coeff": cyclotomic_to_json(self.coeff),
            "coeff_str": format_cyclotomic(self.coeff),
            "window": list(self.window),
            "displayed": None if self.displayed is None else str(self.displayed),
            "agrees": self.agrees,
        }


@dataclass
class GaussSeries:
    q: int
    j: int
    terms: list[GaussTerm]
    stable: bool = True
    instability: str | None = None

    def render(self) -> str:
        parts = [f"({format_cyclotomic(t.coeff)})*q^-{t.i}" for t in self.terms if t.coeff]
        return " + ".join(parts) if parts else "0"

    @property
    def agrees_with_displayed(self) -> bool:
        return all(t.agrees is not False for t in self.terms)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "chi": self.j,
            "stable": self.stable,
            "instability": self.instability,
            "series": [t.to_json() for t in self.terms],
            "rendered": self.render(),
            "displayed_agreement": self.agrees_with_displayed,
            "provenance": GAUSS_PROVENANCE,
        }


def gauss_coefficient(d: int, j: int, i: int, window: int = 2) -> tuple[Cyclotomic, tuple[int, int]]:
    """(-1)^i <X_2^(conj chi_j), H^i> over n in [4i, 4i + window]."""
    P = twisted_variable(d, (-j) % d, 2)
    lo = 4 * i
    value = stable_inner_product(P, h_family(d, i), lo, lo + window)
    return value * (-1) ** i, (lo, lo + window)


def gauss_series(q: int, j: int, i_max: int, window: int = 2, include_zero: bool = False) -> GaussSeries:
    """Coefficients a_i of q^-i for i <= i_max; raises InstabilityError if a window is not constant."""
    if q < 3 or not is_prime_power(q):
        raise ValueError(f"q must be a prime power >= 3, got {q}")
    d = q - 1
    if not 0 < j < d:
        raise ValueError(f"chi index must be nontrivial, 1 <= j < {d}")
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    terms = []
    for i in range(0 if include_zero else 1, i_max + 1):
        coeff, win = gauss_coefficient(d, j, i, window)
        displayed = DISPLAYED_GAUSS_COEFFICIENTS.get(i) if q == 3 else None
        terms.append(GaussTerm(i, coeff, win, displayed))
    return GaussSeries(q, j, terms)


# Fouxe-Rabinovitch module, G = Z ---------------------------------------------------


@dataclass(frozen=True)
class FRModuleSpec:
    """Degree-k basis: sets of generators alpha_(i,j), i != j, with distinct j, sorted by j."""

    n: int
    k: int
    basis: tuple = field(default=())

    @classmethod
    def build(cls, n: int, k: int) -> "FRModuleSpec":
        if n < 1 or not 0 <= k <= n - 1:
            raise ValueError(f"need 0 <= k <= n-1, got n={n}, k={k}")
        return cls(n, k, fr_basis(n, k))

    @property
    def dimension(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=None)
def fr_basis(n: int, k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    out = []
    for js in itertools.combinations(range(n), k):
        choices = [[i for i in range(n) if i != j] for j in js]
        for is_ in itertools.product(*choices):
            out.append(tuple(zip(is_, js)))
    return tuple(out)


def fr_dimension(n: int, k: int) -> int:
    return comb(n, k) * (n - 1) ** k


def _fr_trace(w: WreathElement, n: int, k: int) -> int:
    s, phi = w.sigma, w.labels
    total = 0
    for elem in fr_basis(n, k):
        image = [(s[i], s[j]) for i, j in elem]
        sign, order = sign_sort([j for _i, j in image])
        if not sign:
            continue
        if tuple(sorted(image, key=lambda p: p[1])) != elem:
            continue
        for _i, j in elem:
            if phi[j]:
                sign = -sign
        total += sign
    return total


@lru_cache(maxsize=None)
def fr_character(n: int, k: int) -> ClassFunction:
    """Character of (Z/2) wr S_n on the degree-k piece of the FR model; k >= 2 is model-dependent."""
    FRModuleSpec.build(n, k)
    return ClassFunction.from_function(2, n, lambda t: _fr_trace(class_representative(t), n, k))


def fr_family(k: int) -> Callable[[int], ClassFunction]:
    return lambda n: fr_character(n, k)


def fr_model_dependent(k: int) -> bool:
    return k >= 2
