"""Exact arithmetic in the cyclotomic fields Q(zeta_d).

Elements are stored in the power basis 1, z, ..., z^(phi(d)-1) reduced modulo
the d-th cyclotomic polynomial, so equality of values is equality of
coefficient vectors. Rationals are plain :class:`fractions.Fraction` objects
and are promoted automatically when mixed with a :class:`Cyclotomic`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "Cyclotomic"]


class OrderMismatchError(ValueError):
    """Arithmetic between cyclotomics of different, non-rational orders."""


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, low degree first, den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    rem = num[: len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients of the d-th cyclotomic polynomial, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if d < 1:
        raise ValueError(f"cyclotomic order must be positive, got {d}")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(e)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


@lru_cache(maxsize=None)
def _power_table(d: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds x^k mod Phi_d for 0 <= k < max(d, 2*phi - 1)."""
    phi_poly = cyclotomic_polynomial(d)
    m = len(phi_poly) - 1
    rows: list[tuple[int, ...]] = []
    cur = [1] + [0] * (m - 1)
    for _ in range(max(d, 2 * m - 1)):
        rows.append(tuple(cur))
        # multiply by x and reduce with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(m):
                cur[j] -= top * phi_poly[j]
    return tuple(rows)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Cyclotomic:
    """An element of Q(zeta_d) in the reduced power basis.

    Immutable; supports ``+ - * /``, equality with rationals and hashing.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Sequence, *, _reduced: bool = False):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        self.order = order
        m = euler_phi(order)
        if _reduced:
            self.coeffs = tuple(coeffs)
        else:
            table = _power_table(order)
            acc = [Fraction(0)] * m
            for k, c in enumerate(coeffs):
                c = _as_fraction(c)
                if not c:
                    continue
                if k >= len(table):
                    row = _reduce_power(order, k)
                else:
                    row = table[k]
                for j, r in enumerate(row):
                    if r:
                        acc[j] += c * r
            self.coeffs = tuple(acc)
        self._hash = None

    # constructors --------------------------------------------------------
    @classmethod
    def rational(cls, order: int, value) -> "Cyclotomic":
        m = euler_phi(order)
        return cls(order, (_as_fraction(value),) + (Fraction(0),) * (m - 1), _reduced=True)

    @classmethod
    def from_exponent_counts(cls, order: int, counts: Sequence) -> "Cyclotomic":
        """Build sum_k counts[k] * zeta^k for exponents 0 <= k < order."""
        return cls(order, counts)

    # predicates ----------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    # coercion ------------------------------------------------------------
    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return other
            if other.is_rational():
                return Cyclotomic.rational(self.order, other.coeffs[0])
            if self.is_rational():
                return None  # caller promotes self instead
            raise OrderMismatchError(
                f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
            )
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def _binary(self, other, op):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            return op(Cyclotomic.rational(other.order, self.coeffs[0]), other)
        return op(self, o)

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        return self._binary(
            other,
            lambda a, b: Cyclotomic(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), _reduced=True),
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-x for x in self.coeffs), _reduced=True)

    def __sub__(self, other):
        return self._binary(
            other,
            lambda a, b: Cyclotomic(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), _reduced=True),
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, tuple(x * other for x in self.coeffs), _reduced=True)
        return self._binary(other, _mul)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_d)")
            return Cyclotomic(self.order, tuple(x / other for x in self.coeffs), _reduced=True)
        return self._binary(other, lambda a, b: _mul(a, b.inverse()))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_d)")
        if self.is_rational():
            return Cyclotomic.rational(self.order, 1 / self.coeffs[0])
        return Cyclotomic(self.order, _poly_inverse_mod(list(self.coeffs), cyclotomic_polynomial(self.order)),
                          _reduced=True)

    def conjugate(self) -> "Cyclotomic":
        """Image under the automorphism zeta -> zeta^{-1}."""
        d = self.order
        counts = [Fraction(0)] * d
        for k, c in enumerate(self.coeffs):
            if c:
                counts[(-k) % d] += c
        return Cyclotomic(d, counts)

    # comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.order, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.order}, {format_cyclotomic(self)!r})"

    def __str__(self):
        return format_cyclotomic(self)


def _reduce_power(d: int, k: int) -> tuple[int, ...]:
    table = _power_table(d)
    return table[k % d]


def _mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    m = len(a.coeffs)
    if m == 1:
        return Cyclotomic(a.order, (a.coeffs[0] * b.coeffs[0],), _reduced=True)
    table = _power_table(a.order)
    acc = [Fraction(0)] * m
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            p = x * y
            for t, r in enumerate(table[i + j]):
                if r:
                    acc[t] += p * r
    return Cyclotomic(a.order, tuple(acc), _reduced=True)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_inverse_mod(a: list[Fraction], modulus: Sequence[int]) -> list[Fraction]:
    """Inverse of a modulo an irreducible polynomial by extended Euclid."""
    m = len(modulus) - 1
    r0, r1 = [Fraction(c) for c in modulus], _poly_trim([Fraction(c) for c in a])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        # r0 = q r1 + r
        q = [Fraction(0)] * (len(r0) - len(r1) + 1)
        r = list(r0)
        for k in range(len(r0) - len(r1), -1, -1):
            c = r[k + len(r1) - 1] / r1[-1]
            q[k] = c
            for j, v in enumerate(r1):
                r[k + j] -= c * v
        r = _poly_trim(r[: len(r1) - 1])
        # s = s0 - q s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                prod[i + j] += x * y
        s = [Fraction(0)] * max(len(s0), len(prod))
        for i, x in enumerate(s0):
            s[i] += x
        for i, x in enumerate(prod):
            s[i] -= x
        r0, r1, s0, s1 = r1, r, s1, _poly_trim(s) or [Fraction(0)]
    c = r1[0]
    inv = [x / c for x in s1]
    inv += [Fraction(0)] * (m - len(inv))
    return inv[:m]


def zeta(d: int, k: int = 1) -> Cyclotomic:
    """The root of unity zeta_d^k."""
    row = _reduce_power(d, k % d)
    return Cyclotomic(d, tuple(Fraction(x) for x in row), _reduced=True)


def conjugate(a) -> Scalar:
    if isinstance(a, Cyclotomic):
        return a.conjugate()
    return a


def arith(a, b, op: str):
    """Field operation by name: one of add, sub, mul, div."""
    if not isinstance(a, Cyclotomic) and isinstance(b, Cyclotomic):
        a = Cyclotomic.rational(b.order, a)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def as_cyclotomic(x, order: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        if x.order == order:
            return x
        if x.is_rational():
            return Cyclotomic.rational(order, x.coeffs[0])
        raise OrderMismatchError(f"expected an element of Q(zeta_{order}), got order {x.order}")
    return Cyclotomic.rational(order, x)


def format_cyclotomic(a, var: str = "z") -> str:
    """Render as a polynomial string in ``var``; rationals print plainly."""
    if not isinstance(a, Cyclotomic):
        return str(Fraction(a))
    terms = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def cyclotomic_to_json(a, order: int | None = None) -> dict:
    if not isinstance(a, Cyclotomic):
        a = Cyclotomic.rational(order or 1, a)
    return {"d": a.order, "coeffs": [[c.numerator, c.denominator] for c in a.coeffs]}


def cyclotomic_from_json(obj: dict) -> Cyclotomic:
    d = int(obj["d"])
    coeffs = [Fraction(int(n), int(den)) for n, den in obj["coeffs"]]
    if len(coeffs) != euler_phi(d):
        raise ValueError(f"expected {euler_phi(d)} coefficients for order {d}, got {len(coeffs)}")
    return Cyclotomic(d, coeffs, _reduced=True)
