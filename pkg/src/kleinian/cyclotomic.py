"""Exact arithmetic in the cyclotomic integers Z[zeta_m].

Elements are dense coefficient tuples of length phi(m) in the power basis
1, zeta, ..., zeta^(phi(m)-1), always reduced modulo the m-th cyclotomic
polynomial, so equality is equality of coefficient tuples.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class IncompatibleRingError(TypeError):
    """Raised when combining elements of Z[zeta_m] for different m."""


@dataclass(frozen=True)
class CyclotomicPolynomial:
    order: int
    coefficients: tuple  # low degree first, monic

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def _divisors(m: int) -> list:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: Sequence[int], den: Sequence[int]) -> list:
    """Exact division of integer polynomials with monic ``den``."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    quot = [0] * (len(num) - dd)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dd]
        quot[k] = c
        if c:
            for j in range(dd + 1):
                num[k + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("polynomial division is not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> CyclotomicPolynomial:
    """Phi_m, by dividing x^m - 1 by Phi_d for every proper divisor d of m."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d).coefficients)
    return CyclotomicPolynomial(m, tuple(poly))


def totient(m: int) -> int:
    return cyclotomic_polynomial(m).degree


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple:
    """Reduced coefficient vectors of x^p for p = 0 .. 2*phi(m) - 2 and of zeta^k, k < m."""
    phi = totient(m)
    low = cyclotomic_polynomial(m).coefficients[:-1]
    top = max(2 * phi - 1, m)
    table = []
    for p in range(top):
        if p < phi:
            v = [0] * phi
            v[p] = 1
        else:
            prev = table[p - 1]
            # multiply by x, then rewrite x^phi = -sum(low[i] x^i)
            carry = prev[-1]
            v = [0] + list(prev[:-1])
            if carry:
                for i in range(phi):
                    v[i] -= carry * low[i]
        table.append(tuple(v))
    return tuple(table)


def _reduce(m: int, coeffs: Sequence[int]) -> tuple:
    phi = totient(m)
    if len(coeffs) <= phi:
        return tuple(coeffs) + (0,) * (phi - len(coeffs))
    table = _power_table(m)
    out = list(coeffs[:phi])
    for p in range(phi, len(coeffs)):
        c = coeffs[p]
        if c:
            row = table[p] if p < len(table) else table[p % m]
            for i in range(phi):
                out[i] += c * row[i]
    return tuple(out)


class CyclotomicInteger:
    """An element of Z[zeta_m], zeta_m = exp(2 pi i / m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable[int] = ()):
        coeffs = [int(c) for c in coeffs]
        self.m = m
        self.coeffs = _reduce(m, coeffs)

    @classmethod
    def _raw(cls, m, coeffs):
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_int(cls, m: int, value: int) -> "CyclotomicInteger":
        return cls(m, [value])

    @classmethod
    def zero(cls, m: int) -> "CyclotomicInteger":
        return cls._raw(m, (0,) * totient(m))

    @classmethod
    def one(cls, m: int) -> "CyclotomicInteger":
        return cls.from_int(m, 1)

    @classmethod
    def from_residue_counts(cls, m: int, counts: Sequence[int]) -> "CyclotomicInteger":
        """``sum(counts[k] * zeta^k for k in range(m))``."""
        phi = totient(m)
        table = _power_table(m)
        out = [0] * phi
        for k, c in enumerate(counts):
            c = int(c)
            if c:
                row = table[k % m]
                for i in range(phi):
                    out[i] += c * row[i]
        return cls._raw(m, tuple(out))

    def _check(self, other):
        if isinstance(other, int):
            return CyclotomicInteger.from_int(self.m, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        if other.m != self.m:
            raise IncompatibleRingError(f"cannot combine Z[zeta_{self.m}] with Z[zeta_{other.m}]")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger._raw(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger._raw(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger._raw(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger._raw(self.m, tuple(a * other for a in self.coeffs))
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            return self * other.coeffs[0]
        if self.is_rational():
            return other * self.coeffs[0]
        return CyclotomicInteger._raw(self.m, _reduce(self.m, _poly_mul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CyclotomicInteger.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_rational_integer() == other
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational_integer(self):
        """The integer value if this element lies in Z, else ``None``."""
        return self.coeffs[0] if self.is_rational() else None

    def conjugate(self) -> "CyclotomicInteger":
        """Image under zeta -> zeta^(-1)."""
        table = _power_table(self.m)
        out = [0] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(-i) % self.m]
                for j in range(len(out)):
                    out[j] += c * row[j]
        return CyclotomicInteger._raw(self.m, tuple(out))

    def evaluate(self) -> complex:
        """Floating-point value at zeta = exp(2 pi i / m); for spot checks only."""
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(c * z**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicInteger":
        return cls(int(data["m"]), [int(c) for c in data["coeffs"]])

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z^{i}")
        return f"CyclotomicInteger(m={self.m}, {' + '.join(terms) or '0'})"


def zeta_power(m: int, k: int) -> CyclotomicInteger:
    """zeta_m^k, reduced."""
    return CyclotomicInteger._raw(m, _power_table(m)[k % m])
