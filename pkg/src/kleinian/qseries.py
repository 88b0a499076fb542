"""Truncated power series in q over Z or Z[zeta_m].

A :class:`QSeries` of truncation order ``N`` stores the exact coefficients of
``q^0 .. q^N``. Binary operations truncate to the smaller order; nothing is
ever silently extended.
"""

from __future__ import annotations

import csv
import io
import json
from functools import lru_cache
from typing import Optional, Sequence

from .cyclotomic import CyclotomicInteger


class RingMismatchError(TypeError):
    pass


class IntegralityError(ArithmeticError):
    """A coefficient expected in Z is an irrational cyclotomic integer."""

    def __init__(self, degree: int, coefficient: CyclotomicInteger):
        self.degree = degree
        self.coefficient = coefficient
        super().__init__(f"coefficient of q^{degree} is not a rational integer: {coefficient!r}")


class QSeries:
    """Truncated series ``sum_{k<=N} c_k q^k``.

    ``modulus`` is ``None`` for integer coefficients and ``m`` for
    coefficients in ``Z[zeta_m]``.
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Sequence, modulus: Optional[int] = None):
        if len(coeffs) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        if modulus is None:
            coeffs = tuple(int(c) for c in coeffs)
        else:
            coeffs = tuple(
                c if isinstance(c, CyclotomicInteger) else CyclotomicInteger.from_int(modulus, int(c))
                for c in coeffs
            )
            if any(c.m != modulus for c in coeffs):
                raise RingMismatchError("coefficient ring does not match the series ring tag")
        self.coeffs = coeffs
        self.modulus = modulus

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ring(self):
        return "Z" if self.modulus is None else {"cyclotomic": self.modulus}

    def _zero(self):
        return 0 if self.modulus is None else CyclotomicInteger.zero(self.modulus)

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, int):
            return QSeries([other] + [0] * self.N, self.modulus)
        if not isinstance(other, QSeries):
            raise TypeError(f"cannot combine QSeries with {type(other).__name__}")
        if other.modulus != self.modulus:
            raise RingMismatchError(f"ring {self.ring} does not match {other.ring}")
        return other

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        return f"QSeries(N={self.N}, ring={self.ring}, coeffs={list(self.coeffs)!r})"

    def truncate(self, n: int) -> "QSeries":
        if n > self.N:
            raise ValueError(f"cannot extend a series known to order {self.N} to order {n}")
        return QSeries._raw(self.coeffs[: n + 1], self.modulus)

    @classmethod
    def _raw(cls, coeffs, modulus):
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.modulus = modulus
        return obj

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.N, other.N)
        return QSeries._raw([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw([-c for c in self.coeffs], self.modulus)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries._raw([c * other for c in self.coeffs], self.modulus)
        return mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = QSeries._raw([1 if self.modulus is None else CyclotomicInteger.one(self.modulus)]
                              + [self._zero()] * self.N, self.modulus)
        for _ in range(e):
            result = result * self
        return result

    def to_json(self) -> dict:
        if self.modulus is None:
            coeffs = [str(c) for c in self.coeffs]
        else:
            coeffs = [c.to_json() for c in self.coeffs]
        return {"variable": "q", "truncation": self.N, "ring": self.ring, "coeffs": coeffs}

    @classmethod
    def from_json(cls, data) -> "QSeries":
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("variable", "q") != "q":
            raise ValueError("only series in q are supported")
        ring = data["ring"]
        if ring == "Z":
            series = cls([int(c) for c in data["coeffs"]])
        else:
            m = int(ring["cyclotomic"])
            series = cls([CyclotomicInteger.from_json(c) for c in data["coeffs"]], m)
        if series.N != int(data["truncation"]):
            raise ValueError("truncation does not match the number of coefficients")
        return series

    def to_csv(self) -> str:
        if self.modulus is not None:
            raise RingMismatchError("CSV output is defined for integer series only")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "coefficient"])
        for k, c in enumerate(self.coeffs):
            writer.writerow([k, str(c)])
        return buf.getvalue()


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, truncated to ``min(a.N, b.N)``."""
    b = a._coerce(b)
    n = min(a.N, b.N)
    x, y = a.coeffs, b.coeffs
    if a.modulus is None:
        out = [sum(x[i] * y[k - i] for i in range(k + 1)) for k in range(n + 1)]
        return QSeries._raw(out, None)
    zero = a._zero()
    out = []
    for k in range(n + 1):
        acc = zero
        for i in range(k + 1):
            if x[i] and y[k - i]:
                acc = acc + x[i] * y[k - i]
        out.append(acc)
    return QSeries._raw(out, a.modulus)


@lru_cache(maxsize=None)
def _sigma(k: int) -> int:
    return sum(d for d in range(1, k + 1) if k % d == 0)


@lru_cache(maxsize=256)
def _euler_power_coeffs(e: int, n: int) -> tuple:
    # q d/dq log P^e = e * sum sigma(k) q^k, so k a_k = e * sum_j sigma(j) a_{k-j}
    a = [1]
    for k in range(1, n + 1):
        s = sum(_sigma(j) * a[k - j] for j in range(1, k + 1))
        val, rem = divmod(e * s, k)
        assert rem == 0
        a.append(val)
    return tuple(a)


def euler_factor_inverse_power(e: int, N: int) -> QSeries:
    """``prod_{m>=1} (1 - q^m)^(-e)`` to order ``N``.

    For ``e >= 0`` the coefficients count ``e``-tuples of partitions.
    Negative ``e`` gives powers of the Euler product itself.
    """
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    return QSeries._raw(_euler_power_coeffs(e, N), None)


def smooth_surface_series(chi: int, N: int) -> QSeries:
    """Euler characteristic series of Hilbert schemes of a smooth surface with Euler number ``chi``."""
    return euler_factor_inverse_power(chi, N)


def smooth_curve_series(chi: int, N: int) -> QSeries:
    """``(1 - q)^(-chi)``, the series of a smooth curve of Euler number ``chi``."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    a = [1]
    for k in range(1, N + 1):
        a.append(a[-1] * (chi + k - 1) // k)
    return QSeries._raw(a, None)


def promote_to_cyclotomic(a: QSeries, m: int) -> QSeries:
    if a.modulus is not None:
        raise RingMismatchError("series already has cyclotomic coefficients")
    return QSeries._raw([CyclotomicInteger.from_int(m, c) for c in a.coeffs], m)


def demote_to_integer(a: QSeries) -> QSeries:
    """Integer series with the same values; raises :class:`IntegralityError` otherwise."""
    if a.modulus is None:
        return a
    out = []
    for k, c in enumerate(a.coeffs):
        v = c.as_rational_integer()
        if v is None:
            raise IntegralityError(k, c)
        out.append(v)
    return QSeries._raw(out, None)
