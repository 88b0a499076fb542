"""Simply-laced Dynkin data: Cartan matrices, positive roots, Coxeter numbers.

Nodes follow the Bourbaki labeling (1-based in the docs, 0-based in code):

* ``A_n``: the path 1 - 2 - ... - n.
* ``D_n``: the path 1 - 2 - ... - (n-2), with both n-1 and n attached to n-2.
* ``E_n``: the path 1 - 3 - 4 - ... - n, with 2 attached to 4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

SERIES = ("A", "D", "E")


class ClassificationError(ValueError):
    """Raised for a series/rank pair that names no simply-laced diagram."""


class NotCartanMatrixError(ValueError):
    """Raised when a matrix is not a positive definite simply-laced Cartan matrix."""


@dataclass(frozen=True, order=True)
class DynkinType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise ClassificationError(f"unknown series {self.series!r}; expected one of A, D, E")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ClassificationError(f"rank must be an integer, got {self.rank!r}")
        ok = {
            "A": self.rank >= 1,
            "D": self.rank >= 4,
            "E": self.rank in (6, 7, 8),
        }[self.series]
        if not ok:
            raise ClassificationError(f"no Dynkin diagram of type {self.series}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        """Parse the serialized form, e.g. ``"A1"``, ``"D4"``, ``"E8"``."""
        match = re.fullmatch(r"\s*([ADE])(\d+)\s*", text)
        if match is None:
            raise ClassificationError(f"cannot parse Dynkin type {text!r}")
        return cls(match.group(1), int(match.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise NotCartanMatrixError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if rows[i][i] != 2:
                raise NotCartanMatrixError(f"diagonal entry {i} is {rows[i][i]}, expected 2")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise NotCartanMatrixError("simply-laced Cartan matrix must be symmetric")
                if i != j and rows[i][j] not in (0, -1):
                    raise NotCartanMatrixError(f"off-diagonal entry ({i},{j}) is {rows[i][j]}")
        if not is_positive_definite(rows):
            raise NotCartanMatrixError("Cartan matrix is not positive definite")

    @property
    def n(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def norm(self, v) -> int:
        """Exact value of ``v^T C v``."""
        c = self.entries
        return sum(c[i][j] * v[i] * v[j] for i in range(self.n) for j in range(self.n))


@dataclass(frozen=True)
class RootDatum:
    positive_roots: tuple
    highest_root: tuple
    coxeter_number: int


def leading_minors(matrix) -> list:
    """Leading principal minors of an integer matrix, computed exactly."""
    a = [[Fraction(int(x)) for x in row] for row in matrix]
    n = len(a)
    minors = []
    det = Fraction(1)
    for k in range(n):
        pivot = a[k][k]
        det *= pivot
        minors.append(det)
        if pivot == 0:
            # the remaining minors are not needed once one vanishes
            minors.extend([Fraction(0)] * (n - k - 1))
            break
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return [int(m) if m.denominator == 1 else m for m in minors]


def is_positive_definite(matrix) -> bool:
    return all(m > 0 for m in leading_minors(matrix))


def _edges(t: DynkinType) -> list:
    n = t.rank
    if t.series == "A":
        return [(i, i + 1) for i in range(1, n)]
    if t.series == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    return [(1, 3)] + [(i, i + 1) for i in range(3, n)] + [(2, 4)]


@lru_cache(maxsize=None)
def cartan_matrix(t: DynkinType) -> CartanMatrix:
    n = t.rank
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in _edges(t):
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = -1
    return CartanMatrix(tuple(map(tuple, rows)))


def _as_cartan(c) -> CartanMatrix:
    if isinstance(c, CartanMatrix):
        return c
    if isinstance(c, DynkinType):
        return cartan_matrix(c)
    return CartanMatrix(tuple(tuple(row) for row in c))


@lru_cache(maxsize=None)
def _root_datum(c: CartanMatrix) -> RootDatum:
    n = c.n
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    # In a simply-laced root system every non-simple positive root is a
    # smaller positive root plus a simple root, so growing by simple roots
    # and keeping norm-2 vectors reaches all of them.
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                gamma = beta[:i] + (beta[i] + 1,) + beta[i + 1:]
                if gamma not in found and c.norm(gamma) == 2:
                    found.add(gamma)
                    nxt.append(gamma)
        layer = nxt
    roots = sorted(found, key=lambda r: (sum(r), r))
    top = roots[-1]
    if any(any(r[i] > top[i] for i in range(n)) for r in roots):
        raise NotCartanMatrixError("no unique highest root; Dynkin diagram is not connected")
    return RootDatum(tuple(roots), top, 1 + sum(top))


def root_datum(c) -> RootDatum:
    """Positive roots (simple-root coordinates), highest root and Coxeter number.

    Accepts a :class:`CartanMatrix`, a :class:`DynkinType` or a nested
    integer sequence. For simply-laced types the Coxeter number returned
    equals the dual Coxeter number.
    """
    return _root_datum(_as_cartan(c))


def zeta_order(t: DynkinType) -> int:
    """Order ``1 + h^vee`` of the root of unity that twists the lattice sum."""
    return 1 + root_datum(cartan_matrix(t)).coxeter_number
