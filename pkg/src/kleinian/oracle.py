"""Brute-force ground truth, written independently of the series machinery.

* partition and colored-partition counts by knapsack dynamic programming;
* torus-fixed points of ``Hilb^m(C^2/Z_r)``: monomial ideals of colength
  ``m`` in the invariant ring ``C[x, y]^{Z_r}``, counted as finite co-ideals
  of the semigroup ``{(a, b) : a = b mod r}``;
* naive box enumeration of lattice vectors of bounded norm.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class OracleBudgetError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _colored_table(e: int, k: int) -> tuple:
    ways = [1] + [0] * k
    for part in range(1, k + 1):
        for _ in range(e):
            for s in range(part, k + 1):
                ways[s] += ways[s - part]
    return tuple(ways)


def count_colored_partitions(k: int, e: int) -> int:
    """Number of ``e``-tuples of partitions of total size ``k``."""
    if k < 0 or e < 0:
        raise ValueError("size and number of colors must be nonnegative")
    return _colored_table(e, k)[k]


def count_partitions(k: int) -> int:
    return count_colored_partitions(k, 1)


@dataclass(frozen=True)
class InvariantSemigroup:
    """Exponents of the ``Z_r``-invariant monomials ``x^a y^b``, i.e. ``a = b (mod r)``."""

    r: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("modulus must be at least 2")

    @property
    def generators(self) -> tuple:
        return ((self.r, 0), (1, 1), (0, self.r))

    def __contains__(self, s) -> bool:
        a, b = s
        return a >= 0 and b >= 0 and (a - b) % self.r == 0

    def divides(self, t, s) -> bool:
        return (s[0] - t[0], s[1] - t[1]) in self

    def length(self, s) -> int:
        """Longest chain ``0 < ... < s`` under divisibility (max word length in the generators)."""
        a, b = s
        k = min(a, b)
        k -= (k - a) % self.r
        return k + (a - k) // self.r + (b - k) // self.r

    def elements(self, max_length: int) -> list:
        """Elements with :meth:`length` at most ``max_length``, in canonical order."""
        top = self.r * max_length
        els = [(a, b) for a in range(top + 1) for b in range(top + 1)
               if (a, b) in self and self.length((a, b)) <= max_length]
        return sorted(els, key=self.key)

    def key(self, s) -> tuple:
        # a linear extension of divisibility: proper divisors have smaller length
        return (self.length(s), s[0])

    def predecessors(self, s) -> list:
        """Elements ``s - g`` for generators ``g``, when they lie in the semigroup."""
        out = []
        for g in self.generators:
            t = (s[0] - g[0], s[1] - g[1])
            if t in self:
                out.append(t)
        return out


@dataclass(frozen=True)
class CoIdeal:
    semigroup: InvariantSemigroup
    elements: frozenset

    def __len__(self):
        return len(self.elements)

    def is_downward_closed(self) -> bool:
        """Direct check: every semigroup divisor of every element is present."""
        sg = self.semigroup
        for s in self.elements:
            for a in range(s[0] + 1):
                for b in range(s[1] + 1):
                    t = (a, b)
                    if t in sg and sg.divides(t, s) and t not in self.elements:
                        return False
        return True


def iter_coideals(r: int, m: int, max_nodes: int = 10_000_000):
    """Yield every co-ideal of size ``m`` exactly once.

    Each co-ideal is built by adding its elements in increasing canonical
    order; every prefix of that listing is itself a co-ideal, and only
    extensions beyond the last added element are explored.
    """
    sg = InvariantSemigroup(r)
    visited = 0
    if m == 0:
        yield CoIdeal(sg, frozenset())
        return

    def grow(current: set, last_key):
        nonlocal visited
        visited += 1
        if visited > max_nodes:
            raise OracleBudgetError(f"co-ideal search for r={r}, m={m} exceeded {max_nodes} nodes")
        if len(current) == m:
            yield CoIdeal(sg, frozenset(current))
            return
        candidates = set()
        for s in current:
            for g in sg.generators:
                x = (s[0] + g[0], s[1] + g[1])
                if x not in current and sg.key(x) > last_key:
                    candidates.add(x)
        for x in sorted(candidates, key=sg.key):
            if all(p in current for p in sg.predecessors(x)):
                current.add(x)
                yield from grow(current, sg.key(x))
                current.remove(x)

    yield from grow({(0, 0)}, sg.key((0, 0)))


def count_typeA_fixed_ideals(r: int, m: int, max_nodes: int = 10_000_000) -> int:
    """Number of monomial ideals of colength ``m`` in ``C[x, y]^{Z_r}``."""
    return sum(1 for _ in iter_coideals(r, m, max_nodes))


def reference_count_coideals(r: int, m: int) -> int:
    """Exponential-time count: filter all ``m``-subsets of the finite candidate poset."""
    if m == 0:
        return 1
    sg = InvariantSemigroup(r)
    # a co-ideal of size m holds a full chain below each element, so lengths stay below m
    pool = [s for s in sg.elements(m - 1) if s != (0, 0)]
    count = 0
    for rest in itertools.combinations(pool, m - 1):
        ideal = CoIdeal(sg, frozenset(rest) | {(0, 0)})
        if ideal.is_downward_closed():
            count += 1
    return count


def typeA_series_oracle(r: int, M: int) -> list:
    """Coefficients ``[count_typeA_fixed_ideals(r, m) for m in 0..M]``."""
    return [count_typeA_fixed_ideals(r, m) for m in range(M + 1)]


def box_enumeration(gram, bound: int, box: int = None) -> set:
    """All integer vectors with ``v^T G v <= bound`` and ``|v_i| <= box``, by exhaustive search.

    ``box`` defaults to ``bound``, which covers every Cartan matrix of rank at
    most 4 for ``bound >= 2``.
    """
    g = np.array(getattr(gram, "entries", gram), dtype=np.int64)
    n = len(g)
    if box is None:
        box = max(bound, 1)
    axis = np.arange(-box, box + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([axis] * n), indexing="ij"), axis=-1).reshape(-1, n)
    norms = np.einsum("ki,ij,kj->k", grid, g, grid)
    return {tuple(int(x) for x in v) for v in grid[norms <= bound]}
