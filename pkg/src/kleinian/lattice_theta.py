"""Short-vector enumeration in root lattices and the theta sums built from it.

The sweep is a Fincke-Pohst depth-first search. The Gram matrix is
factored as ``G = U^T D U`` in exact rationals; floating-point copies of
``U`` and ``D`` only bound each coordinate's interval (widened by a slack
far above rounding error), and every emitted vector is accepted on its
exact integer norm.
"""

from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numba
import numpy as np

from .cyclotomic import CyclotomicInteger
from .lie_data import CartanMatrix, DynkinType, cartan_matrix, is_positive_definite, zeta_order
from .qseries import QSeries


class EnumerationError(ValueError):
    """Raised for a Gram matrix the enumerator cannot handle."""


class EvenLatticeError(RuntimeError):
    """A root-lattice vector of odd norm turned up; the lattice is not even."""


_BUDGET_SLACK = 1e-7
_INTERVAL_SLACK = 1e-9


@numba.njit(cache=True, nogil=True)
def _sweep(gram, upper, diag, bound, top_lo, top_hi, modulus, counts, out, emit):
    n = gram.shape[0]
    m = np.zeros(n, np.int64)
    hi = np.zeros(n, np.int64)
    rem = np.zeros(n + 1)
    exact = np.zeros(n + 1, np.int64)
    center = np.zeros(n)
    rem[n] = bound + _BUDGET_SLACK
    k = n - 1
    m[k] = top_lo
    hi[k] = top_hi
    found = 0
    while True:
        if m[k] > hi[k]:
            k += 1
            if k == n:
                break
            m[k] += 1
            continue
        t = m[k] - center[k]
        r = rem[k + 1] - diag[k] * t * t
        if r < 0.0:
            m[k] += 1
            continue
        s = 0
        for j in range(k + 1, n):
            s += gram[k, j] * m[j]
        e = exact[k + 1] + gram[k, k] * m[k] * m[k] + 2 * m[k] * s
        if k == 0:
            if e <= bound:
                if emit:
                    for j in range(n):
                        out[found, j] = m[j]
                else:
                    tot = 0
                    for j in range(n):
                        tot += m[j]
                    counts[e, tot % modulus] += 1
                found += 1
            m[k] += 1
            continue
        rem[k] = r
        exact[k] = e
        k -= 1
        c = 0.0
        for j in range(k + 1, n):
            c -= upper[k, j] * m[j]
        center[k] = c
        w = math.sqrt(r / diag[k])
        m[k] = math.ceil(c - w - _INTERVAL_SLACK)
        hi[k] = math.floor(c + w + _INTERVAL_SLACK)
    return found


def _gram_entries(gram) -> tuple:
    if isinstance(gram, DynkinType):
        gram = cartan_matrix(gram)
    if isinstance(gram, CartanMatrix):
        return gram.entries
    rows = tuple(tuple(int(x) for x in row) for row in np.asarray(gram).tolist())
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise EnumerationError("Gram matrix must be square and nonempty")
    if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)):
        raise EnumerationError("Gram matrix must be symmetric")
    return rows


def ldl_decomposition(rows) -> tuple:
    """Exact ``G = U^T D U`` with ``U`` unit upper triangular.

    Returns ``(U, d)`` as nested lists of :class:`Fraction` so that
    ``v^T G v = sum_i d[i] * (v[i] + sum_{j>i} U[i][j] v[j])**2``.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    upper = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d = []
    for i in range(n):
        piv = a[i][i]
        if piv <= 0:
            raise EnumerationError("Gram matrix is not positive definite")
        d.append(piv)
        for j in range(i + 1, n):
            upper[i][j] = a[i][j] / piv
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] -= piv * upper[i][j] * upper[i][k]
    return upper, d


def _inverse_diagonal(rows) -> list:
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        piv = a[col][col]
        a[col] = [x / piv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][n + i] for i in range(n)]


class _Plan:
    """Exact factorization plus the float arrays handed to the kernel."""

    def __init__(self, rows, bound: int):
        if bound < 0:
            raise EnumerationError("norm bound must be nonnegative")
        if not is_positive_definite(rows):
            raise EnumerationError("Gram matrix is not positive definite")
        upper, d = ldl_decomposition(rows)
        self.n = len(rows)
        self.bound = int(bound)
        self.gram = np.array(rows, dtype=np.int64)
        self.upper = np.array([[float(x) for x in row] for row in upper])
        self.diag = np.array([float(x) for x in d])
        # exact range of the outermost coordinate: d_last * t^2 <= bound
        last = d[-1]
        self.top = math.isqrt(int(Fraction(self.bound) / last))
        # |v_i| <= sqrt(bound * (G^-1)_ii) for every vector in the ellipsoid
        inv = _inverse_diagonal(rows)
        self.coord_bound = max(math.isqrt(int(self.bound * x)) for x in inv)

    @property
    def vector_dtype(self):
        for dtype in (np.int8, np.int16, np.int32):
            if self.coord_bound <= np.iinfo(dtype).max:
                return dtype
        return np.int64

    def chunks(self, workers: int) -> list:
        lo, hi = -self.top, self.top
        width = hi - lo + 1
        workers = max(1, min(int(workers), width))
        edges = [lo + (width * i) // workers for i in range(workers + 1)]
        return [(edges[i], edges[i + 1] - 1) for i in range(workers)]

    def run(self, lo, hi, modulus, counts, out, emit):
        return _sweep(self.gram, self.upper, self.diag, self.bound, lo, hi,
                      modulus, counts, out, emit)


def _map_chunks(fn, chunks, workers):
    if workers <= 1 or len(chunks) == 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))


def norm_residue_counts(gram, bound: int, modulus: int = 1, workers: int = 1) -> np.ndarray:
    """Table ``T[v, r]`` = number of vectors of norm ``v`` with coordinate sum ``= r (mod modulus)``.

    Covers all integer vectors of norm at most ``bound``.
    """
    plan = _Plan(_gram_entries(gram), bound)
    dummy = np.zeros((1, plan.n), np.int8)

    def one(chunk):
        table = np.zeros((plan.bound + 1, modulus), np.int64)
        plan.run(chunk[0], chunk[1], modulus, table, dummy, False)
        return table

    parts = _map_chunks(one, plan.chunks(workers), workers)
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total


@dataclass(frozen=True)
class GramEnumeration:
    gram: tuple
    norm_bound: int
    vectors: np.ndarray

    def __len__(self):
        return len(self.vectors)

    def norms(self, chunk: int = 1 << 20) -> np.ndarray:
        """Exact norms, computed in int64 a chunk at a time."""
        g = np.array(self.gram, dtype=np.int64)
        out = np.empty(len(self.vectors), np.int64)
        for start in range(0, len(self.vectors), chunk):
            v = self.vectors[start:start + chunk].astype(np.int64)
            out[start:start + chunk] = np.einsum("ki,ij,kj->k", v, g, v)
        return out

    def as_set(self) -> set:
        return {tuple(int(x) for x in v) for v in self.vectors}


def enumerate_vectors(gram, bound: int, workers: int = 1) -> GramEnumeration:
    """All integer vectors ``v`` with ``v^T G v <= bound``, each exactly once.

    The order is deterministic and independent of ``workers``. Vectors are
    stored in the narrowest integer dtype that holds every coordinate.
    """
    rows = _gram_entries(gram)
    plan = _Plan(rows, bound)
    dummy = np.zeros((1, plan.n), plan.vector_dtype)

    def one(chunk):
        table = np.zeros((plan.bound + 1, 1), np.int64)
        size = plan.run(chunk[0], chunk[1], 1, table, dummy, False)
        out = np.zeros((size, plan.n), plan.vector_dtype)
        got = plan.run(chunk[0], chunk[1], 1, table, out, True)
        assert got == size
        return out

    parts = _map_chunks(one, plan.chunks(workers), workers)
    vectors = np.concatenate(parts)
    return GramEnumeration(rows, plan.bound, vectors)


def _check_even(table: np.ndarray, label) -> None:
    odd = table[1::2].sum()
    if odd:
        raise EvenLatticeError(f"{label}: {odd} vectors of odd norm; root lattice must be even")


def twisted_theta(t: DynkinType, N: int, workers: int = 1) -> QSeries:
    """``sum_v zeta^(v_1+...+v_n) q^(v^T C v / 2)`` over the root lattice, to order ``N``.

    ``zeta`` is a primitive root of unity of order ``1 + h^vee``.
    """
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    m = zeta_order(t)
    table = norm_residue_counts(cartan_matrix(t), 2 * N, m, workers)
    _check_even(table, t)
    coeffs = [CyclotomicInteger.from_residue_counts(m, table[2 * k]) for k in range(N + 1)]
    return QSeries(coeffs, m)


def theta_untwisted(t: DynkinType, N: int, workers: int = 1) -> QSeries:
    """Classical theta series: coefficient of ``q^k`` counts vectors of norm ``2k``."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    table = norm_residue_counts(cartan_matrix(t), 2 * N, 1, workers)
    _check_even(table, t)
    return QSeries([int(table[2 * k, 0]) for k in range(N + 1)])


def shell_counts_csv(gram, bound: int, workers: int = 1) -> str:
    """Debug dump: ``norm,count`` for every norm shell up to ``bound``."""
    table = norm_residue_counts(gram, bound, 1, workers)
    buf = io.StringIO()
    buf.write("norm,count\n")
    for v in range(bound + 1):
        buf.write(f"{v},{int(table[v, 0])}\n")
    return buf.getvalue()
