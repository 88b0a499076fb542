"""Character of the extended basic representation and its specializations.

With ``q = e^(-delta)`` and formal variables ``q_1 .. q_n`` attached to the
simple roots, the character (with the ``e^(omega_0)`` prefactor dropped) is

    (prod_m (1 - q^m)^-1)^(n+1) * sum_{beta in Q} q_1^beta_1 ... q_n^beta_n q^(<beta,beta>/2)

Each coefficient of ``q^d`` is a Laurent polynomial in ``q_1 .. q_n``. Its
support is stored as blocks of exponent vectors sharing one multiplicity,
since a multiplicity only depends on the norm shell of ``beta``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import CyclotomicInteger
from .lattice_theta import EvenLatticeError, enumerate_vectors, norm_residue_counts
from .lie_data import DynkinType, cartan_matrix, zeta_order
from .qseries import QSeries, euler_factor_inverse_power

DEFAULT_BUDGET_MB = 2048


class BudgetExceededError(MemoryError):
    """The requested character would exceed the configured memory budget."""


def _as_block(exps, n):
    exps = np.asarray(exps)
    if exps.dtype.kind != "i":
        exps = exps.astype(np.int64)
    # shells are shared between degrees, so never copy an integer block
    return exps if exps.ndim == 2 else exps.reshape(-1, n)


class LaurentCoefficient:
    """Sparse map from exponent vectors to nonzero integer multiplicities.

    Backed by ``(exponents, multiplicity)`` blocks whose exponent sets are
    pairwise disjoint.
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks=()):
        self.n = n
        self.blocks = tuple((_as_block(e, n), int(c)) for e, c in blocks if c and len(e))

    @classmethod
    def from_dict(cls, n: int, data: dict) -> "LaurentCoefficient":
        return cls(n, [(np.array([beta]), c) for beta, c in data.items()])

    def __len__(self):
        return sum(len(e) for e, _ in self.blocks)

    def __getitem__(self, beta) -> int:
        beta = np.asarray(beta, dtype=np.int64)
        if beta.shape != (self.n,):
            raise ValueError(f"exponent vector must have length {self.n}")
        for exps, mult in self.blocks:
            if np.any(np.all(exps == beta, axis=1)):
                return mult
        return 0

    def items(self):
        for exps, mult in self.blocks:
            for row in exps:
                yield tuple(int(x) for x in row), mult

    def to_dict(self) -> dict:
        return dict(self.items())

    def total(self) -> int:
        """Value at ``q_1 = ... = q_n = 1``."""
        return sum(mult * len(exps) for exps, mult in self.blocks)


@dataclass(frozen=True)
class CharacterSeries:
    type: DynkinType
    truncation: int
    coeffs: tuple

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "truncation": self.truncation,
            "coeffs": [
                [{"beta": list(beta), "mult": str(mult)} for beta, mult in c.items()]
                for c in self.coeffs
            ],
        }


def estimate_memory_mb(t: DynkinType, N: int) -> float:
    """Peak working memory of :func:`extended_character`, from the shell sizes."""
    table = norm_residue_counts(cartan_matrix(t), 2 * N, 1)
    vectors = int(table[:, 0].sum())
    # vectors and a sorted copy (int16 worst case), int64 norms, degrees and sort order
    return vectors * (4 * t.rank + 24) / 1e6


def extended_character(t: DynkinType, N: int, budget_mb: float = DEFAULT_BUDGET_MB,
                       workers: int = 1) -> CharacterSeries:
    """Character to order ``N``, without the ``e^(omega_0)`` prefactor.

    Raises :class:`BudgetExceededError` before enumerating if the estimated
    working memory exceeds ``budget_mb``.
    """
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    need = estimate_memory_mb(t, N)
    if need > budget_mb:
        raise BudgetExceededError(
            f"character of {t} to order {N} needs about {need:.0f} MB; budget is {budget_mb} MB")
    c = cartan_matrix(t)
    enum = enumerate_vectors(c, 2 * N, workers)
    norms = enum.norms()
    if np.any(norms % 2):
        raise EvenLatticeError(f"{t}: odd norm in the root lattice")
    degree = norms // 2
    order = np.argsort(degree, kind="stable")
    vectors, degree = enum.vectors[order], degree[order]
    cuts = np.searchsorted(degree, np.arange(N + 2))
    shells = [vectors[cuts[k]:cuts[k + 1]] for k in range(N + 1)]

    # the Euler factor is scalar in q_1..q_n, so multiplying by it rescales shells
    euler = euler_factor_inverse_power(t.rank + 1, N)
    coeffs = []
    for d in range(N + 1):
        coeffs.append(LaurentCoefficient(t.rank, [(shells[k], euler[d - k]) for k in range(d + 1)]))
    return CharacterSeries(t, N, tuple(coeffs))


def weight_multiplicity(t: DynkinType, beta, d: int, character: CharacterSeries = None) -> int:
    """Coefficient of ``q_1^beta_1 ... q_n^beta_n q^d`` in the character."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if character is None:
        character = extended_character(t, d)
    if d > character.truncation:
        raise ValueError(f"degree {d} is beyond the computed order {character.truncation}")
    return character.coeffs[d][beta]


def specialize_at_zeta(c: CharacterSeries) -> QSeries:
    """Set every ``q_i`` to ``zeta = exp(2 pi i / (1 + h^vee))``."""
    m = zeta_order(c.type)
    hist_cache = {}
    out = []
    for coeff in c.coeffs:
        counts = np.zeros(m, dtype=object)
        for exps, mult in coeff.blocks:
            key = id(exps)
            if key not in hist_cache:
                hist_cache[key] = (exps, np.bincount(exps.sum(axis=1, dtype=np.int64) % m, minlength=m))
            counts += hist_cache[key][1].astype(object) * mult
        out.append(CyclotomicInteger.from_residue_counts(m, counts))
    return QSeries(out, m)


def specialize_at_one(c: CharacterSeries) -> QSeries:
    """Set every ``q_i`` to 1."""
    return QSeries([coeff.total() for coeff in c.coeffs])
