"""Hilbert scheme Euler characteristic series of Kleinian singularities and surfaces.

The local series of ``C^2/G`` for the ADE type ``t`` of rank ``n`` is

    (prod_m (1 - q^m)^-1)^(n+1) * sum_{v in Z^n} zeta^(v_1+...+v_n) q^(v^T C v / 2)

with ``zeta`` a primitive ``(1 + h^vee)``-th root of unity. A surface with
smooth locus of Euler number ``chi`` and finitely many such singular points
has the product of the smooth-surface series and the local series.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .cyclotomic import CyclotomicInteger
from .lattice_theta import twisted_theta
from .lie_data import DynkinType
from .qseries import (
    IntegralityError,
    QSeries,
    demote_to_integer,
    euler_factor_inverse_power,
    mul,
    promote_to_cyclotomic,
    smooth_surface_series,
)


@dataclass(frozen=True)
class SurfaceSpec:
    chi_smooth: int
    singularities: tuple = field(default=())

    def __post_init__(self):
        sing = tuple(sorted(
            s if isinstance(s, DynkinType) else DynkinType.parse(s) for s in self.singularities
        ))
        object.__setattr__(self, "singularities", sing)

    @classmethod
    def parse(cls, chi_smooth: int, text: str) -> "SurfaceSpec":
        """``text`` is a comma-separated list such as ``"A1,A1,D4"``; may be empty."""
        names = [s for s in (p.strip() for p in text.split(",")) if s]
        return cls(int(chi_smooth), tuple(DynkinType.parse(s) for s in names))

    def __add__(self, other: "SurfaceSpec") -> "SurfaceSpec":
        """Disjoint union."""
        return SurfaceSpec(self.chi_smooth + other.chi_smooth, self.singularities + other.singularities)

    @property
    def euler_characteristic(self) -> int:
        # each singular point is a contractible neighborhood of Euler number 1
        return self.chi_smooth + len(self.singularities)

    def to_json(self) -> dict:
        return {"chi_smooth": self.chi_smooth, "singularities": [str(s) for s in self.singularities]}


@dataclass(frozen=True)
class LocalSeriesResult:
    type: DynkinType
    truncation: int
    cyclotomic_series: QSeries
    series: Optional[QSeries]
    first_failure_degree: Optional[int] = None
    first_failure_coefficient: Optional[CyclotomicInteger] = None

    @property
    def integral(self) -> bool:
        return self.series is not None

    @property
    def negative_degrees(self) -> list:
        """Degrees with a negative coefficient; reported, never treated as an error."""
        if not self.integral:
            return []
        return [k for k, c in enumerate(self.series) if c < 0]

    def integrality_json(self) -> dict:
        out = {"ok": self.integral}
        if not self.integral:
            out["first_failure_degree"] = self.first_failure_degree
            out["first_failure_coefficient"] = self.first_failure_coefficient.to_json()
        return out

    def to_json(self) -> dict:
        series = self.series if self.integral else self.cyclotomic_series
        return {
            "input": str(self.type),
            "truncation": self.truncation,
            "series": series.to_json(),
            "integrality": self.integrality_json(),
        }


def local_series(t: DynkinType, N: int, workers: int = 1) -> LocalSeriesResult:
    """Local series of ``C^2/G_t`` to order ``N`` with an integrality certificate.

    A coefficient that fails to be a rational integer is reported in the
    result, never raised.
    """
    theta = twisted_theta(t, N, workers)
    euler = promote_to_cyclotomic(euler_factor_inverse_power(t.rank + 1, N), theta.modulus)
    cyc = mul(euler, theta)
    try:
        series = demote_to_integer(cyc)
    except IntegralityError as err:
        return LocalSeriesResult(t, N, cyc, None, err.degree, err.coefficient)
    return LocalSeriesResult(t, N, cyc, series)


def _local_factors(spec: SurfaceSpec, N: int, workers: int) -> dict:
    kinds = sorted(set(spec.singularities))
    if workers > 1 and len(kinds) > 1:
        with ThreadPoolExecutor(max_workers=min(workers, len(kinds))) as pool:
            results = list(pool.map(lambda t: local_series(t, N, 1), kinds))
    else:
        results = [local_series(t, N, workers) for t in kinds]
    out = {}
    for t, res in zip(kinds, results):
        if not res.integral:
            raise IntegralityError(res.first_failure_degree, res.first_failure_coefficient)
        out[t] = res.series
    return out


def surface_series(spec: SurfaceSpec, N: int, workers: int = 1) -> QSeries:
    """Series of a surface with smooth locus Euler number ``chi_smooth`` and the given singular points."""
    local = _local_factors(spec, N, workers)
    result = smooth_surface_series(spec.chi_smooth, N)
    for t in spec.singularities:
        result = mul(result, local[t])
    return result


def stratification_check(spec: SurfaceSpec, N: int, workers: int = 1) -> bool:
    """Compare :func:`surface_series` with the sum over support distributions.

    ``Hilb^m(S)`` is stratified by how many points sit on the smooth locus
    and at each singular point; the Euler characteristic of a stratum is the
    product of the pieces. This sums those products over all compositions
    ``m_0 + m_1 + ... + m_k = m`` directly.
    """
    local = _local_factors(spec, N, workers)
    smooth = smooth_surface_series(spec.chi_smooth, N)
    factors = [smooth] + [local[t] for t in spec.singularities]
    expected = [0] * (N + 1)
    for parts in itertools.product(range(N + 1), repeat=len(factors)):
        m = sum(parts)
        if m > N:
            continue
        term = 1
        for f, j in zip(factors, parts):
            term *= f[j]
        expected[m] += term
    return list(surface_series(spec, N, workers).coeffs) == expected
