"""Desk-scale invariant suite behind ``kleinian selfcheck``."""

from __future__ import annotations

import random

from .character import extended_character, specialize_at_one, specialize_at_zeta
from .cyclotomic import CyclotomicInteger, totient
from .lattice_theta import enumerate_vectors, theta_untwisted
from .lie_data import DynkinType, cartan_matrix, root_datum
from .oracle import (
    box_enumeration,
    count_colored_partitions,
    reference_count_coideals,
    typeA_series_oracle,
)
from .qseries import demote_to_integer, euler_factor_inverse_power, mul
from .zeta_series import SurfaceSpec, local_series, stratification_check, surface_series

ALL_TYPES = ([DynkinType("A", n) for n in range(1, 9)] + [DynkinType("D", n) for n in range(4, 9)]
             + [DynkinType("E", n) for n in (6, 7, 8)])
SMALL_TYPES = [DynkinType("A", n) for n in range(1, 5)] + [DynkinType("D", 4)]


def check_enumeration():
    for t in SMALL_TYPES:
        for bound in range(0, 9):
            if enumerate_vectors(cartan_matrix(t), bound).as_set() != box_enumeration(cartan_matrix(t), bound):
                return False, f"{t} bound {bound}"
    return True, "ranks <= 4, bounds <= 8"


def check_roots():
    expected = {"A": lambda n: n + 1, "D": lambda n: 2 * n - 2}
    for t in ALL_TYPES:
        rd = root_datum(cartan_matrix(t))
        h = expected[t.series](t.rank) if t.series in expected else {6: 12, 7: 18, 8: 30}[t.rank]
        if rd.coxeter_number != h or 2 * len(rd.positive_roots) != t.rank * h:
            return False, str(t)
        shell = theta_untwisted(t, 1)[1]
        if shell != 2 * len(rd.positive_roots):
            return False, f"{t} norm-2 count"
    return True, "Coxeter numbers and root counts"


def check_ring_axioms():
    rng = random.Random(0)
    for m in (3, 4, 7, 13, 19, 31):
        phi = totient(m)
        for _ in range(20):
            a, b, c = (CyclotomicInteger(m, [rng.randint(-5, 5) for _ in range(phi)]) for _ in range(3))
            if (a * b) * c != a * (b * c) or a * b != b * a or a * (b + c) != a * b + a * c:
                return False, f"m={m}"
    return True, "associative, commutative, distributive"


def check_partition_oracle():
    for e in range(4):
        series = euler_factor_inverse_power(e, 20)
        if list(series) != [count_colored_partitions(k, e) for k in range(21)]:
            return False, f"e={e}"
    return True, "e <= 3, N = 20"


def check_typeA_oracle():
    for r in (2, 3, 4):
        if list(local_series(DynkinType("A", r - 1), 7).series) != typeA_series_oracle(r, 7):
            return False, f"r={r}"
        if [reference_count_coideals(r, m) for m in range(5)] != typeA_series_oracle(r, 4):
            return False, f"reference r={r}"
    return True, "r <= 4, degree <= 7"


def check_integrality():
    for t in ALL_TYPES:
        res = local_series(t, 20)
        if not res.integral or res.series[0] != 1 or res.series[1] != 1:
            return False, str(t)
    return True, "all types to order 20"


def check_specialization():
    for t in SMALL_TYPES + [DynkinType("E", 6)]:
        char = extended_character(t, 8)
        if demote_to_integer(specialize_at_zeta(char)) != local_series(t, 8).series:
            return False, f"{t} at zeta"
        euler = euler_factor_inverse_power(t.rank + 1, 8)
        if specialize_at_one(char) != mul(euler, theta_untwisted(t, 8)):
            return False, f"{t} at one"
    return True, "order 8"


def check_surfaces():
    a1, d4 = DynkinType("A", 1), DynkinType("D", 4)
    for chi in (0, 1, 2):
        for sing in ((), (a1,), (a1, d4)):
            spec = SurfaceSpec(chi, sing)
            if not stratification_check(spec, 6):
                return False, f"stratification {spec}"
            if surface_series(spec, 1)[1] != spec.euler_characteristic:
                return False, f"first coefficient {spec}"
    return True, "chi in 0..2, up to two points"


CHECKS = [
    ("enumeration completeness", check_enumeration),
    ("root data", check_roots),
    ("cyclotomic ring axioms", check_ring_axioms),
    ("Euler product vs partition oracle", check_partition_oracle),
    ("type A formula vs fixed points", check_typeA_oracle),
    ("integrality and first coefficients", check_integrality),
    ("character specializations", check_specialization),
    ("surface product decomposition", check_surfaces),
]


def run_all() -> list:
    return [(name, *fn()) for name, fn in CHECKS]
