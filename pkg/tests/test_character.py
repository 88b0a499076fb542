import itertools

import numpy as np
import pytest

from kleinian.character import (
    BudgetExceededError,
    LaurentCoefficient,
    extended_character,
    specialize_at_one,
    specialize_at_zeta,
    weight_multiplicity,
)
from kleinian.lattice_theta import theta_untwisted
from kleinian.lie_data import DynkinType, cartan_matrix
from kleinian.oracle import count_colored_partitions
from kleinian.qseries import demote_to_integer, euler_factor_inverse_power, mul
from kleinian.zeta_series import local_series

A1, A2, D4 = DynkinType("A", 1), DynkinType("A", 2), DynkinType("D", 4)
SMALL = [A1, A2, DynkinType("A", 3), D4, DynkinType("E", 6)]


def test_constant_term_is_the_highest_weight():
    for t in SMALL:
        c = extended_character(t, 2)
        assert c.coeffs[0].to_dict() == {(0,) * t.rank: 1}


def test_a1_first_coefficient():
    c = extended_character(A1, 3)
    assert c.coeffs[1].to_dict() == {(0,): 2, (1,): 1, (-1,): 1}


def test_weight_multiplicity_examples():
    assert weight_multiplicity(A1, [0], 0) == 1
    assert weight_multiplicity(A1, [1], 1) == 1
    assert weight_multiplicity(A1, [0], 2) == 5
    assert weight_multiplicity(A1, [1], 0) == 0


def test_weight_multiplicity_out_of_range():
    c = extended_character(A1, 2)
    with pytest.raises(ValueError):
        weight_multiplicity(A1, [0], 3, c)
    with pytest.raises(ValueError):
        weight_multiplicity(A1, [0, 0], 1, c)


@pytest.mark.parametrize("t", [A1, A2, D4], ids=str)
def test_multiplicities_are_colored_partition_counts(t):
    N = 5
    c = extended_character(t, N)
    cm = cartan_matrix(t)
    box = range(-3, 4)
    for beta in itertools.product(box, repeat=t.rank):
        half = cm.norm(beta) // 2
        for d in range(N + 1):
            expected = count_colored_partitions(d - half, t.rank + 1) if d >= half else 0
            assert c.coeffs[d][beta] == expected


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_negation_symmetry_and_monotonicity(t):
    c = extended_character(t, 6)
    for d, coeff in enumerate(c.coeffs):
        as_dict = coeff.to_dict()
        assert all(v > 0 for v in as_dict.values())
        assert all(as_dict[tuple(-x for x in beta)] == v for beta, v in as_dict.items())
        if d:
            previous = c.coeffs[d - 1].to_dict()
            assert all(as_dict[beta] >= v for beta, v in previous.items())


def test_specialize_at_one_a1():
    c = extended_character(A1, 4)
    assert list(specialize_at_one(c)) == [1, 4, 9, 20, 42]
    euler, theta = [1, 2, 5, 10, 20], [1, 2, 0, 0, 2]
    assert list(specialize_at_one(c)) == [sum(euler[i] * theta[k - i] for i in range(k + 1)) for k in range(5)]


def test_specialize_at_one_a2():
    assert specialize_at_one(extended_character(A2, 2))[1] == 9


@pytest.mark.parametrize("t", SMALL, ids=str)
def test_specializations(t):
    c = extended_character(t, 10)
    assert demote_to_integer(specialize_at_zeta(c)) == local_series(t, 10).series
    assert specialize_at_one(c) == mul(euler_factor_inverse_power(t.rank + 1, 10), theta_untwisted(t, 10))


def test_a1_specialization_values():
    assert list(demote_to_integer(specialize_at_zeta(extended_character(A1, 4)))) == [1, 1, 3, 5, 9]


def test_budget():
    with pytest.raises(BudgetExceededError):
        extended_character(DynkinType("E", 8), 12, budget_mb=1)


def test_json_dump():
    doc = extended_character(A1, 1).to_json()
    assert doc["type"] == "A1" and doc["truncation"] == 1
    assert doc["coeffs"][0] == [{"beta": [0], "mult": "1"}]
    assert sorted((e["beta"][0], e["mult"]) for e in doc["coeffs"][1]) == [(-1, "1"), (0, "2"), (1, "1")]


def test_laurent_from_dict():
    lc = LaurentCoefficient.from_dict(2, {(1, 0): 3, (0, 0): 0, (-1, 2): 1})
    assert len(lc) == 2
    assert lc[(1, 0)] == 3 and lc[(0, 0)] == 0 and lc[np.array([-1, 2])] == 1
    assert lc.total() == 4
