import itertools

import pytest

from kleinian.oracle import (
    CoIdeal,
    InvariantSemigroup,
    OracleBudgetError,
    count_colored_partitions,
    count_partitions,
    count_typeA_fixed_ideals,
    iter_coideals,
    reference_count_coideals,
    typeA_series_oracle,
)
from kleinian.qseries import euler_factor_inverse_power


def partitions_of(k, largest=None):
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions_of(k - first, first):
            yield (first,) + rest


def test_partition_counts():
    assert count_partitions(5) == 7
    assert [count_colored_partitions(0, e) for e in range(5)] == [1] * 5
    assert count_colored_partitions(2, 2) == 5


def test_colored_partitions_by_listing():
    for e in (1, 2, 3):
        for k in range(7):
            listed = sum(
                1 for sizes in itertools.product(range(k + 1), repeat=e) if sum(sizes) == k
                for _ in itertools.product(*(list(partitions_of(s)) for s in sizes))
            )
            assert count_colored_partitions(k, e) == listed


@pytest.mark.parametrize("e", range(4))
def test_oracle_ties_to_qseries(e):
    assert [count_colored_partitions(k, e) for k in range(16)] == list(euler_factor_inverse_power(e, 15))


def test_semigroup():
    sg = InvariantSemigroup(3)
    assert (0, 0) in sg and (1, 1) in sg and (3, 0) in sg and (4, 1) in sg
    assert (1, 0) not in sg and (2, 1) not in sg
    assert sg.length((4, 1)) == 2
    assert sg.length((6, 0)) == 2
    assert sg.length((2, 2)) == 2
    with pytest.raises(ValueError):
        InvariantSemigroup(1)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_length_is_longest_factorization(r):
    sg = InvariantSemigroup(r)
    for s in sg.elements(5):
        best = max(i + j + k for i in range(6) for j in range(6) for k in range(6)
                   if (i * r + k, j * r + k) == s)
        assert sg.length(s) == best


def test_semigroup_closed_under_addition():
    sg = InvariantSemigroup(4)
    els = sg.elements(3)
    for s, t in itertools.product(els, repeat=2):
        assert (s[0] + t[0], s[1] + t[1]) in sg


def test_typeA_r2_anchor():
    assert typeA_series_oracle(2, 4) == [1, 1, 3, 5, 9]
    assert count_typeA_fixed_ideals(2, 1) == 1
    assert typeA_series_oracle(2, 0) == [1]


def test_colength_two_is_the_generators():
    ideals = {c.elements for c in iter_coideals(2, 2)}
    assert ideals == {frozenset({(0, 0), g}) for g in [(2, 0), (1, 1), (0, 2)]}


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("m", range(0, 7))
def test_every_coideal_is_downward_closed_and_distinct(r, m):
    found = [c.elements for c in iter_coideals(r, m)]
    assert len(found) == len(set(found))
    for elements in found:
        assert len(elements) == m
        assert CoIdeal(InvariantSemigroup(r), elements).is_downward_closed()


@pytest.mark.parametrize("r", [2, 3, 4])
def test_dfs_matches_subset_filtering(r):
    assert [reference_count_coideals(r, m) for m in range(6)] == typeA_series_oracle(r, 5)


def test_not_downward_closed():
    sg = InvariantSemigroup(2)
    assert not CoIdeal(sg, frozenset({(0, 0), (2, 2)})).is_downward_closed()
    assert not CoIdeal(sg, frozenset({(0, 0), (3, 1), (1, 1)})).is_downward_closed()


def test_budget():
    with pytest.raises(OracleBudgetError):
        count_typeA_fixed_ideals(3, 8, max_nodes=10)
