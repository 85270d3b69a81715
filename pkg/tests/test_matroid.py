import random
from fractions import Fraction

import pytest

from minsimplex.errors import InputError, InvariantError
from minsimplex.matroid import (
    VectorConfiguration,
    configuration_rank,
    count_circuits_by_size,
    enumerate_circuits,
    is_circuit,
    subset_rank,
)

from support import oracle_circuits, random_configuration


def moment_vectors(n, dim):
    return VectorConfiguration(
        dim, tuple(tuple(Fraction(t) ** p for p in range(dim)) for t in range(1, n + 1))
    )


def test_is_circuit_examples():
    cfg = VectorConfiguration(2, ((1, 0), (0, 1), (1, 1)))
    assert is_circuit(cfg, (0, 1, 2))
    assert not is_circuit(cfg, (0, 1))
    cfg2 = VectorConfiguration(2, ((1, 0), (2, 0), (0, 1)))
    assert not is_circuit(cfg2, (0, 1, 2))  # contains the dependent pair {0,1}
    assert is_circuit(cfg2, (0, 1))


def test_is_circuit_invalid_index():
    cfg = VectorConfiguration(2, ((1, 0),))
    with pytest.raises(InputError):
        is_circuit(cfg, (0, 5))


def test_three_nonparallel_vectors_one_circuit():
    cfg = VectorConfiguration(2, ((1, 0), (0, 1), (1, 1)))
    circuits = enumerate_circuits(cfg)
    assert len(circuits) == 1
    assert circuits[0].members == (0, 1, 2)


def test_parallel_pair_circuit_with_coefficients():
    cfg = VectorConfiguration(2, ((1, 0), (2, 0), (0, 1)))
    circuits = enumerate_circuits(cfg)
    assert len(circuits) == 1
    assert circuits[0].members == (0, 1)
    assert circuits[0].coefficients == (2, -1)


def test_generic_vectors_all_top_circuits():
    # moment vectors: every 3 of them independent in R^3, every 4 dependent
    cfg = moment_vectors(6, 3)
    circuits = enumerate_circuits(cfg)
    assert len(circuits) == 15  # C(6, 4)
    assert all(c.size == 4 for c in circuits)
    assert [c.members for c in circuits] == sorted(oracle_circuits(cfg))


def test_count_by_size_empty_configuration():
    cfg = VectorConfiguration(3, ())
    assert count_circuits_by_size(cfg) == {}


def test_count_by_size_parallel_example():
    cfg = VectorConfiguration(2, ((1, 0), (2, 0), (0, 1)))
    assert count_circuits_by_size(cfg) == {2: 1}


def test_count_by_size_matches_oracle_generic_r3():
    rng = random.Random(5)
    cfg = random_configuration(rng, 5, 3)
    counts = count_circuits_by_size(cfg)
    oracle = oracle_circuits(cfg)
    expect = {}
    for members in oracle:
        expect[len(members)] = expect.get(len(members), 0) + 1
    assert counts == expect


def test_zero_vector_is_loop_and_excluded_from_larger():
    cfg = VectorConfiguration(2, ((0, 0), (1, 0), (0, 1)))
    circuits = enumerate_circuits(cfg)
    assert [(c.members, c.coefficients) for c in circuits] == [((0,), (1,))]


def test_circuit_witnesses_and_axioms_random():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(2, 7)
        dim = rng.randint(1, 4)
        cfg = random_configuration(rng, n, dim)
        circuits = enumerate_circuits(cfg)
        members = [set(c.members) for c in circuits]
        # no circuit properly contains another
        for i, a in enumerate(members):
            for j, b in enumerate(members):
                assert i == j or not a < b
        top = configuration_rank(cfg) + 1
        for c in circuits:
            assert c.size <= top
            if c.size > 1:
                assert all(x != 0 for x in c.coefficients)
                total = [Fraction(0)] * dim
                for i, coef in zip(c.members, c.coefficients):
                    for p in range(dim):
                        total[p] += coef * cfg.vectors[i][p]
                assert all(x == 0 for x in total)


def test_enumeration_matches_oracle_random():
    rng = random.Random(31)
    for _ in range(10):
        n = rng.randint(2, 7)
        dim = rng.randint(1, 4)
        cfg = random_configuration(rng, n, dim)
        got = [c.members for c in enumerate_circuits(cfg)]
        assert got == oracle_circuits(cfg)


def test_min_size_filter_still_prunes_correctly():
    # the parallel pair must suppress the would-be 3-set even when 2-circuits
    # are filtered out of the output
    cfg = VectorConfiguration(2, ((1, 0), (2, 0), (0, 1)))
    assert enumerate_circuits(cfg, min_size=3) == []


def test_subset_rank_transposition_free():
    cfg = VectorConfiguration(3, ((1, 0, 0), (0, 1, 0), (1, 1, 0)))
    assert subset_rank(cfg, (0, 1, 2)) == 2


def test_labels_validated():
    with pytest.raises(InvariantError):
        VectorConfiguration(1, ((1,), (2,)), labels=("a", "a"))
    with pytest.raises(InvariantError):
        VectorConfiguration(2, ((1, 0), (0, 1, 2)))
