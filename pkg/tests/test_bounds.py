import random
from fractions import Fraction
from itertools import combinations

import pytest

from minsimplex.errors import InvariantError
from minsimplex.extremal import (
    complement_graph,
    complete_bipartite,
    count_triangles,
    reference_bounds,
    s2_exact,
    triangle_bound_check,
    turan_k2,
)
from minsimplex.hypergraph import Hypergraph

from support import random_graph


def complete_graph(n):
    return Hypergraph(n, tuple(combinations(range(n), 2)))


def test_s2_exact_values():
    assert s2_exact(3) == Fraction(1, 3)
    assert s2_exact(4) == Fraction(1, 3)  # 1 - 4/6
    assert s2_exact(5) == Fraction(2, 5)
    # the sequence approaches 1/2 from below
    assert Fraction(49, 100) < s2_exact(200) < Fraction(1, 2)


def test_turan_k2():
    assert turan_k2(4) == 4
    assert turan_k2(5) == 6
    assert turan_k2(1) == 0


def test_reference_bounds():
    b2 = reference_bounds(2)
    assert b2.upper_sk == Fraction(1, 2)
    assert b2.lower_start == Fraction(1, 3)
    b3 = reference_bounds(3)
    assert b3.upper_sk == Fraction(5, 8)
    assert b3.upper_s_prime_k == Fraction(4, 9)
    b4 = reference_bounds(4)
    assert b4.upper_sk == Fraction(3, 4)
    assert b4.upper_s_prime_k == Fraction(27, 64)
    assert b4.lower_start == Fraction(1, 5)


def test_count_triangles():
    assert count_triangles(complete_graph(3)) == 1
    assert count_triangles(complete_graph(4)) == 4
    assert count_triangles(complete_bipartite(3, 3)) == 0


def test_count_triangles_rejects_hypergraph():
    with pytest.raises(InvariantError):
        count_triangles(Hypergraph(4, ((0, 1, 2),)))


def test_triangle_bound_k4():
    # m=6, n=4: bound (4*36 - 6*16)/12 = 4 and K4 has exactly 4 triangles
    assert triangle_bound_check(complete_graph(4))


def test_triangle_bound_bipartite():
    assert triangle_bound_check(complete_bipartite(4, 4))


def test_triangle_bound_random_samples():
    rng = random.Random(71)
    for _ in range(200):
        g = random_graph(rng, 8, rng.random())
        assert triangle_bound_check(g)


def test_complement_graph():
    g = complete_bipartite(2, 2)
    comp = complement_graph(g)
    assert set(comp.edges) == {(0, 1), (2, 3)}
