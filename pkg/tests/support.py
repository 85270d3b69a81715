"""Seeded instance generators and naive oracles shared across test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from minsimplex import geometry, hypergraph, matroid


def random_rational(rng: random.Random, span: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_configuration(rng: random.Random, n: int, dim: int) -> matroid.VectorConfiguration:
    vectors = tuple(
        tuple(random_rational(rng) for _ in range(dim)) for _ in range(n)
    )
    return matroid.VectorConfiguration(dim, vectors)


def random_admissible_configuration(
    rng: random.Random, n: int, dim: int
) -> matroid.VectorConfiguration:
    """Configuration with no zero vector and no parallel pair (projection input)."""
    from minsimplex.exactla import RationalMatrix, rank

    vectors: list[tuple[Fraction, ...]] = []
    while len(vectors) < n:
        cand = tuple(random_rational(rng) for _ in range(dim))
        if all(x == 0 for x in cand):
            continue
        if any(rank(RationalMatrix.from_rows([cand, v])) <= 1 for v in vectors):
            continue
        vectors.append(cand)
    return matroid.VectorConfiguration(dim, tuple(vectors))


def random_point_set(rng: random.Random, n: int, dim: int, span: int = 3) -> geometry.PointSet:
    points: list[tuple[Fraction, ...]] = []
    seen = set()
    while len(points) < n:
        cand = tuple(Fraction(rng.randint(-span, span)) for _ in range(dim))
        if cand in seen:
            continue
        seen.add(cand)
        points.append(cand)
    return geometry.PointSet(dim, tuple(points))


def random_linear_hypergraph(rng: random.Random, n: int, k: int) -> hypergraph.Hypergraph:
    """(k-1)-linear hypergraph built by rejection sampling of edges of size >= k."""
    edges: list[tuple[int, ...]] = []
    for _ in range(3 * n):
        size = rng.randint(k, min(n, k + 3))
        cand = tuple(sorted(rng.sample(range(n), size)))
        if cand in edges:
            continue
        if all(len(set(cand) & set(e)) < k - 1 for e in edges):
            edges.append(cand)
    return hypergraph.Hypergraph(n, tuple(edges))


def random_graph(rng: random.Random, n: int, p: float) -> hypergraph.Hypergraph:
    edges = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
    return hypergraph.Hypergraph(n, edges)


def oracle_circuits(cfg: matroid.VectorConfiguration) -> list[tuple[int, ...]]:
    """Brute force over every subset, deciding each with is_circuit."""
    n = len(cfg)
    out = []
    for size in range(1, n + 1):
        for members in combinations(range(n), size):
            if matroid.is_circuit(cfg, members):
                out.append(members)
    return sorted(out)


def oracle_affine_simplexes(ps: geometry.PointSet) -> list[tuple[int, ...]]:
    """Brute force over every subset of size >= 3 with is_affine_simplex."""
    n = len(ps)
    out = []
    for size in range(3, n + 1):
        for members in combinations(range(n), size):
            if geometry.is_affine_simplex(ps, members):
                out.append(members)
    return sorted(out)
