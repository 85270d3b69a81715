"""q-linear hypergraphs, k-sections, semi-simplex families, and YBLM sums.

For a hypergraph H on n vertices, the k-section E_k collects every k-set
contained in an edge, and E0_{k+1} collects the (k+1)-sets none of whose
k-subsets appear in E_k. Members of the union are the semi-simplexes; the
union is always a Sperner family, so its YBLM sum is at most 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import InputError, InvariantError
from .geometry import PointSet, affine_rank

Family = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set {0..n-1} plus a family of distinct non-empty edges."""

    n: int
    edges: Family

    def __post_init__(self):
        if self.n < 0:
            raise InvariantError("vertex count must be non-negative")
        norm = []
        for e in self.edges:
            raw = tuple(e)
            edge = tuple(sorted(set(raw)))
            if not edge:
                raise InvariantError("empty edge")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise InvariantError(f"edge {edge} out of vertex range 0..{self.n - 1}")
            if len(edge) != len(raw):
                raise InvariantError(f"repeated vertex in edge {raw}")
            norm.append(edge)
        if len(set(norm)) != len(norm):
            raise InvariantError("edges must be pairwise distinct")
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Hypergraph":
        try:
            return cls(int(obj["n"]), tuple(tuple(e) for e in obj["edges"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"hypergraph needs 'n' and 'edges': {exc}") from exc


def load_hypergraph(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return Hypergraph.from_json_obj(obj)


def first_linearity_violation(h: Hypergraph, q: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First edge pair with |E & E'| >= q, or None."""
    for e1, e2 in combinations(h.edges, 2):
        if len(set(e1) & set(e2)) >= q:
            return e1, e2
    return None


def is_q_linear(h: Hypergraph, q: int) -> bool:
    """True iff every pair of distinct edges meets in fewer than q vertices."""
    if q < 1:
        raise InputError("q must be at least 1")
    return first_linearity_violation(h, q) is None


def k_section(h: Hypergraph, k: int) -> Family:
    """All k-sets contained in some edge (edges smaller than k contribute nothing)."""
    if k < 1:
        raise InputError("k must be at least 1")
    out = {sub for e in h.edges if len(e) >= k for sub in combinations(e, k)}
    return tuple(sorted(out))


def empty_section(h: Hypergraph, k: int) -> Family:
    """All (k+1)-sets of vertices containing no member of the k-section."""
    section = set(k_section(h, k))
    out = []
    for cand in combinations(range(h.n), k + 1):
        if not any(sub in section for sub in combinations(cand, k)):
            out.append(cand)
    return tuple(out)


@dataclass(frozen=True)
class SimplexReport:
    """The two semi-simplex families E_k and E0_{k+1} with their cardinalities."""

    n: int
    k: int
    sections: Family
    empty_sections: Family

    @property
    def counts(self) -> dict[int, int]:
        return {self.k: len(self.sections), self.k + 1: len(self.empty_sections)}

    @property
    def family(self) -> Family:
        return self.sections + self.empty_sections

    @property
    def total(self) -> int:
        return len(self.sections) + len(self.empty_sections)

    def to_json_obj(self, counts_only: bool = False) -> dict:
        obj = {
            "n": self.n,
            "k": self.k,
            "counts": {str(size): c for size, c in self.counts.items()},
            "total": self.total,
        }
        if not counts_only:
            obj["sections"] = [list(s) for s in self.sections]
            obj["empty_sections"] = [list(s) for s in self.empty_sections]
        return obj


def semi_simplexes(h: Hypergraph, k: int) -> SimplexReport:
    """Report with E_k, E0_{k+1} and their cardinalities."""
    if not 1 <= k <= h.n:
        raise InputError(f"k must be in 1..{h.n}, got {k}")
    return SimplexReport(h.n, k, k_section(h, k), empty_section(h, k))


def semi_simplex_deficit(h: Hypergraph, k: int) -> Fraction:
    """Normalized deficit (C(n,k) - |E_k| - |E0_{k+1}|) / n^(k-1).

    Only defined for (k-1)-linear hypergraphs; used to probe the lower-bound
    constant from below on concrete instances.
    """
    if k < 2:
        raise InputError("deficit needs k >= 2")
    bad = first_linearity_violation(h, k - 1)
    if bad is not None:
        raise InvariantError(
            f"hypergraph is not {k - 1}-linear: edges {bad[0]} and {bad[1]} "
            f"share {len(set(bad[0]) & set(bad[1]))} vertices"
        )
    report = semi_simplexes(h, k)
    # under (k-1)-linearity a k-set lies in at most one edge, so the
    # per-edge contributions to the section cannot overlap
    assert len(report.sections) == sum(comb(len(e), k) for e in h.edges if len(e) >= k)
    return Fraction(comb(h.n, k) - report.total, h.n ** (k - 1))


def is_sperner(family: Iterable[Sequence[int]]) -> bool:
    """Antichain check: no member contains another."""
    by_size: dict[int, set[tuple[int, ...]]] = {}
    for s in family:
        by_size.setdefault(len(s), set()).add(tuple(sorted(s)))
    sizes = sorted(by_size)
    for i, small in enumerate(sizes):
        members = by_size[small]
        for large in sizes[i + 1 :]:
            for big in by_size[large]:
                if any(sub in members for sub in combinations(big, small)):
                    return False
    return True


def yblm_sum(family: Iterable[Sequence[int]], n: int) -> Fraction:
    """Exact sum of 1 / C(n, |S|) over the family."""
    sizes: dict[int, int] = {}
    for s in family:
        ss = tuple(sorted(set(s)))
        if ss and (ss[0] < 0 or ss[-1] >= n):
            raise InputError(f"set {ss} not within 0..{n - 1}")
        sizes[len(ss)] = sizes.get(len(ss), 0) + 1
    return sum((Fraction(c, comb(n, size)) for size, c in sizes.items()), Fraction(0))


def from_point_set(ps: PointSet) -> Hypergraph:
    """Hypergraph of maximal hyperplane sections with at least d+1 points.

    Edges are the maximal subsets whose affine hull has dimension at most
    d-1, kept only when they carry at least d+1 points. When the whole set
    is degenerate it is itself the unique maximal subset; otherwise every
    maximal subset is the closure of an affinely independent d-subset.
    """
    n = len(ps)
    d = ps.dimension
    if n <= d:
        return Hypergraph(n, ())
    if affine_rank(ps, range(n)) <= d - 1:
        return Hypergraph(n, (tuple(range(n)),))
    closures = set()
    for members in combinations(range(n), d):
        if affine_rank(ps, members) != d - 1:
            continue
        base = set(members)
        closure = tuple(
            i for i in range(n) if i in base or affine_rank(ps, base | {i}) == d - 1
        )
        if len(closure) >= d + 1:
            closures.add(closure)
    return Hypergraph(n, tuple(closures))
