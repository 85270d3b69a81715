"""Affine simplex detection and enumeration in exact rational point sets.

An affine simplex is k >= 3 points lying on a (k-2)-dimensional flat while
every proper subset is affinely independent; it is the affine analogue of a
matroid circuit. This module also hosts the linear-to-affine projection
(central projection of a vector configuration onto a hyperplane off the
origin) and the general-position hypothesis check used by the dimension-d
counting results.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, InvariantError
from .exactla import RationalMatrix, coerce_rational, entry_from_json, rank, vector_to_json
from .matroid import VectorConfiguration


@dataclass(frozen=True)
class PointSet:
    """Ordered list of exact points in R^d; duplicate points are rejected."""

    dimension: int
    points: tuple[tuple[Fraction, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        pts = tuple(tuple(coerce_rational(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for i, p in enumerate(pts):
            if len(p) != self.dimension:
                raise InvariantError(f"point {i} has length {len(p)}, expected {self.dimension}")
        seen: dict[tuple, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise InvariantError(f"duplicate points at indices {seen[p]} and {i}")
            seen[p] = i
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != len(pts):
                raise InvariantError("label count does not match point count")
            if len(set(labels)) != len(labels):
                raise InvariantError("labels must be unique")

    def __len__(self) -> int:
        return len(self.points)

    def to_json_obj(self) -> dict:
        obj = {"dimension": self.dimension, "points": [vector_to_json(p) for p in self.points]}
        if self.labels:
            obj["labels"] = list(self.labels)
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PointSet":
        try:
            dim = int(obj["dimension"])
            raw = obj["points"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"point file needs 'dimension' and 'points': {exc}") from exc
        points = tuple(tuple(entry_from_json(x) for x in p) for p in raw)
        labels = tuple(obj["labels"]) if obj.get("labels") else None
        return cls(dim, points, labels)


def load_points(path: str) -> PointSet:
    """Read a PointSet from JSON, or from CSV (one point per row)."""
    if path.endswith(".csv"):
        with open(path, "r", encoding="utf-8", newline="") as fh:
            rows = [row for row in csv.reader(fh) if row]
        if not rows:
            raise InputError(f"{path}: no points in CSV")
        points = tuple(tuple(coerce_rational(x) for x in row) for row in rows)
        return PointSet(len(rows[0]), points)
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return PointSet.from_json_obj(obj)


def save_points(ps: PointSet, path: str) -> None:
    if path.endswith(".csv"):
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            for p in ps.points:
                writer.writerow(vector_to_json(p))
        return
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(ps.to_json_obj(), fh, indent=1)
        fh.write("\n")


def _check_subset(ps: PointSet, subset: Iterable[int]) -> tuple[int, ...]:
    idx = tuple(sorted(set(subset)))
    for i in idx:
        if not 0 <= i < len(ps):
            raise InputError(f"point index {i} out of range 0..{len(ps) - 1}")
    return idx


def affine_rank(ps: PointSet, subset: Iterable[int]) -> int:
    """Dimension of the affine hull: rank of differences against the first member."""
    idx = _check_subset(ps, subset)
    if not idx:
        raise InputError("affine_rank needs at least one point")
    if len(idx) == 1:
        return 0
    base = ps.points[idx[0]]
    diffs = [[x - b for x, b in zip(ps.points[i], base)] for i in idx[1:]]
    return rank(RationalMatrix.from_rows(diffs))


def is_affine_simplex(ps: PointSet, subset: Iterable[int]) -> bool:
    """True iff the points span a (k-2)-flat and all proper subsets are independent."""
    idx = _check_subset(ps, subset)
    k = len(idx)
    if k < 3:
        raise InvariantError(f"affine simplexes have at least 3 points, got {k}")
    if affine_rank(ps, idx) != k - 2:
        return False
    return all(affine_rank(ps, idx[:i] + idx[i + 1 :]) == k - 2 for i in range(k))


@dataclass(frozen=True)
class AffineSimplex:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class SimplexReport:
    """Enumerated affine simplexes grouped by cardinality."""

    dimension: int
    point_count: int
    simplexes: tuple[AffineSimplex, ...]

    @property
    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.simplexes:
            out[s.size] = out.get(s.size, 0) + 1
        return dict(sorted(out.items()))

    @property
    def total(self) -> int:
        return len(self.simplexes)

    def to_json_obj(self, counts_only: bool = False) -> dict:
        obj = {
            "dimension": self.dimension,
            "point_count": self.point_count,
            "counts": {str(k): v for k, v in self.counts.items()},
            "total": self.total,
        }
        if not counts_only:
            obj["simplexes"] = [list(s.members) for s in self.simplexes]
        return obj


def enumerate_affine_simplexes(ps: PointSet) -> SimplexReport:
    """All affine simplexes of sizes 3 .. d+2, in deterministic order.

    Same pruned scan as circuit enumeration: subsets of size at most 2 are
    always affinely independent (points are distinct), so scanning sizes
    upward and skipping supersets of found simplexes leaves exactly the
    candidates whose proper subsets are all independent; such a size-k set
    is a simplex iff its affine rank is k-2.
    """
    n = len(ps)
    found: list[tuple[int, tuple[int, ...]]] = []
    for size in range(3, min(ps.dimension + 2, n) + 1):
        for members in combinations(range(n), size):
            mask = 0
            for i in members:
                mask |= 1 << i
            if any(smask & mask == smask for smask, _ in found):
                continue
            if affine_rank(ps, members) == size - 2:
                found.append((mask, members))
    simplexes = tuple(sorted((AffineSimplex(m) for _, m in found), key=lambda s: s.members))
    return SimplexReport(ps.dimension, n, simplexes)


def find_degenerate_subset(ps: PointSet) -> tuple[int, ...] | None:
    """First d-subset lying on a (d-2)-flat, or None if the set is in general position."""
    d = ps.dimension
    for members in combinations(range(len(ps)), d):
        if affine_rank(ps, members) < d - 1:
            return members
    return None


def check_small_flat_hypothesis(ps: PointSet) -> bool:
    """True iff no d points lie on a (d-2)-dimensional flat (vacuous below d points)."""
    if len(ps) < ps.dimension:
        return True
    return find_degenerate_subset(ps) is None


def classify_r3_semi_simplexes(ps: PointSet) -> tuple[int, int]:
    """(coplanar quadruple count, generic quintuple count) for d = 3 point sets.

    Requires no three collinear points; under that hypothesis these two kinds
    exhaust the affine simplexes, so the counts sum to the total.
    """
    if ps.dimension != 3:
        raise InvariantError(f"classification needs dimension 3, got {ps.dimension}")
    bad = find_degenerate_subset(ps)
    if bad is not None:
        raise InvariantError(f"collinear triple at indices {bad}")
    report = enumerate_affine_simplexes(ps)
    counts = report.counts
    if any(size not in (4, 5) for size in counts):
        raise InvariantError(f"unexpected simplex sizes {sorted(counts)} under the hypothesis")
    return counts.get(4, 0), counts.get(5, 0)


def _parallel(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return rank(RationalMatrix.from_rows([u, v])) <= 1


def project_to_affine(cfg: VectorConfiguration) -> PointSet:
    """Central projection of a vector configuration onto a hyperplane a.x = 1.

    The functional is a = (1, t, t^2, ..., t^(D-1)) for the first t >= 1 with
    a.v != 0 for every vector v; each v maps to v / (a.v). Coordinates on the
    hyperplane come from the rational basis change that sends a to the last
    coordinate, which here amounts to dropping coordinate 0 (a starts with 1).
    Circuits of the input correspond one-to-one to affine simplexes of the
    output.
    """
    d = cfg.dimension
    vectors = cfg.vectors
    for i, v in enumerate(vectors):
        if all(x == 0 for x in v):
            raise InvariantError(f"zero vector at index {i} cannot be projected")
    for i, j in combinations(range(len(vectors)), 2):
        if _parallel(vectors[i], vectors[j]):
            raise InvariantError(f"parallel vectors at indices {i} and {j}")
    t = 1
    while True:
        a = [Fraction(t) ** p for p in range(d)]
        dots = [sum(ai * xi for ai, xi in zip(a, v)) for v in vectors]
        if all(dot != 0 for dot in dots):
            break
        t += 1
    points = tuple(
        tuple(x / dot for x in v[1:]) for v, dot in zip(vectors, dots)
    )
    return PointSet(d - 1, points, cfg.labels)
