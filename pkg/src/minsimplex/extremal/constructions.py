"""Generators for the extremal configurations with closed-form counts.

Every generator returns exact coordinates (or an explicit hypergraph) and
validates the construction's side conditions at build time, failing loudly
rather than emitting a configuration whose count formula would not apply.

  inplane-generic(d):    n points in general position inside a hyperplane
                         of R^d; exactly C(n, d+1) affine simplexes.
  cone(d):               n-1 such points plus one apex off the hyperplane;
                         exactly C(n-1, d+1) simplexes.
  parallel-pairs:        planar rows of parallel point pairs plus an
                         off-plane pair parallel to them (d = 3);
                         C(n-1,4) - (n-2)(n-5)/2 simplexes for even n and
                         C(n-1,4) - (n-3)(n-5)/2 for odd n.
  two-lines:             n-2 points on one line and 3 on another, sharing
                         one point (d = 2); C(n-2,3) + C(n-3,2) + 1.
  two-disjoint-edges(k): hypergraph with two disjoint n-edges; its k-level
                         YBLM sum is 1 - (C(n,k)/C(2n,k)) * 2nk/(2n-k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import InputError, InvariantError
from ..geometry import PointSet, check_small_flat_hypothesis
from ..hypergraph import Hypergraph

KINDS = ("inplane-generic", "cone", "parallel-pairs", "two-lines", "two-disjoint-edges")


@dataclass(frozen=True)
class ConstructionId:
    kind: str
    d: int | None = None
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown construction {self.kind!r}; known: {', '.join(KINDS)}")
        if self.kind in ("inplane-generic", "cone"):
            if self.d is None or self.d < 2:
                raise InputError(f"{self.kind} needs a dimension d >= 2")
            if self.k is not None:
                raise InputError(f"{self.kind} takes no level parameter k")
        elif self.kind == "two-disjoint-edges":
            if self.k is None or self.k < 1:
                raise InputError("two-disjoint-edges needs a level k >= 1")
            if self.d is not None:
                raise InputError("two-disjoint-edges takes no dimension parameter d")
        elif self.d is not None or self.k is not None:
            raise InputError(f"{self.kind} takes no extra parameter")

    def __str__(self) -> str:
        if self.d is not None:
            return f"{self.kind}(d={self.d})"
        if self.k is not None:
            return f"{self.kind}(k={self.k})"
        return self.kind


def _collinear(p: tuple, q: tuple, r: tuple) -> bool:
    return (q[0] - p[0]) * (r[1] - p[1]) == (q[1] - p[1]) * (r[0] - p[0])


def _no_new_collinear(placed: list[tuple], cand: tuple) -> bool:
    for i in range(len(placed)):
        for j in range(i + 1, len(placed)):
            if _collinear(placed[i], placed[j], cand):
                return False
    return True


def _greedy_plane_rows(pair_rows: int, extra_point: bool) -> list[tuple[int, int]]:
    """Place point pairs on rows y = 1..pair_rows with no three collinear.

    Each pair sits on its own horizontal row, so all pair lines are parallel
    to (1, 0); the x offsets are found greedily over small integers and each
    candidate is validated exactly against every previously placed pair of
    points.
    """
    placed: list[tuple[int, int]] = []
    for row in range(1, pair_rows + 1):
        x = 0
        while not _no_new_collinear(placed, (x, row)):
            x += 1
        left = (x, row)
        placed.append(left)
        x = left[0] + 1
        while not _no_new_collinear(placed, (x, row)):
            x += 1
        placed.append((x, row))
    if extra_point:
        row = pair_rows + 1
        x = 0
        while not _no_new_collinear(placed, (x, row)):
            x += 1
        placed.append((x, row))
    return placed


def _parallel_pairs_points(n: int) -> PointSet:
    if n < 6:
        raise InputError(f"parallel-pairs needs n >= 6, got {n}")
    pair_rows = (n - 2) // 2 if n % 2 == 0 else (n - 3) // 2
    plane = _greedy_plane_rows(pair_rows, extra_point=n % 2 == 1)
    points = [(Fraction(x), Fraction(y), Fraction(0)) for x, y in plane]
    # Apex pair off the plane, on a line parallel to every in-plane pair line.
    points.append((Fraction(0), Fraction(0), Fraction(1)))
    points.append((Fraction(1), Fraction(0), Fraction(1)))
    ps = PointSet(3, tuple(points))
    for i in range(pair_rows):
        a, b = plane[2 * i], plane[2 * i + 1]
        if a[1] != b[1]:
            raise InvariantError(f"pair {i} is not on a common row")
    for i in range(len(plane)):
        for j in range(i + 1, len(plane)):
            for l in range(j + 1, len(plane)):
                if _collinear(plane[i], plane[j], plane[l]):
                    raise InvariantError(f"collinear triple {(i, j, l)} in the plane part")
    return ps


def _moment_points(n: int, dim: int) -> list[tuple[Fraction, ...]]:
    return [tuple(Fraction(t) ** p for p in range(1, dim + 1)) for t in range(1, n + 1)]


def _inplane_points(d: int, n: int) -> PointSet:
    pts = tuple(p + (Fraction(0),) for p in _moment_points(n, d - 1))
    ps = PointSet(d, pts)
    if not check_small_flat_hypothesis(ps):
        raise InvariantError("in-plane moment points failed the general position check")
    return ps


def _cone_points(d: int, n: int) -> PointSet:
    if n < 2:
        raise InputError(f"cone needs n >= 2, got {n}")
    base = _inplane_points(d, n - 1)
    apex = tuple(Fraction(0) for _ in range(d - 1)) + (Fraction(1),)
    ps = PointSet(d, base.points + (apex,))
    if not check_small_flat_hypothesis(ps):
        raise InvariantError("cone points failed the general position check")
    return ps


def _two_lines_points(n: int) -> PointSet:
    if n < 5:
        raise InputError(f"two-lines needs n >= 5, got {n}")
    line_a = [(Fraction(i), Fraction(0)) for i in range(n - 2)]
    line_b = [(Fraction(0), Fraction(1)), (Fraction(0), Fraction(2))]
    ps = PointSet(2, tuple(line_a + line_b))
    if sum(1 for p in ps.points if p[1] == 0) != n - 2 or sum(1 for p in ps.points if p[0] == 0) != 3:
        raise InvariantError("two-lines incidence layout broken")
    return ps


def construct(cid: ConstructionId, n: int):
    """Build the named configuration at size n; PointSet or Hypergraph."""
    if cid.kind == "inplane-generic":
        return _inplane_points(cid.d, n)
    if cid.kind == "cone":
        return _cone_points(cid.d, n)
    if cid.kind == "parallel-pairs":
        return _parallel_pairs_points(n)
    if cid.kind == "two-lines":
        return _two_lines_points(n)
    # two disjoint n-edges; k only matters for the expected YBLM value
    if n < 1:
        raise InputError("two-disjoint-edges needs n >= 1")
    return Hypergraph(2 * n, (tuple(range(n)), tuple(range(n, 2 * n))))


def expected_count(cid: ConstructionId, n: int):
    """Closed-form simplex count (or exact YBLM sum for two-disjoint-edges)."""
    if cid.kind == "inplane-generic":
        return comb(n, cid.d + 1)
    if cid.kind == "cone":
        if n < 2:
            raise InputError(f"cone needs n >= 2, got {n}")
        return comb(n - 1, cid.d + 1)
    if cid.kind == "parallel-pairs":
        if n < 6:
            raise InputError(f"parallel-pairs needs n >= 6, got {n}")
        if n % 2 == 0:
            return comb(n - 1, 4) - (n - 2) * (n - 5) // 2
        return comb(n - 1, 4) - (n - 3) * (n - 5) // 2
    if cid.kind == "two-lines":
        if n < 5:
            raise InputError(f"two-lines needs n >= 5, got {n}")
        return comb(n - 2, 3) + comb(n - 3, 2) + 1
    k = cid.k
    if not 1 <= k <= n:
        raise InputError(f"two-disjoint-edges closed form needs 1 <= k <= n, got k={k}, n={n}")
    return 1 - Fraction(comb(n, k), comb(2 * n, k)) * Fraction(2 * n * k, 2 * n - k)
