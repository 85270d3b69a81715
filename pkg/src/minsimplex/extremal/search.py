"""Exhaustive search for the minimum semi-simplex sums s(n, k) and s'(n, k).

Two regimes:

* Unconstrained ("free", s'): the semi-simplex family depends only on the
  k-section, and every k-uniform family is a k-section, so the search runs
  over all 2^C(n,k) subsets of the k-level. Each family is a bitmask over
  the lexicographically ordered k-sets; the objective is compared through
  the integer numerator |E_k| * C(n,k+1) + |E0_{k+1}| * C(n,k) over the
  common denominator, so the whole scan is exact int64 arithmetic and can
  be vectorized and partitioned across processes.

* Linear-constrained (s): backtracking over families of edges of size >= k
  with pairwise intersections below k-1 (smaller edges never change the
  semi-simplex family and only tighten the constraint, so they are omitted
  without loss). Each family is visited exactly once.

Witnesses are deduplicated up to vertex relabeling via the minimum
lexicographic incidence form over all permutations (feasible at n <= 8).
"""

from __future__ import annotations

import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

import numpy as np

from ..errors import BudgetError, InputError
from ..hypergraph import Hypergraph, is_q_linear, k_section, semi_simplexes, yblm_sum

DEFAULT_BUDGET_BITS = 25
_CHUNK = 1 << 19
_MAX_RAW_WITNESSES = 5000
_CANONICAL_N_LIMIT = 8

if hasattr(np, "bitwise_count"):
    def _popcount(masks: np.ndarray) -> np.ndarray:
        return np.bitwise_count(masks).astype(np.int64)
else:
    # numpy < 2.0: 16-bit lookup table; mask values stay below 2^32 here
    _POP16 = np.array([x.bit_count() for x in range(1 << 16)], dtype=np.int64)

    def _popcount(masks: np.ndarray) -> np.ndarray:
        return _POP16[masks & 0xFFFF] + _POP16[(masks >> 16) & 0xFFFF]


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    linear_constrained: bool
    minimum: Fraction
    witnesses: tuple[Hypergraph, ...]
    search_space_size: int

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "linear_constrained": self.linear_constrained,
            "minimum": f"{self.minimum.numerator}/{self.minimum.denominator}",
            "minimum_approx": float(self.minimum),
            "witnesses": [h.to_json_obj() for h in self.witnesses],
            "search_space_size": self.search_space_size,
        }


def canonical_family(n: int, edges: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Minimum-over-relabelings form of a set family on n vertices."""
    if n > _CANONICAL_N_LIMIT:
        raise InputError(f"canonical labeling supported up to n = {_CANONICAL_N_LIMIT}")
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in edges))
        if best is None or relabeled < best:
            best = relabeled
    return best if best is not None else ()


def _canonical_witnesses(n: int, families: list[tuple[tuple[int, ...], ...]]) -> tuple[Hypergraph, ...]:
    seen = sorted({canonical_family(n, fam) for fam in families})
    return tuple(Hypergraph(n, fam) for fam in seen)


# ---------------------------------------------------------------------------
# free search (s'): scan all k-uniform families as bitmasks
# ---------------------------------------------------------------------------


def _free_tables(n: int, k: int) -> tuple[list[tuple[int, ...]], list[int]]:
    blocks = list(combinations(range(n), k))
    index = {b: i for i, b in enumerate(blocks)}
    super_masks = []
    for cand in combinations(range(n), k + 1):
        mask = 0
        for sub in combinations(cand, k):
            mask |= 1 << index[sub]
        super_masks.append(mask)
    return blocks, super_masks


def _objective_weights(n: int, k: int) -> tuple[int, int, int]:
    # value = mk/C(n,k) + m0/C(n,k+1) = (mk*C(n,k+1) + m0*C(n,k)) / denom
    ck, ck1 = comb(n, k), comb(n, k + 1)
    return ck1, ck, ck * ck1


def _scan_free_chunk(args: tuple[int, int, int, int]) -> tuple[int, list[int], bool]:
    """Scan family masks in [start, stop); returns (min numerator, argmins, truncated)."""
    n, k, start, stop = args
    _, super_masks = _free_tables(n, k)
    w_mk, w_m0, _ = _objective_weights(n, k)
    best = None
    argmins: list[int] = []
    truncated = False
    for lo in range(start, stop, _CHUNK):
        hi = min(lo + _CHUNK, stop)
        masks = np.arange(lo, hi, dtype=np.int64)
        scores = _popcount(masks) * w_mk
        if super_masks:
            m0 = np.zeros(masks.shape, dtype=np.int64)
            for t in super_masks:
                m0 += (masks & t) == 0
            scores += m0 * w_m0
        chunk_best = int(scores.min())
        if best is None or chunk_best < best:
            best = chunk_best
            argmins = []
            truncated = False
        if chunk_best == best and not truncated:
            where = np.nonzero(scores == chunk_best)[0]
            room = _MAX_RAW_WITNESSES - len(argmins)
            if where.size > room:
                where = where[:room]
                truncated = True
            argmins.extend(int(masks[i]) for i in where)
    return best, argmins, truncated


def _free_search(n: int, k: int, budget_bits: int, workers: int) -> SearchResult:
    bits = comb(n, k)
    if bits > budget_bits:
        raise BudgetError(
            f"free search over 2^{bits} k-uniform families exceeds budget 2^{budget_bits} "
            f"(n={n}, k={k}); raise the budget to override"
        )
    total = 1 << bits
    blocks, _ = _free_tables(n, k)
    denom = _objective_weights(n, k)[2]

    bounds = [(total * i) // max(workers, 1) for i in range(max(workers, 1) + 1)]
    jobs = [(n, k, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_free_chunk, jobs))
    else:
        parts = [_scan_free_chunk(job) for job in jobs]

    best = min(p[0] for p in parts)
    raw_masks: list[int] = []
    for part_best, part_masks, _ in parts:
        if part_best == best:
            raw_masks.extend(part_masks)
    raw_masks = raw_masks[:_MAX_RAW_WITNESSES]
    families = [
        tuple(blocks[i] for i in range(bits) if mask >> i & 1) for mask in sorted(raw_masks)
    ]
    witnesses = _canonical_witnesses(n, families)
    return SearchResult(n, k, False, Fraction(best, denom), witnesses, total)


def free_scan_python(n: int, k: int) -> Fraction:
    """Plain-Python full scan of the free search; reference oracle for tests."""
    blocks, super_masks = _free_tables(n, k)
    w_mk, w_m0, denom = _objective_weights(n, k)
    best: int | None = None
    for mask in range(1 << len(blocks)):
        score = mask.bit_count() * w_mk
        score += sum(1 for t in super_masks if mask & t == 0) * w_m0
        if best is None or score < best:
            best = score
    return Fraction(best, denom)


# ---------------------------------------------------------------------------
# constrained search (s): backtracking over (k-1)-linear families
# ---------------------------------------------------------------------------


def _linear_search(n: int, k: int, budget_bits: int) -> SearchResult:
    max_families = 1 << budget_bits
    cands = []
    for size in range(k, n + 1):
        cands.extend(combinations(range(n), size))
    cand_masks = []
    for e in cands:
        mask = 0
        for v in e:
            mask |= 1 << v
        cand_masks.append(mask)

    w_mk, w_m0, denom = _objective_weights(n, k)
    level_k1 = list(combinations(range(n), k + 1))

    best: int | None = None
    best_families: list[tuple[tuple[int, ...], ...]] = []
    visited = 0
    chosen: list[int] = []
    chosen_masks: list[int] = []
    section: set[tuple[int, ...]] = set()

    def evaluate() -> None:
        nonlocal best, visited
        visited += 1
        if visited > max_families:
            raise BudgetError(
                f"constrained search visited more than 2^{budget_bits} families "
                f"(n={n}, k={k}); raise the budget to override"
            )
        m0 = sum(
            1
            for cand in level_k1
            if not any(sub in section for sub in combinations(cand, k))
        )
        score = len(section) * w_mk + m0 * w_m0
        if best is None or score < best:
            best = score
            best_families.clear()
        if score == best and len(best_families) < _MAX_RAW_WITNESSES:
            best_families.append(tuple(cands[i] for i in chosen))

    def rec(start: int) -> None:
        evaluate()
        for j in range(start, len(cands)):
            mask = cand_masks[j]
            if any((mask & m).bit_count() >= k - 1 for m in chosen_masks):
                continue
            added = list(combinations(cands[j], k))
            chosen.append(j)
            chosen_masks.append(mask)
            section.update(added)
            rec(j + 1)
            section.difference_update(added)
            chosen_masks.pop()
            chosen.pop()

    rec(0)
    witnesses = _canonical_witnesses(n, best_families)
    return SearchResult(n, k, True, Fraction(best, denom), witnesses, visited)


def brute_force_s(
    n: int,
    k: int,
    linear_constrained: bool,
    budget_bits: int = DEFAULT_BUDGET_BITS,
    workers: int = 1,
) -> SearchResult:
    """Exact minimum of the semi-simplex YBLM sum over hypergraphs on n vertices.

    linear_constrained=True restricts to (k-1)-linear hypergraphs (the s
    flavor); False searches all hypergraphs through their k-sections (s').
    Refuses to start (or aborts) once the candidate space exceeds
    2^budget_bits.
    """
    if k < 2:
        raise InputError("search needs k >= 2")
    if n < k + 1:
        raise InputError(f"search needs n >= k+1, got n={n}, k={k}")
    if linear_constrained:
        return _linear_search(n, k, budget_bits)
    return _free_search(n, k, budget_bits, workers)


def verify_witness(result: SearchResult, witness: Hypergraph) -> bool:
    """Recompute the witness's semi-simplex sum against the reported minimum."""
    report = semi_simplexes(witness, result.k)
    if yblm_sum(report.family, witness.n) != result.minimum:
        return False
    if result.linear_constrained:
        return is_q_linear(witness, result.k - 1)
    # unconstrained witnesses are reported through their k-sections
    return witness.edges == k_section(witness, result.k)


def monotonicity_check(
    k: int,
    n_max: int,
    budget_bits: int = DEFAULT_BUDGET_BITS,
    workers: int = 1,
) -> bool:
    """True iff s(n,k) and s'(n,k) are non-decreasing for n = k+1 .. n_max.

    A False return would contradict vertex-deletion monotonicity, so it is
    treated as an implementation-bug signal: the computed tables are dumped
    to stderr for diagnosis.
    """
    rows = []
    for n in range(k + 1, n_max + 1):
        s_val = brute_force_s(n, k, True, budget_bits, workers).minimum
        sp_val = brute_force_s(n, k, False, budget_bits, workers).minimum
        rows.append((n, s_val, sp_val))
    ok = all(a[1] <= b[1] and a[2] <= b[2] for a, b in zip(rows, rows[1:]))
    if not ok:
        print(f"monotonicity violated for k={k}:", file=sys.stderr)
        for n, s_val, sp_val in rows:
            print(f"  n={n}  s={s_val}  s'={sp_val}", file=sys.stderr)
    return ok


def default_budget_bits() -> int:
    """Budget from the environment, or the built-in default."""
    raw = os.environ.get("MINSIMPLEX_BUDGET_BITS")
    if raw is None:
        return DEFAULT_BUDGET_BITS
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"MINSIMPLEX_BUDGET_BITS must be an integer, got {raw!r}") from exc
