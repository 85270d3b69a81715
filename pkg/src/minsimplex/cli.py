"""Command-line front door: enumeration, construction, search, reactions.

Exit codes are stable: 0 success, 2 input error, 3 invariant violation,
4 budget exceeded. All numeric output is exact ("p/q"), with a decimal
approximation column where that helps a human reader.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import extremal, geometry, hypergraph, matroid, stoichiometry
from .errors import BudgetError, InputError, InvariantError


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _frac_str(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator} (~{float(x):.6f})"
    return str(x)


def _counts_lines(counts: dict[int, int], total) -> list[str]:
    lines = [f"size {size}: {count}" for size, count in sorted(counts.items())]
    lines.append(f"total: {total}")
    return lines


def _counts_csv(counts: dict[int, int]) -> str:
    rows = ["size,count"] + [f"{size},{count}" for size, count in sorted(counts.items())]
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# simplexes
# ---------------------------------------------------------------------------


def _circuits_json(cfg, circuits, counts_only: bool) -> dict:
    counts: dict[str, int] = {}
    for c in circuits:
        counts[str(c.size)] = counts.get(str(c.size), 0) + 1
    obj = {
        "dimension": cfg.dimension,
        "vector_count": len(cfg),
        "counts": counts,
        "total": len(circuits),
    }
    if not counts_only:
        obj["circuits"] = [
            {"members": list(c.members), "coefficients": list(c.coefficients)} for c in circuits
        ]
    return obj


def cmd_simplexes(args) -> int:
    if args.points:
        ps = geometry.load_points(args.points)
        report = geometry.enumerate_affine_simplexes(ps)
        if args.format == "json":
            _emit(_dump_json(report.to_json_obj(args.counts_only)), args.out)
        elif args.format == "csv":
            _emit(_counts_csv(report.counts), args.out)
        else:
            _emit("\n".join(_counts_lines(report.counts, report.total)), args.out)
        return 0

    cfg = matroid.load_vectors(args.vectors)
    circuits = matroid.enumerate_circuits(cfg)
    if not args.project:
        by_size = matroid.count_circuits_by_size(cfg)
        if args.format == "json":
            _emit(_dump_json(_circuits_json(cfg, circuits, args.counts_only)), args.out)
        elif args.format == "csv":
            _emit(_counts_csv(by_size), args.out)
        else:
            _emit("\n".join(_counts_lines(by_size, len(circuits))), args.out)
        return 0

    ps = geometry.project_to_affine(cfg)
    report = geometry.enumerate_affine_simplexes(ps)
    circuit_members = sorted(c.members for c in circuits)
    simplex_members = sorted(s.members for s in report.simplexes)
    match = circuit_members == simplex_members
    obj = {
        "circuits": _circuits_json(cfg, circuits, args.counts_only),
        "projected": report.to_json_obj(args.counts_only),
        "match": match,
    }
    if args.format == "json":
        _emit(_dump_json(obj), args.out)
    else:
        lines = [f"circuits: {len(circuits)}", f"projected simplexes: {report.total}"]
        lines.append(f"match: {'yes' if match else 'NO'}")
        _emit("\n".join(lines), args.out)
    if not match:
        print("projection correspondence violated", file=sys.stderr)
        return 3
    return 0


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------


def _construction_id(args) -> tuple[extremal.ConstructionId, int]:
    kind, params = args.kind, args.params
    if kind in ("inplane-generic", "cone"):
        if len(params) != 2:
            raise InputError(f"{kind} takes two integers: d n (e.g. '{kind} 3 9')")
        return extremal.ConstructionId(kind, d=params[0]), params[1]
    if kind == "two-disjoint-edges":
        if len(params) != 2:
            raise InputError(f"{kind} takes two integers: k n")
        return extremal.ConstructionId(kind, k=params[0]), params[1]
    if len(params) != 1:
        raise InputError(f"{kind} takes a single integer n")
    return extremal.ConstructionId(kind), params[0]


def cmd_construct(args) -> int:
    cid, n = _construction_id(args)
    built = extremal.construct(cid, n)
    expected = extremal.expected_count(cid, n)
    if isinstance(built, hypergraph.Hypergraph):
        report = hypergraph.semi_simplexes(built, cid.k)
        enumerated = hypergraph.yblm_sum(report.family, built.n)
        config_obj = built.to_json_obj()
    else:
        enumerated = geometry.enumerate_affine_simplexes(built).total
        config_obj = built.to_json_obj()
    agree = enumerated == expected
    prefix = args.out or f"{args.kind}-{n}"
    with open(f"{prefix}.json", "w", encoding="utf-8") as fh:
        fh.write(_dump_json(config_obj) + "\n")
    sidecar = {
        "construction": str(cid),
        "n": n,
        "expected": str(expected),
        "enumerated": str(enumerated),
        "agree": agree,
    }
    with open(f"{prefix}.counts.json", "w", encoding="utf-8") as fh:
        fh.write(_dump_json(sidecar) + "\n")
    print(f"{cid} n={n}: expected {expected}, enumerated {enumerated}")
    print(f"wrote {prefix}.json and {prefix}.counts.json")
    if not agree:
        print("self-check failed: enumerated count disagrees with the formula", file=sys.stderr)
        return 3
    return 0


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def cmd_search(args) -> int:
    budget = args.budget if args.budget is not None else extremal.default_budget_bits()
    workers = args.workers or os.cpu_count() or 1
    result = extremal.brute_force_s(
        args.n, args.k, args.linear, budget_bits=budget, workers=workers
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_dump_json(result.to_json_obj()) + "\n")
    if args.format == "json":
        print(_dump_json(result.to_json_obj()))
        return 0
    if args.format == "csv":
        m = result.minimum
        print("n,k,flavor,minimum,approx")
        print(f"{args.n},{args.k},{'s' if args.linear else 's_prime'},"
              f"{m.numerator}/{m.denominator},{float(m):.6f}")
        return 0
    flavor = "s" if args.linear else "s'"
    print(f"{flavor}({args.n},{args.k}) = {_frac_str(result.minimum)}")
    print(f"searched {result.search_space_size} candidates; {len(result.witnesses)} witness(es)")
    ref = extremal.reference_bounds(args.k)
    print(f"reference: s_{args.k} <= {_frac_str(ref.upper_sk)}, "
          f"s'_{args.k} <= {_frac_str(ref.upper_s_prime_k)}, "
          f"s({args.k + 1},{args.k}) = {_frac_str(ref.lower_start)}")
    if args.k == 2:
        closed = extremal.s2_exact(args.n)
        tag = "agrees" if closed == result.minimum else "DISAGREES"
        print(f"closed form 1 - floor(n^2/4)/C(n,2) = {_frac_str(closed)} ({tag})")
    return 0


# ---------------------------------------------------------------------------
# react
# ---------------------------------------------------------------------------


def cmd_react(args) -> int:
    universe = None
    if args.universe:
        universe = stoichiometry.AtomUniverse(tuple(s.strip() for s in args.universe.split(",")))
    species = stoichiometry.load_species(args.species_file, universe)
    reactions = stoichiometry.minimal_reactions(species)
    if args.format == "json":
        obj = {"reactions": [r.to_json_obj() for r in reactions]}
        if args.report:
            obj["report"] = stoichiometry.reaction_count_report(species).to_json_obj()
        _emit(_dump_json(obj), args.out)
        return 0
    lines = []
    for r in reactions:
        note = "   # isomer/multiple dose" if r.is_isomerization else ""
        lines.append(r.equation() + note)
    if args.report:
        rep = stoichiometry.reaction_count_report(species)
        lines.append(f"species: {rep.species_count}, rank: {rep.configuration_rank}, "
                     f"benchmark C(n, r+1) = {rep.benchmark}")
    _emit("\n".join(lines) if lines else "", args.out)
    return 0


# ---------------------------------------------------------------------------
# sperner
# ---------------------------------------------------------------------------


def cmd_sperner(args) -> int:
    h = hypergraph.load_hypergraph(args.hypergraph)
    report = hypergraph.semi_simplexes(h, args.k)
    sperner_ok = hypergraph.is_sperner(report.family)
    total = hypergraph.yblm_sum(report.family, h.n)
    obj = report.to_json_obj(args.counts_only)
    obj["sperner"] = sperner_ok
    obj["yblm_sum"] = f"{total.numerator}/{total.denominator}"
    if args.deficit:
        deficit = hypergraph.semi_simplex_deficit(h, args.k)
        obj["deficit"] = f"{deficit.numerator}/{deficit.denominator}"
    if args.format == "json":
        _emit(_dump_json(obj), args.out)
        return 0
    if args.format == "csv":
        _emit(_counts_csv(report.counts), args.out)
        return 0
    lines = _counts_lines(report.counts, report.total)
    lines.append(f"sperner: {'yes' if sperner_ok else 'NO'}")
    lines.append(f"yblm sum: {_frac_str(total)}")
    if args.deficit:
        lines.append(f"deficit: {_frac_str(hypergraph.semi_simplex_deficit(h, args.k))}")
    _emit("\n".join(lines), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _suite_constructions() -> list[tuple[str, bool]]:
    checks = []
    for n in range(6, 13):
        cid = extremal.ConstructionId("parallel-pairs")
        got = geometry.enumerate_affine_simplexes(extremal.construct(cid, n)).total
        want = extremal.expected_count(cid, n)
        checks.append((f"parallel-pairs n={n}: {got} == {want}", got == want))
    for d in (2, 3):
        for n in range(d + 2, 11):
            cid = extremal.ConstructionId("inplane-generic", d=d)
            got = geometry.enumerate_affine_simplexes(extremal.construct(cid, n)).total
            want = extremal.expected_count(cid, n)
            checks.append((f"inplane-generic d={d} n={n}: {got} == {want}", got == want))
            cid = extremal.ConstructionId("cone", d=d)
            got = geometry.enumerate_affine_simplexes(extremal.construct(cid, n)).total
            want = extremal.expected_count(cid, n)
            checks.append((f"cone d={d} n={n}: {got} == {want}", got == want))
    for n in range(6, 13):
        cid = extremal.ConstructionId("two-lines")
        got = geometry.enumerate_affine_simplexes(extremal.construct(cid, n)).total
        want = extremal.expected_count(cid, n)
        checks.append((f"two-lines n={n}: {got} == {want}", got == want))
    for k in (2, 3):
        for n in range(3, 7):
            cid = extremal.ConstructionId("two-disjoint-edges", k=k)
            built = extremal.construct(cid, n)
            got = hypergraph.yblm_sum(hypergraph.semi_simplexes(built, k).family, built.n)
            want = extremal.expected_count(cid, n)
            checks.append((f"two-disjoint-edges k={k} n={n}: {got} == {want}", got == want))
    return checks


def _random_linear_hypergraph(rng: random.Random, n: int, k: int) -> hypergraph.Hypergraph:
    edges: list[tuple[int, ...]] = []
    for _ in range(3 * n):
        size = rng.randint(k, min(n, k + 3))
        cand = tuple(sorted(rng.sample(range(n), size)))
        if cand in edges:
            continue
        if all(len(set(cand) & set(e)) < k - 1 for e in edges):
            edges.append(cand)
    return hypergraph.Hypergraph(n, tuple(edges))


def _suite_sperner() -> list[tuple[str, bool]]:
    rng = random.Random(20531)
    checks = []
    for k in (3, 4):
        for trial in range(6):
            n = rng.randint(k + 2, 14)
            h = _random_linear_hypergraph(rng, n, k)
            report = hypergraph.semi_simplexes(h, k)
            ok = hypergraph.is_sperner(report.family)
            total = hypergraph.yblm_sum(report.family, n)
            checks.append(
                (f"random k={k} n={n} trial={trial}: sperner and sum {total} <= 1",
                 ok and total <= 1)
            )
    for n in (8, 10):
        ps = extremal.construct(extremal.ConstructionId("parallel-pairs"), n)
        h = hypergraph.from_point_set(ps)
        report = hypergraph.semi_simplexes(h, 4)
        ok = hypergraph.is_sperner(report.family)
        total = hypergraph.yblm_sum(report.family, h.n)
        deficit = hypergraph.semi_simplex_deficit(h, 4)
        checks.append(
            (f"parallel-pairs n={n} as hypergraph: sperner, sum {total} <= 1, "
             f"deficit {deficit}", ok and total <= 1)
        )
    return checks


def _s_small_rows(workers: int) -> list[tuple[int, int, Fraction, Fraction, Fraction]]:
    rows = []
    for n in range(3, 7):
        rows.append((
            n, 2,
            extremal.brute_force_s(n, 2, True, workers=workers).minimum,
            extremal.brute_force_s(n, 2, False, workers=workers).minimum,
            extremal.s2_exact(n),
        ))
    for k in (3, 4):
        rows.append((
            k + 1, k,
            extremal.brute_force_s(k + 1, k, True, workers=workers).minimum,
            extremal.brute_force_s(k + 1, k, False, workers=workers).minimum,
            Fraction(1, k + 1),
        ))
    return rows


def _suite_s_small(workers: int) -> list[tuple[str, bool]]:
    checks = []
    for n, k, s_val, sp_val, closed in _s_small_rows(workers):
        checks.append(
            (f"s({n},{k}) = {s_val}, s'({n},{k}) = {sp_val}, closed form {closed}",
             s_val == closed and sp_val == closed)
        )
    return checks


def cmd_verify(args) -> int:
    workers = args.workers or os.cpu_count() or 1
    if args.suite == "s-small" and args.format == "csv":
        # plot-ready table of searched minima against the closed forms
        print("n,k,s,s_prime,closed_form")
        failures = 0
        for n, k, s_val, sp_val, closed in _s_small_rows(workers):
            print(f"{n},{k},{s_val},{sp_val},{closed}")
            failures += 0 if s_val == closed and sp_val == closed else 1
        return 0 if failures == 0 else 1
    if args.suite == "constructions":
        checks = _suite_constructions()
    elif args.suite == "sperner":
        checks = _suite_sperner()
    else:
        checks = _suite_s_small(workers)
    failures = 0
    for message, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {message}")
        failures += 0 if ok else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minsimplex",
        description="Exact minimal-dependency enumeration and extremal search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplexes", help="enumerate circuits or affine simplexes")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--points", help="point set file (JSON or CSV)")
    src.add_argument("--vectors", help="vector configuration file (JSON)")
    p.add_argument("--project", action="store_true",
                   help="project vectors to points and compare circuit/simplex families")
    p.add_argument("--counts-only", action="store_true")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_simplexes)

    p = sub.add_parser("construct", help="build an extremal configuration and self-check it")
    p.add_argument("kind", choices=extremal.KINDS)
    p.add_argument("params", type=int, nargs="+", metavar="N",
                   help="size n, preceded by d (inplane-generic, cone) or "
                        "k (two-disjoint-edges): e.g. 'cone 3 9'")
    p.add_argument("--out", help="output prefix (default KIND-N)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive minimum of the semi-simplex sum")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    flavor = p.add_mutually_exclusive_group(required=True)
    flavor.add_argument("--linear", action="store_true", help="(k-1)-linear hypergraphs: s(n,k)")
    flavor.add_argument("--free", action="store_true", help="all hypergraphs: s'(n,k)")
    p.add_argument("--budget", type=int, default=None,
                   help="log2 of the candidate budget (default MINSIMPLEX_BUDGET_BITS or 25)")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="also write the JSON SearchResult here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("react", help="enumerate minimal balanced reactions")
    p.add_argument("species_file")
    p.add_argument("--universe", help="comma-separated atom order, e.g. C,H,O")
    p.add_argument("--report", action="store_true", help="append the count report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_react)

    p = sub.add_parser("sperner", help="semi-simplex families, Sperner check, YBLM sum")
    p.add_argument("--hypergraph", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--deficit", action="store_true",
                   help="also report the normalized deficit (needs (k-1)-linearity)")
    p.add_argument("--counts-only", action="store_true")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sperner)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("constructions", "sperner", "s-small"), required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=("text", "csv"), default="text",
                   help="csv (s-small only) emits the plot-ready value table")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 4
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except (InputError, OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
