"""Command-line front end: invariants, distances, witnesses, verification, export.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 configuration
problem or an empty verification sweep.  Output is byte-identical across
runs for fixed arguments.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import graphio, oracle, witness
from .errors import GJGError
from .formulas import invariant_report
from .params import Parameters, make_parameters, normalize
from .sweep import SweepConfig, run_sweep, sweep_triples
from .witness import Walk

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_CONFIG = 3


def _parse_set(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_triple(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--v", type=int, required=True, help="ground set size")
    sub.add_argument("--k", type=int, required=True, help="subset size")
    sub.add_argument("--i", type=int, required=True, help="required intersection size")


def _budget(args) -> int:
    if getattr(args, "max_vertices", None) is not None:
        return args.max_vertices
    env = os.environ.get("GJG_MAX_VERTICES")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise GJGError(f"GJG_MAX_VERTICES must be an integer, got {env!r}")
    return oracle.DEFAULT_VERTEX_BUDGET


def _print_report_text(rep) -> None:
    p = rep.params
    print(f"parameters: v={p.v} k={p.k} i={p.i}")
    print(f"class: {p.graph_class.value}")
    print(f"delta: {p.v - 2 * p.k + 2 * p.i}")
    print(f"girth: {graphio.format_value(rep.girth)}")
    print(f"odd_girth: {graphio.format_value(rep.odd_girth)}")
    print(f"diameter: {graphio.format_value(rep.diameter)}")
    print("distance_profile:")
    for x in sorted(rep.distance_profile):
        print(f"  x={x}: {graphio.format_value(rep.distance_profile[x])}")


def _print_walk(p: Parameters, w: Walk, label: str) -> None:
    print(f"{label} of length {w.claimed_length} in {p}:")
    for s in w.vertices:
        body = ",".join(str(e) for e in s)
        print(f"  rank {graphio.rank(p, s):>6} {{{body}}}")
    print(f"verified: {graphio.format_value(witness.verify_walk(p, w))}")


def _lifted(p: Parameters, build) -> Walk:
    """Run a witness construction, complementing through the normalized
    form when v < 2k (the two graphs are isomorphic via complements)."""
    q = normalize(p)
    if q is p:
        return build(q, lambda s: s)
    comp = lambda s: tuple(e for e in range(p.v) if e not in set(s))
    return witness.complement_walk(p, build(q, comp))


def cmd_invariants(args) -> int:
    rep = invariant_report(make_parameters(args.v, args.k, args.i))
    if args.emit == "structured":
        sys.stdout.buffer.write(graphio.export_report(rep))
    else:
        _print_report_text(rep)
    return EXIT_OK


def cmd_distance(args) -> int:
    p = make_parameters(args.v, args.k, args.i)
    if args.x is None and (args.a is None or args.b is None):
        print("error: provide --x or both --a and --b", file=sys.stderr)
        return EXIT_USAGE
    if args.a is not None and args.b is not None:
        a = witness.as_vertex_set(p, args.a)
        b = witness.as_vertex_set(p, args.b)
        x = len(set(a) & set(b))
    else:
        a = b = None
        x = args.x
    rep = invariant_report(p)
    if x not in rep.distance_profile:
        r = sorted(rep.distance_profile)
        raise GJGError(f"intersection size {x} outside [{r[0]}, {r[-1]}]")
    print(graphio.format_value(rep.distance_profile[x]))
    if args.witness:
        if a is None:
            a, b = witness.canonical_pair(p, x)
        walk = _lifted(p, lambda q, comp: witness.geodesic(q, comp(a), comp(b)))
        _print_walk(p, walk, "geodesic")
    return EXIT_OK


def cmd_witness(args) -> int:
    p = make_parameters(args.v, args.k, args.i)
    if args.kind == "geodesic":
        if args.a is not None and args.b is not None:
            a = witness.as_vertex_set(p, args.a)
            b = witness.as_vertex_set(p, args.b)
        elif args.x is not None:
            a, b = witness.canonical_pair(p, args.x)
        else:
            print("error: geodesic needs --x or both --a and --b", file=sys.stderr)
            return EXIT_USAGE
        walk = _lifted(p, lambda q, comp: witness.geodesic(q, comp(a), comp(b)))
        label = "geodesic"
    elif args.kind == "cycle":
        walk = _lifted(p, lambda q, comp: witness.shortest_cycle(q))
        label = "cycle"
    else:
        walk = _lifted(p, lambda q, comp: witness.odd_closed_walk(q))
        label = "odd closed walk"
    if not witness.verify_walk(p, walk):
        print("internal error: constructed walk failed verification", file=sys.stderr)
        return EXIT_DOMAIN
    _print_walk(p, walk, label)
    return EXIT_OK


def cmd_export(args) -> int:
    p = make_parameters(args.v, args.k, args.i)
    g = oracle.build_graph(p, _budget(args))
    payload = graphio.export_graph(g, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cfg = SweepConfig(
            v_max=args.v_max,
            max_vertices=args.max_vertices if args.max_vertices is not None else _budget(args),
            jobs=args.jobs if args.jobs is not None else 1,
        )
    except (ValueError, GJGError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if not sweep_triples(cfg):
        print("warning: nothing verified (no triple fits the vertex budget)", file=sys.stderr)
        return EXIT_CONFIG
    outcome = run_sweep(cfg)
    for r in outcome.results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} J({r.v},{r.k},{r.i}) class={r.graph_class} n={r.n} "
              f"checks={sum(r.checks.values())}")
        for msg in r.failures:
            print(f"     {msg}")
    print(f"complement isomorphism: {outcome.complement_checked} pairs checked, "
          f"{len(outcome.complement_failures)} failures")
    for msg in outcome.complement_failures:
        print(f"     {msg}")
    print(f"interface checks: {outcome.interface_checked} run, "
          f"{len(outcome.interface_failures)} failures")
    for msg in outcome.interface_failures:
        print(f"     {msg}")
    failed = [r for r in outcome.results if not r.passed]
    print(f"total: {len(outcome.results)} triples, {len(outcome.results) - len(failed)} passed, "
          f"{len(failed)} failed, {outcome.total_checks} individual checks")
    return EXIT_OK if outcome.passed else EXIT_DOMAIN


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gjg",
        description="Invariants, witnesses, and brute-force verification "
                    "for generalized Johnson graphs J(v,k,i).",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("invariants", help="girth, odd girth, diameter, distance profile")
    _add_triple(s)
    s.add_argument("--emit", choices=["text", "structured"], default="text")
    s.set_defaults(func=cmd_invariants)

    s = subs.add_parser("distance", help="distance for an intersection size or vertex pair")
    _add_triple(s)
    s.add_argument("--x", type=int, default=None, help="intersection size")
    s.add_argument("--a", type=_parse_set, default=None, help="first vertex, e.g. 0,1,2,3")
    s.add_argument("--b", type=_parse_set, default=None, help="second vertex")
    s.add_argument("--witness", action="store_true", help="also print a geodesic")
    s.set_defaults(func=cmd_distance)

    s = subs.add_parser("witness", help="explicit cycle, odd closed walk, or geodesic")
    _add_triple(s)
    s.add_argument("kind", choices=["cycle", "oddwalk", "geodesic"])
    s.add_argument("--x", type=int, default=None)
    s.add_argument("--a", type=_parse_set, default=None)
    s.add_argument("--b", type=_parse_set, default=None)
    s.set_defaults(func=cmd_witness)

    s = subs.add_parser("verify", help="sweep all triples, compare formulas to the oracle")
    s.add_argument("--v-max", type=int, default=16)
    s.add_argument("--max-vertices", type=int, default=None)
    s.add_argument("--jobs", type=lambda t: t if t == "auto" else int(t), default=None)
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("export", help="write the explicit graph as edgelist or DIMACS")
    _add_triple(s)
    s.add_argument("--format", choices=["edgelist", "dimacs"], required=True)
    s.add_argument("--out", default=None, help="output path (default stdout)")
    s.add_argument("--max-vertices", type=int, default=None)
    s.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GJGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
