"""Command-line front end.

edgealg <command> [FILE] [flags] reads an edge list (one `u v` pair per
line, `#` comments, `-` for stdin), prints JSON to stdout, and reserves
stderr for diagnostics. Exit codes for `analyze`: 0 the edge algebra is a
complete intersection, 1 it is not, 2 error or inconclusive. All other
commands exit 0 on success and 2 on error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import families
from .binomial import (
    BinomialBasis,
    cycle_generators,
    elimination_generators,
    minimalize,
)
from .cycles import CYCLE_CAP_DEFAULT, chordless_cycles, is_ci_graph
from .errors import DomainError, EdgeAlgebraError
from .graph import (
    Graph,
    connected_components,
    height,
    is_bipartite,
    is_planar,
    parse_graph,
    to_dot,
)
from .hilbert import h_vector
from .oracle import MONOMIAL_CAP_DEFAULT, minimal_generator_census


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text)


def _emit(payload, pretty_lines=None, pretty: bool = False) -> None:
    if pretty and pretty_lines is not None:
        for line in pretty_lines:
            print(line)
    else:
        print(json.dumps(payload, indent=2, sort_keys=False))


def _basis_json(basis: BinomialBasis) -> dict:
    return {
        "count": len(basis),
        "degrees": {str(d): c for d, c in sorted(basis.degrees().items())},
        "complete_through": basis.complete_through,
        "elements": basis.to_json(),
    }


def _basis_pretty(basis: BinomialBasis) -> list[str]:
    lines = [f"{len(basis)} binomials"]
    lines += [f"  {b.render()}" for b in basis.elements]
    return lines


def cmd_analyze(args) -> int:
    g = _read_graph(args.file)
    side = is_bipartite(g)
    cycles = chordless_cycles(g, cap=args.cycle_cap)
    bound = g.n_edges - g.n_vertices + len(connected_components(g))
    planar = is_planar(g)
    report = {
        "v": g.n_vertices,
        "e": g.n_edges,
        "components": len(connected_components(g)),
        "bipartite": side is not None,
        "planar": planar.planar,
        "chordless_cycles": len(cycles),
        "bound": bound,
        "height": height(g),
    }
    combinatorial: Optional[bool] = None
    witness = None
    if side is not None:
        verdict = is_ci_graph(g, cap=args.cycle_cap)
        combinatorial = verdict.is_ci
        if verdict.witness is not None:
            c1, c2, shared = verdict.witness
            witness = {
                "cycle_1": list(c1.edges),
                "cycle_2": list(c2.edges),
                "shared_edges": list(shared),
            }
    try:
        census = minimal_generator_census(
            g, max_deg=args.max_degree, monomial_cap=args.monomial_cap
        )
    except DomainError as exc:
        census = None
        print(f"census skipped: {exc}", file=sys.stderr)
    report["combinatorial_ci"] = combinatorial
    report["witness"] = witness
    if census is None:
        report["census"] = None
        census_ci = None
    else:
        report["census"] = {
            "degrees": {str(d): c for d, c in sorted(census.degrees.items())},
            "total": census.total,
            "height": census.height,
            "complete_up_to": census.complete_up_to,
            "conclusive": census.conclusive,
            "ci": census.is_complete_intersection,
            "notes": list(census.notes),
        }
        census_ci = census.is_complete_intersection
    if combinatorial is not None:
        ci = combinatorial
        agreement = None if census_ci is None else (census_ci == combinatorial)
    else:
        ci = census_ci
        agreement = None
    report["ci"] = ci
    report["agreement"] = {"combinatorial_vs_census": agreement}
    census_line = "census: skipped (pass --max-degree)"
    if census is not None:
        census_line = (
            f"census: total {census.total}, height {census.height}, "
            f"complete up to degree {census.complete_up_to}"
        )
    pretty = [
        f"vertices {g.n_vertices}, edges {g.n_edges}, "
        f"components {report['components']}",
        f"bipartite: {report['bipartite']}, planar: {planar.planar}",
        f"chordless cycles: {len(cycles)} (bound e-v+c = {bound})",
        census_line,
        f"complete intersection: {ci}",
    ]
    _emit(report, pretty, args.pretty)
    if ci is None:
        print("inconclusive: raise --max-degree", file=sys.stderr)
        return 2
    return 0 if ci else 1


def cmd_generate(args) -> int:
    g = families.generate(args.family, args.n)
    label = args.family if args.n is None else f"{args.family} n={args.n}"
    print(f"# {label}: {g.n_vertices} vertices, {g.n_edges} edges")
    for u, v in g.edges:
        print(f"{u} {v}")
    return 0


def cmd_cycles(args) -> int:
    g = _read_graph(args.file)
    cycles = chordless_cycles(g, cap=args.cycle_cap)
    payload = {
        "count": len(cycles),
        "cycles": [
            {"vertices": list(c.vertices), "edges": list(c.edges)} for c in cycles
        ],
    }
    pretty = [f"{len(cycles)} chordless cycles"] + [
        "  " + "-".join(str(v) for v in c.vertices) for c in cycles
    ]
    _emit(payload, pretty, args.pretty)
    return 0


def _minimal_basis(g: Graph, max_degree, cap) -> BinomialBasis:
    if is_bipartite(g) is not None:
        return cycle_generators(g)
    gb = elimination_generators(g, max_degree=max_degree, cap=cap)
    return minimalize(gb, g)


def cmd_gens(args) -> int:
    g = _read_graph(args.file)
    basis = _minimal_basis(g, args.max_degree, args.degree_cap)
    _emit(_basis_json(basis), _basis_pretty(basis), args.pretty)
    return 0


def cmd_groebner(args) -> int:
    g = _read_graph(args.file)
    basis = elimination_generators(g, max_degree=args.max_degree, cap=args.degree_cap)
    _emit(_basis_json(basis), _basis_pretty(basis), args.pretty)
    return 0


def cmd_hvector(args) -> int:
    g = _read_graph(args.file)
    hv = h_vector(g, args.max_degree)
    from .hilbert import MonomialIdeal, hilbert_function, kernel_groebner_basis

    gb = kernel_groebner_basis(g)
    ideal = MonomialIdeal.from_monomials(b.plus for b in gb.elements)
    H = hilbert_function(ideal, g.n_edges, args.max_degree)
    payload = {"d": hv.d, "L": hv.L, "h": list(hv.entries), "H": list(H)}
    pretty = [
        f"d = {hv.d}, L = {hv.L}",
        "h = (" + ", ".join(str(x) for x in hv.entries) + ")",
        "H = (" + ", ".join(str(x) for x in H) + ")",
    ]
    _emit(payload, pretty, args.pretty)
    return 0


def cmd_oracle_check(args) -> int:
    g = _read_graph(args.file)
    census = minimal_generator_census(
        g, max_deg=args.max_degree, monomial_cap=args.monomial_cap
    )
    payload = {
        "degrees": {str(d): c for d, c in sorted(census.degrees.items())},
        "total": census.total,
        "height": census.height,
        "ci": census.is_complete_intersection,
        "complete_up_to": census.complete_up_to,
        "conclusive": census.conclusive,
        "notes": list(census.notes),
    }
    pretty = [
        f"minimal generators by degree: "
        + (
            ", ".join(f"{d}: {c}" for d, c in sorted(census.degrees.items()))
            or "none"
        ),
        f"total {census.total}, height {census.height}, "
        f"ci {census.is_complete_intersection}",
    ]
    _emit(payload, pretty, args.pretty)
    ci = census.is_complete_intersection
    if ci is None:
        print("inconclusive: raise --max-degree", file=sys.stderr)
        return 2
    return 0 if ci else 1


def cmd_dot(args) -> int:
    g = _read_graph(args.file)
    sys.stdout.write(to_dot(g))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="edgealg",
        description="Decide whether the edge algebra of a graph is a "
        "complete intersection.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p, census=False, degrees=False, cycle=False):
        p.add_argument("file", help="edge list file, or - for stdin")
        p.add_argument("--pretty", action="store_true", help="human output")
        if census:
            p.add_argument(
                "--max-degree",
                type=int,
                default=None,
                help="census depth (default: chordless-cycle based for "
                "bipartite graphs)",
            )
            p.add_argument(
                "--monomial-cap",
                type=int,
                default=MONOMIAL_CAP_DEFAULT,
                help="abort if the census would enumerate more monomials",
            )
        if degrees:
            p.add_argument(
                "--max-degree",
                type=int,
                default=None,
                help="truncate the basis at this degree (default: exact)",
            )
            p.add_argument(
                "--degree-cap",
                type=int,
                default=24,
                help="abort an exact run past this degree",
            )
        if cycle:
            p.add_argument(
                "--cycle-cap",
                type=int,
                default=CYCLE_CAP_DEFAULT,
                help="abort after this many chordless cycles",
            )

    p = sub.add_parser("analyze", help="full complete intersection report")
    add_common(p, census=True, cycle=True)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("generate", help="emit a named example graph")
    p.add_argument("family", help="gn, hn, cube, octagon, or remark")
    p.add_argument("n", nargs="?", type=int, default=None)
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("cycles", help="chordless cycles")
    add_common(p, cycle=True)
    p.set_defaults(fn=cmd_cycles)

    p = sub.add_parser("gens", help="minimal generators of the kernel")
    add_common(p, degrees=True)
    p.set_defaults(fn=cmd_gens)

    p = sub.add_parser("groebner", help="reduced Groebner basis of the kernel")
    add_common(p, degrees=True)
    p.set_defaults(fn=cmd_groebner)

    p = sub.add_parser("hvector", help="h-vector of the edge algebra")
    add_common(p)
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(fn=cmd_hvector)

    p = sub.add_parser("oracle-check", help="fiber census of minimal generators")
    add_common(p, census=True)
    p.set_defaults(fn=cmd_oracle_check)

    p = sub.add_parser("dot", help="emit DOT for the graph")
    add_common(p)
    p.set_defaults(fn=cmd_dot)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except EdgeAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
