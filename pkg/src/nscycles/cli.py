"""Command-line front end: graph I/O, corpus generation, batch verification.

All output is canonical JSON (sorted keys, fixed indentation), so identical
invocations produce byte-identical reports.  Timing is volatile and is only
emitted under --timing.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GraphError, ParseError, UnknownName
from .graph_core import (
    Graph,
    blocks,
    build_graph,
    fingerprint,
    is_connected,
    is_k_connected,
    is_top_3_connected,
    is_top_k4,
    thread_from_edges,
    threads,
)
from .cycle_space import (
    Gf2Matrix,
    cyclomatic_number,
    express_in_span,
    fundamental_basis,
)
from .circuits import enumerate_circuits, non_separating_circuits
from .decomposition import decompose_cs_element, ear_sequence, theta_pair
from .cocircuits import bonds, minimal_cut_candidates, verify_cocircuit_identity
from .corpus import gen_corpus
from .verify import verify_graph


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n m``, then m lines ``u v``."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("line 1: expected header 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("line 1: expected header 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("line 1: header fields must be integers") from None
    pairs = []
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise ParseError(f"expected {m} edge lines, found {len(body)}")
    for i, line in enumerate(body, start=2):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"line {i}: expected 'u v'")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"line {i}: endpoints must be integers") from None
    return build_graph(n, pairs)


def _load_graph(args) -> tuple[Graph, str]:
    if args.gen is not None:
        return gen_corpus(args.gen, args.seed), args.gen
    if args.input is not None:
        with open(args.input, encoding="utf-8") as handle:
            return parse_edge_list(handle.read()), args.input
    raise UnknownName("one of --gen NAME or --input FILE is required")


def _edge_ids(flag: str) -> list[int]:
    try:
        return [int(part) for part in flag.split(",") if part.strip()]
    except ValueError:
        raise ParseError(f"bad edge id list {flag!r}") from None


def _emit(args, payload: dict) -> None:
    if not args.quiet:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_gen(args) -> int:
    g, name = _load_graph(args)
    if args.edgelist:
        if not args.quiet:
            lines = [f"{len(g.vertices)} {len(g.edges)}"]
            lines += [f"{u} {v}" for u, v in (g.psi[e] for e in sorted(g.edges))]
            print("\n".join(lines))
        return 0
    _emit(args, {
        "name": name,
        "seed": args.seed,
        "vertices": len(g.vertices),
        "edges": [list(g.psi[e]) for e in sorted(g.edges)],
    })
    return 0


def _cmd_info(args) -> int:
    g, name = _load_graph(args)
    connected = is_connected(g)
    _emit(args, {
        "graph": name,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "simple": g.simple,
        "connected": connected,
        "three_connected": g.simple and is_k_connected(g, 3),
        "top_three_connected": is_top_3_connected(g),
        "top_k4": is_top_k4(g),
        "cyclomatic_number": cyclomatic_number(g) if connected else None,
        "fingerprint": fingerprint(g),
    })
    return 0


def _cmd_blocks(args) -> int:
    g, name = _load_graph(args)
    decomposition = blocks(g)
    _emit(args, {
        "graph": name,
        "blocks": [list(b.ids()) for b in decomposition.blocks],
        "cut_vertices": sorted(decomposition.cut_vertices),
        "block_count": decomposition.block_count,
    })
    return 0


def _cmd_threads(args) -> int:
    g, name = _load_graph(args)
    _emit(args, {
        "graph": name,
        "threads": [
            {"edges": list(t.edges), "vertices": list(t.vertices)}
            for t in threads(g)
        ],
    })
    return 0


def _cmd_circuits(args) -> int:
    g, name = _load_graph(args)
    found = enumerate_circuits(g, args.cap)
    _emit(args, {
        "graph": name,
        "count": len(found),
        "circuits": [list(c.edges.ids()) for c in found],
    })
    return 0


def _cmd_nc(args) -> int:
    g, name = _load_graph(args)
    catalog = non_separating_circuits(g, args.cap)
    matrix = Gf2Matrix.from_rows(catalog.edge_sets(), g.universe)
    expressions = [
        sorted(express_in_span(row, matrix).coefficients)
        for row in fundamental_basis(g)
    ]
    _emit(args, {
        "graph": name,
        "fingerprint": catalog.graph_fingerprint,
        "count": len(catalog),
        "circuits": [list(c.edges.ids()) for c in catalog],
        "basis_expressions": expressions,
    })
    return 0


def _cmd_basis(args) -> int:
    g, name = _load_graph(args)
    basis = fundamental_basis(g)
    _emit(args, {
        "graph": name,
        "count": len(basis),
        "circuits": [list(row.ids()) for row in basis],
    })
    return 0


def _cmd_decompose(args) -> int:
    g, name = _load_graph(args)
    target = g.edge_set(_edge_ids(args.circuit))
    cert = decompose_cs_element(g, target)
    _emit(args, {
        "graph": name,
        "target": list(cert.target.ids()),
        "parts": [list(c.edges.ids()) for c in cert.parts],
        "host_fingerprint": cert.host_fingerprint,
    })
    return 0


def _cmd_theta(args) -> int:
    g, name = _load_graph(args)
    t = thread_from_edges(g, _edge_ids(args.thread))
    pair = theta_pair(g, t, args.cap)
    _emit(args, {
        "graph": name,
        "thread": list(t.edges),
        "first": list(pair.first.edges.ids()),
        "second": list(pair.second.edges.ids()),
    })
    return 0


def _cmd_ears(args) -> int:
    g, name = _load_graph(args)
    seq = ear_sequence(g)
    _emit(args, {
        "graph": name,
        "steps": [
            {"fingerprint": fp, "thread": list(t.edges)} for fp, t in seq.steps
        ],
        "terminal": {
            "vertices": sorted(seq.terminal.vertices),
            "edges": [[e, *seq.terminal.psi[e]] for e in sorted(seq.terminal.edges)],
        },
    })
    return 0


def _cmd_bonds(args) -> int:
    g, name = _load_graph(args)
    found = bonds(g)
    _emit(args, {
        "graph": name,
        "count": len(found),
        "bonds": [list(b.edges.ids()) for b in found],
    })
    return 0


def _cmd_whitney(args) -> int:
    g, name = _load_graph(args)
    catalog = non_separating_circuits(g, args.cap)
    bond_count = len(bonds(g))
    candidate_count = len(minimal_cut_candidates(g, catalog))
    match = verify_cocircuit_identity(g)
    _emit(args, {
        "graph": name,
        "bond_count": bond_count,
        "candidate_count": candidate_count,
        "match": match,
    })
    return 0 if match else 1


def _cmd_verify_all(args) -> int:
    g, name = _load_graph(args)
    report = verify_graph(g, name, args.cap)
    _emit(args, report.to_dict(include_timing=args.timing))
    return 0 if report.all_passed else 1


_COMMANDS = {
    "info": _cmd_info,
    "blocks": _cmd_blocks,
    "threads": _cmd_threads,
    "circuits": _cmd_circuits,
    "nc": _cmd_nc,
    "basis": _cmd_basis,
    "decompose": _cmd_decompose,
    "theta": _cmd_theta,
    "ears": _cmd_ears,
    "bonds": _cmd_bonds,
    "whitney": _cmd_whitney,
    "verify-all": _cmd_verify_all,
    "gen": _cmd_gen,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--gen", metavar="NAME", help="generate a named corpus graph")
    source.add_argument("--input", metavar="FILE", help="read an edge-list file")
    common.add_argument("--seed", type=int, default=0, help="seed for --gen (default 0)")
    common.add_argument("--cap", type=int, default=100_000,
                        help="circuit enumeration cap (default 100000)")
    common.add_argument("--json", action="store_true", help="JSON output (the default)")
    common.add_argument("--quiet", action="store_true", help="suppress output; exit code only")
    common.add_argument("--timing", action="store_true",
                        help="include volatile elapsed_ms in reports")

    parser = argparse.ArgumentParser(
        prog="nscycles",
        description="Cycle-space decompositions into non-separating circuits, with verifiable reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "decompose":
            p.add_argument("--circuit", required=True, metavar="e1,e2,...",
                           help="edge ids of the target cycle-space element")
        if name == "theta":
            p.add_argument("--thread", required=True, metavar="e1,e2,...",
                           help="edge ids of the thread")
        if name == "gen":
            p.add_argument("--edgelist", action="store_true",
                           help="emit the plain edge-list format instead of JSON")
    return parser


def run_command(argv) -> int:
    """Parse and run one CLI invocation, returning the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, UnknownName) as exc:
        print(f"nscycles: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"nscycles: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
