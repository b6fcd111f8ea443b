"""Command-line surface.

Subcommands build or load a dual graph, validate it, compute invariants
of a cycle, classify special/Ulrich cycles, run the brute-force oracle,
and verify the ADE golden tables.  Output is a plain table by default or
a schema-stable JSON document with ``--format json``.  Exit codes:
0 success, 1 validation failure, 2 parse/usage error, 3 verification
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import __version__
from .builders import (
    GraphFormatError,
    build_ade,
    build_cyclic,
    parse_graph,
    validate,
)
from .classify import (
    ChainDepthError,
    ClassificationEntry,
    InvalidGraphError,
    enumerate_special,
    enumerate_ulrich,
    oracle_classify,
    verify_rdp,
)
from .invariants import (
    Filtration,
    colength,
    filtration,
    fundamental_cycle,
    min_gens,
    multiplicity,
    special_module_indices,
    u_invariant,
)
from .lattice import Cycle, CycleError, DualGraph, is_anti_nef, virtual_genus

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


def serialize_graph(g: DualGraph) -> str:
    """Emit the graph text format (round-trips through parse_graph)."""
    lines = [f"vertices {g.vertex_count}"]
    for i, w in enumerate(g.weights):
        if w != -2:
            lines.append(f"weight {i + 1} {w}")
    for i, j in sorted(g.edges):
        lines.append(f"edge {i + 1} {j + 1}")
    return "\n".join(lines) + "\n"


def _graph_dict(g: DualGraph) -> dict:
    return {
        "vertices": g.vertex_count,
        "weights": list(g.weights),
        "edges": [[i + 1, j + 1] for i, j in sorted(g.edges)],
    }


def _filtration_dict(f: Filtration) -> dict:
    return {
        "base": list(f.base),
        "steps": [{"increment": list(y), "cycle": list(z)} for y, z in f.steps],
    }


def _entry_dict(e: ClassificationEntry) -> dict:
    return {
        "cycle": list(e.cycle),
        "colength": e.colength,
        "multiplicity": e.multiplicity,
        "min_gens": e.min_gens,
        "module_indices": sorted(i + 1 for i in e.module_indices),
        "chain": _filtration_dict(e.chain),
        "kind": e.kind,
    }


def _render_graph(g: DualGraph, out) -> None:
    print("graph:", file=out)
    for i in range(g.vertex_count):
        nbrs = " ".join(f"E{j + 1}" for j in g.neighbors(i)) or "-"
        print(f"  E{i + 1} ({g.weights[i]}): {nbrs}", file=out)


def _render_cycle(z: Cycle, marked: frozenset[int] = frozenset()) -> str:
    return " ".join(
        f"{a}*" if i in marked else str(a) for i, a in enumerate(z)
    )


def _render_entries(entries: list[ClassificationEntry], out) -> None:
    for e in entries:
        print(
            f"  {_render_cycle(e.cycle, e.module_indices):<30}"
            f" colength={e.colength} mult={e.multiplicity}"
            f" min_gens={e.min_gens} kind={e.kind}",
            file=out,
        )


def _parse_cycle_arg(text: str, g: DualGraph) -> Cycle:
    try:
        z = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise GraphFormatError(f"cycle {text!r} is not a comma-separated integer list")
    return g.check_cycle(z)


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source (choose one)")
    src.add_argument("--graph", metavar="FILE", help="load graph from a text file")
    src.add_argument("--family", choices=list("ADEade"), help="ADE family")
    src.add_argument("--index", type=int, help="ADE index n")
    src.add_argument("--n", type=int, help="cyclic quotient order n")
    src.add_argument("--q", type=int, help="cyclic quotient parameter q")


def _resolve_graph(args) -> DualGraph:
    if args.graph is not None:
        with open(args.graph, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    if args.family is not None or args.index is not None:
        if args.family is None or args.index is None:
            raise GraphFormatError("--family and --index go together")
        return build_ade(args.family, args.index)
    if args.n is not None or args.q is not None:
        if args.n is None or args.q is None:
            raise GraphFormatError("--n and --q go together")
        return build_cyclic(args.n, args.q)
    raise GraphFormatError("no graph given: use --graph, --family/--index or --n/--q")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="dualcycles",
        description="classify Ulrich and special cycles on resolution dual graphs",
    )
    top.add_argument("--format", choices=["table", "json"], default="table")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="build or load a graph and print it")
    gsub = graph.add_subparsers(dest="graph_command", required=True)
    g_ade = gsub.add_parser("ade")
    g_ade.add_argument("--family", choices=list("ADEade"), required=True)
    g_ade.add_argument("--index", type=int, required=True)
    g_ade.add_argument("--out", metavar="FILE")
    g_cyc = gsub.add_parser("cyclic")
    g_cyc.add_argument("--n", type=int, required=True)
    g_cyc.add_argument("--q", type=int, required=True)
    g_cyc.add_argument("--out", metavar="FILE")
    g_load = gsub.add_parser("load")
    g_load.add_argument("file", metavar="FILE")
    g_load.add_argument("--out", metavar="FILE")

    p = sub.add_parser("validate", help="structural report on a graph")
    _add_graph_source(p)

    p = sub.add_parser("fundamental", help="fundamental cycle (optionally on a sub-support)")
    _add_graph_source(p)
    p.add_argument("--support", metavar="i,j,...", help="1-based vertex list")

    p = sub.add_parser("invariants", help="invariants of one anti-nef cycle")
    _add_graph_source(p)
    p.add_argument("--cycle", metavar="a1,a2,...", required=True)

    p = sub.add_parser("classify", help="enumerate special and/or Ulrich cycles")
    _add_graph_source(p)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--special", action="store_true")
    kind.add_argument("--ulrich", action="store_true")
    p.add_argument("--max-colength", type=int, default=None)
    p.add_argument("--max-steps", type=int, default=None)

    p = sub.add_parser("oracle", help="brute-force classification up to bound * Z0")
    _add_graph_source(p)
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("verify-rdp", help="diff enumerated Ulrich cycles against the ADE table")
    p.add_argument("--family", choices=list("ADEade"), required=True)
    p.add_argument("--index", type=int, required=True)

    return top


def _emit(args, command: str, g: DualGraph | None, results: dict, out) -> None:
    if args.format == "json":
        doc = {
            "tool": {"name": "dualcycles", "version": __version__},
            "command": command,
            "graph": _graph_dict(g) if g is not None else None,
            "results": results,
        }
        json.dump(doc, out, indent=2)
        print(file=out)


def _cmd_graph(args, out) -> int:
    if args.graph_command == "ade":
        g = build_ade(args.family, args.index)
    elif args.graph_command == "cyclic":
        g = build_cyclic(args.n, args.q)
    else:
        with open(args.file, encoding="utf-8") as fh:
            g = parse_graph(fh.read())
    text = serialize_graph(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.format == "json":
        _emit(args, "graph", g, {"text": text}, out)
    elif not args.out:
        out.write(text)
    return EXIT_OK


def _cmd_validate(args, out) -> int:
    g = _resolve_graph(args)
    rep = validate(g)
    if args.format == "json":
        _emit(args, "validate", g, asdict(rep), out)
    else:
        _render_graph(g, out)
        for name in ("connected", "negative_definite", "tree", "rational", "gorenstein"):
            print(f"  {name}: {getattr(rep, name)}", file=out)
        print(f"  multiplicity: {rep.multiplicity}", file=out)
        for f in rep.failures:
            print(f"finding: {f}", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_VALIDATION


def _cmd_fundamental(args, out) -> int:
    g = _resolve_graph(args)
    supp = None
    if args.support:
        supp = frozenset(int(p) - 1 for p in args.support.split(","))
    z = fundamental_cycle(g, supp)
    if args.format == "json":
        _emit(args, "fundamental", g, {"cycle": list(z)}, out)
    else:
        print(_render_cycle(z), file=out)
    return EXIT_OK


def _cmd_invariants(args, out) -> int:
    g = _resolve_graph(args)
    z = _parse_cycle_arg(args.cycle, g)
    if any(a < 0 for a in z) or not is_anti_nef(g, z):
        print("error: cycle is not anti-nef (represents no ideal)", file=sys.stderr)
        return EXIT_VALIDATION
    filt = filtration(g, z)
    results = {
        "cycle": list(z),
        "virtual_genus": virtual_genus(g, z),
        "colength": colength(g, z),
        "multiplicity": multiplicity(g, z),
        "min_gens": min_gens(g, z),
        "u_invariant": u_invariant(g, z),
        "special_module_indices": sorted(
            i + 1 for i in special_module_indices(g, z)
        ),
        "filtration": _filtration_dict(filt),
    }
    if args.format == "json":
        _emit(args, "invariants", g, results, out)
    else:
        for key in (
            "virtual_genus",
            "colength",
            "multiplicity",
            "min_gens",
            "u_invariant",
            "special_module_indices",
        ):
            print(f"  {key}: {results[key]}", file=out)
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    g = _resolve_graph(args)
    results = {}
    want_special = args.special or not args.ulrich
    want_ulrich = args.ulrich or not args.special
    special = ulrich = None
    if want_special:
        max_colength = args.max_colength or 10 * g.vertex_count
        special = enumerate_special(g, max_colength)
        results["special"] = [_entry_dict(e) for e in special]
    if want_ulrich:
        ulrich = enumerate_ulrich(g, args.max_steps)
        results["ulrich"] = [_entry_dict(e) for e in ulrich]
    if args.format == "json":
        _emit(args, "classify", g, results, out)
    else:
        _render_graph(g, out)
        if special is not None:
            print(f"special cycles ({len(special)}):", file=out)
            _render_entries(special, out)
        if ulrich is not None:
            print(f"ulrich cycles ({len(ulrich)}):", file=out)
            _render_entries(ulrich, out)
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    g = _resolve_graph(args)
    special, ulrich = oracle_classify(g, args.bound)
    results = {
        "bound": args.bound,
        "special": [list(z) for z in special],
        "ulrich": [list(z) for z in ulrich],
    }
    if args.format == "json":
        _emit(args, "oracle", g, results, out)
    else:
        _render_graph(g, out)
        print(f"special cycles ({len(special)}):", file=out)
        for z in special:
            print(f"  {_render_cycle(z)}", file=out)
        print(f"ulrich cycles ({len(ulrich)}):", file=out)
        for z in ulrich:
            print(f"  {_render_cycle(z)}", file=out)
    return EXIT_OK


def _cmd_verify_rdp(args, out) -> int:
    rep = verify_rdp(args.family, args.index)
    g = build_ade(args.family, args.index)
    results = {
        "family": rep.family,
        "index": rep.index,
        "matched": rep.matched,
        "expected_count": rep.expected_count,
        "actual_count": len(rep.actual),
        "expected": [{"cycle": list(z), "colength": c} for z, c in rep.expected],
        "actual": [{"cycle": list(z), "colength": c} for z, c in rep.actual],
        "missing": [list(z) for z in rep.missing],
        "extra": [list(z) for z in rep.extra],
        "colength_mismatches": [
            {"cycle": list(z), "expected": a, "actual": b}
            for z, a, b in rep.colength_mismatches
        ],
    }
    if args.format == "json":
        _emit(args, "verify-rdp", g, results, out)
    else:
        verdict = "match" if rep.matched else "MISMATCH"
        print(
            f"{rep.family}{rep.index}: {verdict}, "
            f"{len(rep.actual)} cycles (expected {rep.expected_count})",
            file=out,
        )
        for z, c in rep.actual:
            print(f"  {_render_cycle(z)}  colength={c}", file=out)
        if not rep.matched:
            for z in rep.missing:
                print(f"missing: {_render_cycle(z)}", file=sys.stderr)
            for z in rep.extra:
                print(f"extra: {_render_cycle(z)}", file=sys.stderr)
            for z, a, b in rep.colength_mismatches:
                print(
                    f"colength mismatch at {_render_cycle(z)}: expected {a}, got {b}",
                    file=sys.stderr,
                )
    return EXIT_OK if rep.matched else EXIT_MISMATCH


_DISPATCH = {
    "graph": _cmd_graph,
    "validate": _cmd_validate,
    "fundamental": _cmd_fundamental,
    "invariants": _cmd_invariants,
    "classify": _cmd_classify,
    "oracle": _cmd_oracle,
    "verify-rdp": _cmd_verify_rdp,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return _DISPATCH[args.command](args, out)
    except (GraphFormatError, ValueError) as e:
        if isinstance(e, (CycleError, InvalidGraphError)):
            print(f"error: {e}", file=sys.stderr)
            return EXIT_VALIDATION
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ChainDepthError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
