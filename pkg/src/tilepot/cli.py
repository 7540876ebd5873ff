"""Command-line interface: ``tilepot <subcommand> ...``.

Exit status is 0 on success, 1 when a certificate or validation comes back
negative, and 2 on malformed input.  ``--json`` switches any subcommand to a
structured document carrying ``schema_version``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cover import (
    OrientedCover,
    b3_lower_bound,
    certify_scenario3,
    derive_pot,
    design_pipeline,
    min_vertex_cover,
    naive_oriented_cover,
    oriented_cover,
    t3_lower_bound,
)
from .errors import InputError, PreconditionError
from .families import FamilySpec, formula_oracle, generate
from .formats import design_to_dot, parse_arcs, parse_cover, parse_graph, render_bracket, render_lines, to_dot
from .graph import Graph, spanning_tree_count
from .pot import parse_pot, pot_from_doc, pot_to_doc, render_design, render_pot
from .swap import is_unswappable, proxy_swap_candidates
from .validator import validate_scenario3

SCHEMA_VERSION = 1


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _family_from_args(args) -> FamilySpec | None:
    kind = getattr(args, "family", None)
    if kind is None:
        return None
    need = {
        "rook": ("rows", "cols"),
        "kneser": ("n", "k"),
        "cycle": ("n",),
        "complete": ("n",),
        "antiprism": ("n",),
        "cube": (),
        "cuboctahedron": (),
    }[kind]
    params = []
    for name in need:
        val = getattr(args, name)
        if val is None:
            raise InputError(f"--family {kind} needs --{name}")
        params.append(val)
    return FamilySpec(kind, tuple(params))


def _load_graph(args) -> Graph:
    spec = _family_from_args(args)
    if spec is not None:
        if getattr(args, "graph", None):
            raise InputError("give either a graph file or --family, not both")
        return generate(spec)
    if not getattr(args, "graph", None):
        raise InputError("no graph given (pass a file, '-' for stdin, or --family)")
    return parse_graph(_read(args.graph))


def _load_pot(path: str):
    text = _read(path)
    s = text.lstrip()
    if s.startswith("{") and s[1:].lstrip().startswith('"'):
        try:
            return pot_from_doc(json.loads(text))
        except json.JSONDecodeError as e:
            raise InputError(f"bad pot document: {e.msg}", line=e.lineno, column=e.colno) from None
    return parse_pot(text)


def _load_oriented_cover(args, g: Graph) -> OrientedCover:
    cover = parse_cover(_read(args.cover), g)
    if args.orientation:
        return OrientedCover(cover, parse_arcs(_read(args.orientation)))
    try:
        return oriented_cover(g, cover)
    except PreconditionError as e:
        sys.stderr.write(f"note: {e}; orienting cover edges low -> high\n")
        return naive_oriented_cover(g, cover)


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        out = {"schema_version": SCHEMA_VERSION, "command": args.command}
        out.update(doc)
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _move_doc(move) -> dict:
    return {"e1": list(move.e1), "e2": list(move.e2), "reconnection": move.reconnection.value}


# --------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    g = generate(_family_from_args(args))
    if args.dot:
        sys.stdout.write(to_dot(g))
        return 0
    text = render_bracket(g) + "\n" if args.format == "bracket" else render_lines(g)
    _emit(args, {"n": g.n, "edges": [list(e) for e in g.edge_list], "labels": g.labels, "family": str(g.family)}, text)
    return 0


def cmd_check_swap(args) -> int:
    g = _load_graph(args)
    if args.proxy:
        cands = proxy_swap_candidates(g)
        lines = [str(m.as_pairs()) for m in cands]
        head = "proxy-unswappable" if not cands else f"{len(cands)} proxy candidates"
        _emit(args, {"mode": "proxy", "candidates": [_move_doc(m) for m in cands]}, "\n".join([head] + lines))
        return 0
    v = is_unswappable(g, all_witnesses=args.all_witnesses)
    lines = [v.status.value]
    for m in v.witnesses:
        lines.append(f"witness {m.reconnection.value} {m.e1} {m.e2} -> {m.new_edges()[0]} {m.new_edges()[1]}")
    doc = {
        "status": v.status.value,
        "witnesses": [_move_doc(m) for m in v.witnesses],
        "pairs_checked": v.pairs_checked,
        "multiedge_skips": v.multiedge_skips,
    }
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_spanning_trees(args) -> int:
    g = _load_graph(args)
    t = spanning_tree_count(g)
    _emit(args, {"spanning_trees": str(t)}, str(t))
    return 0


def cmd_min_cover(args) -> int:
    g = _load_graph(args)
    c = min_vertex_cover(g)
    _emit(args, {"cover": list(c.cover), "size": len(c.cover), "method": c.method}, "\n".join(map(str, c.cover)))
    return 0


def cmd_bounds(args) -> int:
    g = _load_graph(args)
    v = is_unswappable(g)
    b3, t3 = b3_lower_bound(g, v), t3_lower_bound(g, v)
    doc = {"swap_status": v.status.value, "b3_lower": b3.to_doc(), "t3_lower": t3.to_doc()}
    text = [f"swap: {v.status.value}", f"B3 >= {b3.describe()}", f"T3 >= {t3.describe()}"]
    if g.family is not None:
        oracle = formula_oracle(g.family)
        if oracle is not None:
            doc["formula"] = {"b3": oracle.b3.describe(), "t3": oracle.t3.describe()}
            text.append(f"formula: B3 {oracle.b3.describe()}, T3 {oracle.t3.describe()}")
    _emit(args, doc, "\n".join(text))
    return 0


def cmd_derive(args) -> int:
    g = _load_graph(args)
    oc = _load_oriented_cover(args, g)
    d = derive_pot(g, oc)
    if args.dot:
        sys.stdout.write(design_to_dot(d.design))
        return 0
    text = render_pot(d.pot)
    if args.design:
        text = text.rstrip("\n") + "\n# design\n" + render_design(d.design)
    doc = {"pot": pot_to_doc(d.pot), "bond_of": {str(k): v for k, v in d.bond_of.items()}}
    _emit(args, doc, text)
    return 0


def cmd_certify(args) -> int:
    g = _load_graph(args)
    oc = _load_oriented_cover(args, g)
    cert = certify_scenario3(g, oc)
    lines = [
        cert.verdict,
        f"regular: {cert.regularity}",
        f"vertex cover: {'pass' if cert.is_cover else 'fail'}",
        f"neighbourhood independent: {_pf(cert.neighborhood_independent)}",
        f"induced 2-edge-connected: {_pf(cert.induced_2ec)}",
        f"orientation strong: {_pf(cert.orientation_strong)}",
    ]
    lines.extend(f"reason: {r}" for r in cert.reasons)
    _emit(args, cert.to_doc(), "\n".join(lines))
    return 0 if cert.certified else 1


def _pf(x) -> str:
    return "n/a" if x is None else ("pass" if x else "fail")


def cmd_validate(args) -> int:
    pot = _load_pot(args.pot)
    g = parse_graph(_read(args.target))
    rep = validate_scenario3(
        pot,
        g,
        max_order=args.max_order,
        connected_only=not args.allow_disconnected,
        simple_only=args.simple_only,
        ceiling=args.ceiling,
    )
    if rep.scenario3_ok:
        head = "valid (no counterexample)"
    elif rep.scenario3_ok is None:
        head = "incomplete"
    else:
        head = "invalid"
    lines = [head, f"status: {rep.status}", f"realizes target: {rep.realizes_target}"]
    if rep.counterexample is not None:
        lines.append(f"counterexample (order {rep.counterexample.order}): {rep.counterexample.describe()}")
    if rep.enumeration is not None:
        for k, classes in sorted(rep.enumeration.by_order().items()):
            lines.append(f"order {k}: {len(classes)} complexes")
    lines.extend(f"note: {n}" for n in rep.notes)
    _emit(args, rep.to_doc(), "\n".join(lines))
    return 0 if rep.scenario3_ok else 1


def cmd_pipeline(args) -> int:
    g = _load_graph(args)
    r = design_pipeline(g)
    lines = [
        f"graph: {g.n} vertices, {g.m} edges, regularity {r.regularity}",
        f"swap: {r.swap_status} ({r.swap_method})",
        f"B3 lower: {r.b3_lower.describe()}",
        f"T3 lower: {r.t3_lower.describe()}",
    ]
    if r.cover is not None:
        lines.append(f"cover ({r.cover_method}, size {len(r.cover)}): {' '.join(map(str, r.cover))}")
    if r.certificate is not None:
        lines.append(f"certificate: {r.certificate.verdict}")
    if r.pot is not None:
        lines.append(f"pot: {len(r.pot)} tiles, {len(r.pot.bonds)} bonds")
    lines.append(f"B3 = {r.b3_exact} exact" if r.b3_exact is not None else "B3 not determined")
    lines.append(f"T3 = {r.t3_exact} exact" if r.t3_exact is not None else "T3 not determined")
    lines.extend(f"note: {n}" for n in r.notes)
    if r.pot is not None and not args.json:
        lines.append(render_pot(r.pot).rstrip("\n"))
    _emit(args, r.to_doc(), "\n".join(lines))
    return 0


# ----------------------------------------------------------------- parser


def _family_flags(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("--family", choices=["rook", "kneser", "cycle", "complete", "cube", "antiprism", "cuboctahedron"], required=required)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; output does not depend on it")

    parser = argparse.ArgumentParser(prog="tilepot", description="Pot design for the flexible tile model.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a family graph")
    _family_flags(p, required=True)
    p.add_argument("--format", choices=["lines", "bracket"], default="lines")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_gen)

    def graph_cmd(name, func, help):
        q = sub.add_parser(name, parents=[common], help=help)
        q.add_argument("graph", nargs="?", help="graph file or '-'")
        _family_flags(q)
        q.set_defaults(func=func)
        return q

    q = graph_cmd("check-swap", cmd_check_swap, "decide unswappability")
    q.add_argument("--proxy", action="store_true", help="spanning-tree proxy candidates")
    q.add_argument("--all-witnesses", action="store_true")
    graph_cmd("spanning-trees", cmd_spanning_trees, "count spanning trees")
    graph_cmd("min-cover", cmd_min_cover, "minimum vertex cover")
    graph_cmd("bounds", cmd_bounds, "B3/T3 lower bounds")
    for name, func, help in (("derive", cmd_derive, "derive a pot"), ("certify", cmd_certify, "Scenario-3 certificate")):
        q = graph_cmd(name, func, help)
        q.add_argument("--cover", required=True, help="cover file, one vertex per line")
        q.add_argument("--orientation", help="arcs 'u v' of the induced subgraph (default: a strong orientation)")
        if name == "derive":
            q.add_argument("--dot", action="store_true")
            q.add_argument("--design", action="store_true", help="also print the edge labelling")

    p = sub.add_parser("validate", parents=[common], help="brute-force Scenario-3 validation")
    p.add_argument("--pot", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--max-order", type=int)
    p.add_argument("--allow-disconnected", action="store_true")
    p.add_argument("--simple-only", action="store_true")
    p.add_argument("--ceiling", type=int, default=10**7)
    p.set_defaults(func=cmd_validate)

    graph_cmd("pipeline", cmd_pipeline, "bounds, cover, certificate and pot")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PreconditionError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
