"""``homcount`` command-line front end.

Every command prints a single JSON object (or the same content as an aligned
table).  Exit status is 0 on success, 1 on a domain error and 2 on a usage
error.  Counts are printed as decimal strings.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from .chartable import character_table_mod_p, fs_partition
from .errors import GraphError, HomcountError, WorkBoundExceeded
from .fatgraph import (MAX_AUT_HALF_EDGES, MOBIUS, ORIENTED, MobiusGraph, automorphism_count,
                       mu_gamma, surface_of_graph)
from .genfun import (NORMALIZATIONS, REGULAR, ValenceProfile, coefficient_character_side,
                     coefficient_group_side, graph_classes)
from .groups import FiniteGroup, involution_count, parse_group_arg
from .surfaces import (SurfaceType, brute_force_hom_count, count_hom_formula, hom_class_function)
from .verify import verify_all

METHODS = ("formula", "brute", "convolution", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")

    parser = _Parser(prog="homcount", description="Count homomorphisms from surface groups into finite groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("group", parents=[common], help="summarise a group")
    p.add_argument("action", choices=("info",))
    p.add_argument("--group", required=True)

    p = sub.add_parser("chartable", parents=[common], help="character table mod p")
    p.add_argument("--group", required=True)
    p.add_argument("--prime", type=_nonneg)

    p = sub.add_parser("count", parents=[common], help="count homomorphisms for one surface")
    p.add_argument("--group", required=True)
    p.add_argument("--surface", required=True)
    p.add_argument("--method", choices=METHODS, default="all")
    p.add_argument("--work-bound", type=_nonneg)

    p = sub.add_parser("classfn", parents=[common], help="f_n or r_n on every class")
    p.add_argument("--group", required=True)
    p.add_argument("--kind", choices=("f", "r"), required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--at-class", type=_nonneg)

    p = sub.add_parser("graph", parents=[common], help="surface data and mu of a Möbius graph")
    p.add_argument("action", choices=("analyze", "mu"))
    p.add_argument("--graph", required=True)
    p.add_argument("--group")
    p.add_argument("--work-bound", type=_nonneg)

    p = sub.add_parser("series", parents=[common], help="graph-expansion coefficient")
    p.add_argument("--group", required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--mobius", action="store_true")
    p.add_argument("--normalization", choices=NORMALIZATIONS, default=REGULAR)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check for a group")
    p.add_argument("--group", required=True)
    p.add_argument("--max-genus", type=_nonneg, default=2)
    p.add_argument("--max-crosscaps", type=_nonneg, default=3)
    p.add_argument("--max-edges", type=_nonneg, default=2)
    p.add_argument("--work-bound", type=_nonneg)
    return parser


def _group_info(G: FiniteGroup) -> dict:
    ccd = G.classes
    classes = [{"index": i, "size": ccd.sizes[i], "rep": ccd.rep[i],
                "inverse_class": ccd.inverse_class[i], "square_class": ccd.square_class[i]}
               for i in range(ccd.count)]
    return {"name": G.name, "order": G.order, "exponent": G.exponent, "abelian": G.is_abelian,
            "class_count": ccd.count, "involutions": str(involution_count(G)), "classes": classes}


def _chartable(G: FiniteGroup, prime: int | None) -> dict:
    table = character_table_mod_p(G, prime)
    fs = fs_partition(table)
    return {"prime": table.prime, "degrees": list(table.degrees), "fs": list(fs.indicator),
            "chi_mod_p": [list(r) for r in table.chi_mod_p]}


def _count(G: FiniteGroup, surface: SurfaceType, method: str, bound: int | None) -> dict:
    wanted = ["formula", "brute", "convolution"] if method == "all" else [method]
    values: dict[str, int] = {}
    skipped = []
    for m in wanted:
        if m == "formula":
            values[m] = count_hom_formula(G, surface)
        elif m == "convolution":
            n = surface.genus_or_crosscaps
            values[m] = hom_class_function(G, surface.kind, n).at_identity() if n else 1
        else:
            try:
                values[m] = brute_force_hom_count(G, surface, bound)
            except WorkBoundExceeded:
                if method != "all":
                    raise
                skipped.append(m)
    distinct = set(values.values())
    out: dict[str, Any] = {"hom_count": str(next(iter(values.values()))),
                           "methods_agree": len(distinct) == 1,
                           "surface": str(surface),
                           "methods": {m: str(v) for m, v in values.items()}}
    if skipped:
        out["skipped"] = skipped
    return out


def _classfn(G: FiniteGroup, kind: str, n: int, at_class: int | None) -> dict:
    if n == 0:
        raise UsageError("--n must be at least 1")
    fn = hom_class_function(G, kind, n)
    ccd = G.classes
    if at_class is not None:
        if at_class >= ccd.count:
            raise UsageError(f"--at-class {at_class} out of range (group has {ccd.count} classes)")
        return {"kind": kind, "n": n, "class": at_class, "value": str(fn[at_class])}
    return {"kind": kind, "n": n,
            "classes": [{"index": i, "size": ccd.sizes[i], "rep": ccd.rep[i], "value": str(fn[i])}
                        for i in range(ccd.count)]}


def _load_graph(path: str) -> MobiusGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read graph file: {exc}") from None
    return MobiusGraph.from_json(text)


def _graph(action: str, path: str, group: str | None, bound: int | None) -> dict:
    graph = _load_graph(path)
    rep = surface_of_graph(graph)
    out: dict[str, Any] = {"vertices": graph.vertex_count, "edges": graph.edge_count,
                           "faces": rep.face_count, "orientable": rep.orientable,
                           "euler_characteristic": rep.euler_characteristic,
                           "surface": str(rep.surface)}
    if action == "analyze":
        out["valences"] = {str(j): v for j, v in sorted(graph.valence_counts.items())}
        if graph.half_edge_count <= MAX_AUT_HALF_EDGES:
            aut = {"mobius": automorphism_count(graph, MOBIUS)}
            if graph.is_ribbon:
                aut["oriented"] = automorphism_count(graph, ORIENTED)
            out["automorphisms"] = aut
        return out
    if group is None:
        raise UsageError("graph mu needs --group")
    G = parse_group_arg(group)
    mu = mu_gamma(graph, G, bound)
    expected = G.order ** (rep.face_count - 1) * count_hom_formula(G, rep.surface)
    out.update({"group": G.name, "mu": str(mu), "expected": str(expected), "agree": mu == expected})
    return out


def _series(G: FiniteGroup, text: str, mobius: bool, normalization: str) -> dict:
    profile = ValenceProfile.parse(text)
    oriented = not mobius
    value = coefficient_group_side(profile, G, oriented, normalization)
    other = coefficient_character_side(profile, G, oriented=oriented, normalization=normalization)
    return {"profile": {str(j): v for j, v in profile.counts}, "coefficient": str(value),
            "graph_classes": len(graph_classes(profile, oriented)),
            "mode": MOBIUS if mobius else ORIENTED, "normalization": normalization,
            "character_side": str(other), "sides_agree": value == other}


def dispatch(args: argparse.Namespace) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "graph":
        return _graph(args.action, args.graph, args.group, args.work_bound), 0
    G = parse_group_arg(args.group)
    if cmd == "group":
        return _group_info(G), 0
    if cmd == "chartable":
        return _chartable(G, args.prime), 0
    if cmd == "count":
        return _count(G, SurfaceType.parse(args.surface), args.method, args.work_bound), 0
    if cmd == "classfn":
        return _classfn(G, args.kind, args.n, args.at_class), 0
    if cmd == "series":
        return _series(G, args.profile, args.mobius, args.normalization), 0
    report = verify_all(G, args.max_genus, args.max_crosscaps, args.max_edges, args.work_bound)
    return report.to_json(), 0 if report.all_passed else 1


def _rows(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(obj, dict):
        rows = []
        for k, v in obj.items():
            rows.extend(_rows(v, f"{prefix}.{k}" if prefix else str(k)))
        return rows
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        rows = []
        for i, v in enumerate(obj):
            rows.extend(_rows(v, f"{prefix}[{i}]"))
        return rows
    if isinstance(obj, list):
        return [(prefix, " ".join(_scalar(v) for v in obj))]
    return [(prefix, _scalar(obj))]


def _scalar(v: Any) -> str:
    return json.dumps(v) if isinstance(v, bool) or v is None else str(v)


def render(obj: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, separators=(",", ":"))
    rows = _rows(obj)
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        obj, code = dispatch(args)
    except UsageError as exc:
        print(f"homcount {args.command}: error: {exc}", file=err)
        return 2
    except HomcountError as exc:
        print(render({"error": str(exc), "module": exc.label}, args.format), file=out)
        return 1
    print(render(obj, args.format), file=out)
    return code


def main() -> None:
    sys.exit(run())
