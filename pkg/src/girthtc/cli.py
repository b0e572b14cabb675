"""Command line interface.

Every command reads and writes plain text (JSON, CSV, DOT, graph6 or the
ASCII cutout layout). A graph document is a JSON object::

    {"graph": {"n": ..., "edges": [...]}, "coloring": {...}, "partner": {...}, "meta": {...}}

where ``coloring`` and ``partner`` are optional. Exit status is 0 when the
requested verdict passes, 1 when it fails, and 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import displays, generators, io as gio
from .coloring import (ColoringError, coloring_from_dict, coloring_to_dict, coloring_to_dot,
                       verify_egc, verify_etc, verify_etgc, verify_tc, verify_vegc)
from .cutout import (Belt, CutoutError, GenusLedger, IndeterminateDeltaWarning, accordion_unfold, cutout_from_dict,
                     cutout_to_dict, cycle_exchange, parse_ascii, periodic_extension, realize,
                     render_ascii)
from .graph import GraphError, edge_key

log = logging.getLogger("girthtc")


class UsageError(Exception):
    pass


# -- documents -----------------------------------------------------------------

def make_doc(g, coloring=None, partner=None, meta=None, **extra) -> dict:
    doc = {"graph": gio.graph_to_dict(g)}
    if coloring is not None:
        doc["coloring"] = coloring_to_dict(coloring)
    if partner is not None:
        doc["partner"] = coloring_to_dict(partner)
    if meta:
        doc["meta"] = meta
    doc.update(extra)
    return doc


def dumps(obj) -> str:
    return json.dumps(obj, indent=None, separators=(",", ":"), sort_keys=False) + "\n"


def read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_doc(path: str | None) -> dict:
    text = read_text(path)
    stripped = text.strip()
    if not stripped:
        raise UsageError("empty input")
    if not stripped.startswith("{"):
        return {"graph": gio.graph_to_dict(gio.from_graph6(stripped.splitlines()[0]))}
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise gio.ParseError(exc.msg, exc.pos) from exc
    if "graph" not in doc:
        doc = {"graph": doc}
    return doc


def doc_graph(doc):
    return gio.graph_from_dict(doc["graph"])


def doc_coloring(doc, key="coloring"):
    if key not in doc:
        raise UsageError(f"input has no {key!r} object")
    return coloring_from_dict(doc[key])


def emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ints(text: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} integers, got {text!r}")
    return vals


# -- gen --------------------------------------------------------------------------

def cmd_gen(a) -> int:
    name, _, arg = a.spec.partition(":")
    meta = {"generator": a.spec}
    if name == "q3":
        g, c1, c2 = generators.q3_pair()
        doc = make_doc(g, c1, c2, meta)
    elif name == "prism":
        g, c1, c2 = generators.prism_ring(_ints(arg, 1)[0])
        doc = make_doc(g, c1, c2, meta)
    elif name == "torus":
        parts = arg.split(",")
        h, k = _ints(",".join(parts[:2]), 2)
        base = parts[2] if len(parts) > 2 else "truncated-square"
        g, c = generators.toroidal_grid(h, k, base)
        doc = make_doc(g, c, None, meta)
    elif name == "cycle":
        g, c = generators.cycle_etc(_ints(arg, 1)[0])
        doc = make_doc(g, c, None, meta)
    elif name == "gp":
        g, c = generators.gp_fixture(_ints(arg, 1)[0])
        doc = make_doc(g, c, None, meta)
    elif name == "pet":
        k = _ints(arg, 1)[0]
        g, _ = generators.pet_k(k)
        c = None
        if a.with_tc:
            if k == 2 and not a.repaired:
                c = generators.pet2_figure_tc()
            else:
                pc = generators.pet_k_tc(k)
                c = pc.coloring
                meta.update({"template": list(pc.template or ()), "note": pc.note})
        doc = make_doc(g, c, None, meta)
    elif name == "dod":
        k = _ints(arg, 1)[0]
        g, volt, c = generators.dod_k(k) if a.with_tc else (*generators.dod_k(k)[:2], None)
        meta["crossed"] = [list(e) for e in sorted(volt.crossed)]
        doc = make_doc(g, c, None, meta)
    elif name == "robertson":
        g = generators.robertson()
        c = None
        if a.with_tc:
            from .solver import exhaustive_tc_search
            sols, _ = exhaustive_tc_search(g, 5, "any-TC", limit=1)
            c = sols[0]
        doc = make_doc(g, c, None, meta)
    elif name == "fixture":
        r = realize(displays.load(arg))
        meta["genus"] = r.genus
        doc = make_doc(r.graph, r.coloring, None, meta,
                       belts=[list(b.walk) for b in r.belts])
    else:
        raise UsageError(f"unknown generator {a.spec!r}")
    if a.format == "json":
        emit(dumps(doc), a.out)
    else:
        g = doc_graph(doc)
        if a.format == "dot" and "coloring" in doc:
            emit(coloring_to_dot(g, doc_coloring(doc)), a.out)
        else:
            emit(gio.emit_graph(g, a.format) + ("" if a.format == "dot" else "\n"), a.out)
    return 0


# -- verify -------------------------------------------------------------------------

def cmd_verify(a) -> int:
    doc = load_doc(a.input)
    g = doc_graph(doc)
    if a.predicate == "egc":
        if "edge_coloring" in doc:
            ec = {edge_key(u, v): col for u, v, col in doc["edge_coloring"]}
            palette = int(doc.get("palette", max(ec.values()) + 1))
        else:
            c = doc_coloring(doc)
            ec, palette = c.edge_colors, c.palette
        rep = verify_egc(g, ec, palette, strict=a.strict)
    else:
        c = doc_coloring(doc, a.which)
        rep = {"tc": verify_tc, "etc": verify_etc, "vegc": verify_vegc, "etgc": verify_etgc}[a.predicate](g, c)
    emit(dumps(rep.to_dict()), a.out)
    return 0 if rep.passed else 1


# -- transform --------------------------------------------------------------------

def _load_cutout(src: str):
    if src in displays.NAMES:
        return displays.load(src)
    text = read_text(src)
    if text.lstrip().startswith("{"):
        return cutout_from_dict(json.loads(text))
    raise UsageError("cutout input must be a fixture name or cutout JSON")


def cmd_transform(a) -> int:
    if a.op == "exchange":
        doc = load_doc(a.input)
        g, c = doc_graph(doc), doc_coloring(doc)
        e, f = _ints(a.e, 2), _ints(a.f, 2)
        import warnings
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", IndeterminateDeltaWarning)
            belts = [Belt(tuple(w)) for w in doc["belts"]] if "belts" in doc else None
            ledger = GenusLedger(int(doc.get("meta", {}).get("genus", 0)))
            res = cycle_exchange(g, c, tuple(e), tuple(f), ledger, belts, a.delta)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        meta = {"genus": res.ledger.genus, "delta": res.delta, "merged_faces": res.merged_faces,
                "new_edges": [list(x) for x in res.new_edges],
                "ledger": {"genus": res.ledger.genus, "history": [list(h) for h in res.ledger.history]}}
        emit(dumps(make_doc(res.graph, res.coloring, None, meta)), a.out)
        return 0
    cut = _load_cutout(a.input)
    if a.op == "extend":
        out = periodic_extension(cut, a.axis, a.copies)
    else:
        if a.corner is None or a.ell is None:
            raise UsageError("unfold needs --corner x,y and --ell")
        out = accordion_unfold(cut, tuple(_ints(a.corner, 2)), a.ell, a.axis)
    emit(render_ascii(out) if a.ascii else dumps(cutout_to_dict(out)), a.out)
    return 0


# -- search -----------------------------------------------------------------------

def cmd_search(a) -> int:
    from .solver import exhaustive_tc_search
    doc = load_doc(a.input)
    g = doc_graph(doc)
    pred = {"tc": "any-TC", "any-tc": "any-TC", "etc": "ETC", "etgc": "ETGC"}[a.predicate.lower()]
    fixed = {}
    if a.fix_vertex_colors:
        c = doc_coloring(doc)
        fixed = {("v", v): col for v, col in enumerate(c.vertex_colors)}
    sols, stats = exhaustive_tc_search(g, a.palette, pred, limit=a.limit, dedup_colors=a.dedup_colors,
                                       fixed=fixed, jobs=a.jobs, seed=a.seed, max_n=a.max_n)
    st = stats.to_dict()
    st.pop("wall_time")
    emit(dumps({"predicate": pred, "palette": a.palette, "stats": st,
                "solutions": [coloring_to_dict(c) for c in sols]}), a.out)
    return 0 if sols else 1


# -- census -----------------------------------------------------------------------

def cmd_census(a) -> int:
    from . import pentad
    c = None
    if a.coloring:
        c = doc_coloring(load_doc(a.coloring))
    elif a.input is not None or not sys.stdin.isatty():
        text = read_text(a.input)
        if text.strip():
            doc = json.loads(text)
            if "coloring" in doc:
                c = coloring_from_dict(doc["coloring"])
    if a.target == "pet2":
        result = pentad.census_pet2(c or generators.pet2_figure_tc()).to_dict()
    elif a.target == "robertson":
        if c is None:
            from .solver import exhaustive_tc_search
            c = exhaustive_tc_search(generators.robertson(), 5, "any-TC", limit=1)[0][0]
        result = pentad.census_robertson(c).to_dict()
    else:
        base, ps = generators.pet_k(2)
        bc = c if c is not None and len(c.vertex_colors) == 20 else generators.pet2_figure_tc()
        volt = generators.dod_voltage(2)
        lifted = generators.lift_coloring(base, volt, bc)
        result = pentad.census_lift(pentad.census_pet2(bc), base, volt, lifted).to_dict()
    if not a.per_edge:
        result.pop("per_edge", None)
    emit(dumps(result), a.out)
    return 0


# -- partition ----------------------------------------------------------------------

def cmd_partition(a) -> int:
    from . import partitions
    doc = load_doc(a.input)
    g, c = doc_graph(doc), doc_coloring(doc)
    if a.kind == "paths":
        p = partitions.three_path_partition(g, c, partitions.parse_pair(a.pair))
        result = partitions.partition_to_dict(p)
        if a.count:
            result["count"] = partitions.count_three_path_partitions(g, c)
    else:
        result = partitions.partition_to_dict(partitions.three_star_partitions(g, c))
    emit(dumps(result), a.out)
    return 0


# -- audit ---------------------------------------------------------------------------

def cmd_audit(a) -> int:
    from .solver import conjecture_audit
    emit(conjecture_audit(read_text(a.corpus).splitlines(), a.max_n, a.jobs), a.out)
    return 0


# -- export ---------------------------------------------------------------------------

def cmd_export(a) -> int:
    doc = load_doc(a.input)
    g = doc_graph(doc)
    if a.format == "dot":
        text = coloring_to_dot(g, doc_coloring(doc)) if "coloring" in doc else gio.to_dot(g)
    elif a.format == "graph6":
        text = gio.to_graph6(g) + "\n"
    else:
        text = dumps(doc)
    emit(text, a.out)
    return 0


# -- cutout ---------------------------------------------------------------------------

def cmd_cutout(a) -> int:
    if a.action == "list":
        emit("".join(n + "\n" for n in displays.NAMES), a.out)
        return 0
    if a.action == "parse":
        cut = parse_ascii(read_text(a.source), a.identification, a.shift)
        emit(dumps(cutout_to_dict(cut)), a.out)
        return 0
    cut = _load_cutout(a.source)
    if a.action == "render":
        emit(render_ascii(cut), a.out)
        return 0
    r = realize(cut)
    meta = {"genus": r.genus, "belt_lengths": r.belt_lengths}
    emit(dumps(make_doc(r.graph, r.coloring, None, meta, belts=[list(b.walk) for b in r.belts])), a.out)
    return 0


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="girthtc", description="Total colorings of regular graphs of small girth.")
    p.add_argument("--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True)

    def out(sp):
        sp.add_argument("--out", help="write to this file instead of stdout")

    sp = sub.add_parser("gen", help="build a named graph (q3, prism:j, torus:h,k[,base], cycle:j, gp:n, "
                                    "pet:k, dod:k, robertson, fixture:name)")
    sp.add_argument("spec")
    sp.add_argument("--with-tc", action="store_true", help="attach a total coloring to pet/dod/robertson")
    sp.add_argument("--repaired", action="store_true", help="for pet:2 use the rotation template")
    sp.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    out(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check a coloring")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--predicate", choices=("tc", "etc", "vegc", "etgc", "egc"), default="tc")
    sp.add_argument("--which", choices=("coloring", "partner"), default="coloring")
    sp.add_argument("--strict", action="store_true", help="egc: require girth equal to the palette size")
    out(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("transform", help="extend or unfold a cutout, or exchange two edges")
    sp.add_argument("op", choices=("extend", "unfold", "exchange"))
    sp.add_argument("input", nargs="?", default="-", help="fixture name, cutout JSON or graph document")
    sp.add_argument("--axis", choices=("x", "y"), default="x")
    sp.add_argument("--copies", type=int, default=2)
    sp.add_argument("--corner")
    sp.add_argument("--ell", type=int)
    sp.add_argument("--e")
    sp.add_argument("--f")
    sp.add_argument("--delta", type=int)
    sp.add_argument("--ascii", action="store_true", help="emit the ASCII drawing instead of JSON")
    out(sp)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("search", help="exhaustive total coloring search")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--predicate", default="tc", choices=("tc", "any-tc", "etc", "etgc"))
    sp.add_argument("--palette", type=int, default=4)
    sp.add_argument("--dedup-colors", dest="dedup_colors", action="store_true", default=True)
    sp.add_argument("--no-dedup-colors", dest="dedup_colors", action="store_false")
    sp.add_argument("--fix-vertex-colors", action="store_true", help="keep the input's vertex colors")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--max-n", type=int, default=24)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int)
    out(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("census", help="5-cycle census")
    sp.add_argument("target", choices=("pet2", "robertson", "dod2"))
    sp.add_argument("input", nargs="?")
    sp.add_argument("--coloring", help="graph document whose coloring is used")
    sp.add_argument("--per-edge", action="store_true")
    out(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("partition", help="3-path or 3-star edge partitions")
    sp.add_argument("kind", choices=("paths", "stars"))
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--pair", default="0123,1302")
    sp.add_argument("--count", action="store_true", help="also count all 3-path partitions by brute force")
    out(sp)
    sp.set_defaults(func=cmd_partition)

    sp = sub.add_parser("audit", help="closure audit of a graph6 corpus (CSV)")
    sp.add_argument("corpus")
    sp.add_argument("--max-n", type=int, default=16)
    sp.add_argument("--jobs", type=int, default=1)
    out(sp)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("export", help="convert a graph document")
    sp.add_argument("input", nargs="?", default="-")
    sp.add_argument("--format", choices=("dot", "graph6", "json"), default="dot")
    out(sp)
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("cutout", help="list, parse, render or realize cutouts")
    sp.add_argument("action", choices=("list", "parse", "render", "realize"))
    sp.add_argument("source", nargs="?", default="-")
    sp.add_argument("--identification", default="none")
    sp.add_argument("--shift", type=int, default=0)
    out(sp)
    sp.set_defaults(func=cmd_cutout)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=getattr(logging, str(a.log_level).upper(), logging.WARNING),
                        format="%(levelname)s: %(message)s")
    try:
        return a.func(a)
    except (UsageError, gio.ParseError, GraphError, CutoutError, ColoringError, ValueError,
            KeyError, OSError) as exc:
        print(f"girthtc {a.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
