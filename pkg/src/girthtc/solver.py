"""Forced propagation, exhaustive search and the operation-closure audit.

Propagation implements the three ETCing rules on a cubic graph with palette 4:

1. among a vertex and its three edges, three colored elements force the fourth;
2. among a vertex and its three neighbors, three colored vertices force the
   fourth (the closed neighborhood of an ETC is rainbow);
3. every belt of length divisible by 4 is colored with period 4, so the
   element 8 steps further along the vertex/edge walk repeats the color, and
   the four vertex phases (likewise the four edge phases) carry the four
   colors.

The rules are monotone, so their fixed point does not depend on the order in
which they fire; conflicts are returned as values.
"""
from __future__ import annotations

import csv
import io
import itertools
import logging
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coloring import TotalColoring, VerificationReport, verify_etc, verify_etgc, verify_tc
from .cutout import (Cutout, CutoutError, Realization, accordion_unfold, cycle_exchange,
                     periodic_extension, realize)
from .graph import Edge, Graph, GraphError, canonical_form, distances_from, edge_key, girth_cycles

log = logging.getLogger(__name__)

PREDICATES = ("any-TC", "ETC", "ETGC")


class PreconditionError(ValueError):
    pass


class UnsatisfiableSeedError(ValueError):
    def __init__(self, conflict: "Conflict"):
        super().__init__(f"seed cannot be completed: {conflict.message}")
        self.conflict = conflict


# -- propagation ---------------------------------------------------------------

Element = tuple  # ("v", vertex) or ("e", edge)


@dataclass
class PartialColoring:
    palette: int
    vertices: dict[int, int] = field(default_factory=dict)
    edges: dict[Edge, int] = field(default_factory=dict)

    def get(self, el: Element):
        return self.vertices.get(el[1]) if el[0] == "v" else self.edges.get(el[1])

    def copy(self) -> "PartialColoring":
        return PartialColoring(self.palette, dict(self.vertices), dict(self.edges))

    def is_complete(self, g: Graph) -> bool:
        return len(self.vertices) == g.n and len(self.edges) == g.m

    def to_total(self, g: Graph) -> TotalColoring:
        if not self.is_complete(g):
            raise ValueError("partial coloring is incomplete")
        return TotalColoring.build(self.palette, [self.vertices[v] for v in range(g.n)], self.edges)

    @classmethod
    def from_total(cls, c: TotalColoring) -> "PartialColoring":
        return cls(c.palette, dict(enumerate(c.vertex_colors)), dict(c.edge_colors))

    @classmethod
    def from_seed(cls, seed, palette: int = 4) -> "PartialColoring":
        if isinstance(seed, PartialColoring):
            return seed.copy()
        return cls(palette, dict(seed.get("vertices", {})),
                   {edge_key(*e): c for e, c in seed.get("edges", {}).items()})


@dataclass
class Conflict:
    rule: str
    element: Element
    message: str
    trace: list = field(default_factory=list)


def _belt_sequence(walk: Sequence[int]) -> list[Element]:
    seq = []
    for i, v in enumerate(walk):
        seq.append(("v", v))
        seq.append(("e", edge_key(v, walk[(i + 1) % len(walk)])))
    return seq


def _forced(g: Graph, belts: list[list[Element]], pc: PartialColoring):
    """All facts the three rules derive from ``pc`` in one round."""
    full = set(range(pc.palette))
    for v in range(g.n):
        group = [("v", v)] + [("e", edge_key(v, u)) for u in g.adj[v]]
        yield from _complete_group("1", group, pc, full)
        group = [("v", v)] + [("v", u) for u in g.adj[v]]
        yield from _complete_group("2", group, pc, full)
    for seq in belts:
        L = len(seq)
        for i, el in enumerate(seq):
            col = pc.get(el)
            if col is not None:
                for j in range(i % 8, L, 8):
                    yield "3", seq[j], col
        # the four vertex phases (and the four edge phases) use the four colors
        for parity in (0, 1):
            group = []
            for r in range(parity, 8, 2):
                known = {pc.get(seq[j]) for j in range(r, L, 8)} - {None}
                group.append((seq[r], known.pop() if len(known) == 1 else None))
            yield from _complete_group("3", [el for el, _ in group], _Known(group), full)


def _complete_group(rule, group, pc, full):
    if len(group) != len(full):
        return
    known = [pc.get(el) for el in group]
    missing = [el for el, c in zip(group, known) if c is None]
    if len(missing) == 1:
        rest = full - {c for c in known if c is not None}
        if len(rest) == 1:
            yield rule, missing[0], rest.pop()


class _Known:
    def __init__(self, pairs):
        self.d = dict(pairs)

    def get(self, el):
        return self.d.get(el)


def _proper_violation(g: Graph, pc: PartialColoring, el: Element, col: int) -> str | None:
    if el[0] == "v":
        v = el[1]
        for u in g.adj[v]:
            if pc.vertices.get(u) == col:
                return f"vertex {v} and neighbor {u} share color {col}"
            if pc.edges.get(edge_key(u, v)) == col:
                return f"vertex {v} and its edge to {u} share color {col}"
    else:
        u, v = el[1]
        if col in (pc.vertices.get(u), pc.vertices.get(v)):
            return f"edge {el[1]} shares color {col} with an endpoint"
        for x in (u, v):
            for y in g.adj[x]:
                f = edge_key(x, y)
                if f != el[1] and pc.edges.get(f) == col:
                    return f"edges {el[1]} and {f} meet and share color {col}"
    return None


def etcing_propagate(g: Graph, belts: Iterable, pc: PartialColoring,
                     rng: random.Random | None = None) -> PartialColoring | Conflict:
    """Apply the rules to a fixed point; ``rng`` shuffles the firing order."""
    if g.regular_degree() != 3:
        raise PreconditionError("ETCing propagation needs a cubic graph")
    seqs = [_belt_sequence(b.walk if hasattr(b, "walk") else b) for b in belts]
    seqs = [s for s in seqs if (len(s) // 2) % 4 == 0]
    pc = pc.copy()
    trace: list = []
    for kind, items in (("v", list(pc.vertices.items())), ("e", list(pc.edges.items()))):
        for x, col in items:
            msg = _proper_violation(g, pc, (kind, x), col)
            if msg:
                return Conflict("TC", (kind, x), msg, trace)
    while True:
        facts = list(_forced(g, seqs, pc))
        if rng is not None:
            rng.shuffle(facts)
        changed = False
        for rule, el, col in facts:
            have = pc.get(el)
            if have is not None:
                if have != col:
                    return Conflict(rule, el, f"rule {rule} forces {col} on {el} already colored {have}", trace)
                continue
            msg = _proper_violation(g, pc, el, col)
            if msg:
                return Conflict(rule, el, f"rule {rule} forces {col}: {msg}", trace)
            (pc.vertices if el[0] == "v" else pc.edges)[el[1]] = col
            trace.append((rule, el, col))
            changed = True
        if not changed:
            return pc


def solve_from_seed(g: Graph, belts: Iterable, seed, palette: int = 4) -> TotalColoring:
    """Complete a seed to an ETGC by propagation, branching only if it stalls."""
    belts = list(belts)
    lengths = [len(b.walk if hasattr(b, "walk") else b) for b in belts]
    bad = [L for L in lengths if L % 4]
    if bad:
        raise PreconditionError(f"belts of length {sorted(set(bad))} are not divisible by 4")
    pc = PartialColoring.from_seed(seed, palette)
    res = _solve(g, belts, pc)
    if isinstance(res, Conflict):
        raise UnsatisfiableSeedError(res)
    return res


def _solve(g, belts, pc):
    res = etcing_propagate(g, belts, pc)
    if isinstance(res, Conflict):
        return res
    if res.is_complete(g):
        c = res.to_total(g)
        rep = verify_etgc(g, c)
        if rep.passed:
            return c
        v = rep.violations[0]
        return Conflict(v.rule, v.element, f"completion is not an ETGC: {v.message}")
    free_v = [v for v in range(g.n) if v not in res.vertices]
    el = ("v", free_v[0]) if free_v else ("e", next(e for e in g.edges if e not in res.edges))
    last = None
    for col in range(pc.palette):
        if _proper_violation(g, res, el, col):
            continue
        nxt = res.copy()
        (nxt.vertices if el[0] == "v" else nxt.edges)[el[1]] = col
        out = _solve(g, belts, nxt)
        if not isinstance(out, Conflict):
            return out
        last = out
    return last or Conflict("SEARCH", el, "no color fits")


def seed_from_cutout(seed: Cutout, target: Realization, offset: tuple[int, int] = (0, 0)) -> PartialColoring:
    """Transfer the colored elements of a seed drawing onto a realized cutout."""
    dx, dy = offset
    pc = PartialColoring(target.coloring.palette if target.coloring else 4)
    for (x, y), col in seed.points.items():
        if isinstance(col, int):
            pc.vertices[target.vertex_at(x + dx, y + dy)] = col
    for s in seed.segments:
        if s.color is not None:
            pc.edges[target.edge_between((s.a[0] + dx, s.a[1] + dy), (s.b[0] + dx, s.b[1] + dy))] = s.color
    return pc


# -- exhaustive search ---------------------------------------------------------

@dataclass
class SearchStats:
    nodes: int = 0
    solutions: int = 0
    wall_time: float = 0.0
    truncated: bool = False

    def to_dict(self) -> dict:
        return {"nodes": self.nodes, "solutions": self.solutions,
                "wall_time": round(self.wall_time, 3), "truncated": self.truncated}


def _conflict_structure(g: Graph, predicate: str, palette: int, groups=()):
    """Elements (vertices then edges) and pairwise must-differ bitmasks."""
    edges = g.edges
    elements: list[Element] = [("v", v) for v in range(g.n)] + [("e", e) for e in edges]
    eidx = {e: g.n + i for i, e in enumerate(edges)}
    nb = [0] * len(elements)

    def link(a, b):
        if a != b:
            nb[a] |= 1 << b
            nb[b] |= 1 << a

    for (u, v), i in eidx.items():
        link(u, v)
        link(u, i)
        link(v, i)
        for x in (u, v):
            for y in g.adj[x]:
                link(i, eidx[edge_key(x, y)])
    if predicate in ("ETC", "ETGC"):
        for v in range(g.n):
            d = distances_from(g, v)
            for u in range(g.n):
                if 0 < d[u] <= 2:
                    link(u, v)
    if predicate == "ETGC":
        for cyc in girth_cycles(g):
            if len(cyc) != palette:
                continue
            for a, b in itertools.combinations(cyc.vertices, 2):
                link(a, b)
            for a, b in itertools.combinations(cyc.edges, 2):
                link(eidx[a], eidx[b])
    index = {el: i for i, el in enumerate(elements)}
    for grp in groups:
        for a, b in itertools.combinations(grp, 2):
            link(index[a], index[b])
    return elements, nb


class _Search:
    def __init__(self, g, palette, predicate, fixed, dedup, limit, order_key, groups=()):
        self.g, self.palette, self.predicate = g, palette, predicate
        self.elements, self.nb = _conflict_structure(g, predicate, palette, groups)
        self.index = {el: i for i, el in enumerate(self.elements)}
        self.fixed = {self.index[el]: c for el, c in fixed.items()}
        fixed_colors = set(self.fixed.values())
        self.free_colors = [c for c in range(palette) if c not in fixed_colors] if dedup else []
        self.limit = limit
        self.order_key = order_key
        self.stats = SearchStats()
        self.found: list[tuple[int, ...]] = []

    def initial(self):
        N = len(self.elements)
        dom = [(1 << self.palette) - 1] * N
        val = [-1] * N
        for i, c in self.fixed.items():
            if not dom[i] >> c & 1:
                return None
            val[i] = c
            dom[i] = 1 << c
            m = self.nb[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                dom[j] &= ~(1 << c)
                if dom[j] == 0 and val[j] < 0:
                    return None
        return dom, val

    def choose(self, dom, val):
        best, bkey = -1, None
        for i, d in enumerate(dom):
            if val[i] < 0:
                key = (bin(d).count("1"), self.order_key[i])
                if bkey is None or key < bkey:
                    best, bkey = i, key
        return best

    def branches(self, dom, val, i):
        used = {v for v in val if v >= 0}
        fresh_done = False
        for c in range(self.palette):
            if not dom[i] >> c & 1:
                continue
            if c in self.free_colors and c not in used:
                if fresh_done:
                    continue
                # only the lowest unused interchangeable color is tried
                if any(f < c and f not in used for f in self.free_colors):
                    continue
                fresh_done = True
            yield c

    def assign(self, dom, val, i, c):
        dom = list(dom)
        val = list(val)
        val[i] = c
        dom[i] = 1 << c
        m = self.nb[i]
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            if val[j] < 0:
                dom[j] &= ~(1 << c)
                if dom[j] == 0:
                    return None
        return dom, val

    def run(self, state):
        stack = [state]
        while stack:
            dom, val = stack.pop()
            self.stats.nodes += 1
            i = self.choose(dom, val)
            if i < 0:
                self.found.append(tuple(val))
                if self.limit is not None and len(self.found) >= self.limit:
                    self.stats.truncated = bool(stack)
                    return
                continue
            children = []
            for c in self.branches(dom, val, i):
                nxt = self.assign(dom, val, i, c)
                if nxt is not None:
                    children.append(nxt)
            stack.extend(reversed(children))

    def to_coloring(self, val) -> TotalColoring:
        n = self.g.n
        ec = {self.elements[i][1]: val[i] for i in range(n, len(val))}
        return TotalColoring.build(self.palette, val[:n], ec)


def _canonical_colors(c: TotalColoring, free: Sequence[int]) -> TotalColoring:
    """Rename the interchangeable colors by first use (vertices, then edges)."""
    if not free:
        return c
    order = []
    for col in list(c.vertex_colors) + [c.edge_colors[e] for e in sorted(c.edge_colors)]:
        if col in free and col not in order:
            order.append(col)
    order += [f for f in free if f not in order]
    perm = {col: col for col in range(c.palette)}
    for src, dst in zip(order, sorted(free)):
        perm[src] = dst
    return c.permuted(perm)


def _worker(args):
    g, palette, predicate, fixed, dedup, limit, order_key, groups, state = args
    s = _Search(g, palette, predicate, fixed, dedup, limit, order_key, groups)
    s.run(state)
    return s.found, s.stats.nodes, s.stats.truncated


def exhaustive_tc_search(g: Graph, palette: int, predicate: str = "any-TC", limit: int | None = None,
                         dedup_colors: bool = True, fixed: dict | None = None, jobs: int = 1,
                         seed: int | None = None, max_n: int = 24, distinct: Sequence = (),
                         ) -> tuple[list[TotalColoring], SearchStats]:
    """Enumerate total colorings satisfying ``predicate``.

    ``fixed`` maps elements ``("v", v)`` / ``("e", (u, v))`` to colors. With
    ``dedup_colors`` one coloring per class under permutations of the colors
    not used by ``fixed`` is returned. ``distinct`` lists groups of elements
    that must be pairwise differently colored. ``seed`` only reorders
    exploration.
    Results are sorted, so they are identical for every ``jobs`` value.
    """
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; choose from {PREDICATES}")
    if limit is None and g.n > max_n:
        raise PreconditionError(f"full enumeration is limited to {max_n} vertices; pass a limit")
    t0 = time.perf_counter()
    fixed = {(k, edge_key(*x) if k == "e" else x): c for (k, x), c in (fixed or {}).items()}
    n_el = g.n + g.m
    order_key = list(range(n_el))
    if seed is not None:
        random.Random(seed).shuffle(order_key)
    distinct = [[(k, edge_key(*x) if k == "e" else x) for k, x in grp] for grp in distinct]
    s = _Search(g, palette, predicate, fixed, dedup_colors, limit, order_key, distinct)
    stats = s.stats
    start = s.initial()
    found: list = []
    if start is not None:
        dom, val = start
        i = s.choose(dom, val)
        if jobs > 1 and i >= 0:
            # split at the root; concatenating branch results in order equals the sequential run
            kids = [s.assign(dom, val, i, c) for c in s.branches(dom, val, i)]
            kids = [k for k in kids if k is not None]
            args = [(g, palette, predicate, fixed, dedup_colors, limit, order_key, distinct, k) for k in kids]
            with multiprocessing.Pool(min(jobs, len(args) or 1)) as pool:
                parts = pool.map(_worker, args)
            stats.nodes = 1
            for f, nodes, trunc in parts:
                found.extend(f)
                stats.nodes += nodes
                stats.truncated |= trunc
            if limit is not None and len(found) > limit:
                found = found[:limit]
                stats.truncated = True
        else:
            s.run(start)
            found = s.found
    cols = [s.to_coloring(v) for v in found]
    keep = []
    for c in cols:
        ok = verify_tc(g, c).passed
        if predicate == "ETC":
            ok = ok and verify_etc(g, c).passed
        elif predicate == "ETGC":
            ok = ok and verify_etgc(g, c).passed
        if ok:
            keep.append(_canonical_colors(c, s.free_colors) if dedup_colors else c)
    keep = sorted(set(keep), key=lambda c: c.key())
    stats.solutions = len(keep)
    stats.wall_time = time.perf_counter() - t0
    return keep, stats


# -- feasibility -----------------------------------------------------------------

def _eds_partition_exists(g: Graph, classes: int) -> bool:
    """Can V be split into ``classes`` perfect codes? (a proper coloring of the square graph)."""
    n = g.n
    close = [0] * n
    for v in range(n):
        d = distances_from(g, v)
        close[v] = sum(1 << u for u in range(n) if 0 < d[u] <= 2)
    col = [-1] * n

    def go(v, used):
        if v == n:
            return True
        for c in range(min(used + 1, classes)):
            if all(col[u] != c for u in range(n) if close[v] >> u & 1):
                col[v] = c
                if go(v + 1, max(used, c + 1)):
                    return True
                col[v] = -1
        return False

    return go(0, 0)


def etc_feasibility(g: Graph, belts: Iterable | None = None, eds_bound: int = 64) -> VerificationReport:
    """Necessary conditions for an efficient total coloring."""
    k = g.regular_degree()
    if k is None:
        raise PreconditionError("etc_feasibility needs a regular graph")
    rep = VerificationReport()
    rep.info["degree"] = k
    if g.n % (k + 1):
        rep.add("DIV", (g.n,), f"|V| = {g.n} is not divisible by {k + 1}")
    for b in belts or ():
        walk = b.walk if hasattr(b, "walk") else tuple(b)
        if len(walk) % (k + 1):
            rep.add("BELT", tuple(walk), f"a {len(walk)}-belt forces two vertices of one color "
                                          f"at distance less than 3")
    if not rep.violations and g.n <= eds_bound and not _eds_partition_exists(g, k + 1):
        rep.add("EDS-PART", (), f"V cannot be split into {k + 1} efficient dominating sets")
    return rep


# -- closure under the constructive operations -------------------------------------

@dataclass
class ClosureMember:
    graph: Graph
    coloring: TotalColoring | None
    cutout: Cutout | None
    trace: tuple[str, ...]
    rotation: list[list[int]] | None = None
    belts: list | None = None


def _square_corners(cut: Cutout) -> list[tuple[int, int]]:
    segs = {(s.a, s.b) for s in cut.segments}
    out = []
    for (x, y) in sorted(cut.points, key=lambda p: (p[1], p[0])):
        sides = [((x, y), (x + 1, y)), ((x, y + 1), (x + 1, y + 1)),
                 ((x, y), (x, y + 1)), ((x + 1, y), (x + 1, y + 1))]
        if all(s in segs for s in sides):
            out.append((x, y))
    return out


def _exchange_pairs(g: Graph, c: TotalColoring):
    edges = g.edges
    for e, f in itertools.combinations(edges, 2):
        if set(e) & set(f) or c.edge_colors[e] != c.edge_colors[f]:
            continue
        if {c.vertex_colors[x] for x in e} == {c.vertex_colors[x] for x in f}:
            yield e, f


def recolor_from_belts(g: Graph, belts) -> TotalColoring | None:
    """ETCing from the first 4-belt's first vertex and its edges; None if that fails."""
    try:
        b = next(b for b in belts if b.length == 4)
    except StopIteration:
        return None
    v = b.walk[0]
    seed = {"vertices": {v: 0}, "edges": {edge_key(v, u): i + 1 for i, u in enumerate(g.adj[v])}}
    try:
        return solve_from_seed(g, belts, seed)
    except (PreconditionError, UnsatisfiableSeedError):
        return None


def operation_closure(max_n: int = 16, start: Cutout | None = None, copies: Sequence[int] = (2, 3),
                      unfold_lengths: Sequence[int] = (2, 3)) -> dict[bytes, ClosureMember]:
    """Breadth-first closure of Q3 under extension, unfolding, exchange and re-coloring."""
    from . import displays
    import warnings
    start = start or displays.load("q3-left")
    real = realize(start)
    members: dict[bytes, ClosureMember] = {}
    queue = [ClosureMember(real.graph, real.coloring, start, (), real.rotation, real.belts)]
    members[canonical_form(real.graph)] = queue[0]

    def offer(g, col, cut, trace, rotation=None, belts=None):
        if g.n > max_n or col is None:
            return
        key = canonical_form(g)
        if key in members:
            return
        m = ClosureMember(g, col, cut, trace, rotation, belts)
        members[key] = m
        queue.append(m)

    while queue:
        cur = queue.pop(0)
        if cur.cutout is not None:
            for axis, j in itertools.product("xy", copies):
                try:
                    cut = periodic_extension(cur.cutout, axis, j)
                    r = realize(cut)
                except CutoutError:
                    continue
                if r.graph.n <= max_n:
                    col = r.coloring
                    if col is None or not verify_etgc(r.graph, col).passed:
                        col = recolor_from_belts(r.graph, r.belts)
                    offer(r.graph, col, cut if col is r.coloring else cut.uncolored(),
                          cur.trace + (f"extend {axis} x{j}",), r.rotation, r.belts)
            for corner, ell, axis in itertools.product(_square_corners(cur.cutout), unfold_lengths, "xy"):
                try:
                    cut = accordion_unfold(cur.cutout, corner, ell, axis)
                    r = realize(cut)
                except (CutoutError, GraphError, KeyError, ValueError):
                    continue
                if r.graph.n > max_n:
                    continue
                col = r.coloring
                note = f"unfold {corner} l={ell} {axis}"
                if col is None or not verify_etgc(r.graph, col).passed:
                    col = recolor_from_belts(r.graph, r.belts)
                    note += " + ETCing"
                offer(r.graph, col, cut if col is r.coloring else None, cur.trace + (note,), r.rotation, r.belts)
        if cur.coloring is None:
            continue
        for e, f in _exchange_pairs(cur.graph, cur.coloring):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                try:
                    res = cycle_exchange(cur.graph, cur.coloring, e, f, rotation=cur.rotation)
                except (GraphError, ValueError):
                    continue
            if verify_etgc(res.graph, res.coloring).passed and girth_is_4(res.graph) and res.graph.is_connected():
                offer(res.graph, res.coloring, None, cur.trace + (f"exchange {e} {f}",), res.rotation, res.belts)
    return members


def girth_is_4(g: Graph) -> bool:
    from .graph import girth
    return girth(g) == 4


# -- audit ------------------------------------------------------------------------

AUDIT_COLUMNS = ("graph", "n", "belts_ok", "etc_exists", "in_closure")


def _audit_row(args):
    line, closure_keys = args
    from .io import from_graph6
    g = from_graph6(line)
    k = g.regular_degree()
    feas = etc_feasibility(g).passed if k else False
    exists = False
    if feas:
        sols, _ = exhaustive_tc_search(g, k + 1, "ETC", limit=1, max_n=g.n)
        exists = bool(sols)
    in_cl = canonical_form(g) in closure_keys
    return (line, g.n, feas, exists, in_cl)


def conjecture_audit(corpus: Iterable[str], max_n: int = 16, jobs: int = 1,
                     closure: dict | None = None) -> str:
    """CSV report over a graph6 corpus; rows follow input order.

    ``belts_ok`` reports the necessary-condition screen of
    :func:`etc_feasibility` (divisibility and an efficient dominating set
    partition), since a bare graph carries no drawing.
    """
    from .io import ParseError, from_graph6
    closure = closure if closure is not None else operation_closure(max_n)
    keys = frozenset(closure)
    lines = []
    for lineno, raw in enumerate(corpus, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            g = from_graph6(line)
        except (ParseError, GraphError) as exc:
            log.warning("skipping corpus line %d: %s", lineno, exc)
            continue
        if g.n <= max_n:
            lines.append(line)
    args = [(line, keys) for line in lines]
    if jobs > 1 and len(args) > 1:
        with multiprocessing.Pool(jobs) as pool:
            rows = pool.map(_audit_row, args)
    else:
        rows = [_audit_row(a) for a in args]
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(AUDIT_COLUMNS)
    for r in rows:
        w.writerow([r[0], r[1]] + [str(x).lower() for x in r[2:]])
    return out.getvalue()


def belt_seed(g: Graph, belt, c: TotalColoring) -> PartialColoring:
    """Restrict ``c`` to a belt and the three edges at its first vertex."""
    walk = belt.walk if hasattr(belt, "walk") else tuple(belt)
    pc = PartialColoring(c.palette)
    for i, v in enumerate(walk):
        pc.vertices[v] = c.vertex_colors[v]
        e = edge_key(v, walk[(i + 1) % len(walk)])
        pc.edges[e] = c.edge_colors[e]
    for u in g.adj[walk[0]]:
        pc.edges[edge_key(walk[0], u)] = c.edge(walk[0], u)
    return pc
