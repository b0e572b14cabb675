"""Total colorings and the verifier ladder built on them.

Every verifier returns a :class:`VerificationReport` whose violations carry a
stable rule id, so tests can compare exact violation sets:

========== ==========================================================
rule id    meaning
========== ==========================================================
TC-V       adjacent vertices share a color
TC-E       incident edges share a color
TC-VE      an edge shares a color with one of its endpoints
EDS-IND    two vertices of one color class are adjacent
EDS-DOM    a vertex outside a class is dominated zero or several times
PART       a color class is empty, so the classes are not k+1 EDSs
VEGC-V     a girth cycle repeats a vertex color
VEGC-E     a girth cycle repeats an edge color
EGC-PROP   an edge coloring is not proper
EGC-RBW    a girth cycle of an edge coloring is not rainbow
EGC-LEN    strict mode only: girth differs from the palette size
========== ==========================================================
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Cycle, Edge, Graph, edge_key, girth_cycles
from .io import ParseError, to_dot

DOT_COLORS = ("red", "blue", "#8E7618", "black", "green")


class ColoringError(ValueError):
    """A coloring does not fit the graph it is checked against."""


@dataclass(frozen=True)
class TotalColoring:
    palette: int
    vertex_colors: tuple[int, ...]
    edge_colors: Mapping[Edge, int]

    @classmethod
    def build(cls, palette: int, vertex_colors: Iterable[int],
              edge_colors: Mapping[Edge, int] | Iterable[tuple[int, int, int]]) -> "TotalColoring":
        if isinstance(edge_colors, Mapping):
            items = ((edge_key(*e), c) for e, c in edge_colors.items())
        else:
            items = ((edge_key(u, v), c) for u, v, c in edge_colors)
        ec = dict(sorted((e, int(c)) for e, c in items))
        vc = tuple(int(c) for c in vertex_colors)
        for c in list(vc) + list(ec.values()):
            if not 0 <= c < palette:
                raise ColoringError(f"color {c} outside palette of size {palette}")
        return cls(palette, vc, ec)

    def edge(self, u: int, v: int) -> int:
        return self.edge_colors[edge_key(u, v)]

    def check_covers(self, g: Graph) -> None:
        if len(self.vertex_colors) != g.n:
            raise ColoringError(f"{len(self.vertex_colors)} vertex colors for {g.n} vertices")
        if set(self.edge_colors) != set(g.edges):
            raise ColoringError("edge colors do not match the edge set of the graph")

    def permuted(self, perm: Mapping[int, int] | list[int]) -> "TotalColoring":
        """Same coloring with every color ``c`` replaced by ``perm[c]``."""
        return TotalColoring(self.palette, tuple(perm[c] for c in self.vertex_colors),
                             {e: perm[c] for e, c in self.edge_colors.items()})

    def relabeled(self, vertex_perm: list[int]) -> "TotalColoring":
        """Coloring transported along ``v -> vertex_perm[v]``."""
        vc = [0] * len(self.vertex_colors)
        for v, c in enumerate(self.vertex_colors):
            vc[vertex_perm[v]] = c
        ec = {edge_key(vertex_perm[u], vertex_perm[v]): c for (u, v), c in self.edge_colors.items()}
        return TotalColoring(self.palette, tuple(vc), dict(sorted(ec.items())))

    def normalized(self) -> "TotalColoring":
        """Representative under global color permutation: colors renamed by first use.

        Order of use is vertices first, then edges in key order.
        """
        perm: dict[int, int] = {}
        for c in list(self.vertex_colors) + [self.edge_colors[e] for e in sorted(self.edge_colors)]:
            if c not in perm:
                perm[c] = len(perm)
        for c in range(self.palette):
            perm.setdefault(c, len(perm))
        return self.permuted(perm)

    def key(self) -> tuple:
        return (self.palette, self.vertex_colors, tuple(sorted(self.edge_colors.items())))

    def __eq__(self, other):
        return isinstance(other, TotalColoring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


@dataclass(frozen=True)
class Violation:
    rule: str
    element: tuple
    message: str

    def to_dict(self) -> dict:
        return {"rule": self.rule, "element": _jsonable(self.element), "message": self.message}


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def count(self, rule: str) -> int:
        return sum(v.rule == rule for v in self.violations)

    def add(self, rule: str, element: tuple, message: str) -> None:
        self.violations.append(Violation(rule, element, message))

    def extend(self, other: "VerificationReport") -> None:
        self.violations.extend(other.violations)

    def to_dict(self) -> dict:
        return {"verdict": self.verdict,
                "violations": [v.to_dict() for v in self.violations],
                "info": _jsonable(self.info)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(i) for i in items]
    return x


# -- verifiers ---------------------------------------------------------------

def verify_tc(g: Graph, c: TotalColoring) -> VerificationReport:
    c.check_covers(g)
    rep = VerificationReport()
    vc = c.vertex_colors
    for u, v in g.edges:
        if vc[u] == vc[v]:
            rep.add("TC-V", ("edge", (u, v)), f"vertices {u} and {v} both have color {vc[u]}")
        ce = c.edge_colors[(u, v)]
        for w in (u, v):
            if vc[w] == ce:
                rep.add("TC-VE", ("edge", (u, v)), f"edge shares color {ce} with endpoint {w}")
    for v in range(g.n):
        nb = g.adj[v]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                a, b = edge_key(v, nb[i]), edge_key(v, nb[j])
                if c.edge_colors[a] == c.edge_colors[b]:
                    rep.add("TC-E", ("vertex", v), f"edges {a} and {b} both have color {c.edge_colors[a]}")
    return rep


def is_eds(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    if any(g.has_edge(u, v) for u in s for v in s if u < v):
        return False
    return all(len((set(g.adj[v]) | {v}) & s) == 1 for v in range(g.n) if v not in s)


def color_classes(c: TotalColoring) -> list[frozenset[int]]:
    """The vertex classes S_0, ..., S_{palette-1}."""
    classes: list[set[int]] = [set() for _ in range(c.palette)]
    for v, col in enumerate(c.vertex_colors):
        classes[col].add(v)
    return [frozenset(s) for s in classes]


def color_edges(c: TotalColoring, color: int) -> list[Edge]:
    return [e for e, col in c.edge_colors.items() if col == color]


def _eds_violations(g: Graph, s: frozenset[int], color: int, rep: VerificationReport) -> None:
    for u in sorted(s):
        for v in g.adj[u]:
            if v in s and u < v:
                rep.add("EDS-IND", ("edge", (u, v)), f"class {color} contains adjacent {u}, {v}")
    for v in range(g.n):
        if v in s:
            continue
        k = sum(1 for u in g.adj[v] if u in s)
        if k != 1:
            rep.add("EDS-DOM", ("vertex", v), f"dominated {k} times by class {color}")


def verify_etc(g: Graph, c: TotalColoring) -> VerificationReport:
    rep = verify_tc(g, c)
    classes = color_classes(c)
    rep.info["classes"] = [sorted(s) for s in classes]
    for i, s in enumerate(classes):
        if not s:
            rep.add("PART", ("color", i), f"vertex class of color {i} is empty")
        _eds_violations(g, s, i, rep)
    return rep


def _vegc_violations(g: Graph, c: TotalColoring, rep: VerificationReport) -> None:
    cycles = girth_cycles(g)
    rep.info["girth_cycles"] = len(cycles)
    for cyc in cycles:
        vcols = [c.vertex_colors[v] for v in cyc.vertices]
        if len(set(vcols)) != len(vcols):
            rep.add("VEGC-V", ("cycle", cyc.vertices), f"vertex colors {vcols} repeat")
        ecols = [c.edge_colors[e] for e in cyc.edges]
        if len(set(ecols)) != len(ecols):
            rep.add("VEGC-E", ("cycle", cyc.vertices), f"edge colors {ecols} repeat")


def verify_vegc(g: Graph, c: TotalColoring) -> VerificationReport:
    rep = verify_tc(g, c)
    _vegc_violations(g, c, rep)
    return rep


def verify_etgc(g: Graph, c: TotalColoring) -> VerificationReport:
    rep = verify_etc(g, c)
    _vegc_violations(g, c, rep)
    return rep


def verify_egc(g: Graph, edge_colors: Mapping[Edge, int], palette: int,
               strict: bool = False) -> VerificationReport:
    """Proper edge coloring whose girth cycles are all rainbow.

    With ``strict`` the girth must also equal the palette size, so that each
    girth cycle uses every color exactly once.
    """
    ec = {edge_key(*e): col for e, col in edge_colors.items()}
    if set(ec) != set(g.edges):
        raise ColoringError("edge colors do not match the edge set of the graph")
    rep = VerificationReport(info={"mode": "strict" if strict else "rainbow"})
    for col in ec.values():
        if not 0 <= col < palette:
            raise ColoringError(f"color {col} outside palette of size {palette}")
    for v in range(g.n):
        seen: dict[int, Edge] = {}
        for u in g.adj[v]:
            e = edge_key(u, v)
            if ec[e] in seen:
                rep.add("EGC-PROP", ("vertex", v), f"edges {seen[ec[e]]} and {e} share color {ec[e]}")
            seen[ec[e]] = e
    cycles = girth_cycles(g)
    if strict and cycles and len(cycles[0]) != palette:
        rep.add("EGC-LEN", ("graph",), f"girth {len(cycles[0])} differs from palette size {palette}")
    for cyc in cycles:
        cols = [ec[e] for e in cyc.edges]
        if len(set(cols)) != len(cols):
            rep.add("EGC-RBW", ("cycle", cyc.vertices), f"edge colors {cols} repeat")
    return rep


def orthogonal(c1: TotalColoring, c2: TotalColoring) -> bool:
    if len(c1.vertex_colors) != len(c2.vertex_colors) or set(c1.edge_colors) != set(c2.edge_colors):
        raise ColoringError("colorings live on different graphs")
    if c1.palette != c2.palette:
        raise ColoringError("colorings use different palettes")
    return c1.vertex_colors == c2.vertex_colors and all(
        c1.edge_colors[e] != c2.edge_colors[e] for e in c1.edge_colors)


class CycleClass(str, enum.Enum):
    FULLY_BIJECTIVE = "fully_bijective"
    EDGE_ONLY = "edge_only"
    VERTEX_ONLY = "vertex_only"
    NEITHER = "neither"


def classify_cycle(c: TotalColoring, cyc: Cycle) -> CycleClass:
    if len(cyc) != c.palette:
        raise ValueError(f"cycle of length {len(cyc)} cannot be compared with palette {c.palette}")
    v_ok = len({c.vertex_colors[v] for v in cyc.vertices}) == len(cyc)
    e_ok = len({c.edge_colors[e] for e in cyc.edges}) == len(cyc)
    if v_ok and e_ok:
        return CycleClass.FULLY_BIJECTIVE
    if e_ok:
        return CycleClass.EDGE_ONLY
    if v_ok:
        return CycleClass.VERTEX_ONLY
    return CycleClass.NEITHER


# -- serialization -----------------------------------------------------------

def coloring_to_dict(c: TotalColoring) -> dict:
    return {"palette": c.palette,
            "vertex_colors": list(c.vertex_colors),
            "edge_colors": [[u, v, col] for (u, v), col in sorted(c.edge_colors.items())]}


def coloring_from_dict(d: dict) -> TotalColoring:
    try:
        return TotalColoring.build(int(d["palette"]), d["vertex_colors"],
                                   [tuple(int(x) for x in t) for t in d["edge_colors"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad coloring object: {exc}") from exc


def coloring_to_json(c: TotalColoring) -> str:
    return json.dumps(coloring_to_dict(c), separators=(",", ":"))


def coloring_to_dot(g: Graph, c: TotalColoring) -> str:
    """DOT drawing with colors 0..4 shown as red, blue, hazel, black, green."""
    def name(col):
        return DOT_COLORS[col] if col < len(DOT_COLORS) else "gray"
    vattrs = {v: f'color="{name(col)}"' for v, col in enumerate(c.vertex_colors)}
    eattrs = {e: f'color="{name(col)}"' for e, col in c.edge_colors.items()}
    return to_dot(g, vattrs, eattrs)
