"""5-cycle censuses for Pet^2, its double cover and the Robertson cage.

Counts always come from direct enumeration. Figures stated in the source
text are carried alongside as ``claims`` and compared, never substituted.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .coloring import CycleClass, TotalColoring, VerificationReport, classify_cycle
from .generators import (PentadStructure, VoltageAssignment, opposite_edge_property, pet_k,
                         robertson, voltage_lift)
from .graph import Cycle, Edge, Graph, edge_key, enumerate_cycles


class CensusError(ValueError):
    pass


@dataclass
class CycleCensus:
    total: int
    by_type: dict[str, int]
    by_class: dict[str, int]
    per_edge: dict[Edge, int]
    cycles: list[tuple[Cycle, str, str | None]] = field(default_factory=list)
    claims: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def check_handshake(self, length: int = 5) -> bool:
        return sum(self.per_edge.values()) == length * self.total and sum(self.by_type.values()) == self.total

    def incidence_by_kind(self, kind_of) -> dict[str, list[int]]:
        out: dict[str, set] = {}
        for e, k in self.per_edge.items():
            out.setdefault(kind_of(e), set()).add(k)
        return {k: sorted(v) for k, v in sorted(out.items())}

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "by_type": dict(sorted(self.by_type.items())),
            "by_class": dict(sorted(self.by_class.items())),
            "per_edge": [[u, v, k] for (u, v), k in sorted(self.per_edge.items())],
            "claims": self.claims,
            "notes": self.notes,
        }


def _class_counts(classes) -> dict[str, int]:
    counts = Counter(classes)
    return {cc.value: counts.get(cc.value, 0) for cc in CycleClass}


def _per_edge(g: Graph, cycles) -> dict[Edge, int]:
    inc = {e: 0 for e in g.edges}
    for cyc in cycles:
        for e in cyc.edges:
            inc[e] += 1
    return inc


def pentad_type(ps: PentadStructure, cyc: Cycle) -> str:
    """Structural type from the number of pentagon, pentagram and Hamilton edges."""
    kinds = Counter(ps.edge_kind(e) for e in cyc.edges)
    sig = (kinds["pentagon"], kinds["pentagram"], kinds["hamilton"])
    return {(5, 0, 0): "1", (0, 5, 0): "1", (1, 0, 4): "2", (2, 1, 2): "3", (1, 2, 2): "4"}.get(sig, "other")


PET2_CLAIMS = {
    "total": 54,
    "by_type": {"1": 4, "2": 10, "3": 20, "4": 20},
    "fully_bijective": 14,
    "per_edge": {"pentagon": 8, "pentagram": 7, "hamilton": 5},
}


def census_pet2(coloring: TotalColoring | None = None, g: Graph | None = None) -> CycleCensus:
    base, ps = pet_k(2)
    if g is not None and g != base:
        raise CensusError("census_pet2 expects the graph built by pet_k(2)")
    if coloring is not None and (len(coloring.vertex_colors) != base.n or coloring.palette != 5):
        raise CensusError("the coloring does not fit Pet^2 with five colors")
    return _pentad_census(base, ps, coloring, PET2_CLAIMS)


def census_pet_k(k: int, coloring: TotalColoring | None = None) -> CycleCensus:
    g, ps = pet_k(k)
    return _pentad_census(g, ps, coloring, PET2_CLAIMS if k == 2 else {})


def _pentad_census(g, ps, coloring, claims) -> CycleCensus:
    cycles = enumerate_cycles(g, 5)
    rows = []
    for cyc in cycles:
        cls = classify_cycle(coloring, cyc).value if coloring else None
        rows.append((cyc, pentad_type(ps, cyc), cls))
    by_type = dict(Counter(t for _, t, _ in rows))
    by_class = _class_counts(c for _, _, c in rows) if coloring else {}
    census = CycleCensus(len(cycles), by_type, by_class, _per_edge(g, cycles), rows, dict(claims))
    inc = census.incidence_by_kind(ps.edge_kind)
    census.claims["observed_per_edge"] = {k: v[0] if len(v) == 1 else v for k, v in inc.items()}
    for kind, want in claims.get("per_edge", {}).items():
        got = inc.get(kind)
        if got != [want]:
            census.notes.append(f"{kind} edges lie on {got} five-cycles each; stated {want}")
    return census


def lift_cycle(cyc: Cycle, n: int, voltage: VoltageAssignment) -> list[tuple[int, ...]]:
    """Lifts of a base cycle: two copies if it crosses an even number of times, else one doubled cycle."""
    walk = list(cyc.vertices)
    L = len(walk)

    def follow(layer):
        out = []
        for i in range(L):
            out.append(walk[i] + layer * n)
            if voltage.is_crossed(edge_key(walk[i], walk[(i + 1) % L])):
                layer ^= 1
        return out, layer

    first, end = follow(0)
    if end == 0:
        return [tuple(first), tuple(follow(1)[0])]
    second, _ = follow(1)
    return [tuple(first + second)]


@dataclass
class LiftCensus:
    five: CycleCensus
    ten_cycles: int
    parity_ok: bool
    direct_five: int
    claims: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = self.five.to_dict()
        d.update({"ten_cycles": self.ten_cycles, "parity_ok": self.parity_ok,
                  "direct_five_cycles": self.direct_five})
        d["claims"] = self.claims
        return d


DOD2_CLAIMS = {"total": 64, "ten_cycles": 22, "fully_bijective": 24}


def census_lift(base: CycleCensus, base_graph: Graph, voltage: VoltageAssignment,
                lifted_coloring: TotalColoring | None = None) -> LiftCensus:
    """Lift a 5-cycle census through a double cover and cross-check it by enumeration."""
    n = base_graph.n
    lifted = voltage_lift(base_graph, voltage)
    fives: list[Cycle] = []
    ten = 0
    ok = True
    for cyc, typ, _ in base.cycles:
        for walk in lift_cycle(cyc, n, voltage):
            c = Cycle.from_walk(walk)
            ok &= c.is_valid_in(lifted)
            if len(walk) == 5:
                fives.append(c)
            else:
                ten += 1
    direct = enumerate_cycles(lifted, 5)
    ok &= set(direct) == set(fives)
    types = {}
    for cyc, typ, _ in base.cycles:
        crossed = sum(voltage.is_crossed(e) for e in cyc.edges)
        if crossed % 2 == 0:
            types[typ] = types.get(typ, 0) + 2
    rows = [(c, "lift", classify_cycle(lifted_coloring, c).value if lifted_coloring else None) for c in direct]
    five = CycleCensus(len(direct), types,
                       _class_counts(r[2] for r in rows) if lifted_coloring else {},
                       _per_edge(lifted, direct), rows, dict(DOD2_CLAIMS) if n == 20 else {})
    return LiftCensus(five, ten, ok, len(direct), five.claims)


def ten_cycles_over_five(lifted: Graph, n: int) -> int:
    """Direct count of 10-cycles whose projection is a 5-cycle of the base."""
    return sum(len({v % n for v in c.vertices}) == 5 for c in enumerate_cycles(lifted, 10))


# -- Robertson ---------------------------------------------------------------

ROBERTSON_CLAIMS = {"total": 44, "fully_bijective": 4, "edge_only": 5, "neither": 35}

# Cycles named by letters A..S in the drawing of the cage.
ROBERTSON_FULLY_BIJECTIVE = ("DMIFC", "AINGL", "SFKJO", "SENGP")
ROBERTSON_EDGE_ONLY = ("ABEHL", "SEBCF", "ABCGL", "DCBJM", "ARKJB")


def robertson_letter_embeddings(g: Graph | None = None):
    """Every map from letters to vertices under which each named cycle is a cycle."""
    g = g or robertson()
    words = ROBERTSON_FULLY_BIJECTIVE + ROBERTSON_EDGE_ONLY
    pairs = sorted({tuple(sorted((w[i], w[(i + 1) % 5]))) for w in words for i in range(5)})
    letters = sorted({ch for w in words for ch in w})
    nbrs = {a: set() for a in letters}
    for a, b in pairs:
        nbrs[a].add(b)
        nbrs[b].add(a)
    order = sorted(letters, key=lambda a: -len(nbrs[a]))
    m: dict[str, int] = {}
    used: set[int] = set()

    def go(i):
        if i == len(order):
            yield dict(sorted(m.items()))
            return
        a = order[i]
        for v in range(g.n):
            if v not in used and all(g.has_edge(v, m[b]) for b in nbrs[a] if b in m):
                m[a] = v
                used.add(v)
                yield from go(i + 1)
                del m[a]
                used.discard(v)

    yield from go(0)


def robertson_letter_embedding(g: Graph | None = None) -> dict[str, int] | None:
    """The first letter embedding in a deterministic backtracking order.

    The drawing's own adjacency is not recoverable, so any embedding serves.
    """
    return next(robertson_letter_embeddings(g), None)


def named_class_constraints(embedding: dict[str, int]) -> list[tuple]:
    """Element groups that must be rainbow for the named classes to hold."""
    groups = []
    for w, c in named_robertson_cycles(embedding).items():
        groups.append(tuple(("e", e) for e in c.edges))
        if w in ROBERTSON_FULLY_BIJECTIVE:
            groups.append(tuple(("v", v) for v in c.vertices))
    return groups


def named_robertson_cycles(embedding: dict[str, int]) -> dict[str, Cycle]:
    return {w: Cycle.from_walk([embedding[ch] for ch in w])
            for w in ROBERTSON_FULLY_BIJECTIVE + ROBERTSON_EDGE_ONLY}


def census_robertson(coloring: TotalColoring | None = None) -> CycleCensus:
    g = robertson()
    cycles = enumerate_cycles(g, 5)
    classes = [classify_cycle(coloring, c).value if coloring else None for c in cycles]
    census = CycleCensus(len(cycles), {"all": len(cycles)},
                         _class_counts(classes) if coloring else {},
                         _per_edge(g, cycles), list(zip(cycles, ["all"] * len(cycles), classes)),
                         dict(ROBERTSON_CLAIMS))
    if census.total != ROBERTSON_CLAIMS["total"]:
        census.notes.append(f"enumeration finds {census.total} five-cycles; stated 44")
    emb = robertson_letter_embedding(g)
    if emb is not None:
        named = named_robertson_cycles(emb)
        census.claims["letter_embedding"] = emb
        if coloring is not None:
            census.claims["named_classes"] = {w: classify_cycle(coloring, c).value for w, c in named.items()}
    return census


def pet_k_unique_5cycles(k: int, coloring: TotalColoring | None = None) -> VerificationReport:
    """Are the pentagons and pentagrams the only 5-cycles of Pet^k?"""
    if k <= 2:
        raise CensusError("the uniqueness statement concerns k > 2")
    if k % 5 == 0:
        raise CensusError("k must not be divisible by 5")
    g, ps = pet_k(k)
    rep = VerificationReport()
    special = set(ps.special)
    found = enumerate_cycles(g, 5)
    for cyc in found:
        if cyc not in special:
            rep.add("C5-EXTRA", cyc.vertices, f"5-cycle of type {pentad_type(ps, cyc)} beyond the pentagons and pentagrams")
    if coloring is not None:
        for cyc in ps.special:
            if not opposite_edge_property(coloring, cyc):
                rep.add("C5-OPP", cyc.vertices, "a vertex and its opposite edge differ in color")
    rep.info.update({"k": k, "five_cycles": len(found), "expected": 2 * k,
                     "by_type": dict(sorted(Counter(pentad_type(ps, c) for c in found).items()))})
    return rep
