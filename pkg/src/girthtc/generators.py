"""Named graphs and colorings: cycles, prisms, toroidal grids, Pet^k, Dod^k, Robertson."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import displays
from .coloring import (ColoringError, TotalColoring, orthogonal, verify_etc, verify_tc)
from .cutout import Cutout, periodic_extension, realize
from .graph import Cycle, Edge, Graph, edge_key


class ConstructionError(ValueError):
    """A construction is undefined for the requested parameters."""


def cycle_etc(j: int) -> tuple[Graph, TotalColoring]:
    """C_{3j} with the sequence v0, e0, v1, e1, ... colored 0, 1, 2, 0, 1, 2, ..."""
    if j < 2:
        raise ConstructionError("cycle_etc needs j >= 2")
    n = 3 * j
    g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    vc = [(2 * i) % 3 for i in range(n)]
    ec = {edge_key(i, (i + 1) % n): (2 * i + 1) % 3 for i in range(n)}
    return g, TotalColoring.build(3, vc, ec)


def _labeled_q3(real) -> Graph:
    labels = [""] * real.graph.n
    for p, lab in displays.Q3_LABELS.items():
        labels[real.positions[p]] = lab
    return Graph(real.graph.n, real.graph.adj, tuple(labels))


def q3_pair() -> tuple[Graph, TotalColoring, TotalColoring]:
    """Q3 with binary labels and its two orthogonal ETGCs."""
    left = realize(displays.load("q3-left"))
    right = realize(displays.load("q3-right"))
    if left.graph != right.graph:
        raise AssertionError("the two Q3 fixtures realize different graphs")
    return _labeled_q3(left), left.coloring, right.coloring


def prism_ring(j: int) -> tuple[Graph, TotalColoring, TotalColoring]:
    """C_{4j} x K2 with the orthogonal pair continued from Q3 (j=1 gives Q3)."""
    if j < 1:
        raise ConstructionError("prism_ring needs j >= 1")
    left = realize(periodic_extension(displays.load("q3-left"), "x", j))
    right = realize(periodic_extension(displays.load("q3-right"), "x", j))
    return left.graph, left.coloring, right.coloring


TOROIDAL_BASES = ("truncated-square", "psi")


def toroidal_cutout(h: int, k: int, base: str = "truncated-square") -> Cutout:
    if h < 1 or k < 1:
        raise ConstructionError("h and k must be positive")
    if base == "truncated-square":
        cut = displays.load("truncated-square")
    elif base == "psi":
        cut = psi_cutout()
    else:
        raise ConstructionError(f"unknown toroidal base {base!r}; choose from {TOROIDAL_BASES}")
    return periodic_extension(periodic_extension(cut, "x", h), "y", k)


def toroidal_grid(h: int, k: int, base: str = "truncated-square") -> tuple[Graph, TotalColoring]:
    real = realize(toroidal_cutout(h, k, base))
    return real.graph, real.coloring


def psi_cutout() -> Cutout:
    """The 32-vertex toroidal cutout, colored by propagation from one square."""
    from .solver import solve_from_seed
    cut = displays.load("psi")
    real = realize(cut)
    col = solve_from_seed(real.graph, real.belts, _default_seed(real))
    inv = {}
    for p, v in real.positions.items():
        inv.setdefault(v, []).append(p)
    points = dict(cut.points)
    for v, ps in inv.items():
        for p in ps:
            points[p] = col.vertex_colors[v]
    segs = [type(s)(s.a, s.b, col.edge(real.positions[s.a], real.positions[s.b])) for s in cut.segments]
    return cut.with_colors(points, segs)


def _default_seed(real) -> dict:
    """Color the first 4-belt and its first vertex's edges one-to-one with [4]."""
    belt = next(b for b in real.belts if b.length == 4)
    w = belt.walk
    g = real.graph
    seed_v = {w[0]: 0}
    others = [u for u in g.adj[w[0]]]
    seed_e = {edge_key(w[0], u): i + 1 for i, u in enumerate(others)}
    return {"vertices": seed_v, "edges": seed_e}


def gp_fixture(n: int) -> tuple[Graph, TotalColoring]:
    if n not in (6, 7):
        raise ConstructionError(f"no G({n},1) fixture; only n = 6, 7")
    real = realize(displays.load(f"gp{n}"))
    return real.graph, real.coloring


# -- Pet^k -------------------------------------------------------------------

@dataclass(frozen=True)
class PentadStructure:
    k: int
    hamilton: Cycle
    pentagons: tuple[Cycle, ...]
    pentagrams: tuple[Cycle, ...]
    factors: dict = field(default_factory=dict)

    def edge_kind(self, e: Edge) -> str:
        u, v = e
        d = (v - u) % (10 * self.k)
        d = min(d, 10 * self.k - d)
        if d == 1:
            return "hamilton"
        return "pentagon" if u % 2 == 0 else "pentagram"

    @property
    def special(self) -> tuple[Cycle, ...]:
        return self.pentagons + self.pentagrams


def pet_k(k: int) -> tuple[Graph, PentadStructure]:
    """Hamilton 10k-cycle with k pentagons on even and k pentagrams on odd vertices."""
    if k < 2:
        raise ConstructionError("Pet^k needs k >= 2")
    n = 10 * k
    pentagons = tuple(Cycle.from_walk([(t * 2 * k + 2 * j) % n for t in range(5)]) for j in range(k))
    pentagrams = tuple(Cycle.from_walk([(t * 4 * k + 2 * j + 1) % n for t in range(5)]) for j in range(k))
    edges = {edge_key(i, (i + 1) % n) for i in range(n)}
    for c in pentagons + pentagrams:
        edges.update(c.edges)
    g = Graph.from_edges(n, sorted(edges))
    factors = {}
    if k == 2:
        # 1-factors joining P_i (even vertices 2i mod 4) to Q_j (odd vertices 2j+1 mod 4)
        for i in (0, 1):
            for j in (0, 1):
                factors[(i, j)] = tuple(sorted(
                    edge_key(v, u) for v in range(2 * i, n, 4) for u in ((v + 1) % n, (v - 1) % n)
                    if u % 4 == 2 * j + 1))
    return g, PentadStructure(k, Cycle.from_walk(range(n)), pentagons, pentagrams, factors)


def pet2_figure_tc() -> TotalColoring:
    """The drawn total coloring of Pet^2, as restated in the text."""
    g, _ = pet_k(2)
    vc = [(2 - i) % 5 for i in range(20)]
    word = (3, 4, 1, 2, 4, 0, 2, 3, 0, 1)
    ec = {edge_key(i, (i + 1) % 20): word[i % 10] for i in range(20)}
    cycles = {
        (0, 4, 8, 12, 16): (0, 1, 2, 3, 4),
        (2, 6, 10, 14, 18): (3, 4, 0, 1, 2),
        (1, 9, 17, 5, 13): (2, 4, 1, 3, 0),
        (3, 11, 19, 7, 15): (0, 2, 4, 1, 3),
    }
    for walk, cols in cycles.items():
        for t in range(5):
            ec[edge_key(walk[t], walk[(t + 1) % 5])] = cols[t]
    return TotalColoring.build(5, vc, ec)


@dataclass
class PetColoring:
    coloring: TotalColoring
    repaired: bool
    template: tuple | None
    note: str = ""


def literal_template_classes(k: int) -> list[tuple[set[int], set[Edge]]]:
    """Color classes of the printed rotation template, shifted by +i for color i."""
    n = 10 * k
    out = []
    for i in range(5):
        vs, es = set(), set()
        for j in range(k):
            b = 10 * j + i
            vs.update({b % n, (b + 5) % n})
            for u, v in ((2 * k, 8 * k), (4 * k, 6 * k), (3, 4), (6, 7)):
                es.add(edge_key((u + b) % n, (v + b) % n))
        out.append((vs, es))
    return out


def _literal_coloring(g: Graph, k: int) -> TotalColoring | None:
    classes = literal_template_classes(k)
    vc: dict[int, int] = {}
    ec: dict[Edge, int] = {}
    for i, (vs, es) in enumerate(classes):
        for v in vs:
            if v in vc:
                return None
            vc[v] = i
        for e in es:
            if not g.has_edge(*e) or e in ec:
                return None
            ec[e] = i
    if len(vc) != g.n or len(ec) != g.m:
        return None
    c = TotalColoring.build(5, [vc[v] for v in range(g.n)], ec)
    return c if verify_tc(g, c).passed else None


def orbit_coloring(k: int, offsets: tuple[int, int, int, int, int]) -> TotalColoring:
    """Coloring equivariant under the rotation ``x -> x+2``, which adds 1 to every color.

    ``offsets`` gives the colors of odd vertex 1, Hamilton edges (0,1) and
    (1,2), pentagon edge (0,2k) and pentagram edge (1,1+4k); vertex 0 has
    color 0. The element obtained by rotating ``m`` times gets color
    ``offset + m`` mod 5.
    """
    n = 10 * k
    b, h0, h1, p, q = offsets
    vc = [((v // 2) + (0 if v % 2 == 0 else b)) % 5 for v in range(n)]
    ec = {}
    for m in range(5 * k):
        ec[edge_key(2 * m, 2 * m + 1)] = (h0 + m) % 5
        ec[edge_key(2 * m + 1, (2 * m + 2) % n)] = (h1 + m) % 5
        ec[edge_key(2 * m, (2 * m + 2 * k) % n)] = (p + m) % 5
        ec[edge_key(2 * m + 1, (2 * m + 1 + 4 * k) % n)] = (q + m) % 5
    return TotalColoring.build(5, vc, ec)


def opposite_edge_property(c: TotalColoring, cyc: Cycle) -> bool:
    """Each vertex of the 5-cycle shares its color with the edge opposite to it."""
    w = cyc.vertices
    L = len(w)
    return all(c.vertex_colors[w[i]] == c.edge(w[(i + 2) % L], w[(i + 3) % L]) for i in range(L))


def pet_k_tc(k: int, template: tuple | None = None) -> PetColoring:
    """A nonefficient 5-total-coloring of Pet^k.

    The printed rotation template is tried first. It never yields a proper
    coloring (its Hamilton-edge classes overlap, and for k=2 it names a
    non-edge), so the repair searches the rotation-equivariant colorings of
    :func:`orbit_coloring` and keeps the first that is a total coloring, is not
    efficient, and has the opposite-edge property on every pentagon and
    pentagram when such a template exists.
    """
    if k < 2:
        raise ConstructionError("Pet^k needs k >= 2")
    if k % 5 == 0:
        raise ConstructionError("the rotation coloring is undefined when 5 divides k "
                                "(each pentagon and pentagram would be monochromatic)")
    g, ps = pet_k(k)
    if template is not None:
        c = orbit_coloring(k, tuple(template))
        return PetColoring(c, True, tuple(template), "explicit template")
    lit = _literal_coloring(g, k)
    if lit is not None and not verify_etc(g, lit).passed:
        return PetColoring(lit, False, None, "printed template")
    fallback = None
    for offs in itertools.product(range(5), repeat=5):
        c = orbit_coloring(k, offs)
        if not verify_tc(g, c).passed or verify_etc(g, c).passed:
            continue
        if all(opposite_edge_property(c, cyc) for cyc in ps.special):
            return PetColoring(c, True, offs, "template repaired")
        if fallback is None:
            fallback = (c, offs)
    if fallback is None:
        raise ConstructionError(f"no rotation template colors Pet^{k}")
    return PetColoring(fallback[0], True, fallback[1], "template repaired; opposite-edge property unavailable")


# -- Dod^k -------------------------------------------------------------------

@dataclass(frozen=True)
class VoltageAssignment:
    """Edges of the base graph that lift crossed; all others lift straight."""
    crossed: frozenset

    def is_crossed(self, e: Edge) -> bool:
        return edge_key(*e) in self.crossed


def voltage_lift(base: Graph, voltage: VoltageAssignment) -> Graph:
    """Double cover: vertex x lifts to x and x+n; crossed edges swap layers."""
    n = base.n
    edges = []
    for u, v in base.edges:
        if voltage.is_crossed((u, v)):
            edges += [(u, v + n), (u + n, v)]
        else:
            edges += [(u, v), (u + n, v + n)]
    labels = None
    if base.labels is not None:
        labels = list(base.labels) + [lab + "'" for lab in base.labels]
    return Graph.from_edges(2 * n, edges, labels)


def lift_coloring(base: Graph, voltage: VoltageAssignment, c: TotalColoring) -> TotalColoring:
    n = base.n
    vc = list(c.vertex_colors) * 2
    ec = {}
    for (u, v), col in c.edge_colors.items():
        if voltage.is_crossed((u, v)):
            ec[edge_key(u, v + n)] = col
            ec[edge_key(u + n, v)] = col
        else:
            ec[(u, v)] = col
            ec[(u + n, v + n)] = col
    return TotalColoring.build(c.palette, vc, ec)


def dod_voltage(k: int) -> VoltageAssignment:
    _, ps = pet_k(k)
    return VoltageAssignment(frozenset(e for cyc in ps.pentagrams for e in cyc.edges))


def dod_k(k: int, coloring: TotalColoring | None = None) -> tuple[Graph, VoltageAssignment, TotalColoring]:
    """Double cover of Pet^k in which exactly the pentagram edges cross."""
    base, _ = pet_k(k)
    volt = dod_voltage(k)
    if coloring is None:
        coloring = pet2_figure_tc() if k == 2 else pet_k_tc(k).coloring
    return voltage_lift(base, volt), volt, lift_coloring(base, volt, coloring)


# -- Robertson ---------------------------------------------------------------

# The (4,5)-cage on 19 vertices: a Hamilton 19-cycle plus the chords
# (i, i + ROBERTSON_CHORDS[i]) taken modulo 19 (Robertson, 1964).
ROBERTSON_CHORDS = (8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4)


def robertson() -> Graph:
    edges = {edge_key(i, (i + 1) % 19) for i in range(19)}
    for i, d in enumerate(ROBERTSON_CHORDS):
        edges.add(edge_key(i, (i + d) % 19))
    return Graph.from_edges(19, sorted(edges), labels=[chr(ord("A") + i) for i in range(19)])


# -- prism lift --------------------------------------------------------------

def prism_egc(g: Graph, c1: TotalColoring, c2: TotalColoring) -> tuple[Graph, dict[Edge, int], int]:
    """The prism g x K2 edge-colored from an orthogonal pair.

    Copy 0 takes ``c1``'s edge colors, copy 1 takes ``c2``'s, and each rung
    takes the shared color of its vertex. Returns the prism, its edge
    coloring and the palette size (one more than the input palette, the
    degree plus one of the prism).
    """
    if not orthogonal(c1, c2):
        raise ColoringError("prism_egc needs an orthogonal pair of colorings")
    n = g.n
    edges: dict[Edge, int] = {}
    for (u, v), col in c1.edge_colors.items():
        edges[(u, v)] = col
        edges[(u + n, v + n)] = c2.edge_colors[(u, v)]
    for v in range(n):
        edges[(v, v + n)] = c1.vertex_colors[v]
    prism = Graph.from_edges(2 * n, sorted(edges))
    return prism, dict(sorted(edges.items())), c1.palette + 1
