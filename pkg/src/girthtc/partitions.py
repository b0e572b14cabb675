"""Edge partitions of efficiently colored cubic graphs into 3-paths and 3-stars."""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import ColoringError, TotalColoring, color_classes, verify_etc, verify_etgc
from .graph import CapacityError, Edge, Graph, edge_key

# Each pair of color words splits the edges of an ETGC-colored cubic graph.
PAIRS: tuple[tuple[str, str], ...] = (
    ("0123", "1302"), ("0132", "1203"), ("0213", "2301"),
    ("0231", "2103"), ("0312", "3201"), ("0321", "3102"),
)


@dataclass(frozen=True)
class Path3:
    vertices: tuple[int, int, int, int]
    word: str

    @property
    def edges(self) -> tuple[Edge, Edge, Edge]:
        v = self.vertices
        return tuple(edge_key(v[i], v[i + 1]) for i in range(3))


@dataclass(frozen=True)
class PathPartition:
    pair: tuple[str, str]
    paths: tuple[Path3, ...]

    def edge_sets(self) -> frozenset[frozenset[Edge]]:
        return frozenset(frozenset(p.edges) for p in self.paths)


@dataclass(frozen=True)
class Star:
    center: int
    edges: tuple[Edge, Edge, Edge]


@dataclass(frozen=True)
class StarPartition:
    center_color: int
    stars: tuple[Star, ...]

    @property
    def covered(self) -> frozenset[Edge]:
        return frozenset(e for s in self.stars for e in s.edges)


def parse_pair(text: str) -> tuple[str, str]:
    words = tuple(w.strip() for w in text.split(","))
    for p in PAIRS:
        if words == p or words == p[::-1]:
            return p
    raise ValueError(f"{text!r} is not one of the pairs {', '.join(','.join(p) for p in PAIRS)}")


def _neighbor_colored(g: Graph, c: TotalColoring, v: int, col: int) -> int | None:
    hits = [u for u in g.adj[v] if c.vertex_colors[u] == col]
    return hits[0] if len(hits) == 1 else None


def trace_word(g: Graph, c: TotalColoring, word: str) -> list[Path3]:
    """All paths whose vertex colors read ``word``, one per vertex of its first color."""
    cols = [int(ch) for ch in word]
    out = []
    for v in range(g.n):
        if c.vertex_colors[v] != cols[0]:
            continue
        walk = [v]
        for col in cols[1:]:
            nxt = _neighbor_colored(g, c, walk[-1], col)
            if nxt is None or nxt in walk:
                break
            walk.append(nxt)
        else:
            out.append(Path3(tuple(walk), word))
    return out


def _canonical(paths) -> tuple[Path3, ...]:
    return tuple(sorted(paths, key=lambda p: min(p.edges)))


def three_path_partition(g: Graph, c: TotalColoring, pair: tuple[str, str] = PAIRS[0]) -> PathPartition:
    if not verify_etgc(g, c).passed:
        raise ColoringError("three_path_partition needs an ETGC")
    if tuple(pair) not in PAIRS and tuple(pair)[::-1] not in PAIRS:
        raise ValueError(f"unknown pair {pair}")
    paths = trace_word(g, c, pair[0]) + trace_word(g, c, pair[1])
    used = [e for p in paths for e in p.edges]
    if len(used) != len(set(used)) or set(used) != set(g.edges):
        raise ColoringError(f"the pair {pair} does not split the edges of this graph")
    return PathPartition(tuple(pair), _canonical(paths))


def all_three_path_partitions(g: Graph, max_n: int = 16) -> list[frozenset[frozenset[Edge]]]:
    """Every decomposition of E(g) into paths with three edges, by brute force."""
    if g.n > max_n:
        raise CapacityError(f"brute-force 3-path enumeration is limited to {max_n} vertices")
    edges = g.edges
    found = []

    def paths_through(e, free):
        u, v = e
        seen = set()
        # e as the middle edge, or as an end edge (two orientations each)
        for a, b in ((u, v), (v, u)):
            for x in g.adj[a]:
                if x != b and edge_key(a, x) in free:
                    for y in g.adj[b]:
                        if y not in (a, x) and edge_key(b, y) in free:
                            seen.add(frozenset({edge_key(x, a), e, edge_key(b, y)}))
            for x in g.adj[b]:
                if x != a and edge_key(b, x) in free:
                    for y in g.adj[x]:
                        if y not in (a, b) and edge_key(x, y) in free:
                            seen.add(frozenset({e, edge_key(b, x), edge_key(x, y)}))
        return sorted(seen, key=sorted)

    def go(free: frozenset, acc: list):
        if not free:
            found.append(frozenset(acc))
            return
        e = min(free)
        rest = free - {e}
        for p in paths_through(e, rest):
            go(rest - p, acc + [p])

    go(frozenset(edges), [])
    return found


def _path_word(g: Graph, c: TotalColoring, es: frozenset[Edge]) -> str:
    deg: dict[int, int] = {}
    for u, v in es:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    start = min(v for v, d in deg.items() if d == 1)
    walk = [start]
    left = set(es)
    while left:
        e = next(e for e in left if walk[-1] in e)
        left.remove(e)
        walk.append(e[0] if e[1] == walk[-1] else e[1])
    return "".join(str(c.vertex_colors[v]) for v in walk)


def count_three_path_partitions(g: Graph, c: TotalColoring, max_n: int = 16) -> dict:
    """Brute-force counts: all 3-path decompositions, and those driven by one pair of words."""
    if not verify_etgc(g, c).passed:
        raise ColoringError("count_three_path_partitions needs an ETGC")
    every = all_three_path_partitions(g, max_n)
    per_pair = {}
    for pair in PAIRS:
        words = {pair[0], pair[1], pair[0][::-1], pair[1][::-1]}
        per_pair[",".join(pair)] = sum(
            all(_path_word(g, c, p) in words for p in part) for part in every)
    return {"all_partitions": len(every), "pair_driven": sum(per_pair.values()),
            "per_pair": per_pair, "claimed": 6 * g.n}


def three_star_partitions(g: Graph, c: TotalColoring) -> list[StarPartition]:
    """For each color, the stars centered on that vertex class.

    The stars of one class are edge-disjoint and cover half of the edges;
    over the four classes every edge is covered exactly twice, once from
    each endpoint.
    """
    rep = verify_etc(g, c)
    if not rep.passed or c.palette != 4 or g.regular_degree() != 3:
        raise ColoringError("three_star_partitions needs an efficient total 4-coloring of a cubic graph")
    out = []
    for col, cls in enumerate(color_classes(c)):
        stars = tuple(Star(v, tuple(edge_key(v, u) for u in g.adj[v])) for v in sorted(cls))
        out.append(StarPartition(col, stars))
    return out


def partition_to_dict(p: PathPartition | list[StarPartition]) -> dict:
    if isinstance(p, PathPartition):
        return {"pair": list(p.pair),
                "paths": [{"vertices": list(x.vertices), "word": x.word} for x in p.paths]}
    return {"star_partitions": [{"center_color": s.center_color,
                                 "stars": [{"center": st.center, "edges": [list(e) for e in st.edges]}
                                           for st in s.stars]} for s in p]}
