"""Simple undirected graphs on vertices ``0..n-1`` and the cycle machinery on top.

Graphs here are small (the bound is 64 vertices), so adjacency is kept twice:
as sorted neighbor tuples for iteration and as one int bitmask per vertex for
constant-time membership tests inside the search kernels.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_VERTICES = 64

Edge = tuple[int, int]


class GraphError(ValueError):
    """Structural problem with a graph (loops, parallel edges, bad index)."""


class CapacityError(GraphError):
    """Graph larger than an operation is configured to handle."""


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    _masks: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length does not match n")
        masks = []
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {v} not sorted/unique")
            m = 0
            for u in nbrs:
                if u == v:
                    raise GraphError(f"loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                m |= 1 << u
            masks.append(m)
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not masks[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs),
                   tuple(labels) if labels is not None else None)

    @property
    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def mask(self, v: int) -> int:
        return self._masks[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        degs = {len(a) for a in self.adj}
        return degs.pop() if len(degs) == 1 else None

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for v in range(self.n):
                labels[perm[v]] = self.labels[v]
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges], labels)

    def with_edges(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> "Graph":
        es = set(self.edges)
        for e in remove:
            k = edge_key(*e)
            if k not in es:
                raise GraphError(f"edge {k} not present")
            es.remove(k)
        for e in add:
            k = edge_key(*e)
            if k in es:
                raise GraphError(f"edge {k} already present")
            es.add(k)
        return Graph.from_edges(self.n, sorted(es), self.labels)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return len(seen) == self.n


@dataclass(frozen=True, order=True)
class Cycle:
    """A simple cycle stored in canonical rotation.

    The smallest vertex comes first and the walk heads toward the smaller of
    its two cycle-neighbors, so each cycle has exactly one representation.
    """
    vertices: tuple[int, ...]

    @classmethod
    def from_walk(cls, walk: Sequence[int]) -> "Cycle":
        w = list(walk)
        if len(w) < 3 or len(set(w)) != len(w):
            raise GraphError(f"not a simple closed walk: {w}")
        i = w.index(min(w))
        w = w[i:] + w[:i]
        if w[-1] < w[1]:
            w = [w[0]] + w[:0:-1]
        return cls(tuple(w))

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        return len(set(vs)) == len(vs) and all(g.has_edge(a, b) for a, b in self.edges)


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return frozenset(g.adj[v]) | {v}


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in g.adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    q.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def enumerate_cycles(g: Graph, length: int) -> list[Cycle]:
    """Every simple cycle with exactly ``length`` vertices, sorted.

    Rooted DFS: a cycle is found from its smallest vertex only, and of the two
    traversal directions only the one with ``second < last`` is kept.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    out: list[Cycle] = []
    path: list[int] = []
    on_path = [False] * g.n

    def extend(root: int, v: int):
        if len(path) == length:
            if g.has_edge(v, root) and path[1] < path[-1]:
                out.append(Cycle(tuple(path)))
            return
        for u in g.adj[v]:
            if u > root and not on_path[u]:
                path.append(u)
                on_path[u] = True
                extend(root, u)
                on_path[u] = False
                path.pop()

    for root in range(g.n):
        path.append(root)
        on_path[root] = True
        extend(root, root)
        on_path[root] = False
        path.pop()
    out.sort()
    return out


def girth_cycles(g: Graph) -> list[Cycle]:
    gi = girth(g)
    return [] if gi == math.inf else enumerate_cycles(g, int(gi))


def distances_from(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for u in g.adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def diameter(g: Graph) -> float:
    best = 0
    for s in range(g.n):
        d = distances_from(g, s)
        if min(d) < 0:
            return math.inf
        best = max(best, max(d))
    return best


# canonical labeling -------------------------------------------------------

def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Iterated color refinement; returns ranks, independent of vertex names."""
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _certificate(g: Graph, colors: list[int]) -> tuple:
    return tuple(sorted(edge_key(colors[u], colors[v]) for u, v in g.edges))


def canonical_form(g: Graph, bound: int = MAX_VERTICES) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic.

    Individualization-refinement: refine, split the first smallest
    non-singleton cell on each of its vertices, recurse, and keep the smallest
    edge list seen at a discrete leaf. Two leaves with equal certificates give
    an automorphism; children lying in one orbit of the automorphisms that fix
    the current individualized prefix are explored once.
    """
    if g.n > bound:
        raise CapacityError(f"{g.n} vertices exceeds canonical-form bound {bound}")
    if g.n == 0:
        return bytes([0])
    best_cert: list = [None]
    leaf_of: dict[tuple, list[int]] = {}
    autos: list[list[int]] = []

    def orbits(cell: list[int], prefix: list[int]) -> dict[int, int]:
        parent = {v: v for v in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in autos:
            if any(a[p] != p for p in prefix):
                continue
            for v in cell:
                w = a[v]
                if w in parent:
                    rv, rw = find(v), find(w)
                    if rv != rw:
                        parent[max(rv, rw)] = min(rv, rw)
        return {v: find(v) for v in cell}

    def search(colors: list[int], prefix: list[int]):
        colors = _refine(g, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == g.n:
            cert = _certificate(g, colors)
            other = leaf_of.get(cert)
            if other is None:
                leaf_of[cert] = colors
            else:
                inv = [0] * g.n
                for v, c in enumerate(colors):
                    inv[c] = v
                autos.append([inv[other[v]] for v in range(g.n)])
            if best_cert[0] is None or cert < best_cert[0]:
                best_cert[0] = cert
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        done: set[int] = set()
        for v in cells[target]:
            orb = orbits(cells[target], prefix)
            if orb[v] in {orb[d] for d in done}:
                continue
            done.add(v)
            indiv = [2 * c + (1 if (c == target and u != v) else 0) for u, c in enumerate(colors)]
            search(indiv, prefix + [v])

    search([len(a) for a in g.adj], [])
    out = bytearray([g.n])
    for u, v in best_cert[0]:
        out += bytes((u, v))
    return bytes(out)
