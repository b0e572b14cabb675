"""Independent reference computations used by the tests.

Nothing here imports the search or enumeration code under test; graphs are
converted to networkx or handled by deliberately naive loops.
"""
from __future__ import annotations

import itertools

import networkx as nx


def to_nx(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def cycle_vertex_sets(g, length: int) -> set[frozenset[int]]:
    """Cycles of the given length as (vertex set, edge set) keys, via networkx."""
    out = set()
    for cyc in nx.simple_cycles(to_nx(g), length_bound=length):
        if len(cyc) == length:
            edges = frozenset(frozenset((cyc[i], cyc[(i + 1) % length])) for i in range(length))
            out.add(edges)
    return out


def count_cycles(g, length: int) -> int:
    return len(cycle_vertex_sets(g, length))


def naive_total_colorings(g, palette: int):
    """Every proper total coloring, by plain backtracking in a fixed order."""
    edges = g.edges
    elements = [("v", v) for v in range(g.n)] + [("e", e) for e in edges]

    def clash(a, b):
        if a[0] == "v" and b[0] == "v":
            return g.has_edge(a[1], b[1])
        if a[0] == "e" and b[0] == "e":
            return bool(set(a[1]) & set(b[1]))
        v, e = (a[1], b[1]) if a[0] == "v" else (b[1], a[1])
        return v in e

    before = [[j for j in range(i) if clash(elements[i], elements[j])] for i in range(len(elements))]
    col = [0] * len(elements)

    def go(i):
        if i == len(elements):
            yield tuple(col)
            return
        for c in range(palette):
            if all(col[j] != c for j in before[i]):
                col[i] = c
                yield from go(i + 1)

    for sol in go(0):
        vc = sol[:g.n]
        ec = dict(zip(edges, sol[g.n:]))
        yield vc, ec


def up_to_permutation(colorings, palette: int):
    """One representative per orbit under permutations of the colors."""
    seen = set()
    reps = []
    for vc, ec in colorings:
        flat = tuple(vc) + tuple(ec[e] for e in sorted(ec))
        key = min(tuple(p[x] for x in flat) for p in itertools.permutations(range(palette)))
        if key not in seen:
            seen.add(key)
            reps.append((vc, ec))
    return reps


def is_perfect_code(G: nx.Graph, s) -> bool:
    s = set(s)
    return all(len((set(G[v]) | {v}) & s) == 1 for v in G)


def is_rainbow_cycle(vc, ec, cycle_edges) -> tuple[bool, bool]:
    verts = {x for e in cycle_edges for x in e}
    return (len({vc[v] for v in verts}) == len(verts),
            len({ec[tuple(sorted(e))] for e in cycle_edges}) == len(cycle_edges))


def petersen() -> nx.Graph:
    return nx.petersen_graph()


def dodecahedron() -> nx.Graph:
    return nx.dodecahedral_graph()


def three_edge_paths(G: nx.Graph) -> list[frozenset]:
    """Edge sets of all paths with three edges, via networkx simple paths."""
    out = set()
    for s in G:
        for t in G:
            if s < t:
                for p in nx.all_simple_paths(G, s, t, cutoff=3):
                    if len(p) == 4:
                        out.add(frozenset(frozenset(p[i:i + 2]) for i in range(3)))
    return list(out)


def count_exact_covers(G: nx.Graph, blocks: list[frozenset]) -> int:
    """Number of partitions of E(G) into the given blocks, by memoized bitmask recursion."""
    index = {frozenset(e): i for i, e in enumerate(G.edges)}
    masks = [sum(1 << index[e] for e in b) for b in blocks]
    full = (1 << len(index)) - 1
    memo = {0: 1}

    def count(rest):
        if rest in memo:
            return memo[rest]
        low = rest & -rest
        total = sum(count(rest ^ m) for m in masks if m & low and m & rest == m)
        memo[rest] = total
        return total

    return count(full)
