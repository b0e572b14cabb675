"""The thirteen acceptance criteria, each with its runtime budget.

Every criterion prints one ``criterion N: PASS|FAIL`` line, also collected
into the terminal summary.
"""
import random
import time
from collections import Counter
from contextlib import contextmanager

import networkx as nx
import pytest

import conftest
from girthtc import displays
from girthtc.coloring import (color_classes, orthogonal, verify_egc, verify_etc, verify_etgc, verify_tc)
from girthtc.cutout import GenusLedger, accordion_unfold, cycle_exchange, periodic_extension, realize, render_ascii
from girthtc.generators import (ConstructionError, dod_k, gp_fixture, pet2_figure_tc, pet_k, pet_k_tc,
                                prism_egc, prism_ring, q3_pair, robertson, toroidal_grid, VoltageAssignment,
                                voltage_lift)
from girthtc.graph import Graph, canonical_form, edge_key, girth
from girthtc.io import to_graph6
from girthtc.partitions import count_three_path_partitions, three_path_partition, three_star_partitions
from girthtc.pentad import census_lift, census_pet2, census_robertson, pet_k_unique_5cycles
from girthtc.solver import (belt_seed, conjecture_audit, etc_feasibility, etcing_propagate, exhaustive_tc_search,
                            operation_closure, recolor_from_belts, seed_from_cutout, solve_from_seed)
from oracles import count_cycles, to_nx


@contextmanager
def criterion(number, budget):
    notes = []
    t0 = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield notes
        elapsed = time.perf_counter() - t0
        if elapsed >= budget:
            detail = f"took {elapsed:.2f}s, budget {budget}s"
            raise AssertionError(detail)
        status = "PASS"
    except AssertionError as exc:
        detail = detail or str(exc).splitlines()[0]
        raise
    finally:
        elapsed = time.perf_counter() - t0
        extra = "; ".join(notes + ([detail] if detail else []))
        line = f"criterion {number}: {status} ({elapsed:.2f}s){' - ' + extra if extra else ''}"
        print(line)
        conftest.ACCEPTANCE_LINES.append(line)


def by_label(g, pairs):
    idx = {lab: v for v, lab in enumerate(g.labels)}
    return {edge_key(idx[a], idx[b]) for a, b in pairs}


# vertex classes and color-i edge sets of Q3, written with binary labels
Q3_CLASSES = [{"000", "111"}, {"100", "011"}, {"010", "101"}, {"001", "110"}]
Q3_FACTORS = [
    [("100", "101"), ("010", "110"), ("001", "011")],
    [("000", "010"), ("001", "101"), ("110", "111")],
    [("000", "001"), ("100", "110"), ("011", "111")],
    [("000", "100"), ("010", "011"), ("101", "111")],
]


def test_criterion_01_q3_orthogonal_pair():
    with criterion(1, 1.0):
        g, left, right = q3_pair()
        assert verify_etgc(g, left).passed and verify_etgc(g, right).passed
        assert orthogonal(left, right)
        classes = [{g.labels[v] for v in cls} for cls in color_classes(left)]
        assert classes == Q3_CLASSES
        for i, pairs in enumerate(Q3_FACTORS):
            assert {e for e, c in left.edge_colors.items() if c == i} == by_label(g, pairs)


def test_criterion_02_exhaustive_q3():
    with criterion(2, 60.0) as notes:
        g, left, right = q3_pair()
        found, _ = exhaustive_tc_search(g, 4, "any-TC")
        assert found and all(verify_etgc(g, c).passed for c in found)
        fixed = {("v", v): col for v, col in enumerate(left.vertex_colors)}
        pinned, _ = exhaustive_tc_search(g, 4, "any-TC", fixed=fixed, dedup_colors=False)
        assert len(pinned) == 2 and orthogonal(*pinned)
        notes.append(f"{len(found)} TCs up to color permutation")


def test_criterion_03_necessary_conditions():
    with criterion(3, 60.0):
        k33 = Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
        for g in (gp_fixture(6)[0], gp_fixture(7)[0], k33):
            assert not etc_feasibility(g).passed
        for n in (6, 7):
            found, stats = exhaustive_tc_search(gp_fixture(n)[0], 4, "ETC")
            assert found == [] and not stats.truncated


def test_criterion_04_constructive_pipeline():
    budget = 1.0
    with criterion(4, 4 * budget) as notes:
        t = time.perf_counter()
        ext = realize(periodic_extension(displays.load("q3-left"), "x", 2))
        assert canonical_form(ext.graph) == canonical_form(realize(displays.load("prism8")).graph)
        assert ext.coloring == realize(displays.load("prism8")).coloring
        assert time.perf_counter() - t < budget

        t = time.perf_counter()
        sq = displays.load("unfold-square")
        assert render_ascii(accordion_unfold(sq, (0, 0), 2)) == render_ascii(displays.load("unfold-ladder4"))
        assert render_ascii(accordion_unfold(sq, (0, 0), 3)) == render_ascii(displays.load("unfold-ladder6"))
        assert time.perf_counter() - t < budget

        t = time.perf_counter()
        ts = realize(displays.load("truncated-square"))
        res = cycle_exchange(ts.graph, ts.coloring, ts.edge_between((0, 0), (1, 0)),
                             ts.edge_between((0, 1), (1, 1)), GenusLedger(1), ts.belts, delta=-1)
        assert canonical_form(res.graph) == canonical_form(realize(displays.load("planar16")).graph)
        assert res.ledger.genus == 0
        assert time.perf_counter() - t < budget

        t = time.perf_counter()
        src = realize(displays.load("genus2-source"))
        res = cycle_exchange(src.graph, src.coloring, (3, 11), (35, 43), GenusLedger(1), src.belts)
        assert res.merged_faces == [6, 14] and res.ledger.genus == 2
        assert time.perf_counter() - t < budget
        notes.append("each step under 1s")


def test_criterion_05_propagation():
    with criterion(5, 10.0):
        real = realize(displays.load("prism8"))
        pair = [solve_from_seed(real.graph, real.belts, seed_from_cutout(displays.load(s), real))
                for s in ("seed-left", "seed-right")]
        assert all(verify_etgc(real.graph, c).passed for c in pair) and orthogonal(*pair)

        gamma = realize(displays.load("truncated-square"))
        for belt in gamma.belts:
            if belt.length != 4:
                continue
            for k in range(4):
                v = belt.walk[k]
                seed = {"vertices": {v: 0},
                        "edges": {edge_key(v, u): i + 1 for i, u in enumerate(gamma.graph.adj[v])}}
                assert verify_etgc(gamma.graph, solve_from_seed(gamma.graph, gamma.belts, seed)).passed

        for name in ("prism8", "truncated-square"):
            r = realize(displays.load(name))
            belt = next(b for b in r.belts if b.length == 4)
            pc = belt_seed(r.graph, belt, r.coloring)
            ref = etcing_propagate(r.graph, r.belts, pc)
            assert ref.is_complete(r.graph)
            assert all(etcing_propagate(r.graph, r.belts, pc, random.Random(s)) == ref for s in range(100))


def antipodal_8belt(c, belt):
    w = belt.walk
    vs = [c.vertex_colors[v] for v in w]
    es = [c.edge(w[i], w[(i + 1) % 8]) for i in range(8)]
    return all(vs[i] == vs[i + 4] and es[i] == es[i + 4] for i in range(4)) and \
        set(Counter(vs).values()) == {2} == set(Counter(es).values()) and len(set(vs)) == 4


def test_criterion_06_toroidal_family():
    with criterion(6, 5.0):
        from girthtc.generators import toroidal_cutout
        for h in (1, 2):
            for k in (1, 2):
                real = realize(toroidal_cutout(h, k))
                assert verify_etgc(real.graph, real.coloring).passed
                eights = [b for b in real.belts if b.length == 8]
                assert eights and all(antipodal_8belt(real.coloring, b) for b in eights)


def test_criterion_07_prism_egc():
    with criterion(7, 1.0):
        for g, a, b in (q3_pair(), prism_ring(2)):
            prism, ec, palette = prism_egc(g, a, b)
            assert verify_egc(prism, ec, palette).passed
            for cyc in nx.simple_cycles(to_nx(prism), length_bound=4):
                if len(cyc) == 4:
                    assert len({ec[edge_key(cyc[i], cyc[(i + 1) % 4])] for i in range(4)}) == 4


def test_criterion_08_partitions():
    with criterion(8, 30.0) as notes:
        real = realize(displays.load("q3-left"))
        part = three_path_partition(real.graph, real.coloring, ("0123", "1302"))
        drawn = {frozenset(real.edge_between(p, q) for p, q in path) for path in displays.Q3_PATHS.values()}
        assert len(part.paths) == 4 and part.edge_sets() == drawn
        stars = three_star_partitions(real.graph, real.coloring)
        classes = color_classes(real.coloring)
        assert len(stars) == 4
        for sp in stars:
            assert {s.center for s in sp.stars} == classes[sp.center_color]
            assert len(sp.stars) == real.graph.n // 4
        counts = count_three_path_partitions(real.graph, real.coloring)
        notes.append(f"3-path partitions of Q3: {counts['all_partitions']} in all, "
                     f"{counts['pair_driven']} from the six pairs, stated {counts['claimed']}")


def test_criterion_09_pet2_census():
    with criterion(9, 5.0) as notes:
        g, ps = pet_k(2)
        c = pet2_figure_tc()
        assert verify_tc(g, c).passed and not verify_etc(g, c).passed
        census = census_pet2(c)
        assert census.total == 54 == count_cycles(g, 5)
        assert [census.by_type[t] for t in "1234"] == [4, 10, 20, 20]
        assert census.by_class["fully_bijective"] == 14
        inc = census.incidence_by_kind(ps.edge_kind)
        assert inc["pentagon"] == [8] and inc["pentagram"] == [7]
        notes.append(f"hamilton incidence {inc['hamilton'][0]} by enumeration, stated 5")


def test_criterion_10_dod2():
    with criterion(10, 10.0):
        base, ps = pet_k(2)
        lifted, volt, lc = dod_k(2)
        assert lifted.n == 40 and girth(lifted) == 5
        lift = census_lift(census_pet2(pet2_figure_tc()), base, volt, lc)
        assert lift.direct_five == 64 == count_cycles(lifted, 5)
        assert lift.five.by_class["fully_bijective"] == 24
        assert lift.parity_ok
        dod = nx.dodecahedral_graph()
        for (i, j), F in ps.factors.items():
            es = list(ps.pentagons[i].edges) + list(ps.pentagrams[j].edges) + list(F)
            vs = sorted({x for e in es for x in e})
            idx = {v: t for t, v in enumerate(vs)}
            sub = Graph.from_edges(10, [(idx[u], idx[v]) for u, v in es])
            crossed = frozenset(edge_key(idx[u], idx[v]) for u, v in ps.pentagrams[j].edges)
            assert nx.is_isomorphic(to_nx(voltage_lift(sub, VoltageAssignment(crossed))), dod)


def test_criterion_11_robertson():
    with criterion(11, 120.0) as notes:
        g = robertson()
        assert (g.n, g.m, girth(g)) == (19, 38, 5)
        assert "DIV" in etc_feasibility(g).rules()
        found, _ = exhaustive_tc_search(g, 5, "any-TC", limit=1)
        assert len(found) == 1 and verify_tc(g, found[0]).passed
        census = census_robertson(found[0])
        notes.append(f"{census.total} five-cycles by enumeration, stated {census.claims['total']}")


def test_criterion_12_pet_k():
    with criterion(12, 30.0) as notes:
        for k in (2, 3, 4, 6):
            g, _ = pet_k(k)
            pc = pet_k_tc(k)
            assert verify_tc(g, pc.coloring).passed and not verify_etc(g, pc.coloring).passed
            assert pc.repaired
        with pytest.raises(ConstructionError):
            pet_k_tc(5)
        with pytest.raises(ConstructionError):
            pet_k_tc(10)
        notes.append("colorings pass, with template repair flagged")
        for k in (3, 4):
            rep = pet_k_unique_5cycles(k)
            notes.append(f"Pet^{k}: {rep.info['five_cycles']} five-cycles, expected {2 * k}")
        for k in (3, 4):
            assert pet_k_unique_5cycles(k).passed, f"Pet^{k} has 5-cycles beyond its pentagons and pentagrams"


def test_criterion_13_closure_audit():
    with criterion(13, 300.0) as notes:
        closure = operation_closure(16)
        keys = set(closure)
        for g in (q3_pair()[0], prism_ring(2)[0], toroidal_grid(1, 1)[0]):
            assert canonical_form(g) in keys
        for m in closure.values():
            if all(b.length % 4 == 0 for b in m.belts):
                c = recolor_from_belts(m.graph, m.belts)
                assert c is not None and verify_etgc(m.graph, c).passed
        corpus = [to_graph6(g) for g in (q3_pair()[0], prism_ring(2)[0], gp_fixture(6)[0],
                                         toroidal_grid(1, 1)[0])]
        first = conjecture_audit(corpus, closure=closure)
        assert first == conjecture_audit(corpus, closure=closure) == conjecture_audit(corpus, closure=closure, jobs=3)
        notes.append(f"{len(closure)} members, audit stable")
        c12 = prism_ring(3)[0]
        notes.append(f"C12xK2 has {c12.n} vertices")
        assert canonical_form(c12) in keys, "C12xK2 lies outside a 16-vertex closure"
