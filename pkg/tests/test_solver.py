import random

import pytest
from hypothesis import given, settings, strategies as st

from girthtc import displays
from girthtc.coloring import TotalColoring, orthogonal, verify_etgc
from girthtc.cutout import realize
from girthtc.generators import gp_fixture, q3_pair
from girthtc.graph import Graph, canonical_form
from girthtc.io import to_graph6
from girthtc.solver import (AUDIT_COLUMNS, Conflict, PartialColoring, PreconditionError, UnsatisfiableSeedError,
                            belt_seed, conjecture_audit, etc_feasibility, etcing_propagate,
                            exhaustive_tc_search, operation_closure, seed_from_cutout, solve_from_seed)
from oracles import naive_total_colorings, up_to_permutation

Q3, LEFT, RIGHT = q3_pair()
ETC_FIXTURES = ["q3-left", "prism8", "truncated-square", "tilted", "planar16", "genus2-source"]


@pytest.fixture(scope="module")
def closure16():
    return operation_closure(16)


def canon_coloring(vc, ec):
    return TotalColoring.build(4, vc, ec).normalized()


def test_search_matches_naive_enumeration_on_q3():
    naive = [canon_coloring(vc, ec) for vc, ec in up_to_permutation(naive_total_colorings(Q3, 4), 4)]
    found, stats = exhaustive_tc_search(Q3, 4, "any-TC")
    assert {c.normalized() for c in found} == set(naive)
    assert stats.solutions == len(found) and not stats.truncated


def test_q3_has_exactly_the_left_and_right_colorings():
    found, _ = exhaustive_tc_search(Q3, 4, "ETGC")
    assert {c.normalized() for c in found} == {LEFT.normalized(), RIGHT.normalized()}
    fixed = {("v", v): col for v, col in enumerate(LEFT.vertex_colors)}
    pinned, _ = exhaustive_tc_search(Q3, 4, "any-TC", fixed=fixed)
    assert set(pinned) == {LEFT, RIGHT} and orthogonal(*pinned)


def test_search_without_dedup_counts_every_permutation():
    found, _ = exhaustive_tc_search(Q3, 4, "ETGC", dedup_colors=False)
    assert len(found) == 2 * 24


def test_search_is_independent_of_jobs_and_seed():
    a, _ = exhaustive_tc_search(Q3, 4, "any-TC", jobs=1)
    b, _ = exhaustive_tc_search(Q3, 4, "any-TC", jobs=3)
    c, _ = exhaustive_tc_search(Q3, 4, "any-TC", seed=7)
    assert a == b == c


def test_search_limit_and_capacity():
    found, stats = exhaustive_tc_search(Q3, 4, "any-TC", limit=1)
    assert len(found) == 1 and stats.truncated
    with pytest.raises(PreconditionError):
        exhaustive_tc_search(Q3, 4, max_n=4)
    with pytest.raises(ValueError):
        exhaustive_tc_search(Q3, 4, "rainbow")


@pytest.mark.parametrize("n, rule", [(6, "EDS-PART"), (7, "DIV")])
def test_generalized_petersen_has_no_etc(n, rule):
    g, _ = gp_fixture(n)
    found, _ = exhaustive_tc_search(g, 4, "ETC")
    assert found == []
    assert rule in etc_feasibility(g).rules()


def test_feasibility_passes_on_q3_and_flags_belts():
    assert etc_feasibility(Q3).passed
    real = realize(displays.load("gp6"))
    assert "BELT" in etc_feasibility(real.graph, real.belts).rules()


@pytest.mark.parametrize("name", ETC_FIXTURES)
def test_belt_seed_completes_by_propagation(name):
    real = realize(displays.load(name))
    belt = next(b for b in real.belts if b.length == 4)
    pc = belt_seed(real.graph, belt, real.coloring)
    out = etcing_propagate(real.graph, real.belts, pc)
    assert isinstance(out, PartialColoring) and out.is_complete(real.graph)
    assert out.to_total(real.graph) == real.coloring


@settings(max_examples=20)
@given(st.sampled_from(ETC_FIXTURES), st.integers(0, 2**32 - 1))
def test_propagation_is_confluent(name, seed):
    real = realize(displays.load(name))
    belt = next(b for b in real.belts if b.length == 4)
    pc = belt_seed(real.graph, belt, real.coloring)
    a = etcing_propagate(real.graph, real.belts, pc)
    b = etcing_propagate(real.graph, real.belts, pc, random.Random(seed))
    assert a == b


def test_one_hundred_shuffles_agree():
    real = realize(displays.load("truncated-square"))
    pc = belt_seed(real.graph, real.belts[0] if real.belts[0].length == 4 else
                   next(b for b in real.belts if b.length == 4), real.coloring)
    ref = etcing_propagate(real.graph, real.belts, pc)
    assert all(etcing_propagate(real.graph, real.belts, pc, random.Random(s)) == ref for s in range(100))


def test_seeds_give_the_orthogonal_pair_on_prism8():
    real = realize(displays.load("prism8"))
    out = [solve_from_seed(real.graph, real.belts, seed_from_cutout(displays.load(name), real))
           for name in ("seed-left", "seed-right")]
    for c in out:
        assert verify_etgc(real.graph, c).passed
    assert orthogonal(*out)


def test_conflicting_seed_is_reported():
    real = realize(displays.load("q3-left"))
    v = 0
    u = real.graph.adj[v][0]
    pc = PartialColoring(4, {v: 1, u: 1})
    assert isinstance(etcing_propagate(real.graph, real.belts, pc), Conflict)
    with pytest.raises(UnsatisfiableSeedError):
        solve_from_seed(real.graph, real.belts, pc)


def test_solver_preconditions():
    real = realize(displays.load("gp6"))
    with pytest.raises(PreconditionError):
        solve_from_seed(real.graph, real.belts, {"vertices": {0: 0}})
    k4_plus = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    with pytest.raises(PreconditionError):
        etcing_propagate(k4_plus, [], PartialColoring(4))


def test_closure_members(closure16):
    assert len(closure16) == 5
    for m in closure16.values():
        assert m.graph.n <= 16 and verify_etgc(m.graph, m.coloring).passed
    keys = set(closure16)
    for name in ("q3-left", "prism8", "truncated-square", "planar16"):
        assert canonical_form(realize(displays.load(name)).graph) in keys
    assert canonical_form(gp_fixture(6)[0]) not in keys


def test_audit_csv(closure16):
    corpus = [to_graph6(Q3), to_graph6(gp_fixture(6)[0]), "not graph6 at all!", "# comment", ""]
    csv_text = conjecture_audit(corpus, closure=closure16)
    lines = csv_text.strip().split("\n")
    assert lines[0] == ",".join(AUDIT_COLUMNS)
    assert lines[1].endswith(",8,true,true,true")
    assert lines[2].endswith(",12,false,false,false")
    assert len(lines) == 3
    assert conjecture_audit(corpus, closure=closure16, jobs=2) == csv_text
