import warnings

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from girthtc import displays
from girthtc.coloring import verify_etc, verify_tc
from girthtc.cutout import (CutoutError, GenusLedger, Identification,
                            IndeterminateDeltaWarning, accordion_unfold, belt_condition, cutout_from_dict,
                            cutout_to_dict, cycle_exchange, parse_ascii, periodic_extension, realize,
                            render_ascii)
from girthtc.generators import toroidal_grid
from girthtc.graph import canonical_form
from oracles import to_nx

# name -> (vertices, genus from face tracing, proper ETC as drawn)
FIXTURES = {
    "q3-left": (8, 0, True),
    "q3-right": (8, 0, True),
    "prism8": (16, 0, True),
    "gp6": (12, 0, False),
    "gp7": (14, 0, False),
    "truncated-square": (16, 1, True),
    "q3-torus": (8, 1, True),
    "tilted": (16, 1, True),
    "planar16": (16, 0, True),
    "q3-upright": (8, 0, True),
    "genus2-source": (48, 1, True),
}

PERIODIC = ["q3-left", "prism8", "truncated-square", "q3-torus", "tilted", "planar16"]


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_realizations(name):
    n, genus, etc = FIXTURES[name]
    real = realize(displays.load(name))
    assert real.graph.n == n and real.genus == genus
    assert real.graph.regular_degree() == 3
    assert verify_etc(real.graph, real.coloring).passed == etc
    # Euler: n - m + faces = 2 - 2 genus
    assert real.graph.n - real.graph.m + len(real.belts) == 2 - 2 * real.genus


@pytest.mark.parametrize("name", displays.NAMES)
def test_ascii_and_dict_roundtrip(name):
    cut = displays.load(name)
    again = parse_ascii(render_ascii(cut), cut.identification)
    assert again == cut
    assert cutout_from_dict(cutout_to_dict(cut)) == cut


def test_planar_fixtures_pass_planarity_oracle():
    for name, (_, genus, _) in FIXTURES.items():
        if genus == 0:
            assert nx.check_planarity(to_nx(realize(displays.load(name)).graph))[0], name


def test_q3_torus_is_q3():
    a = realize(displays.load("q3-torus")).graph
    b = realize(displays.load("q3-left")).graph
    assert canonical_form(a) == canonical_form(b)


@settings(max_examples=25)
@given(st.sampled_from(PERIODIC), st.sampled_from(["x", "y"]), st.integers(1, 3))
def test_periodic_extension_keeps_etc(name, axis, copies):
    cut = displays.load(name)
    try:
        ext = periodic_extension(cut, axis, copies)
    except CutoutError:
        assert not (cut.identification.wrap_x if axis == "x" else cut.identification.wrap_y)
        return
    base, real = realize(cut), realize(ext)
    assert real.graph.n == copies * base.graph.n
    assert verify_etc(real.graph, real.coloring).passed
    assert belt_condition(real.belts).passed == belt_condition(base.belts).passed


def test_prism8_is_two_copies_of_q3():
    ext = realize(periodic_extension(displays.load("q3-left"), "x", 2)).graph
    assert canonical_form(ext) == canonical_form(realize(displays.load("prism8")).graph)


@pytest.mark.parametrize("h, k, n", [(1, 1, 16), (2, 1, 32), (1, 2, 32), (2, 2, 64)])
def test_truncated_square_grids(h, k, n):
    g, c = toroidal_grid(h, k)
    assert g.n == n and verify_etc(g, c).passed


def test_unfold_square_into_ladders():
    sq = displays.load("unfold-square")
    l4 = accordion_unfold(sq, (0, 0), 2)
    l6 = accordion_unfold(sq, (0, 0), 3)
    assert render_ascii(l4) == render_ascii(displays.load("unfold-ladder4"))
    assert render_ascii(l6) == render_ascii(displays.load("unfold-ladder6"))
    real = realize(l6)
    assert verify_tc(real.graph, real.coloring).passed


def test_unfold_ladder4_to_ladder6_graph():
    step = accordion_unfold(displays.load("unfold-ladder4"), (1, 0), 2)
    target = realize(displays.load("unfold-ladder6")).graph
    assert canonical_form(realize(step).graph) == canonical_form(target)


def test_unfold_q3_into_prism_ring():
    q3 = displays.load("q3-left")
    odd = realize(accordion_unfold(q3, (0, 0), 3))
    assert canonical_form(odd.graph) == canonical_form(realize(displays.load("prism8")).graph)
    assert verify_etc(odd.graph, odd.coloring).passed
    even = realize(accordion_unfold(q3, (0, 0), 2))
    assert even.graph.n == 12 and even.belt_lengths.count(6) == 2


def test_unfold_errors():
    sq = displays.load("unfold-square")
    with pytest.raises(CutoutError):
        accordion_unfold(sq, (0, 0), 1)
    with pytest.raises(CutoutError):
        accordion_unfold(sq, (1, 0), 2)


def test_exchange_planarizes_the_truncated_square_torus():
    real = realize(displays.load("truncated-square"))
    e = real.edge_between((0, 0), (1, 0))
    f = real.edge_between((0, 1), (1, 1))
    res = cycle_exchange(real.graph, real.coloring, e, f, GenusLedger(1), real.belts, delta=-1)
    assert res.ledger.genus == 0 and res.delta == -1
    assert verify_etc(res.graph, res.coloring).passed
    assert canonical_form(res.graph) == canonical_form(realize(displays.load("planar16")).graph)
    assert nx.check_planarity(to_nx(res.graph))[0]


def test_exchange_raises_genus_and_inverts():
    real = realize(displays.load("genus2-source"))
    res = cycle_exchange(real.graph, real.coloring, (3, 11), (35, 43), GenusLedger(1), real.belts)
    assert (res.delta, res.merged_faces, res.ledger.genus) == (1, [6, 14], 2)
    assert verify_etc(res.graph, res.coloring).passed
    with warnings.catch_warnings():
        warnings.simplefilter("error", IndeterminateDeltaWarning)
        with pytest.raises(IndeterminateDeltaWarning):
            cycle_exchange(res.graph, res.coloring, *res.new_edges)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        back = cycle_exchange(res.graph, res.coloring, *res.new_edges, res.ledger, delta=-1)
    assert back.graph == real.graph and back.coloring == real.coloring
    assert back.ledger.genus == 1 and len(back.ledger.history) == 2


def test_exchange_rejects_bad_pairs():
    real = realize(displays.load("q3-left"))
    g, c = real.graph, real.coloring
    e = g.edges[0]
    adjacent = next(f for f in g.edges if f != e and set(f) & set(e))
    with pytest.raises(ValueError):
        cycle_exchange(g, c, e, adjacent)
    other = next(f for f in g.edges if not set(f) & set(e) and c.edge_colors[f] != c.edge_colors[e])
    with pytest.raises(ValueError):
        cycle_exchange(g, c, e, other)


def test_genus_ledger_bounds():
    led = GenusLedger().record("x", 1)
    assert led.genus == 1 and len(led.history) == 1
    with pytest.raises(ValueError):
        GenusLedger().record("x", -1)
    with pytest.raises(ValueError):
        led.record("x", 2)


def test_belt_condition():
    assert belt_condition([4, 8, 12], 16).passed
    assert belt_condition([4, 6], 12).rules() == {"BELT"}
    assert belt_condition([4], 6).rules() == {"ORDER"}


def test_parse_errors():
    with pytest.raises(CutoutError):
        parse_ascii("0-1-\n")
    with pytest.raises(CutoutError):
        Identification("mobius")


@pytest.mark.parametrize("name, e, f, delta, genus", [
    ("genus2-source", (3, 11), (35, 43), None, 2),
    ("truncated-square", (0, 1), (4, 5), -1, 0),
])
def test_exchange_rotation_traces_faces_of_the_recorded_genus(name, e, f, delta, genus):
    real = realize(displays.load(name))
    res = cycle_exchange(real.graph, real.coloring, e, f, GenusLedger(real.genus), real.belts, delta,
                         rotation=real.rotation)
    g = res.graph
    assert res.ledger.genus == genus
    assert g.n - g.m + len(res.belts) == 2 - 2 * genus
    assert sorted(x for b in res.belts for x in b.edges) == sorted(g.edges * 2)
