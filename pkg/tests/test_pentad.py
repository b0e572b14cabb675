import pytest
from networkx.algorithms import isomorphism as iso

from girthtc.coloring import CycleClass
from girthtc.generators import dod_k, pet2_figure_tc, pet_k, pet_k_tc, robertson
from girthtc.graph import Cycle
from girthtc.pentad import (PET2_CLAIMS, ROBERTSON_EDGE_ONLY, ROBERTSON_FULLY_BIJECTIVE, CensusError,
                            census_lift, census_pet2, census_pet_k, census_robertson, lift_cycle,
                            named_class_constraints, named_robertson_cycles, pentad_type, pet_k_unique_5cycles,
                            robertson_letter_embedding, robertson_letter_embeddings, ten_cycles_over_five)
from girthtc.solver import exhaustive_tc_search
from oracles import count_cycles, to_nx


@pytest.fixture(scope="module")
def pet2():
    return census_pet2(pet2_figure_tc())


def test_pet2_census_against_claims(pet2):
    g, _ = pet_k(2)
    assert pet2.total == PET2_CLAIMS["total"] == count_cycles(g, 5)
    assert pet2.by_type == PET2_CLAIMS["by_type"]
    assert pet2.by_class[CycleClass.FULLY_BIJECTIVE.value] == PET2_CLAIMS["fully_bijective"]
    assert pet2.check_handshake()


def test_pet2_per_edge_incidence(pet2):
    _, ps = pet_k(2)
    assert pet2.incidence_by_kind(ps.edge_kind) == {"hamilton": [6], "pentagon": [8], "pentagram": [7]}
    # the stated Hamilton figure disagrees with the count; the census says so
    assert any("hamilton" in n for n in pet2.notes)
    # handshake: 20*6 + 10*8 + 10*7 = 5 * 54
    assert 20 * 6 + 10 * 8 + 10 * 7 == 5 * pet2.total


def test_pentad_types_partition_the_cycles(pet2):
    _, ps = pet_k(2)
    assert all(pentad_type(ps, c) != "other" for c, _, _ in pet2.cycles)
    assert all(pentad_type(ps, c) == "1" for c in ps.special)


def test_census_pet2_rejects_foreign_input():
    with pytest.raises(CensusError):
        census_pet2(g=pet_k(3)[0])
    with pytest.raises(CensusError):
        census_pet2(pet_k_tc(3).coloring)


def test_dod2_lift_census(pet2):
    base, _ = pet_k(2)
    lifted, volt, lc = dod_k(2)
    lift = census_lift(pet2, base, volt, lc)
    assert lift.parity_ok
    assert lift.direct_five == 64 == count_cycles(lifted, 5)
    assert lift.ten_cycles == 22 == ten_cycles_over_five(lifted, base.n)
    assert lift.five.by_class[CycleClass.FULLY_BIJECTIVE.value] == 24
    assert sum(lift.five.by_type.values()) == 64


def test_lift_parity_rule_on_pet3():
    census = census_pet_k(3, pet_k_tc(3).coloring)
    base, _ = pet_k(3)
    lifted, volt, lc = dod_k(3)
    lift = census_lift(census, base, volt, lc)
    assert lift.parity_ok and lift.direct_five == count_cycles(lifted, 5)
    for cyc, _, _ in census.cycles:
        odd = sum(volt.is_crossed(e) for e in cyc.edges) % 2
        walks = lift_cycle(cyc, base.n, volt)
        assert [len(w) for w in walks] == ([10] if odd else [5, 5])


@pytest.mark.parametrize("k, total", [(3, 66), (4, 88)])
def test_pet_k_has_more_than_its_special_five_cycles(k, total):
    rep = pet_k_unique_5cycles(k, pet_k_tc(k).coloring)
    assert rep.info["five_cycles"] == total == count_cycles(pet_k(k)[0], 5)
    assert rep.rules() == {"C5-EXTRA"}
    witness = Cycle.from_walk([0, 2 * k, 4 * k, 4 * k + 1, 1])
    assert witness.is_valid_in(pet_k(k)[0])
    assert witness not in set(pet_k(k)[1].special)


def test_pet_k_uniqueness_domain():
    with pytest.raises(CensusError):
        pet_k_unique_5cycles(2)
    with pytest.raises(CensusError):
        pet_k_unique_5cycles(5)


def test_robertson_census():
    census = census_robertson()
    assert census.total == 54 == count_cycles(robertson(), 5)
    assert census.claims["total"] == 44 and census.notes
    assert census.check_handshake()


def test_robertson_letter_embeddings_form_one_automorphism_orbit():
    g = robertson()
    G = to_nx(g)
    autos = list(iso.GraphMatcher(G, G).isomorphisms_iter())
    first = robertson_letter_embedding(g)
    orbit = {tuple(sorted((a, s[v]) for a, v in first.items())) for s in autos}
    mine = {tuple(sorted(e.items())) for e in robertson_letter_embeddings(g)}
    assert len(autos) == 24 and orbit == mine
    for w, c in named_robertson_cycles(first).items():
        assert c.is_valid_in(g) and len(c) == 5


def test_robertson_named_classes_admit_no_total_coloring():
    # automorphisms carry total colorings to total colorings, so one embedding decides all of them
    g = robertson()
    groups = named_class_constraints(robertson_letter_embedding(g))
    assert len(groups) == len(ROBERTSON_EDGE_ONLY) + 2 * len(ROBERTSON_FULLY_BIJECTIVE)
    found, stats = exhaustive_tc_search(g, 5, "any-TC", limit=1, distinct=groups)
    assert found == [] and not stats.truncated
    some, _ = exhaustive_tc_search(g, 5, "any-TC", limit=1)
    assert len(some) == 1
    census = census_robertson(some[0])
    assert sum(census.by_class.values()) == 54
