"""Five-cycles of Pet^2, its double cover Dod^2, and Pet^3."""
from girthtc.generators import dod_k, pet2_figure_tc, pet_k
from girthtc.pentad import census_lift, census_pet2, pet_k_unique_5cycles

base, ps = pet_k(2)
census = census_pet2(pet2_figure_tc())
print("Pet^2:", census.total, "five-cycles, by type", dict(sorted(census.by_type.items())))
print("  by class:", census.by_class)
print("  per-edge incidence:", census.incidence_by_kind(ps.edge_kind))
for note in census.notes:
    print("  note:", note)

lifted, volt, coloring = dod_k(2)
lift = census_lift(census, base, volt, coloring)
print(f"Dod^2: {lift.direct_five} five-cycles, {lift.ten_cycles} ten-cycles over base five-cycles, "
      f"parity law holds: {lift.parity_ok}")
print("  fully bijective:", lift.five.by_class["fully_bijective"])

rep = pet_k_unique_5cycles(3)
print(f"Pet^3: {rep.info['five_cycles']} five-cycles against {rep.info['expected']} pentagons and pentagrams,",
      "by type", rep.info["by_type"])
