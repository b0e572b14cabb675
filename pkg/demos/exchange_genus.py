"""Cycle exchanges move between surfaces: torus to plane, torus to double torus."""
import networkx as nx

from girthtc import displays
from girthtc.coloring import verify_etc
from girthtc.cutout import GenusLedger, cycle_exchange, realize
from girthtc.graph import canonical_form

torus = realize(displays.load("truncated-square"))
e = torus.edge_between((0, 0), (1, 0))
f = torus.edge_between((0, 1), (1, 1))
flat = cycle_exchange(torus.graph, torus.coloring, e, f, GenusLedger(torus.genus), torus.belts, delta=-1)
planar16 = realize(displays.load("planar16")).graph
G = nx.Graph(flat.graph.edges)
print("truncated square torus, exchange", e, f)
print("  still an ETC:", verify_etc(flat.graph, flat.coloring).passed)
print("  planar:", nx.check_planarity(G)[0], " same graph as planar16:",
      canonical_form(flat.graph) == canonical_form(planar16))
print("  ledger:", flat.ledger.history)

src = realize(displays.load("genus2-source"))
up = cycle_exchange(src.graph, src.coloring, (3, 11), (35, 43), GenusLedger(src.genus), src.belts)
print("genus-1 source on 48 vertices, exchange (3,11) (35,43)")
print("  merged faces:", up.merged_faces, " genus now", up.ledger.genus)
