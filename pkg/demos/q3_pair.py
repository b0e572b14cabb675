"""Q3's two orthogonal efficient colorings, and how little room there is for others."""
from girthtc.coloring import color_classes, orthogonal, verify_etgc
from girthtc.cutout import render_ascii
from girthtc import displays
from girthtc.generators import q3_pair
from girthtc.solver import exhaustive_tc_search

g, left, right = q3_pair()
print(render_ascii(displays.load("q3-left")))
print(render_ascii(displays.load("q3-right")))

for name, c in (("left", left), ("right", right)):
    classes = [sorted(g.labels[v] for v in cls) for cls in color_classes(c)]
    print(f"{name}: ETGC={verify_etgc(g, c).passed} classes={classes}")
print("orthogonal:", orthogonal(left, right))

found, stats = exhaustive_tc_search(g, 4, "any-TC")
print(f"4-total-colorings of Q3 up to renaming colors: {len(found)} ({stats.nodes} search nodes)")
