"""Hand-transcribed cutouts used as fixtures and as CLI presets.

Letters in the ladder drawings are mapped ``A..D -> 0..3`` for vertices and
``a..d -> 0..3`` for edges. Every fixture is ASCII in the layout described in
:mod:`girthtc.cutout`.
"""
from __future__ import annotations

from .cutout import Cutout, Identification, parse_ascii

# Q3 as a ring of four squares; left and right borders glued.
Q3_LEFT = """
0-3-1-0-2-1-3-2-0
1   2   3   0   1
2-0-3-1-0-2-1-3-2
"""

# The orthogonal partner of Q3_LEFT: same vertex colors, new edge colors.
Q3_RIGHT = """
0-2-1-3-2-0-3-1-0
3   0   1   2   3
2-1-3-2-0-3-1-0-2
"""

# C8 x K2, two copies of Q3_LEFT side by side.
PRISM8 = """
0-3-1-0-2-1-3-2-0-3-1-0-2-1-3-2-0
1   2   3   0   1   2   3   0   1
2-0-3-1-0-2-1-3-2-0-3-1-0-2-1-3-2
"""

# Hexagonal prism with a total coloring that is not efficient.
GP6 = """
0-1-2-0-1-2-0-1-2-0-1-2-0
3   3   3   3   3   3   3
1-2-0-1-2-0-1-2-0-1-2-0-1
"""

# Heptagonal prism; only three of its squares are fully bijective.
GP7 = """
3-0-1-3-2-1-0-2-1-0-2-1-0-2-3
1   2   0   3   3   3   3   1
2-3-0-1-3-2-1-0-2-1-0-2-1-0-2
"""

# A single colored square AcBdCaDb and its ladder unfoldings.
UNFOLD_SQUARE = """
0-1-3
2   0
1-3-2
"""

UNFOLD_LADDER4 = """
0-1-3-2-1-0-2
2   0   3   1
1-3-2-1-0-2-3
"""

UNFOLD_LADDER6 = """
0-1-3-2-1-0-2-3-0-1-3
2   0   3   1   2   0
1-3-2-1-0-2-3-0-1-3-2
"""

# Toroidal 16-vertex graph of the truncated square tiling (torus, 4 x 4).
TRUNCATED_SQUARE = """
0-1-2-0-3   1-3-0
        2   2
2-1-0-3-1   3-0-2
3   2   0   1   3
1   3-1-2-3-0-2-1
0   0           0
3   1-2-0-3-2-1-3
2   3   1   0   2
0-1-2-0-3   1-3-0
"""

# Q3 on the torus (4 x 2).
Q3_TORUS = """
0-3-1-0-2-1-3-2-0
1   2           1
2-0-3-1-0-2-1-3-2
        3   0
0-3-1-0-2-1-3-2-0
"""

# The same 16-vertex graph as TRUNCATED_SQUARE, right border glued two rows down.
TILTED = """
0-3-1-2-3-1-0-3-2
2   0           0
3-1-2-3-0-1-3-2-1
        2   0
2-1-3-0-1-3-2-1-0
0   2           2
1-3-0-1-2-3-1-0-3
        0   2
0-3-1-2-3-1-0-3-2
"""

# Planar 16-vertex graph; top and bottom rows glued.
PLANAR16 = """
1-2-0-3-2-1-3
3   1   0   2
2-0-3   1-3-0
1   2   2   1
0-3-1   3-0-2
2   0   1   3
3-1-2-3-0-2-1
0           0
1-2-0-3-2-1-3
"""

# Q3 drawn upright; top and bottom rows glued.
Q3_UPRIGHT = """
1-2-0
3   1
2-0-3
1   2
0-3-1
2   0
3-1-2
0   3
1-2-0
"""

# Toroidal 48-vertex graph whose bottom row is the top row slid by four.
GENUS2_SOURCE = """
0-3-1-2-3-0-2-3-1-2-0-3-2-1-3-2-0
1           1   0           0   1
2-0-3-2-1-3-0   3-1-2-3-0-2-1   2
3   1   0   2   2   0   1   3   3
1-2-0-3-2-1-3   0-3-1-2-3-0-2   1
0           0   1           1   0
3-1-2-3-0-2-1-3-2-0-3-2-1-3-0-2-3
    0   1           1   0
0-3-1   3-0-2-3-1-2-0   2-1-3-2-0
1   2   2   1   0   3   3   0   1
2-0-3   1-3-0-2-3-1-2   0-2-1-3-2
    1   0           0   1
1-2-0-3-2-1-3-2-0-3-1-2-3-0-2-3-1
"""

# Structure of the 32-vertex toroidal graph obtained from the planar prism by
# adding compensation edges. Its printed colors are inconsistent, so the
# fixture is uncolored and colored by the solver.
PSI_STRUCTURE = """
o---o---o---o---o---o---o---o---o
|           |   |           |   |
o---o---o---o   o---o---o---o   o
|   |   |   |   |   |   |   |   |
o---o---o---o   o---o---o---o   o
|           |   |           |   |
o---o---o---o---o---o---o---o---o
    |   |           |   |
o---o---o---o---o---o---o---o---o
"""

# Two seeds around one square: same vertex colors, no common edge color.
SEED_LEFT = """
2-1-0-3-1-2-3
    2   0
1-0-3-1-2-3-0
"""

SEED_RIGHT = """
2-3-0-2-1-0-3
    1   3
1-2-3-0-2-1-0
"""

# Binary labels of the Q3_LEFT positions (top row then bottom row).
Q3_LABELS = {(0, 0): "000", (1, 0): "100", (2, 0): "101", (3, 0): "001",
             (0, 1): "010", (1, 1): "110", (2, 1): "111", (3, 1): "011"}

# The four 3-paths of the pair {0123, 1302} on Q3_LEFT, by grid positions.
Q3_PATHS = {
    "A": [((0, 0), (1, 0)), ((1, 0), (2, 0)), ((2, 0), (3, 0))],
    "B": [((3, 0), (4, 0)), ((0, 0), (0, 1)), ((3, 0), (3, 1))],
    "C": [((0, 1), (1, 1)), ((2, 1), (3, 1)), ((3, 1), (4, 1))],
    "D": [((1, 0), (1, 1)), ((2, 0), (2, 1)), ((1, 1), (2, 1))],
}

_KINDS = {
    "q3-left": (Q3_LEFT, "cylinder-horizontal", 0),
    "q3-right": (Q3_RIGHT, "cylinder-horizontal", 0),
    "prism8": (PRISM8, "cylinder-horizontal", 0),
    "gp6": (GP6, "cylinder-horizontal", 0),
    "gp7": (GP7, "cylinder-horizontal", 0),
    "unfold-square": (UNFOLD_SQUARE, "none", 0),
    "unfold-ladder4": (UNFOLD_LADDER4, "none", 0),
    "unfold-ladder6": (UNFOLD_LADDER6, "none", 0),
    "truncated-square": (TRUNCATED_SQUARE, "torus", 0),
    "q3-torus": (Q3_TORUS, "torus", 0),
    "tilted": (TILTED, "torus-tilted", 2),
    "planar16": (PLANAR16, "cylinder-vertical", 0),
    "q3-upright": (Q3_UPRIGHT, "cylinder-vertical", 0),
    "genus2-source": (GENUS2_SOURCE, "torus-tilted-vertical", 4),
    "psi": (PSI_STRUCTURE, "torus", 0),
    "seed-left": (SEED_LEFT, "none", 0),
    "seed-right": (SEED_RIGHT, "none", 0),
}

NAMES = tuple(_KINDS)


def load(name: str) -> Cutout:
    """Parse a named fixture with its border identification."""
    try:
        text, kind, shift = _KINDS[name]
    except KeyError:
        raise KeyError(f"unknown cutout fixture {name!r}; choose from {', '.join(NAMES)}") from None
    return parse_ascii(text, Identification(kind, shift))
