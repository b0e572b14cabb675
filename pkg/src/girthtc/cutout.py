"""Grid cutouts of planar and toroidal cubic graphs, and the operations on them.

A cutout lives on the integer grid with ``x`` growing to the right and ``y``
growing downward. Vertices sit on grid points; edges are axis-aligned
segments whose interior points carry no vertex. Border identification turns
the rectangle ``[0, width] x [0, height]`` into a cylinder or a torus.

Realizing a cutout traces its faces with the rotation ``E, N, W, S`` at every
vertex. Because every identification is a translation, directions survive the
gluing and the traced faces are exactly the belts of the drawing, including
faces that run across identified borders.

ASCII layout
------------
Cutouts are written in a compact text form, used for fixtures and for
``cutout render``. Even lines are vertex rows, odd lines hold the vertical
edges between consecutive rows, and every grid cell is four characters wide::

    0-3-1-0-2-1-3-2-0
    1   2   3   0   1
    2-0-3-1-0-2-1-3-2

In a vertex row the character at ``4x`` is the vertex (a digit gives its
color, ``o`` an uncolored vertex, ``-`` or ``|`` a point a segment passes
through, blank for nothing) and ``-c-`` / ``---`` between two positions is a
colored / uncolored horizontal edge. In an edge row the character at ``4x`` is
a vertical edge: a digit for its color, ``|`` if uncolored.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .coloring import TotalColoring, VerificationReport, verify_tc
from .graph import Cycle, Edge, Graph, GraphError, edge_key

Point = tuple[int, int]

KINDS = ("none", "cylinder-horizontal", "cylinder-vertical", "torus",
         "torus-tilted", "torus-tilted-vertical")

# rotation order used for face tracing
DIRECTIONS = {(1, 0): 0, (0, -1): 1, (-1, 0): 2, (0, 1): 3}


class CutoutError(ValueError):
    """Malformed cutout: bad geometry, crossing segments, parse failures."""


class IdentificationError(CutoutError):
    """Identified border elements disagree (colors, duplicates, loops)."""


@dataclass(frozen=True)
class Identification:
    """How the borders of the rectangle are glued.

    ``torus-tilted`` glues ``(width, y)`` to ``(0, y + shift)``;
    ``torus-tilted-vertical`` glues ``(x, height)`` to ``(x + shift, 0)``.
    """
    kind: str = "none"
    shift: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CutoutError(f"unknown identification kind {self.kind!r}")

    @property
    def wrap_x(self) -> bool:
        return self.kind in ("cylinder-horizontal", "torus", "torus-tilted", "torus-tilted-vertical")

    @property
    def wrap_y(self) -> bool:
        return self.kind in ("cylinder-vertical", "torus", "torus-tilted", "torus-tilted-vertical")

    @property
    def genus(self) -> int:
        return 1 if self.wrap_x and self.wrap_y else 0


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point
    color: int | None = None

    def __post_init__(self):
        (x0, y0), (x1, y1) = self.a, self.b
        if (x0 != x1) == (y0 != y1):
            raise CutoutError(f"segment {self.a}-{self.b} is not axis-aligned with positive length")
        if (x1, y1) < (x0, y0):
            object.__setattr__(self, "a", (x1, y1))
            object.__setattr__(self, "b", (x0, y0))

    @property
    def horizontal(self) -> bool:
        return self.a[1] == self.b[1]

    def points(self) -> list[Point]:
        (x0, y0), (x1, y1) = self.a, self.b
        if self.horizontal:
            return [(x, y0) for x in range(x0, x1 + 1)]
        return [(x0, y) for y in range(y0, y1 + 1)]

    def interior(self) -> list[Point]:
        return self.points()[1:-1]

    def moved(self, dx: int, dy: int) -> "Segment":
        return Segment((self.a[0] + dx, self.a[1] + dy), (self.b[0] + dx, self.b[1] + dy), self.color)


@dataclass(frozen=True)
class Cutout:
    width: int
    height: int
    points: dict[Point, int | None]
    segments: tuple[Segment, ...]
    identification: Identification = Identification()

    def __post_init__(self):
        for (x, y) in self.points:
            if not (0 <= x <= self.width and 0 <= y <= self.height):
                raise CutoutError(f"vertex ({x}, {y}) outside the rectangle")
        for s in self.segments:
            for (x, y) in (s.a, s.b):
                if not (0 <= x <= self.width and 0 <= y <= self.height):
                    raise CutoutError(f"segment end ({x}, {y}) outside the rectangle")
            for p in (s.a, s.b):
                if p not in self.points:
                    raise CutoutError(f"segment end {p} is not a vertex")
            for p in s.interior():
                if p in self.points:
                    raise CutoutError(f"segment {s.a}-{s.b} passes through vertex {p}")

    def canon(self, p: Point) -> Point:
        """Representative of ``p`` under the border identification."""
        x, y = p
        ident = self.identification
        sx = ident.shift if ident.kind == "torus-tilted" else 0
        sy = ident.shift if ident.kind == "torus-tilted-vertical" else 0
        for _ in range(8):
            changed = False
            if ident.wrap_x and self.width and x >= self.width:
                x, y, changed = x - self.width, y + sx, True
            if ident.wrap_y and self.height and y >= self.height:
                x, y, changed = x + sy, y - self.height, True
            if ident.wrap_y and self.height and y < 0:
                x, y, changed = x - sy, y + self.height, True
            if ident.wrap_x and self.width and x < 0:
                x, y, changed = x + self.width, y - sx, True
            if not changed:
                break
        return x, y

    def with_colors(self, points=None, segments=None) -> "Cutout":
        return replace(self, points=points if points is not None else self.points,
                       segments=tuple(segments) if segments is not None else self.segments)

    def uncolored(self) -> "Cutout":
        return self.with_colors({p: None for p in self.points},
                                [Segment(s.a, s.b) for s in self.segments])


@dataclass(frozen=True)
class Belt:
    """A face of the realized drawing, given as its boundary walk."""
    walk: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.walk)

    @property
    def cycle(self) -> Cycle | None:
        if len(set(self.walk)) != len(self.walk) or len(self.walk) < 3:
            return None
        return Cycle.from_walk(self.walk)

    @property
    def edges(self) -> list[Edge]:
        w = self.walk
        return [edge_key(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]


@dataclass
class Realization:
    graph: Graph
    coloring: TotalColoring | None
    belts: list[Belt]
    positions: dict[Point, int]
    rotation: list[list[int]]
    genus: int

    @property
    def belt_lengths(self) -> list[int]:
        return sorted(b.length for b in self.belts)

    def vertex_at(self, x: int, y: int) -> int:
        return self.positions[(x, y)]

    def edge_between(self, p: Point, q: Point) -> Edge:
        return edge_key(self.positions[p], self.positions[q])


# -- realization -------------------------------------------------------------

def realize(cut: Cutout, palette: int = 4) -> Realization:
    """Glue the borders and return the graph, its coloring and its belts.

    The coloring is returned only when every vertex and edge is colored.
    """
    canon_pts: dict[Point, int | None] = {}
    for p in sorted(cut.points, key=lambda q: (q[1], q[0])):
        cp = cut.canon(p)
        if cp not in cut.points:
            raise IdentificationError(f"{p} is identified with {cp}, which holds no vertex")
        col, prev = cut.points[p], canon_pts.get(cp)
        if col is not None and prev is not None and col != prev:
            raise IdentificationError(f"identified vertices {p} and {cp} carry colors {col} and {prev}")
        canon_pts[cp] = prev if col is None else col
    order = sorted(canon_pts, key=lambda q: (q[1], q[0]))
    index = {p: i for i, p in enumerate(order)}
    positions = {p: index[cut.canon(p)] for p in cut.points}

    interior_seen: dict[Point, Segment] = {}
    darts: dict[tuple[int, int], tuple[int, Segment]] = {}
    edge_color: dict[Edge, int | None] = {}
    edge_geom: dict[Edge, Segment] = {}
    for s in cut.segments:
        for p in s.interior():
            cp = cut.canon(p)
            if cp in interior_seen and not _twins(cut, interior_seen[cp], s):
                raise CutoutError(f"segments {interior_seen[cp].a}-{interior_seen[cp].b} and {s.a}-{s.b} cross at {cp}")
            interior_seen[cp] = s
        u, v = positions[s.a], positions[s.b]
        if u == v:
            raise IdentificationError(f"segment {s.a}-{s.b} becomes a loop")
        key = edge_key(u, v)
        step = _unit(s.a, s.b)
        du, dv = DIRECTIONS[step], DIRECTIONS[(-step[0], -step[1])]
        if key in edge_geom:
            if not _twins(cut, edge_geom[key], s):
                raise IdentificationError(f"segment {s.a}-{s.b} duplicates edge {key}")
            c0, c1 = edge_color[key], s.color
            if c0 is not None and c1 is not None and c0 != c1:
                raise IdentificationError(f"identified copies of edge {key} carry colors {c0} and {c1}")
            if c0 is None:
                edge_color[key] = c1
            continue
        edge_geom[key] = s
        edge_color[key] = s.color
        for w, d, other in ((u, du, v), (v, dv, u)):
            if (w, d) in darts:
                raise CutoutError(f"two edges leave vertex {order[w]} in the same direction")
            darts[(w, d)] = (other, s)
    for p in interior_seen:
        if p in canon_pts:
            raise CutoutError(f"a segment passes through identified vertex {p}")

    n = len(order)
    g = Graph.from_edges(n, sorted(edge_color), labels=[f"{x},{y}" for x, y in order])
    rotation = [[darts[(v, d)][0] for d in range(4) if (v, d) in darts] for v in range(n)]
    belts = trace_faces(g, rotation)
    genus_euler = (2 - (n - g.m + len(belts))) // 2 if n else 0

    coloring = None
    if all(canon_pts[p] is not None for p in order) and all(c is not None for c in edge_color.values()):
        coloring = TotalColoring.build(palette, [canon_pts[p] for p in order], edge_color)
    return Realization(g, coloring, belts, positions, rotation, genus_euler)


def _unit(a: Point, b: Point) -> Point:
    dx, dy = b[0] - a[0], b[1] - a[1]
    return (dx > 0) - (dx < 0), (dy > 0) - (dy < 0)


def _twins(cut: Cutout, s: Segment, t: Segment) -> bool:
    """True when ``t`` is a translate of ``s`` onto identified border points."""
    if s.horizontal != t.horizontal or len(s.points()) != len(t.points()):
        return False
    return [cut.canon(p) for p in s.points()] == [cut.canon(p) for p in t.points()]


def trace_faces(g: Graph, rotation: Sequence[Sequence[int]]) -> list[Belt]:
    """Faces of the rotation system as boundary walks, sorted for determinism."""
    pos = [{u: i for i, u in enumerate(r)} for r in rotation]
    seen: set[tuple[int, int]] = set()
    faces: list[Belt] = []
    for v in range(g.n):
        for u in rotation[v]:
            if (v, u) in seen:
                continue
            walk = []
            a, b = v, u
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                r = rotation[b]
                # turn to the next direction after the way back, counterclockwise
                c = r[(pos[b][a] + 1) % len(r)]
                a, b = b, c
            faces.append(Belt(tuple(walk)))
    faces.sort(key=lambda f: (f.length, sorted(f.walk)))
    return faces


# -- ASCII -------------------------------------------------------------------

def parse_ascii(text: str, identification: Identification | str = "none", shift: int = 0) -> Cutout:
    if isinstance(identification, str):
        identification = Identification(identification, shift)
    lines = text.strip("\n").split("\n")
    if not lines or len(lines) % 2 == 0:
        raise CutoutError("an ASCII cutout needs an odd number of lines (vertex rows and edge rows)")
    ncols = max(len(ln.rstrip()) for ln in lines)
    width = (ncols - 1) // 4 if ncols else 0
    height = len(lines) // 2
    for r, line in enumerate(lines):
        if line[4 * width + 1:].strip():
            raise CutoutError(f"dangling text {line[4 * width + 1:]!r} at line {r + 1}, column {4 * width + 2}")
    points: dict[Point, int | None] = {}
    passes: dict[Point, str] = {}
    units: list[Segment] = []

    def ch(line: str, i: int) -> str:
        return line[i] if i < len(line) else " "

    for r, line in enumerate(lines):
        if r % 2 == 0:
            y = r // 2
            for x in range(width + 1):
                c = ch(line, 4 * x)
                if c.isdigit():
                    points[(x, y)] = int(c)
                elif c in "oO*":
                    points[(x, y)] = None
                elif c in "-|":
                    passes[(x, y)] = c
                elif c not in " .:;":
                    raise CutoutError(f"unexpected {c!r} at line {r + 1}, column {4 * x + 1}")
                if x < width:
                    mid = line[4 * x + 1:4 * x + 4].ljust(3)
                    if mid.strip() in ("", ".", ":", ".."):
                        continue
                    if mid[0] != "-" or mid[2] != "-" or not (mid[1] == "-" or mid[1].isdigit()):
                        raise CutoutError(f"bad horizontal edge {mid!r} at line {r + 1}, column {4 * x + 2}")
                    units.append(Segment((x, y), (x + 1, y), int(mid[1]) if mid[1].isdigit() else None))
        else:
            y = r // 2
            for x in range(width + 1):
                c = ch(line, 4 * x)
                if c.isdigit() or c == "|":
                    units.append(Segment((x, y), (x, y + 1), int(c) if c.isdigit() else None))
                elif c not in " .:;":
                    raise CutoutError(f"unexpected {c!r} at line {r + 1}, column {4 * x + 1}")
                rest = line[4 * x + 1:4 * x + 4] if x < width else ""
                if rest.strip(" .:;"):
                    raise CutoutError(f"unexpected {rest!r} at line {r + 1}, column {4 * x + 2}")
    segments = _merge_passes(units, passes)
    return Cutout(width, height, points, tuple(segments), identification)


def _merge_passes(units: list[Segment], passes: dict[Point, str]) -> list[Segment]:
    if not passes:
        return sorted(units, key=_seg_order)
    by_end: dict[Point, list[Segment]] = {}
    for s in units:
        by_end.setdefault(s.a, []).append(s)
        by_end.setdefault(s.b, []).append(s)
    used: set[Segment] = set()
    out = []
    for s in units:
        if s in used:
            continue
        chain = [s]
        used.add(s)
        a, b = s.a, s.b
        for end in ("a", "b"):
            while True:
                p = a if end == "a" else b
                if p not in passes:
                    break
                nxt = [t for t in by_end.get(p, []) if t not in used and t.horizontal == s.horizontal]
                if len(nxt) != 1:
                    raise CutoutError(f"pass-through point {p} does not continue a straight segment")
                t = nxt[0]
                used.add(t)
                chain.append(t)
                q = t.a if t.b == p else t.b
                if end == "a":
                    a = q
                else:
                    b = q
        colors = {t.color for t in chain if t.color is not None}
        if len(colors) > 1:
            raise CutoutError(f"segment {a}-{b} has conflicting colors {sorted(colors)}")
        out.append(Segment(a, b, colors.pop() if colors else None))
    return sorted(out, key=_seg_order)


def _seg_order(s: Segment):
    return (s.a[1], s.a[0], s.b[1], s.b[0])


def render_ascii(cut: Cutout) -> str:
    W, H = cut.width, cut.height
    rows = [[" "] * (4 * W + 1) for _ in range(2 * H + 1)]
    for (x, y), col in cut.points.items():
        rows[2 * y][4 * x] = "o" if col is None else str(col)
    for s in cut.segments:
        mark = "-" if s.color is None else str(s.color)
        if s.horizontal:
            y = s.a[1]
            for x in range(s.a[0], s.b[0]):
                rows[2 * y][4 * x + 1:4 * x + 4] = ["-", mark, "-"]
            for (x, _) in s.interior():
                rows[2 * y][4 * x] = "-"
        else:
            x = s.a[0]
            for y in range(s.a[1], s.b[1]):
                rows[2 * y + 1][4 * x] = "|" if s.color is None else str(s.color)
            for (_, y) in s.interior():
                rows[2 * y][4 * x] = "|"
    return "\n".join("".join(r).rstrip() for r in rows) + "\n"


# -- JSON --------------------------------------------------------------------

def cutout_to_dict(cut: Cutout) -> dict:
    ident = {"kind": cut.identification.kind}
    if cut.identification.shift:
        ident["shift"] = cut.identification.shift
    verts = []
    for (x, y) in sorted(cut.points, key=lambda p: (p[1], p[0])):
        d = {"x": x, "y": y}
        if cut.points[(x, y)] is not None:
            d["color"] = cut.points[(x, y)]
        verts.append(d)
    segs = []
    for s in sorted(cut.segments, key=_seg_order):
        d = {"from": list(s.a), "to": list(s.b)}
        if s.color is not None:
            d["color"] = s.color
        segs.append(d)
    return {"width": cut.width, "height": cut.height, "identification": ident,
            "vertices": verts, "segments": segs}


def cutout_from_dict(d: dict) -> Cutout:
    try:
        ident = Identification(d.get("identification", {}).get("kind", "none"),
                               int(d.get("identification", {}).get("shift", 0)))
        points = {(int(v["x"]), int(v["y"])): v.get("color") for v in d["vertices"]}
        segs = tuple(Segment(tuple(s["from"]), tuple(s["to"]), s.get("color")) for s in d["segments"])
        return Cutout(int(d["width"]), int(d["height"]), points, segs, ident)
    except (KeyError, TypeError) as exc:
        raise CutoutError(f"bad cutout object: {exc}") from exc


# -- periodic extension ------------------------------------------------------

def periodic_extension(cut: Cutout, axis: str = "x", copies: int = 2) -> Cutout:
    """Glue ``copies`` translates of the cutout side by side along ``axis``.

    For a tilted torus each copy is also slid by the tilt, so the new cutout
    has tilt ``copies * shift`` (taken modulo the other side).
    """
    if copies < 1:
        raise CutoutError("copies must be at least 1")
    if axis not in ("x", "y"):
        raise CutoutError("axis must be 'x' or 'y'")
    if copies == 1:
        return cut
    ident = cut.identification
    W, H = cut.width, cut.height
    tilt = 0
    if axis == "x" and ident.kind == "torus-tilted":
        tilt = ident.shift
    if axis == "y" and ident.kind == "torus-tilted-vertical":
        tilt = ident.shift

    points: dict[Point, int | None] = {}
    segs: dict[tuple, Segment] = {}
    for i in range(copies):
        if axis == "x":
            dx, dy = i * W, -i * tilt
        else:
            dx, dy = -i * tilt, i * H
        for p, col in cut.points.items():
            for q in _wrap_point(cut, (p[0] + dx, p[1] + dy), axis):
                _merge_point(points, q, col)
        for s in cut.segments:
            for t in _wrap_segment(cut, s.moved(dx, dy), axis):
                key = (t.a, t.b)
                if key in segs:
                    c0 = segs[key].color
                    if c0 is not None and t.color is not None and c0 != t.color:
                        raise IdentificationError(f"glued copies of segment {t.a}-{t.b} disagree on color")
                    if c0 is None:
                        segs[key] = t
                else:
                    segs[key] = t
    if axis == "x":
        W2, H2 = W * copies, H
        new_shift = (ident.shift * copies) % H if tilt and H else ident.shift
    else:
        W2, H2 = W, H * copies
        new_shift = (ident.shift * copies) % W if tilt and W else ident.shift
    kind = ident.kind
    if tilt and new_shift == 0:
        kind = "torus"
    out = Cutout(W2, H2, points, tuple(sorted(segs.values(), key=_seg_order)), Identification(kind, new_shift))
    return _complete_border(out)


def _plain_wrap(cut: Cutout, axis: str) -> bool:
    """Does crossing the border along ``axis`` come back without a slide?"""
    ident = cut.identification
    if axis == "x":
        return ident.wrap_x and ident.kind != "torus-tilted"
    return ident.wrap_y and ident.kind != "torus-tilted-vertical"


def _wrap_point(cut: Cutout, p: Point, axis: str) -> list[Point]:
    """Bring a translated point back into range along the non-extended axis."""
    x, y = p
    if axis == "x" and cut.height:
        while y < 0:
            y += cut.height
        if y > cut.height:
            y -= cut.height
        return [(x, y)] + ([(x, cut.height)] if y == 0 and _plain_wrap(cut, "y") else [])
    if axis == "y" and cut.width:
        while x < 0:
            x += cut.width
        if x > cut.width:
            x -= cut.width
        return [(x, y)] + ([(cut.width, y)] if x == 0 and _plain_wrap(cut, "x") else [])
    return [p]


def _wrap_segment(cut: Cutout, s: Segment, axis: str) -> list[Segment]:
    if axis == "x":
        lo, hi, size = s.a[1], s.b[1], cut.height
        off = 0
        while lo + off < 0:
            off += size
        if hi + off > size:
            off -= size
        if lo + off < 0:
            raise CutoutError(f"segment {s.a}-{s.b} straddles the identified border after sliding")
        t = s.moved(0, off)
        out = [t]
        if _plain_wrap(cut, "y") and t.horizontal and t.a[1] in (0, size):
            out.append(t.moved(0, size if t.a[1] == 0 else -size))
        return out
    lo, hi, size = s.a[0], s.b[0], cut.width
    off = 0
    while lo + off < 0:
        off += size
    if hi + off > size:
        off -= size
    if lo + off < 0:
        raise CutoutError(f"segment {s.a}-{s.b} straddles the identified border after sliding")
    t = s.moved(off, 0)
    out = [t]
    if _plain_wrap(cut, "x") and not t.horizontal and t.a[0] in (0, size):
        out.append(t.moved(size if t.a[0] == 0 else -size, 0))
    return out


def _merge_point(points: dict, q: Point, col):
    if q in points:
        c0 = points[q]
        if c0 is not None and col is not None and c0 != col:
            raise IdentificationError(f"glued copies of vertex {q} disagree on color")
        if c0 is None:
            points[q] = col
    else:
        points[q] = col


def _complete_border(cut: Cutout) -> Cutout:
    """Drop border copies that fell outside after sliding; keep the drawing consistent."""
    pts = {p: c for p, c in cut.points.items() if 0 <= p[0] <= cut.width and 0 <= p[1] <= cut.height}
    segs = [s for s in cut.segments if all(0 <= q[0] <= cut.width and 0 <= q[1] <= cut.height for q in (s.a, s.b))]
    # a border point whose twin holds a vertex must hold one too (for drawing only)
    for p in list(pts):
        for q in _border_twins(cut, p):
            if q not in pts:
                pts[q] = pts[p]
    segs = [s for s in segs if s.a in pts and s.b in pts]
    return Cutout(cut.width, cut.height, pts, tuple(sorted(set(segs), key=_seg_order)), cut.identification)


def _border_twins(cut: Cutout, p: Point) -> list[Point]:
    out = []
    W, H = cut.width, cut.height
    cands = [(x, y) for x in {0, W, p[0]} for y in {0, H, p[1]}]
    cp = cut.canon(p)
    for q in cands:
        if q != p and 0 <= q[0] <= W and 0 <= q[1] <= H and cut.canon(q) == cp:
            out.append(q)
    if cut.identification.kind == "torus-tilted" and p[0] in (0, W):
        for y in range(H + 1):
            q = (W - p[0], y)
            if cut.canon(q) == cp and q != p:
                out.append(q)
    if cut.identification.kind == "torus-tilted-vertical" and p[1] in (0, H):
        for x in range(W + 1):
            q = (x, H - p[1])
            if cut.canon(q) == cp and q != p:
                out.append(q)
    return out


# -- accordion unfolding -----------------------------------------------------

def accordion_unfold(cut: Cutout, corner: Point, ell: int, axis: str = "x") -> Cutout:
    """Replace the unit 4-belt with top-left ``corner`` by a ladder P2 x P_{2 ell}.

    With ``axis="x"`` the square's horizontal sides become the rails and the
    ladder grows to the right; ``axis="y"`` is the transposed case. Colors
    continue with period four along the ladder: the columns repeat
    ``(A,B), (D,C), (B,A), (C,D)`` where ``A, B`` is the first rung and ``D, C``
    the second. For odd ``ell`` the far rung keeps its colors; for even
    ``ell`` it does not, and if the result is no longer a proper total
    coloring the colors are dropped so the caller can re-color.
    """
    if ell < 2:
        raise CutoutError("unfolding needs ell > 1")
    if axis == "y":
        return _transpose(accordion_unfold(_transpose(cut), (corner[1], corner[0]), ell, "x"))
    if axis != "x":
        raise CutoutError("axis must be 'x' or 'y'")
    x0, y0 = corner
    sq = [(x0, y0), (x0 + 1, y0), (x0, y0 + 1), (x0 + 1, y0 + 1)]
    top = _find_seg(cut, sq[0], sq[1])
    bot = _find_seg(cut, sq[2], sq[3])
    left = _find_seg(cut, sq[0], sq[2])
    right = _find_seg(cut, sq[1], sq[3])
    if None in (top, bot, left, right) or any(p not in cut.points for p in sq):
        raise CutoutError(f"no unit 4-belt with top-left corner {corner}")
    k = 2 * ell - 2
    colored = all(cut.points[p] is not None for p in sq) and all(
        s.color is not None for s in (top, bot, left, right))
    if colored:
        ladder = _ladder_colors(cut.points[sq[0]], cut.points[sq[2]], cut.points[sq[1]], cut.points[sq[3]],
                                top.color, bot.color, left.color, right.color, 2 * ell)
        colored = ladder is not None
    if colored:
        cols, tops, bots, rungs = ladder
    else:
        cols = [(None, None)] * (2 * ell)
        tops = bots = [None] * (2 * ell - 1)
        rungs = [None] * (2 * ell)

    def sh(p: Point) -> Point:
        return (p[0] + k, p[1]) if p[0] >= x0 + 1 else p

    ident = cut.identification
    if ident.kind == "torus-tilted-vertical" and (y0 == 0 or y0 + 1 == cut.height):
        raise CutoutError("unfolding a square on a tilted border row is not supported")
    rails = {y0: 0, y0 + 1: 1}
    if ident.wrap_y:
        for y, side in list(rails.items()):
            if y == 0:
                rails[cut.height] = side
            elif y == cut.height:
                rails[0] = side

    points: dict[Point, int | None] = {}
    for p, col in cut.points.items():
        points[sh(p)] = col
    segs = []
    for s in cut.segments:
        if s.horizontal and s.a[1] in rails and s.a[0] == x0 and s.b[0] == x0 + 1:
            continue
        if s is right:
            continue
        segs.append(Segment(sh(s.a), sh(s.b), s.color))
    for j in range(2 * ell):
        x = x0 + j
        for y, side in rails.items():
            points[(x, y)] = cols[j][side]
            if j < 2 * ell - 1:
                segs.append(Segment((x, y), (x + 1, y), (tops if side == 0 else bots)[j]))
        if j > 0:
            segs.append(Segment((x, y0), (x, y0 + 1), rungs[j]))
    W2 = cut.width + k
    # border copies of the far rung move with it; the left border keeps its copy
    out = Cutout(W2, cut.height, points, tuple(sorted(set(segs), key=_seg_order)), cut.identification)
    if colored and ell % 2 == 0:
        try:
            real = realize(out)
        except IdentificationError:
            return out.uncolored()
        if real.coloring is None or not verify_tc(real.graph, real.coloring).passed:
            return out.uncolored()
    return out


def _ladder_colors(a, b, d, c, top, bot, left, right, length):
    """Continue a colored square into a ladder of ``length`` rungs.

    ``a, b`` are the first rung's top and bottom colors, ``d, c`` the second's.
    Vertex columns alternate with swaps two steps apart, and every rail and
    rung takes the single color left free at its vertex. Returns ``None`` if
    the square does not force a unique continuation.
    """
    palette = set(range(4))
    cols = [(a, b), (d, c)]
    tops, bots, rungs = [top], [bot], [left, right]
    if len({a, b, c, d}) != 4 or len({top, bot, left, right}) != 4:
        return None
    for j in range(2, length):
        t, u = cols[j - 2][1], cols[j - 2][0]
        cols.append((t, u))
        free_t = palette - {cols[j - 1][0], tops[-1], rungs[j - 1]}
        free_b = palette - {cols[j - 1][1], bots[-1], rungs[j - 1]}
        if len(free_t) != 1 or len(free_b) != 1:
            return None
        tops.append(free_t.pop())
        bots.append(free_b.pop())
        free_r = palette - {t, u, tops[-1], bots[-1]}
        if len(free_r) != 1:
            return None
        rungs.append(free_r.pop())
    return cols, tops, bots, rungs


def _find_seg(cut: Cutout, p: Point, q: Point) -> Segment | None:
    a, b = min(p, q, key=lambda t: (t[1], t[0])), max(p, q, key=lambda t: (t[1], t[0]))
    for s in cut.segments:
        if {s.a, s.b} == {a, b}:
            return s
    return None


def _transpose(cut: Cutout) -> Cutout:
    kinds = {"cylinder-horizontal": "cylinder-vertical", "cylinder-vertical": "cylinder-horizontal",
             "torus-tilted": "torus-tilted-vertical", "torus-tilted-vertical": "torus-tilted"}
    ident = Identification(kinds.get(cut.identification.kind, cut.identification.kind),
                           cut.identification.shift)
    pts = {(y, x): c for (x, y), c in cut.points.items()}
    segs = tuple(Segment((s.a[1], s.a[0]), (s.b[1], s.b[0]), s.color) for s in cut.segments)
    return Cutout(cut.height, cut.width, pts, segs, ident)


# -- belts and genus ---------------------------------------------------------

def belt_condition(belts: Iterable[Belt | int], n_vertices: int | None = None) -> VerificationReport:
    rep = VerificationReport()
    for b in belts:
        length = b if isinstance(b, int) else b.length
        if length % 4:
            rep.add("BELT", ("belt", b.walk if isinstance(b, Belt) else length),
                    f"{length}-belt is not a multiple of 4")
    if n_vertices is not None and n_vertices % 4:
        rep.add("ORDER", ("graph",), f"{n_vertices} vertices is not a multiple of 4")
    return rep


@dataclass
class GenusLedger:
    genus: int = 0
    history: list[tuple[str, int, str]] = field(default_factory=list)

    def record(self, op: str, delta: int, note: str = "") -> "GenusLedger":
        if delta not in (-1, 0, 1):
            raise ValueError("genus deltas are -1, 0 or +1")
        if self.genus + delta < 0:
            raise ValueError("genus cannot become negative")
        return GenusLedger(self.genus + delta, self.history + [(op, delta, note)])


class IndeterminateDeltaWarning(UserWarning):
    """A cycle exchange whose genus change is not settled by the belt rule."""


@dataclass
class ExchangeResult:
    graph: Graph
    coloring: TotalColoring
    ledger: GenusLedger
    delta: int
    merged_faces: list[int]
    new_edges: tuple[Edge, Edge]
    indeterminate: bool = False
    rotation: list[list[int]] | None = None
    belts: list[Belt] | None = None


def orient_exchange(c: TotalColoring, e: Edge, f: Edge) -> tuple[int, int, int, int]:
    """Order the endpoints as ``v, v', w, w'`` with ``c(v)=c(w)`` and ``c(v')=c(w')``."""
    v, v2 = e
    for w, w2 in (f, f[::-1]):
        if c.vertex_colors[v] == c.vertex_colors[w] and c.vertex_colors[v2] == c.vertex_colors[w2]:
            return v, v2, w, w2
    raise ValueError(f"edges {e} and {f} do not share a vertex color pattern")


def cycle_exchange(g: Graph, c: TotalColoring, e: Edge, f: Edge,
                   ledger: GenusLedger | None = None,
                   belts: Sequence[Belt] | None = None,
                   delta: int | None = None,
                   rotation: Sequence[Sequence[int]] | None = None) -> ExchangeResult:
    """Swap ``e=(v,v')`` and ``f=(w,w')`` for ``(v,w')`` and ``(v',w)``.

    The new edges join differently colored vertices and take the common color
    of ``e`` and ``f``. The genus change follows the belt rule: ``+1`` when
    ``e`` and ``f`` border four distinct belts, ``0`` when one belt carries
    both. Anything else needs an explicit ``delta`` (the planarizing case) and
    otherwise records ``0`` with an :class:`IndeterminateDeltaWarning`.

    Given a ``rotation`` system, each new edge takes the place of the old one
    in the cyclic order at its endpoints and the faces are traced again.
    """
    ledger = ledger or GenusLedger()
    e, f = edge_key(*e), edge_key(*f)
    for x in (e, f):
        if not g.has_edge(*x):
            raise GraphError(f"{x} is not an edge")
    if set(e) & set(f):
        raise ValueError(f"edges {e} and {f} are adjacent")
    if c.edge_colors[e] != c.edge_colors[f]:
        raise ValueError(f"edges {e} and {f} carry different colors")
    v, v2, w, w2 = orient_exchange(c, e, f)
    new = (edge_key(v, w2), edge_key(v2, w))
    for x in new:
        if g.has_edge(*x):
            raise GraphError(f"replacement edge {x} already present")
    g2 = g.with_edges(remove=[e, f], add=new)
    ec = dict(c.edge_colors)
    col = ec.pop(e)
    ec.pop(f)
    for x in new:
        ec[x] = col
    c2 = TotalColoring(c.palette, c.vertex_colors, dict(sorted(ec.items())))

    merged: list[int] = []
    rule_delta = None
    if belts is not None:
        fe = [b for b in belts if e in b.edges]
        ff = [b for b in belts if f in b.edges]
        ids = {id(b) for b in fe + ff}
        if len(fe) == 2 and len(ff) == 2 and len(ids) == 4:
            rule_delta = 1
            merged = sorted([fe[0].length + fe[1].length - 2, ff[0].length + ff[1].length - 2])
        elif any(b in ff for b in fe):
            rule_delta = 0
    indeterminate = False
    if delta is None:
        if rule_delta is None:
            indeterminate = True
            warnings.warn(f"genus change of exchanging {e} and {f} is indeterminate; recording 0",
                          IndeterminateDeltaWarning, stacklevel=2)
            delta = 0
        else:
            delta = rule_delta
    note = f"exchange {e},{f} -> {new[0]},{new[1]}" + (" (indeterminate)" if indeterminate else "")
    rot2 = faces = None
    if rotation is not None:
        swap = {(v, v2): w2, (v2, v): w, (w, w2): v2, (w2, w): v}
        rot2 = [[swap.get((x, y), y) for y in r] for x, r in enumerate(rotation)]
        faces = trace_faces(g2, rot2)
    return ExchangeResult(g2, c2, ledger.record("cycle-exchange", delta, note), delta, merged, new,
                          indeterminate, rot2, faces)
