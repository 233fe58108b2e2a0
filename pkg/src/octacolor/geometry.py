"""Exact geometric realization of a consistent length assignment.

Given a labelled multigraph and a positive solution of the closure system,
this module lays out every polygon on the rational grid, develops the whole
surface into the plane through the folding map (orientation preserving on
white polygons, reversing on black, so all gluing maps become translations),
cuts integer-sided polygons into unit triangles, assembles the glued sphere
triangulation with its proper 4-coloring, and lays out an unfolded net with
proper isometries for rendering.

Everything up to SVG emission stays in GridPoint arithmetic; angle checks
are combinatorial, in units of pi/3.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .emg import BLUE, WHITE, EnhancedMultigraph, trace_faces
from .grid import ORIGIN, GridPoint, direction, signed_triarea
from .labeling import ACUTE, CORNER_UNITS, LabelMap, PolygonBoundary


class ClosureError(ValueError):
    """A length vector does not satisfy the closure system."""


class GluingError(ValueError):
    """Folded polygon placements disagree across a shared edge or vertex."""


class AngleError(ValueError):
    """Interior angles around a vertex fail to close up."""


class MeshError(ValueError):
    """Glued unit triangulations do not form a closed sphere."""


class ColorError(ValueError):
    """A folded vertex image is not a lattice point."""


@dataclass(frozen=True)
class SideRecord:
    edge_id: int
    start: GridPoint
    direction: int  # exponent of the unit direction, 0..5
    length: Fraction

    @property
    def end(self) -> GridPoint:
        return self.start + direction(self.direction).scale(self.length)


@dataclass(frozen=True)
class PolygonChart:
    vertex_id: int
    color: str
    sides: tuple[SideRecord, ...]

    @property
    def chain(self) -> tuple[GridPoint, ...]:
        return tuple(s.start for s in self.sides)

    def corner_point(self, corner_index: int) -> GridPoint:
        """Position of the corner after side ``corner_index``."""
        return self.sides[(corner_index + 1) % len(self.sides)].start


def realize_polygons(g: EnhancedMultigraph, boundaries: list[PolygonBoundary],
                     labels: LabelMap, lengths) -> dict[int, PolygonChart]:
    """Per-polygon charts anchored at the origin.

    Side i of a polygon runs for its length along the labelled direction
    (plus a half turn on black polygons, whose charts are the reflected,
    folded image).  Raises ClosureError when a chain fails to close, which
    means ``lengths`` is not a solution of the closure system.
    """
    exp = labels.exponent_map()
    charts: dict[int, PolygonChart] = {}
    for b in boundaries:
        offset = 0 if b.color == WHITE else 3
        turn_sign = 1 if b.color == WHITE else -1
        point = ORIGIN
        sides = []
        for eid in b.sides:
            ell = Fraction(lengths[eid])
            if ell <= 0:
                raise ClosureError(f"edge {eid} has nonpositive length {ell}")
            d = (exp[eid] + offset) % 6
            sides.append(SideRecord(eid, point, d, ell))
            point = point + direction(d).scale(ell)
        if point != ORIGIN:
            raise ClosureError(f"polygon {b.vertex_id} does not close (gap {point})")
        for i, corner in enumerate(b.corners):
            got = (sides[(i + 1) % len(sides)].direction - sides[i].direction) % 6
            want = (turn_sign * (2 if corner == ACUTE else 1)) % 6
            if got != want:
                raise ClosureError(f"polygon {b.vertex_id}: turn at corner {i} is {got}, expected {want}")
        charts[b.vertex_id] = PolygonChart(b.vertex_id, b.color, tuple(sides))
    return charts


@dataclass(frozen=True)
class EdgeGluing:
    edge_id: int
    white_polygon: int
    white_side: int
    black_polygon: int
    black_side: int
    reflected: bool = True  # the folding map reverses orientation across every edge


@dataclass(frozen=True)
class RealizedSurface:
    placed: dict[int, PolygonChart]               # charts in global folded coordinates
    gluings: dict[int, EdgeGluing]                # per blue edge
    folded_vertex_image: dict[int, GridPoint]     # blue face id -> folding map image
    cone_vertices: tuple[int, ...]                # bigon face ids (two polygons meet)
    regular_vertices: tuple[int, ...]             # quad face ids (four polygons meet)
    base_flag: tuple[int, int, int]               # (cone vertex face id, polygon id, side index)
    boundaries: tuple[PolygonBoundary, ...]
    tree_edges: tuple[int, ...]


def develop_surface(g: EnhancedMultigraph, boundaries: list[PolygonBoundary],
                    charts: dict[int, PolygonChart],
                    base_flag: tuple[int, int] | None = None,
                    tree: set[int] | None = None) -> RealizedSurface:
    """Develop all polygons into one plane through the folding map.

    Charts carry the correct reflection parity already, so every gluing map
    is a translation; placements propagate over a spanning tree of the dual
    graph and every non-tree edge is checked for exact coincidence, which is
    the geometric holonomy test.  The base flag (cone vertex, polygon) is
    normalized to put the cone vertex at the origin, its boundary edge on
    the positive real axis, and the flag polygon in the upper half plane.
    """
    by_vertex = {b.vertex_id: b for b in boundaries}
    blue_faces = trace_faces(g, colors=(BLUE,))
    bigons = sorted(f.id for f in blue_faces.by_kind("bigon"))
    quads = sorted(f.id for f in blue_faces.by_kind("quadrilateral"))

    gluings = _edge_gluings(boundaries)

    adjacency: dict[int, list[tuple[int, int]]] = {b.vertex_id: [] for b in boundaries}
    for eid, gl in sorted(gluings.items()):
        adjacency[gl.white_polygon].append((eid, gl.black_polygon))
        adjacency[gl.black_polygon].append((eid, gl.white_polygon))
    for lst in adjacency.values():
        lst.sort()

    root = min(adjacency)
    translations: dict[int, GridPoint] = {root: ORIGIN}
    tree_edges: list[int] = []
    queue = [root]
    while queue:
        pid = queue.pop(0)
        for eid, other in adjacency[pid]:
            if other in translations or (tree is not None and eid not in tree):
                continue
            translations[other] = translations[pid] + _gluing_shift(charts, gluings[eid], from_polygon=pid)
            tree_edges.append(eid)
            queue.append(other)
    if len(translations) != len(adjacency):
        raise GluingError("spanning tree does not reach every polygon")

    # holonomy: every non-tree edge must be glued by the same translations
    tree_set = set(tree_edges)
    for eid, gl in sorted(gluings.items()):
        if eid in tree_set:
            continue
        want = translations[gl.white_polygon] + _gluing_shift(charts, gl, from_polygon=gl.white_polygon)
        if want != translations[gl.black_polygon]:
            raise GluingError(
                f"edge {eid}: folded placements disagree by {translations[gl.black_polygon] - want}")

    # combinatorial angle closure at every vertex of the coloring
    corner_units: dict[int, dict[str, int]] = {}
    for b in boundaries:
        for idx, fid in enumerate(b.corner_faces):
            units = CORNER_UNITS[b.corners[idx]]
            slot = corner_units.setdefault(fid, {"white": 0, "black": 0})
            slot[b.color] += units
    for fid in bigons:
        units = corner_units.get(fid, {"white": 0, "black": 0})
        if units["white"] != 2 or units["black"] != 2:
            raise AngleError(f"cone vertex {fid} has angle units {units}, expected white 2 and black 2")
    for fid in quads:
        units = corner_units.get(fid, {"white": 0, "black": 0})
        if units["white"] != units["black"]:
            raise AngleError(f"vertex {fid} has unbalanced folded angles {units}")

    # normalization: cone vertex at 0, flag edge on the positive axis,
    # flag polygon in the upper half plane
    corners_at: dict[int, list[tuple[int, int]]] = {}
    for b in boundaries:
        for idx, fid in enumerate(b.corner_faces):
            corners_at.setdefault(fid, []).append((b.vertex_id, idx))
    if base_flag is None:
        cv = bigons[0]
        flag_pid = min(pid for pid, _ in corners_at[cv] if by_vertex[pid].color == WHITE)
    else:
        cv, flag_pid = base_flag
        if cv not in bigons:
            raise ValueError(f"base flag vertex {cv} is not a cone vertex")
        if flag_pid not in {pid for pid, _ in corners_at[cv]}:
            raise ValueError(f"polygon {flag_pid} does not touch cone vertex {cv}")
    corner_idx = next(idx for pid, idx in corners_at[cv] if pid == flag_pid)
    chart = charts[flag_pid]
    k = len(chart.sides)
    if by_vertex[flag_pid].color == WHITE:
        flag_side = (corner_idx + 1) % k     # side departing the corner
        delta = chart.sides[flag_side].direction
    else:
        flag_side = corner_idx               # side arriving at the corner
        delta = (chart.sides[flag_side].direction + 3) % 6
    origin = translations[flag_pid] + chart.corner_point(corner_idx)

    placed: dict[int, PolygonChart] = {}
    for pid, ch in charts.items():
        sides = tuple(
            SideRecord(s.edge_id,
                       (s.start + translations[pid] - origin).rot(-delta),
                       (s.direction - delta) % 6,
                       s.length)
            for s in ch.sides)
        placed[pid] = PolygonChart(pid, ch.color, sides)

    folded: dict[int, GridPoint] = {}
    for b in boundaries:
        for idx, fid in enumerate(b.corner_faces):
            pt = placed[b.vertex_id].corner_point(idx)
            if fid in folded and folded[fid] != pt:
                raise GluingError(f"vertex {fid} has two folded images {folded[fid]} and {pt}")
            folded[fid] = pt

    return RealizedSurface(placed, gluings, folded, tuple(bigons), tuple(quads),
                           (cv, flag_pid, flag_side), tuple(boundaries), tuple(sorted(tree_edges)))


def _edge_gluings(boundaries) -> dict[int, EdgeGluing]:
    sides_of_edge: dict[int, list[tuple[str, int, int]]] = {}
    for b in boundaries:
        for i, eid in enumerate(b.sides):
            sides_of_edge.setdefault(eid, []).append((b.color, b.vertex_id, i))
    gluings = {}
    for eid, recs in sides_of_edge.items():
        if len(recs) != 2:
            raise GluingError(f"edge {eid} bounds {len(recs)} polygon sides, expected 2")
        whites = [(pid, i) for color, pid, i in recs if color == WHITE]
        blacks = [(pid, i) for color, pid, i in recs if color != WHITE]
        if len(whites) != 1 or len(blacks) != 1:
            raise GluingError(f"edge {eid} does not join a white and a black polygon")
        gluings[eid] = EdgeGluing(eid, whites[0][0], whites[0][1], blacks[0][0], blacks[0][1])
    return gluings


def _gluing_shift(charts, gl: EdgeGluing, from_polygon: int) -> GridPoint:
    """Translation carrying the other polygon's chart onto ``from_polygon``'s.

    The white side traverses the edge A -> B and the black side B -> A with
    opposite chart directions, so chart starts pair with chart ends.
    """
    w = charts[gl.white_polygon].sides[gl.white_side]
    b = charts[gl.black_polygon].sides[gl.black_side]
    shift_black = w.start - b.end
    if from_polygon == gl.white_polygon:
        return shift_black
    return -shift_black


# ---------------------------------------------------------------------------
# unit triangulation of integer-sided polygons

Triangle = tuple[GridPoint, GridPoint, GridPoint]


def triarea(points) -> Fraction:
    """Area of a closed chain in units of one unit equilateral triangle."""
    return abs(signed_triarea(list(points)))


def unit_triangulate(chart_or_start, sides=None) -> list[Triangle]:
    """Cut an integer-sided convex chain into unit triangles.

    Inductive chopping: a triangle subdivides directly; at an acute corner
    an integer equilateral triangle comes off (side = the shorter adjacent
    length, smallest such corner first); an all-obtuse hexagon first sheds
    a four-sided piece at its shortest side, leaving a pentagon.  Returns
    exactly area / (sqrt(3)/4) triangles whose vertices are grid points at
    mutual distance one.
    """
    if sides is None:
        chart: PolygonChart = chart_or_start
        start = chart.sides[0].start
        side_list = [(s.length, s.direction) for s in chart.sides]
    else:
        start = chart_or_start
        side_list = list(sides)
    lengths: list[tuple[int, int]] = []
    for ell, d in side_list:
        ell = Fraction(ell)
        if ell.denominator != 1 or ell <= 0:
            raise ValueError(f"side lengths must be positive integers, got {ell}")
        lengths.append((int(ell), d % 6))
    k = len(lengths)
    turns = {(lengths[(i + 1) % k][1] - lengths[i][1]) % 6 for i in range(k)}
    if turns <= {1, 2}:
        tris = _triangulate_ccw(start, lengths)
    elif turns <= {4, 5}:
        mirrored = _triangulate_ccw(start.conj(), [(l, (-d) % 6) for l, d in lengths])
        tris = [tuple(sorted(p.conj() for p in t)) for t in mirrored]
    else:
        raise ValueError(f"chain is not convex with sixth-turn corners (turns {sorted(turns)})")
    expected = triarea(_chain_points(start, lengths))
    if len(tris) != expected:
        raise MeshError(f"triangulated {len(tris)} units, area holds {expected}")
    return tris


def _chain_points(start: GridPoint, sides) -> list[GridPoint]:
    pts = [start]
    for ell, d in sides[:-1]:
        pts.append(pts[-1] + direction(d).scale(ell))
    return pts


def _triangulate_ccw(start: GridPoint, sides: list[tuple[int, int]]) -> list[Triangle]:
    tris: list[Triangle] = []
    work = list(sides)
    anchor = start
    while True:
        work, anchor = _normalize_chain(work, anchor)
        k = len(work)
        if k < 3:
            raise ValueError("chain degenerated during chopping")
        if k == 3:
            tris.extend(_subdivide_triangle(anchor, work[0][1], (work[0][1] + 1) % 6, work[0][0]))
            return tris
        pts = _chain_points(anchor, work)
        acute = [(min(work[i][0], work[(i + 1) % k][0]), i)
                 for i in range(k)
                 if (work[(i + 1) % k][1] - work[i][1]) % 6 == 2]
        if acute:
            _, i = min(acute)
            j = (i + 1) % k
            a, da = work[i]
            b, db = work[j]
            m = min(a, b)
            corner = pts[j] if j else anchor  # end of side i
            apex = corner - direction(da).scale(m)
            tris.extend(_subdivide_triangle(apex, da, (da + 1) % 6, m))
            new: list[tuple[int, int]] = []
            for t in range(k):
                if t == i:
                    new.append((a - m, da))
                    new.append((m, (da + 1) % 6))
                elif t == j:
                    new.append((b - m, db))
                else:
                    new.append(work[t])
            if j == 0:
                # side 0 lost its first m units; its start moves forward
                anchor = anchor + direction(db).scale(m)
            work = new
            continue
        # hexagon with all corners obtuse: shed the four-sided piece that
        # fully covers the shortest side i and side i+1, eating the first
        # li units of side i+2
        i = min(range(k), key=lambda t: (work[t][0], t))
        li, di = work[i]
        lj, dj = work[(i + 1) % k]
        lk_, dk_ = work[(i + 2) % k]
        if li > lk_:
            raise MeshError("hexagon chop: chosen side is not minimal")
        piece = [(li, di), (lj, dj), (li, (di + 2) % 6), (li + lj, (di + 4) % 6)]
        tris.extend(_triangulate_ccw(pts[i], piece))
        new = []
        for t in range(k):
            if t == i:
                new.append((li + lj, dj))
            elif t == (i + 1) % k:
                if lk_ > li:
                    new.append((lk_ - li, dk_))
            elif t == (i + 2) % k:
                continue
            else:
                new.append(work[t])
        if i == k - 1:
            # merged side sits at slot i, shortened side wrapped to slot 0
            anchor = pts[i] + direction(dj).scale(li + lj)
        elif i == k - 2:
            # old side 0 was eaten from its start; side 1 leads now
            anchor = pts[1]
        work = new


def _normalize_chain(sides, anchor):
    """Drop zero sides and merge consecutive sides with equal direction."""
    out = [(l, d) for l, d in sides if l]
    changed = True
    while changed and len(out) > 1:
        changed = False
        merged: list[tuple[int, int]] = []
        for l, d in out:
            if merged and merged[-1][1] == d:
                merged[-1] = (merged[-1][0] + l, d)
                changed = True
            else:
                merged.append((l, d))
        if len(merged) > 1 and merged[0][1] == merged[-1][1]:
            l, d = merged.pop()
            anchor = anchor - direction(d).scale(l)
            merged[0] = (merged[0][0] + l, d)
            changed = True
        out = merged
    return out, anchor


def _subdivide_triangle(apex: GridPoint, d_u: int, d_v: int, n: int) -> list[Triangle]:
    """Standard subdivision of an equilateral triangle of side n into n*n units."""
    u, v = direction(d_u), direction(d_v)
    tris = []
    for i in range(n):
        for j in range(n - i):
            base = apex + u.scale(i) + v.scale(j)
            tris.append(tuple(sorted((base, base + u, base + v))))
            if i + j < n - 1:
                tris.append(tuple(sorted((base + u, base + v, base + u + v))))
    return tris


# ---------------------------------------------------------------------------
# glued triangulation and 4-coloring

@dataclass(frozen=True)
class ColoredTriangulation:
    positions: tuple[GridPoint, ...]                  # folded image per vertex
    triangles: tuple[tuple[int, int, int], ...]
    triangle_colors: tuple[str, ...]                  # polygon colour per triangle
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]
    surface_vertex: tuple[int, ...]                   # blue face id, or -1 for subdivision vertices
    vertex_colors: tuple[int, ...] | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.positions)

    def degree_histogram(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return out

    def euler_characteristic(self) -> int:
        return self.n_vertices - len(self.edges) + len(self.triangles)


def build_triangulation(surface: RealizedSurface,
                        triangulations: dict[int, list[Triangle]] | None = None) -> ColoredTriangulation:
    """Glue per-polygon unit triangulations into one closed sphere.

    Subdivision points along a shared edge coincide exactly in the folded
    plane, so identification happens by position along each glued edge, and
    only there (the folding map is far from injective globally).  Verifies
    closedness, the Euler characteristic, and the degree sequence of six
    4s with all remaining degrees 6.
    """
    placed = surface.placed
    if triangulations is None:
        triangulations = {pid: unit_triangulate(ch) for pid, ch in placed.items()}

    parent: dict[tuple[int, GridPoint], tuple[int, GridPoint]] = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for pid, tris in triangulations.items():
        for t in tris:
            for p in t:
                parent.setdefault((pid, p), (pid, p))

    for eid, gl in surface.gluings.items():
        w = placed[gl.white_polygon].sides[gl.white_side]
        if w.length.denominator != 1:
            raise MeshError(f"edge {eid} has non-integer length {w.length}")
        for t in range(int(w.length) + 1):
            pt = w.start + direction(w.direction).scale(t)
            a = (gl.white_polygon, pt)
            b = (gl.black_polygon, pt)
            if a not in parent or b not in parent:
                raise MeshError(f"edge {eid}: subdivision point {pt} missing from a triangulation")
            union(a, b)

    classes: dict[tuple[int, GridPoint], list[tuple[int, GridPoint]]] = {}
    for key in parent:
        classes.setdefault(find(key), []).append(key)
    roots = sorted(classes, key=lambda k: (k[1], k[0]))
    vid_of: dict[tuple[int, GridPoint], int] = {}
    positions = []
    for vid, root in enumerate(roots):
        members = classes[root]
        pts = {pt for _, pt in members}
        if len(pts) != 1:
            raise MeshError(f"identified vertices with distinct folded images {sorted(pts)[:2]}")
        for m in members:
            vid_of[m] = vid
        positions.append(root[1])

    surface_vertex = [-1] * len(positions)
    for b in surface.boundaries:
        ch = placed[b.vertex_id]
        for idx, fid in enumerate(b.corner_faces):
            surface_vertex[vid_of[(b.vertex_id, ch.corner_point(idx))]] = fid

    triangles = []
    colors = []
    for pid in sorted(triangulations):
        col = placed[pid].color
        for t in triangulations[pid]:
            triangles.append(tuple(sorted(vid_of[(pid, p)] for p in t)))
            colors.append(col)

    edge_count: dict[tuple[int, int], int] = {}
    for t in triangles:
        for a, b in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            edge_count[(a, b)] = edge_count.get((a, b), 0) + 1
    bad = [e for e, c in edge_count.items() if c != 2]
    if bad:
        raise MeshError(f"{len(bad)} edges not shared by exactly two triangles, e.g. {bad[0]}")
    edges = tuple(sorted(edge_count))

    degrees = [0] * len(positions)
    for a, b in edges:
        degrees[a] += 1
        degrees[b] += 1

    tri = ColoredTriangulation(tuple(positions), tuple(triangles), tuple(colors),
                               edges, tuple(degrees), tuple(surface_vertex))
    if tri.euler_characteristic() != 2:
        raise MeshError(f"Euler characteristic {tri.euler_characteristic()}, expected 2")
    hist = tri.degree_histogram()
    if hist.get(4, 0) != 6 or set(hist) - {4, 6}:
        raise MeshError(f"degree histogram {hist}, expected six 4s and the rest 6s")
    return tri


def four_color(tri: ColoredTriangulation, surface: RealizedSurface | None = None) -> ColoredTriangulation:
    """Proper 4-coloring by lattice residues of folded vertex images.

    Adjacent vertices differ by a unit direction, which is never in twice
    the lattice, so residue classes color properly; this is re-verified by
    a brute-force scan over all edges, as is the mod-3 balance of black and
    white triangles around every vertex.
    """
    colors = []
    for pt in tri.positions:
        if not pt.is_lattice_point():
            raise ColorError(f"folded vertex image {pt} is not a lattice point")
        colors.append(pt.color_class())
    for a, b in tri.edges:
        if colors[a] == colors[b]:
            raise ColorError(f"adjacent vertices {a}, {b} share color {colors[a]}")
    balance: dict[int, dict[str, int]] = {}
    for t, col in zip(tri.triangles, tri.triangle_colors):
        for v in t:
            balance.setdefault(v, {"white": 0, "black": 0})[col] += 1
    for v, counts in balance.items():
        if (counts["white"] - counts["black"]) % 3 != 0:
            raise ColorError(f"vertex {v}: {counts['white']} white vs {counts['black']} black triangles")
    return replace(tri, vertex_colors=tuple(colors))


def cone_point_coordinates(surface: RealizedSurface) -> tuple[GridPoint, ...]:
    """Folded coordinates of the six cone vertices, in face id order.

    The base flag's cone vertex sits at the origin.  For a fixed
    combinatorial type and flag these coordinates are linear in the edge
    length vector.
    """
    return tuple(surface.folded_vertex_image[f] for f in surface.cone_vertices)


# ---------------------------------------------------------------------------
# net development (proper isometries, for rendering)

@dataclass(frozen=True)
class NetTransform:
    rotation: int          # sixth turns
    shift: GridPoint
    mirrored: bool         # black charts are conjugated before placing

    def apply(self, pt: GridPoint) -> GridPoint:
        if self.mirrored:
            pt = pt.conj()
        return pt.rot(self.rotation) + self.shift


@dataclass(frozen=True)
class NetLayout:
    transforms: dict[int, NetTransform]
    points: dict[int, tuple[GridPoint, ...]]      # placed boundary chains
    tree_edges: tuple[int, ...]
    overlaps: tuple[tuple[int, int], ...]         # non-adjacent polygons with overlapping interiors


def develop_net(surface: RealizedSurface, tree: set[int] | None = None) -> NetLayout:
    """Lay the polygons out edge-to-edge with orientation-preserving maps.

    Black charts are reflected once, restoring their unfolded shape, and
    every gluing along the spanning tree becomes a rotation by sixth turns
    plus a translation; shared tree edges coincide exactly.  Overlaps
    between polygons not glued in the tree are detected and reported, not
    repaired.
    """
    placed = surface.placed
    adjacency: dict[int, list[tuple[int, int]]] = {pid: [] for pid in placed}
    for eid, gl in sorted(surface.gluings.items()):
        adjacency[gl.white_polygon].append((eid, gl.black_polygon))
        adjacency[gl.black_polygon].append((eid, gl.white_polygon))
    for lst in adjacency.values():
        lst.sort()

    def proper_side(pid: int, side_idx: int) -> SideRecord:
        s = placed[pid].sides[side_idx]
        if placed[pid].color == WHITE:
            return s
        return SideRecord(s.edge_id, s.start.conj(), (-s.direction) % 6, s.length)

    root = min(placed)
    transforms: dict[int, NetTransform] = {root: NetTransform(0, ORIGIN, placed[root].color != WHITE)}
    tree_edges: list[int] = []
    queue = [root]
    while queue:
        pid = queue.pop(0)
        for eid, other in adjacency[pid]:
            if other in transforms or (tree is not None and eid not in tree):
                continue
            gl = surface.gluings[eid]
            here = gl.white_side if pid == gl.white_polygon else gl.black_side
            there = gl.black_side if pid == gl.white_polygon else gl.white_side
            s_here = proper_side(pid, here)
            s_there = proper_side(other, there)
            t_here = transforms[pid]
            # the two polygons traverse the shared edge in opposite directions
            rot = (t_here.rotation + s_here.direction + 3 - s_there.direction) % 6
            mirrored = placed[other].color != WHITE
            target = s_here.start.rot(t_here.rotation) + t_here.shift + \
                direction((s_here.direction + t_here.rotation) % 6).scale(s_here.length)
            shift = target - s_there.start.rot(rot)
            transforms[other] = NetTransform(rot, shift, mirrored)
            tree_edges.append(eid)
            queue.append(other)
    if len(transforms) != len(placed):
        raise GluingError("net spanning tree does not reach every polygon")

    points: dict[int, tuple[GridPoint, ...]] = {}
    for pid, ch in placed.items():
        chain = ch.chain if ch.color == WHITE else tuple(p.conj() for p in ch.chain)
        t = transforms[pid]
        points[pid] = tuple(p.rot(t.rotation) + t.shift for p in chain)

    for eid in tree_edges:
        gl = surface.gluings[eid]
        sw = proper_side(gl.white_polygon, gl.white_side)
        sb = proper_side(gl.black_polygon, gl.black_side)
        tw, tb = transforms[gl.white_polygon], transforms[gl.black_polygon]
        a1 = sw.start.rot(tw.rotation) + tw.shift
        b1 = a1 + direction((sw.direction + tw.rotation) % 6).scale(sw.length)
        b2 = sb.start.rot(tb.rotation) + tb.shift
        a2 = b2 + direction((sb.direction + tb.rotation) % 6).scale(sb.length)
        if (a1, b1) != (a2, b2):
            raise GluingError(f"net tree edge {eid} fails to coincide")

    glued_pairs = {frozenset((gl.white_polygon, gl.black_polygon))
                   for eid, gl in surface.gluings.items() if eid in set(tree_edges)}
    overlaps = []
    pids = sorted(points)
    for i, p in enumerate(pids):
        for q in pids[i + 1:]:
            if frozenset((p, q)) in glued_pairs:
                continue
            if _interiors_overlap(points[p], points[q]):
                overlaps.append((p, q))
    return NetLayout(transforms, points, tuple(sorted(tree_edges)), tuple(overlaps))


def _interiors_overlap(pts_a, pts_b) -> bool:
    """Exact separating-axis test for convex polygons; touching is allowed."""
    def axes(pts):
        n = len(pts)
        for i in range(n):
            d = pts[(i + 1) % n] - pts[i]
            yield (d.x, d.y)

    for dx, dy in list(axes(pts_a)) + list(axes(pts_b)):
        # projection onto the normal of direction (dx, dy*sqrt3), scaled
        proj_a = [dx * p.y - dy * p.x for p in pts_a]
        proj_b = [dx * p.y - dy * p.x for p in pts_b]
        if max(proj_a) <= min(proj_b) or max(proj_b) <= min(proj_a):
            return False
    return True
