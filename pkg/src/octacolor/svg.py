"""Deterministic SVG emission for nets, triangulations, and colorings.

Exact grid points convert to floats only here, at the last moment.  Output
bytes are a pure function of the scene: fixed float formatting, fixed
element order, viewport computed from the exact bounding box with five
percent padding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .emg import WHITE, EnhancedMultigraph
from .geometry import NetLayout, RealizedSurface, unit_triangulate
from .grid import GridPoint

SQRT3 = 3 ** 0.5

FILL_WHITE = "#FFFFFF"
FILL_BLACK = "#202020"
EDGE_STROKE = "#303030"
TRIANGLE_STROKE = "#9A9A9A"
BLUE_EDGE = "#1565C0"
RED_EDGE = "#C62828"
VERTEX_PALETTE = ("#E63946", "#2A9D8F", "#E9C46A", "#6D3FC0")


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def _xy(p: GridPoint) -> tuple[float, float]:
    # SVG y grows downward; flip so the upper half plane renders upward
    return float(p.x), -float(p.y) * SQRT3


@dataclass
class SvgScene:
    elements: list[str] = field(default_factory=list)
    min_x: float | None = None
    min_y: float | None = None
    max_x: float | None = None
    max_y: float | None = None

    def _grow(self, x: float, y: float) -> None:
        self.min_x = x if self.min_x is None else min(self.min_x, x)
        self.max_x = x if self.max_x is None else max(self.max_x, x)
        self.min_y = y if self.min_y is None else min(self.min_y, y)
        self.max_y = y if self.max_y is None else max(self.max_y, y)

    def polygon(self, points, fill: str, stroke: str = EDGE_STROKE, width: float = 0.03) -> None:
        coords = []
        for p in points:
            x, y = _xy(p)
            self._grow(x, y)
            coords.append(f"{_fmt(x)},{_fmt(y)}")
        self.elements.append(
            f'<polygon points="{" ".join(coords)}" fill="{fill}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}"/>')

    def polyline(self, points, stroke: str, width: float = 0.05) -> None:
        coords = []
        for p in points:
            x, y = _xy(p)
            self._grow(x, y)
            coords.append(f"{_fmt(x)},{_fmt(y)}")
        self.elements.append(
            f'<polyline points="{" ".join(coords)}" fill="none" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}" stroke-linecap="round"/>')

    def circle(self, center: GridPoint, radius: float, fill: str) -> None:
        x, y = _xy(center)
        self._grow(x - radius, y - radius)
        self._grow(x + radius, y + radius)
        self.elements.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" fill="{fill}"/>')

    def render(self) -> str:
        if self.min_x is None:
            self.min_x = self.min_y = 0.0
            self.max_x = self.max_y = 1.0
        w = self.max_x - self.min_x or 1.0
        h = self.max_y - self.min_y or 1.0
        pad = 0.05 * max(w, h)
        view = (f"{_fmt(self.min_x - pad)} {_fmt(self.min_y - pad)} "
                f"{_fmt(w + 2 * pad)} {_fmt(h + 2 * pad)}")
        header = (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}" '
                  f'width="{_fmt(100 * (w + 2 * pad))}" height="{_fmt(100 * (h + 2 * pad))}">')
        return "\n".join([header, *self.elements, "</svg>"]) + "\n"


def _centroid(points) -> GridPoint:
    n = len(points)
    return GridPoint(sum((p.x for p in points), Fraction(0)) / n,
                     sum((p.y for p in points), Fraction(0)) / n)


def _between(a: GridPoint, b: GridPoint, t: Fraction) -> GridPoint:
    return a + (b - a).scale(t)


def render_net(g: EnhancedMultigraph, surface: RealizedSurface, net: NetLayout,
               triangles: bool = False, vertex_colors: bool = False,
               overlay_dual: bool = False) -> str:
    """SVG of the net layout with optional unit-triangle grid, 4-coloring
    dots, and a red/blue overlay of the underlying multigraph."""
    scene = SvgScene()
    placed = surface.placed
    for pid in sorted(net.points):
        fill = FILL_WHITE if placed[pid].color == WHITE else FILL_BLACK
        scene.polygon(net.points[pid], fill)
    if triangles:
        for pid in sorted(net.points):
            t = net.transforms[pid]
            for tri in unit_triangulate(placed[pid]):
                scene.polygon([t.apply(p) for p in tri], "none", TRIANGLE_STROKE, 0.012)
    if overlay_dual:
        _overlay_dual(scene, g, surface, net)
    if vertex_colors:
        _vertex_dots(scene, surface, net)
    return scene.render()


def _overlay_dual(scene: SvgScene, g: EnhancedMultigraph, surface: RealizedSurface,
                  net: NetLayout) -> None:
    """Blue arcs run from each polygon center across the middle of the side
    they cross; the two halves coincide exactly on tree-glued edges.  Red
    arcs hug the blue edge they run parallel to, offset into the polygon."""
    placed = surface.placed
    centers = {pid: _centroid(net.points[pid]) for pid in net.points}
    side_of: dict[tuple[int, int], int] = {}
    for pid, ch in placed.items():
        for idx, s in enumerate(ch.sides):
            side_of[(pid, s.edge_id)] = idx

    def chart_mid(pid: int, eid: int, pull: Fraction) -> GridPoint:
        s = placed[pid].sides[side_of[(pid, eid)]]
        mid = _between(s.start, s.end, Fraction(1, 2))
        mid = _between(mid, _chart_centroid(placed[pid]), pull)
        return net.transforms[pid].apply(mid)

    for e in sorted(g.blue_edges(), key=lambda e: e.id):
        for pid in (surface.gluings[e.id].white_polygon, surface.gluings[e.id].black_polygon):
            scene.polyline([centers[pid], chart_mid(pid, e.id, Fraction(0))], BLUE_EDGE, 0.04)
    for e in sorted(g.red_edges(), key=lambda e: e.id):
        partners = [b for b in g.blue_edges() if {b.a, b.b} == {e.a, e.b}]
        if not partners:
            continue
        eid = partners[0].id
        for pid in (surface.gluings[eid].white_polygon, surface.gluings[eid].black_polygon):
            scene.polyline([centers[pid], chart_mid(pid, eid, Fraction(1, 5))], RED_EDGE, 0.03)


def _chart_centroid(chart) -> GridPoint:
    return _centroid(chart.chain)


def _vertex_dots(scene: SvgScene, surface: RealizedSurface, net: NetLayout) -> None:
    """One dot per triangulation vertex instance, colored by lattice residue
    of its folded image (shared vertices repeat with the same color)."""
    for pid in sorted(net.points):
        chart = surface.placed[pid]
        t = net.transforms[pid]
        seen: set[GridPoint] = set()
        for tri in unit_triangulate(chart):
            for p in tri:
                if p in seen or not p.is_lattice_point():
                    continue
                seen.add(p)
                scene.circle(t.apply(p), 0.09, VERTEX_PALETTE[p.color_class()])
