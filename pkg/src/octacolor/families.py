"""Procedural families of enhanced multigraphs, plus bundled instances.

The spiral family starts from a cell division of the sphere into
quadrilaterals built by wrapping squares around a seed square, one corner
at a time.  The wrap order gives a clean combinatorial description: on
vertices 0..2k-1 the blue skeleton consists of the path edges (v, v+1) and
the chord edges (v, v-3).  Every completion to a full instance adds six
parallel blue edges (each creating one bigon, the six cone points) and one
red edge per quadrilateral, marking its acute corners.

Where exactly the six completing edges go is not determined by the counts
alone, so the generator runs a deterministic backtracking search over red
placements and parallel doublings, gated by full validation: plausibility,
a consistent direction labelling, kernel dimension four, and a strictly
positive solution.  The first completion in canonical order wins, making
the output reproducible byte for byte; if no completion validates, the
failure surfaces as ConstructionError rather than a patched variant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .cone import extreme_rays, restrict_to_kernel
from .emg import (BLACK, BLUE, RED, WHITE, Dart, Edge, EnhancedMultigraph,
                  Vertex, check_well_formed, opposite, parse_emg, trace_faces,
                  validate_plausible)
from .labeling import HolonomyError, assign_labels, polygon_boundaries
from .shapesys import build_constraints, kernel_basis


class ConstructionError(RuntimeError):
    """No validated completion exists for the requested family member."""


@dataclass(frozen=True)
class FamilySpec:
    """A procedural family member request; only the spiral family exists."""
    family_id: str
    k: int

    def __post_init__(self):
        if self.family_id != "spiral":
            raise ValueError(f"unknown family {self.family_id!r}")
        if self.k < 3:
            raise ValueError("spiral parameter must be at least 3")

    def generate(self) -> "EnhancedMultigraph":
        return gen_spiral(self.k)


# ---------------------------------------------------------------------------
# spiral quadrangulation

def _spiral_cell(k: int) -> EnhancedMultigraph:
    """Blue skeleton of the spiral cell division on 2k vertices.

    Square 0-1-2-3, then wrap step s (s = 0..2k-5) walls vertex s in behind
    a new quadrilateral (s+1, s, s+3, s+4), adding vertex s+4 and the edges
    (s+3, s+4), (s+4, s+1).  Rotations are maintained so the result is the
    oriented sphere embedding.
    """
    n = 2 * k
    edges: list[Edge] = [Edge(0, 0, 1, BLUE), Edge(1, 1, 2, BLUE), Edge(2, 2, 3, BLUE), Edge(3, 3, 0, BLUE)]
    edge_at: dict[frozenset, int] = {frozenset((0, 1)): 0, frozenset((1, 2)): 1,
                                     frozenset((2, 3)): 2, frozenset((3, 0)): 3}

    def dart_from(v: int, w: int) -> Dart:
        e = edges[edge_at[frozenset((v, w))]]
        return (e.id, 0 if e.a == v else 1)

    rot: dict[int, list[Dart]] = {
        0: [dart_from(0, 1), dart_from(0, 3)],
        1: [dart_from(1, 2), dart_from(1, 0)],
        2: [dart_from(2, 3), dart_from(2, 1)],
        3: [dart_from(3, 0), dart_from(3, 2)],
    }
    for s in range(2 * k - 4):
        x, p, q, new = s, s + 3, s + 1, s + 4
        e_pn = Edge(len(edges), p, new, BLUE)
        edges.append(e_pn)
        edge_at[frozenset((p, new))] = e_pn.id
        e_nq = Edge(len(edges), new, q, BLUE)
        edges.append(e_nq)
        edge_at[frozenset((new, q))] = e_nq.id

        at_p = rot[p].index(dart_from(p, x))
        rot[p].insert(at_p + 1, dart_from(p, new))
        at_q = rot[q].index(dart_from(q, x))
        rot[q].insert(at_q, dart_from(q, new))
        rot[new] = [dart_from(new, q), dart_from(new, p)]

    vertices = tuple(Vertex(v, WHITE if v % 2 == 0 else BLACK) for v in range(n))
    g = EnhancedMultigraph(vertices, tuple(edges),
                           tuple((v, tuple(rot[v])) for v in range(n)))
    check_well_formed(g)
    return g


# ---------------------------------------------------------------------------
# completion search

def _is_nice(g: EnhancedMultigraph) -> bool:
    if not validate_plausible(g).plausible:
        return False
    try:
        boundaries = polygon_boundaries(g)
        labels = assign_labels(g, boundaries)
    except (HolonomyError, ValueError):
        return False
    system = build_constraints(g, boundaries, labels)
    kernel = kernel_basis(system)
    if kernel.dimension != 4 or kernel.rank != system.n_cols - 4:
        return False
    cd = extreme_rays(restrict_to_kernel(kernel))
    return bool(cd.has_positive_point)


def _complete_cell(cell: EnhancedMultigraph) -> EnhancedMultigraph | None:
    faces = trace_faces(cell, colors=(BLUE,))
    emap = cell.edge_map()
    rot_of = cell.rotation_map()
    face_list = [f for f in faces.faces]
    deficits = {vid: 6 - len(rot) for vid, rot in cell.rotations}

    face_edge_choices: list[list[int]] = []
    for f in face_list:
        seen: list[int] = []
        for eid in f.edge_ids():
            if eid not in seen:
                seen.append(eid)
        face_edge_choices.append(seen)

    incident_after: list[dict[int, int]] = [dict() for _ in range(len(face_list) + 1)]
    # incident_after[i][v]: faces with index >= i that can still place a red end at v
    counts: dict[int, int] = {}
    for i in range(len(face_list) - 1, -1, -1):
        touched = {v for eid in face_edge_choices[i] for v in emap[eid].endpoints}
        for v in touched:
            counts[v] = counts.get(v, 0) + 1
        incident_after[i] = dict(counts)

    used_r = {vid: 0 for vid in deficits}
    reds: list[int] = []

    def feasible(i: int) -> bool:
        short = 0
        for v, d in deficits.items():
            future = incident_after[i].get(v, 0) if i < len(face_list) else 0
            lower = d - used_r[v] - future
            if lower > 0:
                short += lower
        return short <= 12

    def stage2(p: dict[int, int]):
        """Multisets of 6 parallel doublings with endpoint degree vector p."""
        edge_ids = [eid for eid in sorted(emap)
                    if p[emap[eid].a] > 0 and p[emap[eid].b] > 0]

        def rec(idx: int, remaining: int, rem: dict[int, int]):
            if remaining == 0:
                if all(x == 0 for x in rem.values()):
                    yield []
                return
            if idx == len(edge_ids):
                return
            eid = edge_ids[idx]
            a, b = emap[eid].endpoints
            cap = min(rem[a], rem[b], remaining)
            for m in range(cap, -1, -1):
                rem[a] -= m
                rem[b] -= m
                for rest in rec(idx + 1, remaining - m, rem):
                    yield [eid] * m + rest
                rem[a] += m
                rem[b] += m

        yield from rec(0, 6, dict(p))

    def sides_of(eid: int) -> list[int]:
        d0 = (eid, 0)
        f_out = next(f.id for f in face_list if d0 in f.darts)
        f_in = faces.face_of_corner()[d0]
        return sorted({f_out, f_in})

    def stage3(doubles: list[int]):
        groups = [(eid, sum(1 for x in doubles if x == eid)) for eid in sorted(set(doubles))]
        options = [list(itertools.combinations_with_replacement(sides_of(eid), m)) for eid, m in groups]
        for combo in itertools.product(*options):
            assignment: list[tuple[int, int]] = []
            for (eid, _), side_choice in zip(groups, combo):
                assignment.extend((eid, fid) for fid in side_choice)
            yield assignment

    neighbors: dict[int, set[int]] = {vid: set() for vid, _ in cell.rotations}
    for e in cell.edges:
        neighbors[e.a].add(e.b)
        neighbors[e.b].add(e.a)

    def stage1(i: int):
        if i == len(face_list):
            p = {v: deficits[v] - used_r[v] for v in deficits}
            if any(x < 0 for x in p.values()) or sum(p.values()) != 12:
                return None
            # every doubling end needs a partner end across an existing edge
            if any(x > 0 and all(p[w] == 0 for w in neighbors[v]) for v, x in p.items()):
                return None
            for doubles in stage2(p):
                for assignment in stage3(doubles):
                    red_choice = {face_list[j].id: reds[j] for j in range(len(reds))}
                    g = _apply_completion(cell, faces, red_choice, assignment)
                    if _is_nice(g):
                        return g
            return None
        for eid in face_edge_choices[i]:
            a, b = emap[eid].endpoints
            if used_r[a] + 1 > deficits[a] or used_r[b] + 1 > deficits[b]:
                continue
            used_r[a] += 1
            used_r[b] += 1
            reds.append(eid)
            if feasible(i + 1):
                found = stage1(i + 1)
                if found is not None:
                    return found
            reds.pop()
            used_r[a] -= 1
            used_r[b] -= 1
        return None

    return stage1(0)


def _apply_completion(cell: EnhancedMultigraph, faces, red_choice: dict[int, int],
                      doubles: list[tuple[int, int]]) -> EnhancedMultigraph:
    """Insert parallel blue doubles and per-face red edges into the cell.

    A double of edge e on the side of face F slips in next to e, making a
    bigon; the red edge of F attaches beyond the outermost copy on F's
    side, so its darts stay adjacent to the blue edge bounding the final
    quadrilateral.
    """
    emap = cell.edge_map()
    corner_owner = faces.face_of_corner()
    out_face: dict[Dart, int] = {}
    for f in faces.faces:
        for d in f.darts:
            out_face[d] = f.id

    after: dict[Dart, list[Dart]] = {}
    before: dict[Dart, list[Dart]] = {}
    new_edges: list[Edge] = []
    next_id = max(emap) + 1

    def attach(eid: int, fid: int, new_dart_maker):
        e = emap[eid]
        for end, vid in ((0, e.a), (1, e.b)):
            d = (eid, end)
            new_dart = new_dart_maker(end)
            if corner_owner[d] == fid:
                after.setdefault(d, []).append(new_dart)
            elif out_face[d] == fid:
                before.setdefault(d, []).insert(0, new_dart)
            else:
                raise ConstructionError(f"face {fid} is not a side of edge {eid}")

    for eid, fid in sorted(doubles):
        copy = Edge(next_id, emap[eid].a, emap[eid].b, BLUE)
        next_id += 1
        new_edges.append(copy)
        attach(eid, fid, lambda end, cid=copy.id: (cid, end))
    for fid in sorted(red_choice):
        eid = red_choice[fid]
        red = Edge(next_id, emap[eid].a, emap[eid].b, RED)
        next_id += 1
        new_edges.append(red)
        attach(eid, fid, lambda end, rid=red.id: (rid, end))

    rotations = []
    for vid, rot in cell.rotations:
        new_rot: list[Dart] = []
        for d in rot:
            new_rot.extend(before.get(d, []))
            new_rot.append(d)
            new_rot.extend(after.get(d, []))
        rotations.append((vid, tuple(new_rot)))

    g = EnhancedMultigraph(cell.vertices, cell.edges + tuple(new_edges), tuple(rotations))
    check_well_formed(g)
    return g


@lru_cache(maxsize=None)
def gen_spiral(k: int) -> EnhancedMultigraph:
    """Spiral family member on 2k polygons; deterministic for each k.

    Raises ConstructionError when no completion passes the validation gate,
    rather than inventing a variant.
    """
    if k < 3:
        raise ValueError("spiral parameter must be at least 3")
    cell = _spiral_cell(k)
    g = _complete_cell(cell)
    if g is None:
        raise ConstructionError(f"no validated completion for spiral k={k}")
    return g


# ---------------------------------------------------------------------------
# bundled instances

_BUNDLED = {
    "hexagon-pair": "hexagon-pair.emg",
    "spiral-6": "spiral-6.emg",
    "spiral-8": "spiral-8.emg",
    "spiral-10": "spiral-10.emg",
}


def bundled_names() -> list[str]:
    return sorted(_BUNDLED)


def load_bundled(name: str) -> EnhancedMultigraph:
    """Parse one of the instances shipped with the package."""
    if name not in _BUNDLED:
        raise KeyError(f"unknown bundled instance {name!r}; known: {bundled_names()}")
    text = resources.files(__package__).joinpath("data", _BUNDLED[name]).read_text()
    return parse_emg(text)


# ---------------------------------------------------------------------------
# orientation-preserving isomorphism (for registry checks)

def isomorphic(g1: EnhancedMultigraph, g2: EnhancedMultigraph) -> bool:
    """Color- and orientation-preserving isomorphism of embedded multigraphs."""
    if len(g1.edges) != len(g2.edges) or len(g1.vertices) != len(g2.vertices):
        return False
    return _canonical_certificate(g1) == _canonical_certificate(g2)


def _canonical_certificate(g: EnhancedMultigraph):
    return min(_certificate(g, (e.id, end)) for e in g.edges for end in (0, 1))


def _certificate(g: EnhancedMultigraph, start: Dart):
    emap = g.edge_map()
    vmap = g.vertex_map()
    succ: dict[Dart, Dart] = {}
    for vid, rot in g.rotations:
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % len(rot)]
    index: dict[Dart, int] = {start: 0}
    order = [start]
    pos = 0
    while pos < len(order):
        d = order[pos]
        for nxt in (succ[d], opposite(d)):
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
        pos += 1
    cert = []
    for d in order:
        e = emap[d[0]]
        cert.append((index[succ[d]], index[opposite(d)], e.color, vmap[e.endpoint(d[1])].color))
    return tuple(cert)
