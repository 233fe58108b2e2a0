"""Realize a lattice point: exact geometry, triangulation, 4-coloring.

A strictly positive integer point of the cone determines polygons on the
triangular grid.  Developing them through the folding map (orientation
preserving on white, reversing on black) glues them into a flat cone
sphere; cutting every polygon into unit triangles yields a sphere
triangulation with six degree-4 vertices, and lattice residues of the
folded vertex images give a proper 4-coloring.  Writes net.svg alongside.
"""

import pathlib

from octacolor import (assemble_form, assign_labels, build_constraints,
                       build_triangulation, cone_point_coordinates,
                       develop_net, develop_surface, enumerate_lattice_points,
                       extreme_rays, four_color, gen_spiral, kernel_basis,
                       lattice_basis, polygon_boundaries, realize_polygons,
                       restrict_form, restrict_to_kernel, triarea,
                       verify_triangle_identity)
from octacolor.svg import render_net

graph = gen_spiral(3)
boundaries = polygon_boundaries(graph)
labels = assign_labels(graph, boundaries)
kernel = kernel_basis(build_constraints(graph, boundaries, labels))
cone = extreme_rays(restrict_to_kernel(kernel))
lattice = lattice_basis(kernel)

points = [p for p in enumerate_lattice_points(cone, lattice, 3) if p.strictly_positive]
vector = points[0].vector
lengths = dict(zip(kernel.col_edges, vector))
print(f"realizing edge lengths {vector}")

charts = realize_polygons(graph, boundaries, labels, lengths)
surface = develop_surface(graph, boundaries, charts)
print(f"cone vertices (two polygons meet): {surface.cone_vertices}")
print(f"regular vertices (four polygons meet): {surface.regular_vertices}")
print("folded cone point coordinates (x, y*sqrt3):")
for c in cone_point_coordinates(surface):
    print(f"  ({c.x}, {c.y})")

tri = four_color(build_triangulation(surface), surface)
print(f"\nglued triangulation: {tri.n_vertices} vertices, {len(tri.edges)} edges, "
      f"{len(tri.triangles)} triangles")
print(f"degree histogram: {tri.degree_histogram()}  (six 4s: the cone points)")
print(f"vertex colors: {tri.vertex_colors}")

form = restrict_form(assemble_form(graph, boundaries), kernel)
areas = sum(triarea(ch.chain) for ch in surface.placed.values())
identity = verify_triangle_identity(form, lengths, tri, areas)
print(f"\nquadratic form value {identity.form_value} = 3 * {identity.triangle_count} triangles: "
      f"{identity.holds}")

net = develop_net(surface)
print(f"\nnet layout: tree edges {net.tree_edges}, overlaps {net.overlaps or 'none'}")
out = pathlib.Path(__file__).with_name("net.svg")
out.write_text(render_net(graph, surface, net, triangles=True, vertex_colors=True))
print(f"wrote {out}")
