import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from octacolor.cone import enumerate_lattice_points, extreme_rays, lattice_basis, restrict_to_kernel
from octacolor.geometry import (build_triangulation, develop_surface,
                                four_color, realize_polygons, triarea)
from octacolor.labeling import assign_labels, polygon_boundaries
from octacolor.qform import (SLOT_MATRIX, assemble_form, polygon_form,
                             restrict_form, signature, slot_value,
                             verify_triangle_identity)
from octacolor.shapesys import KernelBasis, build_constraints, kernel_basis


def test_slot_matrix_structure():
    for i in range(6):
        assert SLOT_MATRIX[i][i] == 0
        assert SLOT_MATRIX[i][(i + 3) % 6] == 0
        assert SLOT_MATRIX[i][(i + 1) % 6] == 2
        assert SLOT_MATRIX[i][(i + 2) % 6] == 1


def test_unit_hexagon_value_is_18():
    assert slot_value((1, 1, 1, 1, 1, 1)) == 18


def test_triangle_slots_give_three_s_squared():
    for s in range(1, 11):
        assert slot_value((s, 0, s, 0, s, 0)) == 3 * s * s


def test_parallelogram_slots_give_six_ab():
    for a in range(1, 5):
        for b in range(1, 5):
            assert slot_value((a, 0, b, a, 0, b)) == 6 * a * b


def test_slot_value_invariant_under_rotation_and_reflection():
    ell = (1, 2, 3, 4, 5, 6)
    base = slot_value(ell)
    for r in range(6):
        rotated = tuple(ell[(i + r) % 6] for i in range(6))
        assert slot_value(rotated) == base
    assert slot_value(tuple(reversed(ell))) == base


def test_polygon_form_accumulates_per_polygon(hexpair):
    bnds = polygon_boundaries(hexpair)
    col_edges = tuple(range(6))
    white = polygon_form(bnds[0], col_edges)
    assert white.value({e: 1 for e in range(6)}) == 18


def test_assemble_doubles_shared_hexagon(hexpair):
    # both polygons use every edge, so the global form is twice one hexagon
    bnds = polygon_boundaries(hexpair)
    qf = assemble_form(hexpair, bnds)
    ones = {e: 1 for e in range(6)}
    assert qf.value(ones) == 36
    white = polygon_form(bnds[0], qf.col_edges)
    black = polygon_form(bnds[1], qf.col_edges)
    assert qf.value(ones) == white.value(ones) + black.value(ones)


def test_global_matrix_is_symmetric_integer(spiral3):
    bnds = polygon_boundaries(spiral3)
    qf = assemble_form(spiral3, bnds)
    m = qf.global_matrix
    assert len(m) == 14
    for i in range(14):
        for j in range(14):
            assert m[i][j] == m[j][i]
            assert isinstance(m[i][j], int)


def test_per_polygon_value_is_three_triareas(spiral3):
    # slot-form value = 3 * area in unit triangles, per polygon, exactly
    bnds = polygon_boundaries(spiral3)
    labels = assign_labels(spiral3, bnds)
    kb = kernel_basis(build_constraints(spiral3, bnds, labels))
    cd = extreme_rays(restrict_to_kernel(kb))
    rng = random.Random(5)
    rays = [list(r) for r in cd.extreme_rays]
    basis = [list(b) for b in kb.basis]
    for _ in range(10):
        coeffs = [rng.randrange(1, 5) for _ in rays]
        kvec = [sum(c * r[i] for c, r in zip(coeffs, rays)) for i in range(kb.dimension)]
        edge_vec = [sum(k * b[i] for k, b in zip(kvec, basis)) for i in range(14)]
        if any(x <= 0 for x in edge_vec):
            continue
        lengths = dict(zip(kb.col_edges, edge_vec))
        charts = realize_polygons(spiral3, bnds, labels, lengths)
        for b in bnds:
            pf = polygon_form(b, kb.col_edges)
            assert pf.value(lengths) == 3 * triarea(charts[b.vertex_id].chain)


def test_slot_value_is_three_areas_for_rational_sides():
    # the 3-to-1 area identity holds for rational side lengths too
    from octacolor.geometry import triarea
    from octacolor.grid import ORIGIN, direction
    for a, b, c in [(Fraction(1, 2), Fraction(3, 2), Fraction(2, 3)),
                    (Fraction(5, 4), Fraction(1, 4), Fraction(7, 3))]:
        ell = (a, b, c, a, b, c)
        pts = [ORIGIN]
        for k in range(5):
            pts.append(pts[-1] + direction(k).scale(ell[k]))
        assert slot_value(ell) == 3 * triarea(pts)


def test_restrict_full_space_is_identity_transform():
    from octacolor.qform import QuadraticForm
    m = ((0, 2), (2, 0))
    kb = KernelBasis(((1, 0), (0, 1)), 0, 2, (0, 1))
    qf = restrict_form(QuadraticForm(m, (0, 1)), kb)
    assert qf.restricted == ((Fraction(0), Fraction(2)), (Fraction(2), Fraction(0)))


def test_restrict_one_dimensional():
    from octacolor.qform import QuadraticForm
    m = ((2, 0), (0, 4))
    kb = KernelBasis(((1, 2),), 1, 1, (0, 1))
    qf = restrict_form(QuadraticForm(m, (0, 1)), kb)
    assert qf.restricted == ((Fraction(18),),)
    assert qf.signature == (1, 0, 0)


def test_signature_diagonal_cases():
    assert signature([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]) == (1, 3, 0)
    assert signature([[0, 0], [0, 0]]) == (0, 0, 2)


def test_signature_hyperbolic_plane():
    assert signature([[0, 1], [1, 0]]) == (1, 1, 0)


def test_signature_spiral_restriction(spiral3):
    bnds = polygon_boundaries(spiral3)
    labels = assign_labels(spiral3, bnds)
    kb = kernel_basis(build_constraints(spiral3, bnds, labels))
    qf = restrict_form(assemble_form(spiral3, bnds), kb)
    assert qf.signature == (1, 3, 0)


def test_signature_invariant_under_kernel_basis_change(spiral3):
    bnds = polygon_boundaries(spiral3)
    labels = assign_labels(spiral3, bnds)
    kb = kernel_basis(build_constraints(spiral3, bnds, labels))
    qf = assemble_form(spiral3, bnds)
    sig1 = restrict_form(qf, kb).signature
    # a second canonical basis: the saturated lattice basis of the kernel
    lb = lattice_basis(kb)
    kb2 = KernelBasis(lb.vectors, kb.rank, kb.dimension, kb.col_edges)
    sig2 = restrict_form(qf, kb2).signature
    assert sig1 == sig2 == (1, 3, 0)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_signature_invariant_under_congruence(seed):
    rng = random.Random(seed)
    n = rng.randrange(2, 5)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randrange(-4, 5)
    base = signature(m)
    # random unimodular congruence: shears and swaps
    t = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(6):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            c = rng.randrange(-2, 3)
            for k in range(n):
                t[i][k] += c * t[j][k]
    from octacolor import linalg
    tm = linalg.mat_mul([list(map(Fraction, r)) for r in t], [list(map(Fraction, r)) for r in m])
    tmt = linalg.mat_mul(tm, linalg.transpose([list(map(Fraction, r)) for r in t]))
    assert signature(tmt) == base


def test_homogeneity_of_identity(spiral3):
    bnds = polygon_boundaries(spiral3)
    labels = assign_labels(spiral3, bnds)
    kb = kernel_basis(build_constraints(spiral3, bnds, labels))
    cd = extreme_rays(restrict_to_kernel(kb))
    lb = lattice_basis(kb)
    pts = [p for p in enumerate_lattice_points(cd, lb, 2) if p.strictly_positive]
    qf = restrict_form(assemble_form(spiral3, bnds), kb)
    v = pts[0].vector
    lengths = dict(zip(kb.col_edges, v))
    doubled = dict(zip(kb.col_edges, (2 * x for x in v)))
    assert qf.value(doubled) == 4 * qf.value(lengths)
    charts = realize_polygons(spiral3, bnds, labels, doubled)
    surf = develop_surface(spiral3, bnds, charts)
    tri = four_color(build_triangulation(surf), surf)
    areas = sum(triarea(ch.chain) for ch in surf.placed.values())
    rep = verify_triangle_identity(qf, doubled, tri, areas)
    assert rep.holds
