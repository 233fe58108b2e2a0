import pytest

from octacolor.emg import render_emg, validate_plausible
from octacolor.families import (bundled_names, gen_spiral, isomorphic,
                                load_bundled, _spiral_cell)
from octacolor.labeling import assign_labels, polygon_boundaries
from octacolor.shapesys import build_constraints, kernel_basis


def test_spiral_cell_structure():
    cell = _spiral_cell(3)
    assert len(cell.vertices) == 6
    assert len(cell.edges) == 8
    from octacolor.emg import trace_faces, BLUE
    faces = trace_faces(cell, colors=(BLUE,))
    assert all(f.kind == "quadrilateral" for f in faces.faces)
    assert len(faces.faces) == 4


def test_spiral3_counts(spiral3):
    rep = validate_plausible(spiral3)
    assert rep.plausible
    assert rep.counts["V"] == 6
    assert rep.counts["E_b"] == 14
    assert rep.counts["E_red"] == 4


def test_spiral4_counts(spiral4):
    rep = validate_plausible(spiral4)
    assert rep.plausible
    assert rep.counts["V"] == 8
    assert rep.counts["E_b"] == 18


def test_spiral_generation_deterministic():
    gen_spiral.cache_clear()
    a = render_emg(gen_spiral(3))
    gen_spiral.cache_clear()
    b = render_emg(gen_spiral(3))
    assert a == b


def test_spiral_rejects_small_k():
    with pytest.raises(ValueError):
        gen_spiral(2)


def test_family_spec_yields_2k_polygons():
    from octacolor.families import FamilySpec
    for k in (3, 4):
        assert len(FamilySpec("spiral", k).generate().vertices) == 2 * k
    with pytest.raises(ValueError):
        FamilySpec("checkerboard", 3)
    with pytest.raises(ValueError):
        FamilySpec("spiral", 2)


def test_spiral_small_range_fully_nice():
    for k in (3, 4, 5):
        g = gen_spiral(k)
        assert validate_plausible(g).plausible
        bnds = polygon_boundaries(g)
        labels = assign_labels(g, bnds)
        kb = kernel_basis(build_constraints(g, bnds, labels))
        assert kb.dimension == 4
        assert kb.rank == len(kb.col_edges) - 4


def test_bundled_registry():
    assert "spiral-6" in bundled_names()
    with pytest.raises(KeyError):
        load_bundled("no-such-instance")


def test_bundled_all_plausible():
    for name in bundled_names():
        g = load_bundled(name)
        assert validate_plausible(g).plausible, name


def test_bundled_spiral6_matches_generator(spiral3):
    g = load_bundled("spiral-6")
    assert g != spiral3  # different labels on disk
    assert isomorphic(g, spiral3)


def test_isomorphism_distinguishes(hexpair, spiral3):
    assert isomorphic(hexpair, hexpair)
    assert not isomorphic(hexpair, spiral3)
