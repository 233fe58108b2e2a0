from fractions import Fraction

import pytest

from octacolor.grid import ORIGIN, GridPoint, direction, signed_triarea


def test_directions_are_sixth_roots():
    for k in range(6):
        assert direction(k).rot(1) == direction(k + 1)
        assert direction(k).rot(3) == -direction(k)
    assert direction(0) == GridPoint(Fraction(1), Fraction(0))


def test_rotation_closure_and_inverse():
    p = GridPoint(Fraction(3, 2), Fraction(-5, 2))
    for k in range(6):
        assert p.rot(k).rot(6 - k) == p
    assert p.rot(6) == p


def test_conjugation_reflects():
    p = GridPoint(Fraction(1, 2), Fraction(1, 2))
    assert p.conj() == GridPoint(Fraction(1, 2), Fraction(-1, 2))
    assert p.conj().conj() == p


def test_lattice_predicate():
    assert ORIGIN.is_lattice_point()
    assert GridPoint(Fraction(1), Fraction(0)).is_lattice_point()
    assert GridPoint(Fraction(1, 2), Fraction(1, 2)).is_lattice_point()
    assert not GridPoint(Fraction(1, 2), Fraction(0)).is_lattice_point()
    assert not GridPoint(Fraction(1, 3), Fraction(1, 3)).is_lattice_point()


def test_lattice_coords_roundtrip():
    for a in range(-3, 4):
        for b in range(-3, 4):
            p = direction(0).scale(a) + direction(1).scale(b)
            assert p.lattice_coords() == (a, b)


def test_color_classes_distinguish_unit_neighbors():
    for a in range(-2, 3):
        for b in range(-2, 3):
            p = direction(0).scale(a) + direction(1).scale(b)
            for k in range(6):
                q = p + direction(k)
                assert p.color_class() != q.color_class()


def test_lattice_coords_rejects_off_lattice():
    with pytest.raises(ValueError):
        GridPoint(Fraction(1, 3), Fraction(0)).lattice_coords()


def test_signed_triarea_unit_triangle():
    pts = [ORIGIN, direction(0), direction(1)]
    assert signed_triarea(pts) == 1
    assert signed_triarea(list(reversed(pts))) == -1


def test_signed_triarea_hexagon():
    pts = [ORIGIN]
    for k in range(5):
        pts.append(pts[-1] + direction(k))
    assert signed_triarea(pts) == 6
