import pytest

from octacolor.emg import BLACK, BLUE, WHITE, Edge, EnhancedMultigraph, Vertex, check_well_formed
from octacolor.families import gen_spiral


def hexagon_pair() -> EnhancedMultigraph:
    """Two unit-hexagon polygons glued along all six sides (six bigons)."""
    verts = (Vertex(0, WHITE), Vertex(1, BLACK))
    edges = tuple(Edge(i, 0, 1, BLUE) for i in range(6))
    rot0 = tuple((i, 0) for i in range(6))
    rot1 = tuple((i, 1) for i in [0, 5, 4, 3, 2, 1])
    g = EnhancedMultigraph(verts, edges, ((0, rot0), (1, rot1)))
    check_well_formed(g)
    return g


@pytest.fixture(scope="session")
def hexpair():
    return hexagon_pair()


@pytest.fixture(scope="session")
def spiral3():
    return gen_spiral(3)


@pytest.fixture(scope="session")
def spiral4():
    return gen_spiral(4)
