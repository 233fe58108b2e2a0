"""The integral quadratic form on the cone of length assignments.

Each polygon contributes a six-slot form whose value on slot lengths is
2*sum(l_i*l_{i+1}) + sum(l_i*l_{i+2}) (indices cyclic); on a unit hexagon
that is 18, three times its six unit triangles, and the same three-to-one
area identity holds for every closed slot vector.  The stored matrices are
the doubled Gram matrices, keeping every entry an integer (adjacent slots
2, distance-two slots 1, diagonal and antipodal 0); form values halve the
matrix product, which is always integral because the diagonal is even.

Summing the per-polygon forms pushed to edge variables gives the global
form; restricting to the kernel of the closure system and diagonalizing by
exact rational congruence yields its signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .emg import EnhancedMultigraph
from .geometry import ColoredTriangulation
from .labeling import PolygonBoundary
from .shapesys import KernelBasis

# doubled Gram matrix of the six-slot form
SLOT_MATRIX: tuple[tuple[int, ...], ...] = tuple(
    tuple(2 if (i - j) % 6 in (1, 5) else 1 if (i - j) % 6 in (2, 4) else 0 for j in range(6))
    for i in range(6)
)


def slot_value(slot_lengths) -> Fraction:
    """Value of the six-slot form on a length-6 vector."""
    ell = [Fraction(x) for x in slot_lengths]
    total = sum(SLOT_MATRIX[i][j] * ell[i] * ell[j] for i in range(6) for j in range(6))
    return total / 2


@dataclass(frozen=True)
class PolygonForm:
    vertex_id: int
    matrix: tuple[tuple[int, ...], ...]  # doubled Gram matrix on edge variables
    col_edges: tuple[int, ...]

    def value(self, lengths):
        """Form value at an edge length vector (by edge id)."""
        vec = [Fraction(lengths[eid]) for eid in self.col_edges]
        total = sum(self.matrix[i][j] * vec[i] * vec[j]
                    for i in range(len(vec)) for j in range(len(vec)))
        half = total / 2
        return int(half) if half.denominator == 1 else half


@dataclass(frozen=True)
class QuadraticForm:
    global_matrix: tuple[tuple[int, ...], ...]   # doubled Gram matrix, E_b x E_b
    col_edges: tuple[int, ...]
    restricted: tuple[tuple[Fraction, ...], ...] | None = None
    signature: tuple[int, int, int] | None = None

    def value(self, lengths):
        vec = [Fraction(lengths[eid]) for eid in self.col_edges]
        n = len(vec)
        total = sum(self.global_matrix[i][j] * vec[i] * vec[j] for i in range(n) for j in range(n))
        half = total / 2
        return int(half) if half.denominator == 1 else half


def polygon_form(boundary: PolygonBoundary, col_edges) -> PolygonForm:
    """Six-slot form conjugated by the slot embedding, on edge variables.

    Zero slots drop out; a polygon meeting the same edge twice accumulates
    both contributions.
    """
    col_of = {eid: i for i, eid in enumerate(col_edges)}
    n = len(col_edges)
    m = [[0] * n for _ in range(n)]
    incident = list(zip(boundary.sides, boundary.slots))
    for e1, s1 in incident:
        for e2, s2 in incident:
            m[col_of[e1]][col_of[e2]] += SLOT_MATRIX[s1][s2]
    return PolygonForm(boundary.vertex_id, tuple(tuple(r) for r in m), tuple(col_edges))


def assemble_form(g: EnhancedMultigraph, boundaries: list[PolygonBoundary]) -> QuadraticForm:
    """Exact integer sum of the per-polygon forms."""
    col_edges = tuple(sorted(e.id for e in g.blue_edges()))
    n = len(col_edges)
    total = [[0] * n for _ in range(n)]
    for b in boundaries:
        pf = polygon_form(b, col_edges)
        for i in range(n):
            row = pf.matrix[i]
            for j in range(n):
                total[i][j] += row[j]
    return QuadraticForm(tuple(tuple(r) for r in total), col_edges)


def restrict_form(q: QuadraticForm, kernel: KernelBasis) -> QuadraticForm:
    """Exact congruence restriction to the kernel basis."""
    if kernel.dimension < 1:
        raise ValueError("kernel dimension must be at least 1")
    basis = [list(map(Fraction, v)) for v in kernel.basis]
    g = [list(map(Fraction, row)) for row in q.global_matrix]
    gk = linalg.mat_mul(g, linalg.transpose(basis))
    restricted = linalg.mat_mul(basis, gk)
    restricted_t = tuple(tuple(row) for row in restricted)
    return QuadraticForm(q.global_matrix, q.col_edges, restricted_t, signature(restricted_t))


def signature(matrix) -> tuple[int, int, int]:
    """Inertia (positives, negatives, zeros) of a symmetric rational matrix.

    Simultaneous row and column elimination with symmetric pivoting; when
    every remaining diagonal entry vanishes but some off-diagonal entry
    does not, a symmetric row/column addition creates a pivot (the rank-two
    hyperbolic step).  Sylvester's law makes the count independent of the
    pivot choices.  No eigenvalue numerics anywhere.
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise ValueError("matrix must be square")
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix must be symmetric")
    active = list(range(n))
    pos = neg = zero = 0
    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            # symmetric addition makes a[i][i] = 2*a[i][j] != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            pivot = i
        d = a[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        for i in active:
            if a[i][pivot] != 0:
                f = a[i][pivot] / d
                for k in range(n):
                    a[i][k] -= f * a[pivot][k]
                for k in range(n):
                    a[k][i] -= f * a[k][pivot]
    return pos, neg, zero


@dataclass(frozen=True)
class IdentityReport:
    form_value: int
    triangle_count: int
    triarea_total: Fraction
    holds: bool


def verify_triangle_identity(q: QuadraticForm, lengths,
                             tri: ColoredTriangulation,
                             triarea_total: Fraction) -> IdentityReport:
    """Check form value = 3 * triangle count = 3 * summed triangle-area.

    The triangle count comes from the glued mesh and the area total from
    the shoelace oracle, so the two right-hand sides are independent.
    """
    value = q.value(lengths)
    count = len(tri.triangles)
    holds = value == 3 * count and Fraction(value) == 3 * Fraction(triarea_total)
    return IdentityReport(value, count, Fraction(triarea_total), holds)
