"""The cone of consistent positive length assignments.

In kernel coordinates the nonnegativity of every edge length becomes an
integer inequality system B x >= 0 with one row per blue edge.  This module
computes the extreme rays of such cones by the double description method in
exact rational arithmetic, an integer basis of the lattice of integer kernel
points (saturated, so it spans every integer solution), and an exhaustive
enumeration of the lattice points with bounded edge lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .shapesys import KernelBasis


class EnumerationBudgetError(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"lattice enumeration exceeded the budget of {budget} candidates")
        self.budget = budget


@dataclass(frozen=True)
class ConeDescription:
    inequalities: tuple[tuple[int, ...], ...]  # rows: edge coordinates in the kernel basis, primitive
    dimension: int                             # ambient (kernel) dimension
    col_edges: tuple[int, ...]
    extreme_rays: tuple[tuple[int, ...], ...] | None = None
    lineality: tuple[tuple[int, ...], ...] = ()
    has_positive_point: bool | None = None

    def contains(self, x) -> bool:
        return all(linalg.dot(row, x) >= 0 for row in self.inequalities)


def restrict_to_kernel(kernel: KernelBasis) -> ConeDescription:
    """Inequality description of the cone in kernel coordinates.

    Row i lists the i-th edge coordinate of the kernel basis vectors, so
    B x >= 0 says every edge length of the point with kernel coordinates x
    is nonnegative.  Rows are cleared to primitive integer vectors, which
    rescales each inequality by a positive factor only.
    """
    if kernel.dimension < 1:
        raise ValueError("kernel dimension must be at least 1")
    rows = []
    for i in range(len(kernel.col_edges)):
        row = [b[i] for b in kernel.basis]
        rows.append(tuple(linalg.primitive_vector(row)) if any(row) else tuple([0] * kernel.dimension))
    return ConeDescription(tuple(rows), kernel.dimension, kernel.col_edges)


# ---------------------------------------------------------------------------
# double description

def extreme_rays(cd: ConeDescription) -> ConeDescription:
    """Fill in extreme rays (and lineality, if any) of {x : B x >= 0}.

    Rows are inserted sorted by (number of nonzeros, lexicographic), which is
    deterministic and usually cheap; the result does not depend on the order.
    Rays come back as primitive integer vectors in lexicographic order.  A
    cone that is not pointed is reported through a nonempty lineality basis,
    with the rays describing the pointed quotient.
    """
    rows = [row for row in cd.inequalities if any(row)]
    rows = sorted(set(rows), key=lambda r: (sum(1 for x in r if x), r))
    rays, lin = _double_description(rows, cd.dimension)
    total = [sum(r[i] for r in rays) for i in range(cd.dimension)] if rays else [0] * cd.dimension
    positive = bool(rays) and all(linalg.dot(row, total) > 0 for row in cd.inequalities)
    return ConeDescription(cd.inequalities, cd.dimension, cd.col_edges,
                           tuple(tuple(r) for r in rays),
                           tuple(tuple(l) for l in lin), positive)


def _double_description(rows, dim):
    """Fukuda-Prodon style incremental double description.

    State: a lineality basis L and a ray list R with
    cone-so-far = span(L) + cone(R).  A new inequality that is nonzero on
    some lineality direction consumes it; otherwise the classic split and
    adjacent-combination step runs on the rays.
    """
    lineality = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    rays: list[list[Fraction]] = []
    processed: list[tuple[int, ...]] = []

    for row in rows:
        vals_lin = [linalg.dot(row, l) for l in lineality]
        hit = next((i for i, v in enumerate(vals_lin) if v != 0), None)
        if hit is not None:
            l0 = lineality.pop(hit)
            v0 = vals_lin[hit]
            if v0 < 0:
                l0 = [-x for x in l0]
                v0 = -v0
            lineality = [
                [a - (linalg.dot(row, l) / v0) * b for a, b in zip(l, l0)]
                for l in lineality
            ]
            rays = [
                [a - (linalg.dot(row, r) / v0) * b for a, b in zip(r, l0)]
                for r in rays
            ]
            rays.append(l0)
            processed.append(row)
            continue

        vals = [linalg.dot(row, r) for r in rays]
        plus = [i for i, v in enumerate(vals) if v > 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        if not minus:
            processed.append(row)
            continue

        tight = {i: frozenset(j for j, a in enumerate(processed) if linalg.dot(a, rays[i]) == 0)
                 for i in range(len(rays))}
        new_rays = [rays[i] for i in plus + zero]
        for ip in plus:
            for im in minus:
                common = tight[ip] & tight[im]
                adjacent = not any(
                    k not in (ip, im) and common <= tight[k]
                    for k in range(len(rays))
                )
                if not adjacent:
                    continue
                rp, rm = rays[ip], rays[im]
                combo = [vals[ip] * b - vals[im] * a for a, b in zip(rp, rm)]
                new_rays.append(combo)
        rays = _dedupe(new_rays)
        processed.append(row)

    out_rays = sorted({tuple(linalg.primitive_vector(r)) for r in rays if any(x != 0 for x in r)})
    out_lin = [tuple(linalg.primitive_vector(l)) for l in lineality if any(x != 0 for x in l)]
    return [list(r) for r in out_rays], [list(l) for l in out_lin]


def _dedupe(rays):
    seen = set()
    out = []
    for r in rays:
        if all(x == 0 for x in r):
            continue
        key = tuple(linalg.primitive_vector(r))
        if key not in seen:
            seen.add(key)
            out.append([Fraction(x) for x in key])
    return out


# ---------------------------------------------------------------------------
# lattice of integer solutions

@dataclass(frozen=True)
class LatticeBasis:
    vectors: tuple[tuple[int, ...], ...]  # basis of the integer kernel points, in edge coordinates
    col_edges: tuple[int, ...]
    to_kernel: tuple[tuple[Fraction, ...], ...]  # lattice coefficients -> kernel-basis coordinates

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def point(self, coeffs) -> tuple[int, ...]:
        n = len(self.col_edges)
        out = [0] * n
        for c, vec in zip(coeffs, self.vectors):
            for i in range(n):
                out[i] += c * vec[i]
        return tuple(out)

    def coeffs(self, edge_vector) -> tuple[int, ...]:
        """Lattice coordinates of an integer kernel point; inverse of point()."""
        sol = linalg.solve(linalg.transpose([list(v) for v in self.vectors]),
                           list(edge_vector))
        if sol is None or any(c.denominator != 1 for c in sol):
            raise ValueError("vector is not an integer point of the kernel lattice")
        return tuple(int(c) for c in sol)


def lattice_basis(kernel: KernelBasis) -> LatticeBasis:
    """Integer basis of all integer points of the kernel (saturated).

    The cleared kernel basis spans the right rational subspace; taking the
    integer kernel of its integer orthogonal complement yields a basis whose
    integer span is the full set of integer kernel points, in Hermite normal
    form for reproducibility.
    """
    cleared = [list(v) for v in kernel.basis]
    complement = linalg.integer_kernel(cleared)
    if not complement:
        # kernel is the whole space
        n = len(kernel.col_edges)
        vectors = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    else:
        vectors = linalg.integer_kernel(complement)
    to_kernel = []
    basis_cols = linalg.transpose([list(v) for v in kernel.basis])
    for vec in vectors:
        coords = linalg.solve(basis_cols, list(vec))
        if coords is None:
            raise AssertionError("lattice vector escaped the kernel span")
        to_kernel.append(tuple(coords))
    return LatticeBasis(tuple(tuple(v) for v in vectors), kernel.col_edges, tuple(to_kernel))


# ---------------------------------------------------------------------------
# lattice point enumeration

@dataclass(frozen=True)
class LatticePoint:
    vector: tuple[int, ...]       # edge coordinates
    coeffs: tuple[int, ...]       # coordinates in the lattice basis
    strictly_positive: bool


def enumerate_lattice_points(cd: ConeDescription, lb: LatticeBasis, bound: int,
                             budget: int = 10 ** 6) -> list[LatticePoint]:
    """All integer cone points whose edge coordinates lie in [0, bound].

    Box constraints 0 <= L c <= bound in lattice coefficients c are projected
    by Fourier-Motzkin elimination, the resulting integer ranges enumerated
    level by level, and candidates filtered through the cone inequalities.
    Points classify as strictly positive (every edge length >= 1) or
    boundary.  Exceeding ``budget`` candidates raises
    EnumerationBudgetError.
    """
    if bound < 0:
        raise ValueError("bound must be >= 0")
    d = lb.dimension
    n = len(lb.col_edges)
    if d == 0:
        return [LatticePoint(tuple([0] * n), (), False)]

    # constraints as (coeff vector, constant): coeff . c + const >= 0
    constraints = []
    for i in range(n):
        li = [vec[i] for vec in lb.vectors]
        constraints.append((li, 0))
        constraints.append(([-x for x in li], bound))
    systems = _fourier_motzkin_levels(constraints, d)

    points: list[LatticePoint] = []
    visited = 0

    def recurse(level: int, prefix: list[int]):
        nonlocal visited
        lo, hi = _integer_range(systems[level], prefix)
        if lo is None:
            return
        for val in range(lo, hi + 1):
            values = prefix + [val]
            if level + 1 == d:
                visited += 1
                if visited > budget:
                    raise EnumerationBudgetError(budget)
                vec = lb.point(values)
                if any(x < 0 or x > bound for x in vec):
                    continue
                kx = [sum(Fraction(values[j]) * lb.to_kernel[j][t] for j in range(d))
                      for t in range(cd.dimension)]
                if not cd.contains(kx):
                    continue
                points.append(LatticePoint(vec, tuple(values), all(x >= 1 for x in vec)))
            else:
                recurse(level + 1, values)

    recurse(0, [])
    points.sort(key=lambda p: p.vector)
    return points


def _fourier_motzkin_levels(constraints, d):
    """systems[j] holds constraints in variables c_0..c_j only."""
    systems = [None] * d
    current = [( [Fraction(x) for x in coeffs], Fraction(const)) for coeffs, const in constraints]
    for level in range(d - 1, -1, -1):
        systems[level] = [(c[:level + 1], k) for c, k in current]
        if level == 0:
            break
        nxt = []
        pos, neg, zero = [], [], []
        for coeffs, const in current:
            a = coeffs[level]
            if a > 0:
                pos.append((coeffs, const))
            elif a < 0:
                neg.append((coeffs, const))
            else:
                zero.append((coeffs[:level] + [Fraction(0)], const))
        nxt.extend(zero)
        for cp, kp in pos:
            for cn, kn in neg:
                ap, an = cp[level], -cn[level]
                coeffs = [an * x + ap * y for x, y in zip(cp[:level], cn[:level])]
                const = an * kp + ap * kn
                nxt.append((coeffs + [Fraction(0)], const))
        current = _prune(nxt, level)
    return systems


def _prune(constraints, level):
    """Keep, per primitive direction, only the binding constant."""
    best: dict[tuple, Fraction] = {}
    absolute: Fraction | None = None
    for coeffs, const in constraints:
        head = coeffs[:level]
        if all(x == 0 for x in head):
            # 0 >= -const: either trivial or infeasible; keep the tightest
            if absolute is None or const < absolute:
                absolute = const
            continue
        prim = tuple(linalg.primitive_vector(head))
        scale = next(Fraction(p, int(h)) for p, h in zip(prim, head) if h != 0)
        scaled_const = const * scale
        if prim not in best or scaled_const < best[prim]:
            best[prim] = scaled_const
    out = [([Fraction(x) for x in prim] + [Fraction(0)], const) for prim, const in sorted(best.items())]
    if absolute is not None:
        out.append(([Fraction(0)] * (level + 1), absolute))
    return out


def _integer_range(constraints, prefix):
    """Integer interval for the next variable given fixed earlier values."""
    level = len(prefix)
    lo, hi = None, None
    for coeffs, const in constraints:
        a = coeffs[level]
        rest = const + sum(c * Fraction(p) for c, p in zip(coeffs[:level], prefix))
        if a == 0:
            if rest < 0:
                return None, None
            continue
        bound = -rest / a
        if a > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is None or hi is None:
        raise ValueError("enumeration region is unbounded; lattice basis must be full rank")
    ilo, ihi = math.ceil(lo), math.floor(hi)
    if ilo > ihi:
        return None, None
    return ilo, ihi
