"""Gale transforms, affine Gale diagrams and proper linear separations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from . import lp
from .exact_geom import (
    DegenerateConfigurationError,
    PointConfiguration,
    as_point,
    orient2d,
    require_general_position,
)

RED = "red"
BLUE = "blue"

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class VectorConfiguration:
    dim: int
    vectors: Tuple[Vector, ...]

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.dim:
                raise ValueError(f"vector {v} is not {self.dim}-dimensional")

    @classmethod
    def from_vectors(cls, vectors) -> "VectorConfiguration":
        vecs = tuple(tuple(Fraction(c) for c in v) for v in vectors)
        return cls(len(vecs[0]), vecs)

    def __len__(self):
        return len(self.vectors)


@dataclass(frozen=True)
class AffineGaleDiagram:
    points: Tuple[Tuple[Fraction, Fraction], ...]
    colors: Tuple[str, ...]

    def __post_init__(self):
        if len(self.points) != len(self.colors):
            raise ValueError("points and colors differ in length")
        if any(c not in (RED, BLUE) for c in self.colors):
            raise ValueError("colors must be 'red' or 'blue'")

    def coloring(self) -> str:
        """Bit string with '1' for red points."""
        return "".join("1" if c == RED else "0" for c in self.colors)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def cross(u, v) -> Vector:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def rank(rows) -> int:
    return len(_rref(rows)[1])


def _rref(rows, column_order: Optional[Sequence[int]] = None):
    a = [[Fraction(v) for v in row] for row in rows]
    if not a:
        return a, []
    ncols = len(a[0])
    order = list(column_order) if column_order is not None else list(range(ncols))
    pivots = []
    r = 0
    for col in order:
        if r == len(a):
            break
        # partial pivoting: largest magnitude entry in the column
        piv = max(range(r, len(a)), key=lambda i: abs(a[i][col]))
        if a[piv][col] == 0:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        a[r] = [v / p for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    return a, pivots


def null_space(rows, column_order: Optional[Sequence[int]] = None):
    """Basis of {x : rows . x = 0}, one basis vector per free column."""
    a, pivots = _rref(rows, column_order)
    ncols = len(rows[0])
    order = list(column_order) if column_order is not None else list(range(ncols))
    free = [c for c in order if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -a[i][f]
        basis.append(x)
    return basis


def gale_transform(cfg, column_order: Optional[Sequence[int]] = None) -> VectorConfiguration:
    """Gale transform of n points in R^d: n vectors in R^(n-d-1).

    The null space of the homogenized coordinate matrix is computed exactly;
    ``column_order`` changes the elimination order (and hence the basis).
    """
    if not isinstance(cfg, PointConfiguration):
        cfg = PointConfiguration.from_coords(cfg)
    n, d = len(cfg), cfg.dim
    if n < d + 2:
        raise ValueError(f"need at least d+2 = {d + 2} points, got {n}")
    matrix = [[p[k] for p in cfg.points] for k in range(d)] + [[Fraction(1)] * n]
    basis = null_space(matrix, column_order)
    if len(basis) != n - d - 1:
        raise DegenerateConfigurationError("points do not affinely span R^%d" % d)
    vectors = tuple(tuple(b[i] for b in basis) for i in range(n))
    return VectorConfiguration(n - d - 1, vectors)


def validate_gale(vc: VectorConfiguration) -> bool:
    """Vectors sum to zero and span their ambient space."""
    if not vc.vectors:
        return False
    if any(sum(v[k] for v in vc.vectors) != 0 for k in range(vc.dim)):
        return False
    return rank(vc.vectors) == vc.dim


def every_subset_spans(vc: VectorConfiguration) -> bool:
    """Every dim-subset of the vectors is a basis."""
    return all(rank(sub) == vc.dim for sub in combinations(vc.vectors, vc.dim))


def _dual_pair(gi, gj):
    """u_i, u_j in span(gi, gj) with u_a . g_b = [a == b]."""
    a, b, c = dot(gi, gi), dot(gi, gj), dot(gj, gj)
    det = a * c - b * b
    ui = tuple((c * x - b * y) / det for x, y in zip(gi, gj))
    uj = tuple((a * y - b * x) / det for x, y in zip(gi, gj))
    return ui, uj


def split_direction_candidates(vc: VectorConfiguration):
    """Directions w with w.g != 0 for all g, one per corner of every cell.

    Each open cell of the arrangement of planes g^perp has a corner on some
    line g_i^perp & g_j^perp = span(g_i x g_j); near that corner the cells
    are reached by tilting g_i x g_j toward the four sign patterns of
    (w.g_i, w.g_j).  Candidates may still be orthogonal to some g when the
    vectors are not in general position; callers filter those.
    """
    if vc.dim != 3:
        raise ValueError("split directions are defined for vectors in R^3")
    g = vc.vectors
    if any(all(c == 0 for c in v) for v in g):
        raise DegenerateConfigurationError("zero vector in configuration")
    for i, j in combinations(range(len(g)), 2):
        w0 = cross(g[i], g[j])
        if all(c == 0 for c in w0):
            continue  # parallel pair: no corner here
        ui, uj = _dual_pair(g[i], g[j])
        for s0 in (1, -1):
            base = tuple(s0 * c for c in w0)
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                u = tuple(si * x + sj * y for x, y in zip(ui, uj))
                # step small enough that no other nonzero sign flips
                eps = Fraction(1)
                for k, gk in enumerate(g):
                    b, du = dot(base, gk), dot(u, gk)
                    if k not in (i, j) and b != 0 and du != 0:
                        eps = min(eps, abs(b / du) / 2)
                yield tuple(x + eps * y for x, y in zip(base, u))


def balanced_split_direction(vc: VectorConfiguration) -> Vector:
    """First candidate direction with exactly half of the dot products positive."""
    half = len(vc) // 2
    if len(vc) % 2:
        raise ValueError("balanced split needs an even number of vectors")
    for w in split_direction_candidates(vc):
        signs = [dot(w, g) for g in vc.vectors]
        if all(s != 0 for s in signs) and sum(s > 0 for s in signs) == half:
            return w
    raise DegenerateConfigurationError("no balanced split direction found")


def _plane_basis(w):
    """Two rational vectors spanning the plane orthogonal to w."""
    basis = []
    for k in range(3):
        e = [0, 0, 0]
        e[k] = 1
        c = cross(w, e)
        if any(c) and (not basis or any(cross(basis[0], c))):
            basis.append(c)
        if len(basis) == 2:
            return basis
    raise ValueError("direction must be nonzero")


def affine_gale_diagram(vc: VectorConfiguration, w) -> AffineGaleDiagram:
    """Centrally project each g onto the plane w.x = 1; red iff w.g > 0.

    Plane coordinates are taken relative to the point w / |w|^2 in a fixed
    rational basis of w^perp.
    """
    if vc.dim != 3:
        raise ValueError("affine Gale diagrams are built from vectors in R^3")
    w = tuple(Fraction(c) for c in w)
    u1, u2 = _plane_basis(w)
    origin = tuple(c / dot(w, w) for c in w)
    g11, g12, g22 = dot(u1, u1), dot(u1, u2), dot(u2, u2)
    det = g11 * g22 - g12 * g12
    points, colors = [], []
    for i, g in enumerate(vc.vectors):
        s = dot(w, g)
        if s == 0:
            raise DegenerateConfigurationError(f"vector {i} is parallel to the projection plane")
        rel = tuple(c / s - o for c, o in zip(g, origin))
        r1, r2 = dot(rel, u1), dot(rel, u2)
        points.append(((g22 * r1 - g12 * r2) / det, (g11 * r2 - g12 * r1) / det))
        colors.append(RED if s > 0 else BLUE)
    return AffineGaleDiagram(tuple(points), tuple(colors))


def lift_diagram(diagram: AffineGaleDiagram) -> VectorConfiguration:
    """Vector configuration in R^3 whose affine Gale diagram is ``diagram``.

    Red points lift to (x, y, 1), blue ones to -(x, y, 1); the vectors are
    then rescaled by positive weights so that they sum to zero.  Raises if
    no such weights exist (the colored diagram is acyclic).
    """
    lifted = [
        tuple(s * c for c in (x, y, Fraction(1)))
        for (x, y), col in zip(diagram.points, diagram.colors)
        for s in [1 if col == RED else -1]
    ]
    n = len(lifted)
    A_eq = [[v[k] for v in lifted] for k in range(3)]
    A_ub = [[-1 if j == i else 0 for j in range(n)] for i in range(n)]
    res = lp.solve([0] * n, A_ub, [-1] * n, A_eq, [0, 0, 0])
    if res.status != lp.OPTIMAL:
        raise ValueError("colored diagram is not totally cyclic; no lift exists")
    vectors = tuple(tuple(lam * c for c in v) for lam, v in zip(res.x, lifted))
    return VectorConfiguration(3, vectors)


def linearly_separable(P: Sequence, N: Sequence) -> bool:
    """Is there w with w.g > 0 on P and w.g < 0 on N?

    By Gordan's alternative such w exists iff no convex combination of the
    vectors of P and the negated vectors of N is zero.
    """
    signed = [tuple(g) for g in P] + [tuple(-x for x in g) for g in N]
    dim = len(signed[0])
    A_eq = [[g[k] for g in signed] for k in range(dim)] + [[1] * len(signed)]
    b_eq = [0] * dim + [1]
    return not lp.feasible(A_eq=A_eq, b_eq=b_eq, n=len(signed))


def proper_linear_separations(vc: VectorConfiguration):
    """Halves (as index tuples containing 0) properly separable from their complement."""
    n = len(vc)
    if n % 2:
        raise ValueError("proper separations need an even number of vectors")
    idx = range(n)
    out = []
    for rest in combinations(range(1, n), n // 2 - 1):
        half = (0,) + rest
        other = [i for i in idx if i not in half]
        if linearly_separable([vc.vectors[i] for i in half], [vc.vectors[i] for i in other]):
            out.append(half)
    return out


def count_proper_linear_separations(vc: VectorConfiguration) -> int:
    return len(proper_linear_separations(vc))


def count_crossing_pairs(cfg) -> int:
    """Crossing pairs among complementary d-subsets of 2d points in R^d, via the Gale dual."""
    if not isinstance(cfg, PointConfiguration):
        cfg = PointConfiguration.from_coords(cfg)
    if len(cfg) != 2 * cfg.dim:
        raise ValueError(f"need exactly 2d = {2 * cfg.dim} points")
    require_general_position(cfg.points)
    return count_proper_linear_separations(gale_transform(cfg))


def no_three_collinear(points) -> bool:
    return all(orient2d(*t) != 0 for t in combinations([as_point(p) for p in points], 3))
