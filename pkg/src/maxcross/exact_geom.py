"""Exact predicates on rational point configurations.

Coordinates are ints or :class:`fractions.Fraction`; every decision here is
made without floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Tuple

from . import lp

Rational = Fraction
Point = Tuple[Fraction, ...]


class DegenerateConfigurationError(ValueError):
    """Raised when an input violates general position."""


def as_point(coords: Iterable) -> Point:
    pt = tuple(Fraction(c) for c in coords)
    if not pt:
        raise ValueError("a point needs at least one coordinate")
    return pt


@dataclass(frozen=True)
class PointConfiguration:
    dim: int
    points: Tuple[Point, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not self.points:
            raise ValueError("a configuration needs at least one point")
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError(f"point {p} is not {self.dim}-dimensional")

    @classmethod
    def from_coords(cls, coords: Iterable[Iterable]) -> "PointConfiguration":
        pts = tuple(as_point(c) for c in coords)
        if not pts:
            raise ValueError("a configuration needs at least one point")
        return cls(len(pts[0]), pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def orient2d(p, q, r) -> int:
    return _sign((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


def orient(pts: Sequence[Sequence]) -> int:
    """Sign of det[[p_0 ... p_d], [1 ... 1]] for d+1 points in R^d."""
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("orient: points have different dimensions")
    if len(pts) != d + 1:
        raise ValueError(f"orient: need {d + 1} points in R^{d}, got {len(pts)}")
    if d == 2:
        return orient2d(*pts)
    # subtracting p_0 from the other columns leaves the determinant unchanged
    p0 = pts[0]
    rows = [[p[k] - p0[k] for p in pts[1:]] for k in range(d)]
    sign = -1 if d % 2 else 1  # expansion along the row of ones, column 0
    return sign * _sign(determinant(rows))


def is_general_position(cfg) -> bool:
    """No d+1 of the points lie on a common hyperplane."""
    points = list(cfg)
    if not points:
        return True
    d = len(points[0])
    if len(points) <= d:
        return True
    return all(orient(sub) != 0 for sub in combinations(points, d + 1))


def require_general_position(points, what: str = "configuration") -> None:
    if not is_general_position(points):
        raise DegenerateConfigurationError(f"{what} is not in general position")


def is_convex_position_2d(points: Sequence) -> bool:
    """Every point is a vertex of the convex hull (general position assumed)."""
    n = len(points)
    for i in range(n):
        others = [points[j] for j in range(n) if j != i]
        if any(_in_triangle(points[i], *tri) for tri in combinations(others, 3)):
            return False
    return True


def _in_triangle(p, a, b, c) -> bool:
    s1, s2, s3 = orient2d(a, b, p), orient2d(b, c, p), orient2d(c, a, p)
    return s1 == s2 == s3 != 0


def _check_disjoint(X, Y):
    if set(map(tuple, X)) & set(map(tuple, Y)):
        raise ValueError("the two point sets share a point")


def separable_2d(X: Sequence, Y: Sequence) -> bool:
    """Is there an open half-plane containing X whose open complement contains Y?

    For point sets in general position, X and Y are separable iff some line
    through one point of X and one point of Y has the rest of X strictly on
    one side and the rest of Y strictly on the other (an inner common
    tangent of the two hulls).
    """
    X, Y = list(X), list(Y)
    _check_disjoint(X, Y)
    if not X or not Y:
        return True
    for p in X:
        for q in Y:
            sx = {orient2d(p, q, r) for r in X if r is not p}
            sy = {orient2d(p, q, r) for r in Y if r is not q}
            if 0 in sx or 0 in sy:
                raise DegenerateConfigurationError("three collinear points")
            if len(sx) > 1 or len(sy) > 1:
                continue
            if not sx or not sy or sx != sy:
                return True
    return False


def separable_2d_lp(X: Sequence, Y: Sequence) -> bool:
    """Strict separability decided by an exact LP: a.x + b.y + c >= 1 on X, <= -1 on Y."""
    X, Y = list(X), list(Y)
    _check_disjoint(X, Y)
    if not X or not Y:
        return True
    # free variables a, b, c split into positive and negative parts
    A_ub, b_ub = [], []
    for (x, y) in X:
        A_ub.append([-x, x, -y, y, -1, 1])
        b_ub.append(-1)
    for (x, y) in Y:
        A_ub.append([x, -x, y, -y, 1, -1])
        b_ub.append(-1)
    return lp.feasible(A_ub, b_ub, n=6)


def separable_2d_unit_lp(X: Sequence, Y: Sequence) -> bool:
    """Weak separation by a line a.x + b.y = 1 (either orientation).

    This is the formulation with boundary contact allowed and no line through
    the origin; kept for comparison with :func:`separable_2d`.
    """
    X, Y = list(X), list(Y)
    _check_disjoint(X, Y)
    for inside, outside in ((X, Y), (Y, X)):
        A_ub, b_ub = [], []
        for (x, y) in inside:
            A_ub.append([-x, x, -y, y])
            b_ub.append(-1)
        for (x, y) in outside:
            A_ub.append([x, -x, y, -y])
            b_ub.append(1)
        if lp.feasible(A_ub, b_ub, n=4):
            return True
    return False


def strict_interior_intersect(A: Sequence, B: Sequence, check: bool = True) -> bool:
    """Do the relative interiors of the simplices Conv(A) and Conv(B) meet?

    A and B are d points each in R^d.  The interiors meet iff some strictly
    positive l, m satisfy sum(l_i (a_i, 1)) = sum(m_j (b_j, 1)); scaling lets
    us ask for l, m >= 1 instead, a plain feasibility problem.  Pass
    ``check=False`` when the caller already knows the points are in general
    position.
    """
    A = [as_point(p) for p in A]
    B = [as_point(p) for p in B]
    d = len(A[0])
    if len(A) != d or len(B) != d or any(len(p) != d for p in A + B):
        raise ValueError("need d points of dimension d on each side")
    _check_disjoint(A, B)
    if check:
        require_general_position(A + B, "simplex vertices")
    # columns (a_i, 1) and -(b_j, 1); substitute x = 1 + y with y >= 0
    cols = [tuple(a) + (1,) for a in A] + [tuple(-c for c in b) + (-1,) for b in B]
    A_eq = [[col[k] for col in cols] for k in range(d + 1)]
    b_eq = [-sum(row) for row in A_eq]
    return lp.feasible(A_eq=A_eq, b_eq=b_eq, n=2 * d)
