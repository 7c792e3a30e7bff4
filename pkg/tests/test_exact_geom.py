from fractions import Fraction
from itertools import combinations

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import assume, given, settings

from maxcross.exact_geom import (
    DegenerateConfigurationError,
    PointConfiguration,
    separable_2d_unit_lp,
    determinant,
    is_convex_position_2d,
    is_general_position,
    orient,
    separable_2d,
    separable_2d_lp,
    strict_interior_intersect,
)
from maxcross.moment_curve import moment_point

coord = st.integers(-30, 30)
point2 = st.tuples(coord, coord)


def test_orient_trivial():
    assert orient([(0, 0), (1, 0), (0, 1)]) == 1
    assert orient([(0, 0), (1, 1), (2, 2)]) == 0


def test_orient_sample_triple_matches_float_determinant():
    pts = [(218, 48), (157, 54), (88, 66)]
    ref = np.linalg.det(np.array([[p[0] for p in pts], [p[1] for p in pts], [1, 1, 1]], float))
    assert orient(pts) == int(np.sign(ref)) == -1


def test_orient_higher_dimensions_match_numpy():
    rng = np.random.default_rng(3)
    for d in (1, 3, 4, 5):
        for _ in range(20):
            pts = rng.integers(-9, 10, size=(d + 1, d))
            m = np.vstack([pts.T, np.ones(d + 1)])
            ref = round(np.linalg.det(m))
            assert orient(pts.tolist()) == int(np.sign(ref))


def test_orient_dimension_mismatch():
    with pytest.raises(ValueError):
        orient([(0, 0), (1, 0, 0), (0, 1)])


def test_determinant_exact():
    assert determinant([[Fraction(1, 3), 2], [1, 6]]) == 0
    assert determinant([[2, 0, 0], [0, 3, 0], [0, 0, Fraction(1, 7)]]) == Fraction(6, 7)


@given(st.lists(point2, min_size=3, max_size=3), st.tuples(coord, coord))
def test_orient_antisymmetric_and_translation_invariant(pts, shift):
    a, b, c = pts
    assert orient([b, a, c]) == -orient([a, b, c])
    moved = [(x + shift[0], y + shift[1]) for x, y in pts]
    assert orient(moved) == orient(pts)


def test_general_position_examples():
    assert is_general_position([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert not is_general_position([(0, 0), (1, 0), (2, 0), (0, 1)])
    assert is_general_position([(0, 0), (5, 5)])  # n <= d


def test_general_position_3d_coplanar():
    assert not is_general_position([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert is_general_position([moment_point(t, 3) for t in range(1, 7)])


def test_point_configuration_checks_dimension():
    with pytest.raises(ValueError):
        PointConfiguration.from_coords([(0, 0), (1, 2, 3)])
    cfg = PointConfiguration.from_coords([(0, 0), (1, 2)])
    assert cfg.dim == 2 and len(cfg) == 2


def test_separable_sample_examples(sample_points):
    pts = list(sample_points)
    assert separable_2d(pts[:2], pts[2:])
    X = [pts[0], pts[2]]
    Y = [p for p in pts if p not in X]
    assert not separable_2d(X, Y)


def test_separable_single_vertex():
    assert separable_2d([(0, 0)], [(1, 0), (0, 1), (1, 1)])


def test_separable_rejects_shared_points():
    with pytest.raises(ValueError):
        separable_2d([(0, 0)], [(0, 0), (1, 1)])


def test_separable_rejects_collinear():
    with pytest.raises(DegenerateConfigurationError):
        separable_2d([(0, 0), (2, 2)], [(1, 1), (5, 0)])


def general_position_sets(n):
    return st.lists(point2, min_size=n, max_size=n, unique=True).filter(is_general_position)


@settings(max_examples=150, deadline=None)
@given(general_position_sets(7), st.integers(1, 6), st.integers(0, 2 ** 7 - 1))
def test_separable_agrees_with_lps_and_is_symmetric(pts, k, mask):
    X = [p for i, p in enumerate(pts) if mask >> i & 1]
    Y = [p for i, p in enumerate(pts) if not mask >> i & 1]
    assume(X and Y)
    got = separable_2d(X, Y)
    assert got == separable_2d(Y, X)
    assert got == separable_2d_lp(X, Y)
    # weak separation (boundary contact allowed) coincides under general position;
    # shift away from the origin so every separating line has the form a.x + b.y = 1
    far = lambda S: [(x + 1000, y + 1000) for x, y in S]  # noqa: E731
    assert got == separable_2d_unit_lp(far(X), far(Y))


@settings(max_examples=100, deadline=None)
@given(general_position_sets(6), st.integers(0, 63),
       st.tuples(st.integers(1, 4), st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 4)),
       st.tuples(coord, coord))
def test_separable_affine_invariant(pts, mask, mat, shift):
    a, b, c, d = mat
    assume(a * d - b * c > 0)
    X = [p for i, p in enumerate(pts) if mask >> i & 1]
    Y = [p for i, p in enumerate(pts) if not mask >> i & 1]
    f = lambda S: [(a * x + b * y + shift[0], c * x + d * y + shift[1]) for x, y in S]  # noqa: E731
    assert separable_2d(X, Y) == separable_2d(f(X), f(Y))


def test_strict_interior_intersect_squares():
    assert strict_interior_intersect([(0, 0), (1, 1)], [(1, 0), (0, 1)])
    assert not strict_interior_intersect([(0, 0), (1, 0)], [(0, 1), (1, 1)])


def test_strict_interior_intersect_moment_curve_3d():
    m = [moment_point(t, 3) for t in range(1, 7)]
    assert strict_interior_intersect(m[0::2], m[1::2])  # ABABAB
    assert not strict_interior_intersect(m[:3], m[3:])  # AAABBB


def test_strict_interior_intersect_errors():
    with pytest.raises(ValueError):
        strict_interior_intersect([(0, 0), (1, 1)], [(0, 0), (0, 1)])
    with pytest.raises(DegenerateConfigurationError):
        strict_interior_intersect([(0, 0), (2, 2)], [(1, 1), (0, 1)])


def segments_cross_cramer(a, b, c, d):
    """Solve a + s(b - a) = c + u(d - c) exactly; cross iff 0 < s, u < 1."""
    m = [[b[0] - a[0], c[0] - d[0]], [b[1] - a[1], c[1] - d[1]]]
    rhs = [c[0] - a[0], c[1] - a[1]]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if det == 0:
        return False
    s = Fraction(rhs[0] * m[1][1] - m[0][1] * rhs[1], det)
    u = Fraction(m[0][0] * rhs[1] - rhs[0] * m[1][0], det)
    return 0 < s < 1 and 0 < u < 1


@settings(max_examples=200, deadline=None)
@given(general_position_sets(4))
def test_strict_interior_intersect_matches_segment_oracle(pts):
    a, b, c, d = pts
    assert strict_interior_intersect([a, b], [c, d]) == segments_cross_cramer(a, b, c, d)


def closed_simplices_meet(A, B):
    # nonnegative (not strictly positive) weights: the closed simplices meet
    from maxcross import lp
    d = len(A[0])
    A_eq = [[a[k] for a in A] + [-b[k] for b in B] for k in range(d)]
    A_eq += [[1] * d + [0] * d, [0] * d + [1] * d]
    return lp.feasible(A_eq=A_eq, b_eq=[0] * d + [1, 1], n=2 * d)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_weak_and_strict_crossing_agree_in_general_position(d):
    from maxcross.crossing_oracle import random_general_position
    for seed in range(25):
        pts = random_general_position(2 * d, d, seed=seed, bound=12).positions
        for rest in combinations(range(1, 2 * d), d - 1):
            ia = (0,) + rest
            A = [pts[i] for i in ia]
            B = [pts[i] for i in range(2 * d) if i not in ia]
            assert strict_interior_intersect(A, B) == closed_simplices_meet(A, B)


def test_weak_and_strict_differ_when_degenerate():
    # touching at an endpoint: closed segments meet, open ones do not
    assert closed_simplices_meet([(0, 0), (2, 0)], [(1, 0), (1, 1)])


def test_convex_position(sample_points):
    assert is_convex_position_2d(sample_points)
    assert not is_convex_position_2d([(0, 0), (10, 0), (0, 10), (2, 2)])


def test_rational_arithmetic_is_exact():
    a, b, c = Fraction(1, 3), Fraction(2, 7), Fraction(-5, 11)
    assert (a + b) + c == a + (b + c)
    assert Fraction(6, 8).denominator == 4
    big = Fraction(30) ** 10 / 7
    assert big * 7 == 30 ** 10
