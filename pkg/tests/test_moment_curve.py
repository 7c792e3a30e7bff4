from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxcross.exact_geom import strict_interior_intersect
from maxcross.hypergraph import complete, complete_dpartite
from maxcross.moment_curve import (
    MomentCurveDrawing,
    alternation_cross,
    cm_bruteforce,
    cm_formula,
    count_crossings,
    ctilde,
    identity_drawing,
    knd_max_value,
    moment_point,
    parse_drawing,
    serialize_drawing,
    theorem2_drawing,
    theorem2_value,
)
from maxcross.random_drawing import random_moment_drawing


def test_alternation_examples():
    assert alternation_cross([1, 3], [2, 4])
    assert not alternation_cross([1, 2], [3, 4])
    with pytest.raises(ValueError):
        alternation_cross([1, 2], [2, 3])


def test_alternation_d3_bipartitions():
    crossing = []
    for rest in combinations(range(2, 7), 2):
        A = (1,) + rest
        B = [t for t in range(1, 7) if t not in A]
        if alternation_cross(A, B):
            crossing.append("".join("A" if t in A else "B" for t in range(1, 7)))
    assert sorted(crossing) == ["ABABAB", "ABABBA", "ABBABA"]


@pytest.mark.parametrize("d", [2, 3, 4])
def test_alternation_matches_geometry(d):
    # every bipartition of 2d curve points, with spread-out parameters
    params = [-5, -2, 1, 3, 4, 7, 8, 11][:2 * d]
    for rest in combinations(range(1, 2 * d), d - 1):
        ia = (0,) + rest
        A = [params[i] for i in ia]
        B = [params[i] for i in range(2 * d) if i not in ia]
        geo = strict_interior_intersect([moment_point(t, d) for t in A],
                                        [moment_point(t, d) for t in B])
        assert alternation_cross(A, B) == geo


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(
    lambda d: st.tuples(st.just(d), st.lists(st.integers(-20, 20), min_size=2 * d,
                                             max_size=2 * d, unique=True))))
def test_alternation_matches_geometry_random(args):
    d, params = args
    A, B = params[:d], params[d:]
    geo = strict_interior_intersect([moment_point(t, d) for t in A],
                                    [moment_point(t, d) for t in B])
    assert alternation_cross(A, B) == geo


@given(st.lists(st.integers(-50, 50), min_size=6, max_size=6, unique=True),
       st.integers(1, 5), st.integers(-10, 10))
def test_alternation_order_preserving_reparameterization(params, scale, shift):
    A, B = params[:3], params[3:]
    f = lambda t: scale * t ** 3 + shift  # noqa: E731  strictly increasing
    assert alternation_cross(A, B) == alternation_cross([f(t) for t in A], [f(t) for t in B])


def test_count_crossings_anchors():
    assert count_crossings(complete(8, 4), identity_drawing(complete(8, 4))).total == 13
    assert count_crossings(complete(6, 3), identity_drawing(complete(6, 3))).total == 3
    for n in (7, 8):
        h = complete(n, 3)
        assert count_crossings(h, identity_drawing(h)).total == 3 * comb(n, 6)


def test_count_crossings_witnesses():
    rep = count_crossings(complete(6, 3), identity_drawing(complete(6, 3)), witnesses=True)
    assert len(rep.witnesses) == rep.total == 3
    assert ((0, 2, 4), (1, 3, 5)) in rep.witnesses


def test_count_crossings_missing_vertex():
    with pytest.raises(ValueError):
        count_crossings(complete(6, 3), MomentCurveDrawing(3, (1, 2, 3)))


def test_cm_formula_examples():
    assert cm_formula(4) == 13
    assert cm_formula(3) == 3
    assert cm_formula(6) == 181
    with pytest.raises(ValueError):
        cm_formula(1)


def test_cm_bruteforce_examples():
    assert cm_bruteforce(2) == 1
    assert cm_bruteforce(4) == 13
    assert cm_bruteforce(5) == 45 == ctilde(5) * comb(9, 4)


@pytest.mark.parametrize("d", range(2, 9))
def test_cm_formula_matches_bruteforce(d):
    assert cm_formula(d) == cm_bruteforce(d)


@pytest.mark.parametrize("n,d", [(n, d) for d in (2, 3, 4) for n in range(2 * d, 2 * d + 3)])
def test_complete_counts_permutation_invariant(n, d):
    h = complete(n, d)
    want = cm_formula(d) * comb(n, 2 * d)
    assert count_crossings(h, identity_drawing(h)).total == want
    for k in range(3):
        assert count_crossings(h, random_moment_drawing(h, seed=9, trial=k)).total == want


def test_ctilde_examples():
    assert str(ctilde(3)) == "3/10"
    assert str(ctilde(4)) == "13/35"
    assert str(ctilde(10)) == "38251/92378"


def test_ctilde_is_pair_probability():
    # 2 (d!)^2 c_m^d / (2d)! reduces to c_m^d / C(2d-1, d-1)
    from fractions import Fraction
    from math import factorial
    for d in range(2, 11):
        assert ctilde(d) == Fraction(2 * factorial(d) ** 2 * cm_formula(d), factorial(2 * d))


def test_theorem2_drawing_order():
    drawing = theorem2_drawing(3, 2)
    # part i holds vertices 2i, 2i+1
    assert drawing.order() == (0, 1, 2, 3, 4, 5)
    assert count_crossings(complete_dpartite(3, 2).base, drawing).total == 3


def test_theorem2_k4x2_single_noncrossing_pair():
    ph = complete_dpartite(4, 2)
    rep = count_crossings(ph.base, theorem2_drawing(4, 2), witnesses=True)
    assert rep.total == 7
    disjoint = {(e, f) for e, f in combinations(ph.base.edges, 2) if not set(e) & set(f)}
    missing = disjoint - set(rep.witnesses)
    # A = {p_c1, p'_c2, p_c3, p'_c4} with part i = {2i, 2i+1}
    assert missing == {((0, 3, 4, 7), (1, 2, 5, 6))}


def test_theorem2_values():
    assert theorem2_value(3, 3) == 81
    assert theorem2_value(2, 2) == 1
    assert theorem2_value(4, 2) == 7
    ph = complete_dpartite(3, 3)
    assert count_crossings(ph.base, theorem2_drawing(3, 3)).total == 81


def test_theorem2_beats_every_order_small():
    ph = complete_dpartite(3, 2)
    best = max(count_crossings(ph.base, MomentCurveDrawing(3, tuple(p))).total
               for p in permutations(range(1, 7)))
    assert best == theorem2_value(3, 2)


def test_knd_max_value():
    assert knd_max_value(8, 4) == 13
    assert knd_max_value(6, 3) == 3
    assert knd_max_value(9, 4) == 117
    with pytest.raises(ValueError):
        knd_max_value(10, 5)
    assert knd_max_value(10, 5, conjecture=True) == 45
    with pytest.raises(ValueError):
        knd_max_value(7, 4)


def test_drawing_file_round_trip():
    d = MomentCurveDrawing(3, (4, 1, 9, 2))
    assert parse_drawing(serialize_drawing(d)) == d
    with pytest.raises(ValueError):
        parse_drawing("3 2\n0 1\n0 2\n")
    with pytest.raises(ValueError):
        MomentCurveDrawing(3, (1, 1))
