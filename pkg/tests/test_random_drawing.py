import math
from collections import Counter
from fractions import Fraction

import pytest

from maxcross.hypergraph import Hypergraph, complete, disjoint_pairs, random_hypergraph
from maxcross.moment_curve import count_crossings, ctilde
from maxcross.random_drawing import (
    exact_pair_probability,
    guarantee_check,
    monte_carlo,
    random_moment_drawing,
    write_counts_csv,
)

PAIR3 = Hypergraph.from_edges(3, 6, [(0, 1, 2), (3, 4, 5)])


def test_deterministic_per_seed():
    h = complete(7, 3)
    assert random_moment_drawing(h, 5, 3) == random_moment_drawing(h, 5, 3)
    assert random_moment_drawing(h, 5, 3) != random_moment_drawing(h, 5, 4)
    assert sorted(random_moment_drawing(h, 5).params) == list(range(1, 8))


def test_single_vertex():
    assert random_moment_drawing(Hypergraph(3, 1, ()), 0).params == (1,)


def test_uniform_over_permutations():
    h = Hypergraph(2, 4, ())
    n = 10_000
    freq = Counter(random_moment_drawing(h, 17, k).params for k in range(n))
    assert len(freq) == 24
    p = 1 / 24
    sigma = math.sqrt(n * p * (1 - p))
    assert all(abs(c - n * p) <= 3 * sigma for c in freq.values())


def test_complete_constant_counts():
    rep = monte_carlo(complete(6, 3), 50, seed=2)
    assert set(rep.counts) == {3}
    assert rep.mean == 3 == rep.expected
    assert rep.sample_variance == 0
    ok, w = guarantee_check(rep)
    assert ok and w.count == 3


def test_vacuous_guarantee():
    h = Hypergraph.from_edges(3, 5, [(0, 1, 2), (2, 3, 4)])
    rep = monte_carlo(h, 5, seed=0)
    assert rep.F == 0 and rep.expected == 0
    assert guarantee_check(rep)[0]


def test_counts_within_range_and_match_counter():
    h = random_hypergraph(9, 3, 12, seed=7)
    rep = monte_carlo(h, 200, seed=3)
    assert all(0 <= c <= rep.F for c in rep.counts)
    for k in (0, 17, 199):
        assert rep.counts[k] == count_crossings(h, random_moment_drawing(h, 3, k)).total
    assert rep.mean == Fraction(sum(rep.counts), 200)
    assert rep.best.count == max(rep.counts)


def test_reproducible_and_parallel_identical():
    h = random_hypergraph(9, 3, 12, seed=7)
    a = monte_carlo(h, 1200, seed=11)
    assert monte_carlo(h, 1200, seed=11) == a
    assert monte_carlo(h, 1200, seed=11, workers=3) == a


@pytest.mark.parametrize("d,p", [(2, Fraction(1, 3)), (3, Fraction(3, 10))])
def test_exact_pair_probability(d, p):
    assert exact_pair_probability(d) == p == ctilde(d)


def test_single_pair_frequency():
    trials = 20_000
    rep = monte_carlo(PAIR3, trials, seed=5)
    p = 0.3
    assert abs(float(rep.mean) - p) <= 3 * math.sqrt(p * (1 - p) / trials)


def test_nine_vertex_fixture():
    h = random_hypergraph(9, 3, 12, seed=2024)
    assert len(h.edges) == 12
    rep = monte_carlo(h, 5000, seed=1)
    assert rep.F == disjoint_pairs(h)
    assert rep.expected == Fraction(3, 10) * rep.F
    assert abs(float(rep.mean - rep.expected)) <= 3 * rep.standard_error
    ok, w = guarantee_check(rep)
    assert ok
    assert count_crossings(h, w.drawing).total == w.count >= math.ceil(rep.expected)


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        monte_carlo(PAIR3, 0, seed=1)


def test_csv_and_text(tmp_path):
    rep = monte_carlo(PAIR3, 4, seed=1)
    path = tmp_path / "c.csv"
    write_counts_csv(rep, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "trial,crossings" and len(lines) == 5
    assert "F = 1" in rep.as_text()
