"""Random moment-curve drawings and Monte Carlo checks of the c~_d * F guarantee.

Randomness: trial ``k`` of seed ``s`` draws from Philox4x64-10 keyed by ``s``
with the counter starting at (0, 0, k, 0), so every trial has its own
reproducible stream no matter how trials are scheduled.  The permutation is
numpy's Fisher-Yates shuffle on that stream.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .hypergraph import Hypergraph, disjoint_edge_pairs
from .moment_curve import MomentCurveDrawing, ctilde, run_count

_MASK64 = (1 << 64) - 1


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    if seed < 0 or trial < 0:
        raise ValueError("seed and trial index must be non-negative")
    bitgen = np.random.Philox(key=[seed & _MASK64, seed >> 64 & _MASK64],
                              counter=[0, 0, trial, 0])
    return np.random.Generator(bitgen)


def random_moment_drawing(h: Hypergraph, seed: int, trial: int = 0) -> MomentCurveDrawing:
    """Uniformly random bijection of the vertices onto parameters 1..n."""
    perm = trial_generator(seed, trial).permutation(h.vertex_count)
    return MomentCurveDrawing(h.uniformity, tuple(int(p) + 1 for p in perm))


class Witness(NamedTuple):
    trial: int
    count: int
    drawing: MomentCurveDrawing


@dataclass(frozen=True)
class MonteCarloReport:
    trials: int
    seed: int
    counts: Tuple[int, ...]
    mean: Fraction
    sample_variance: Fraction
    expected: Fraction
    F: int
    best: Witness

    @property
    def standard_error(self) -> float:
        return math.sqrt(self.sample_variance / self.trials)

    def as_text(self) -> str:
        lines = [
            f"trials = {self.trials}",
            f"seed = {self.seed}",
            f"F = {self.F}",
            f"mean = {self.mean} ({float(self.mean):.6f})",
            f"sample_variance = {float(self.sample_variance):.6f}",
            f"expected = {self.expected} ({float(self.expected):.6f})",
            f"best_trial = {self.best.trial}",
            f"best_count = {self.best.count}",
        ]
        return "\n".join(lines) + "\n"


def _count(pairs, d, params) -> int:
    return sum(
        run_count([params[v] for v in e], [params[v] for v in f]) >= d + 2
        for e, f in pairs
    )


def _count_range(h: Hypergraph, seed: int, start: int, stop: int):
    pairs = disjoint_edge_pairs(h)
    return [_count(pairs, h.uniformity, random_moment_drawing(h, seed, k).params)
            for k in range(start, stop)]


def monte_carlo(h: Hypergraph, trials: int, seed: int, workers: int = 1) -> MonteCarloReport:
    if trials < 1:
        raise ValueError("need at least one trial")
    if workers > 1 and trials > 1000:
        step = -(-trials // (workers * 4))
        bounds = [(s, min(s + step, trials)) for s in range(0, trials, step)]
        with ProcessPoolExecutor(workers) as pool:
            chunks = pool.map(_count_range, *zip(*[(h, seed, a, b) for a, b in bounds]))
            counts = [c for chunk in chunks for c in chunk]
    else:
        counts = _count_range(h, seed, 0, trials)

    total = sum(counts)
    mean = Fraction(total, trials)
    if trials > 1:
        var = (Fraction(sum(c * c for c in counts)) - total * mean) / (trials - 1)
    else:
        var = Fraction(0)
    F = len(disjoint_edge_pairs(h))
    best_trial = max(range(trials), key=lambda k: (counts[k], -k))
    best = Witness(best_trial, counts[best_trial], random_moment_drawing(h, seed, best_trial))
    return MonteCarloReport(trials, seed, tuple(counts), mean, var,
                            ctilde(h.uniformity) * F, F, best)


def guarantee_check(report: MonteCarloReport) -> Tuple[bool, Optional[Witness]]:
    """Did some sampled drawing reach ceil(c~_d * F) crossings?"""
    target = math.ceil(report.expected)
    if report.best.count >= target:
        return True, report.best
    return False, None


def exact_pair_probability(d: int) -> Fraction:
    """Crossing probability of one vertex-disjoint edge pair, over all (2d)! orders."""
    A, B = range(d), range(d, 2 * d)
    hits = total = 0
    for perm in permutations(range(2 * d)):
        total += 1
        hits += run_count([perm[v] for v in A], [perm[v] for v in B]) >= d + 2
    return Fraction(hits, total)


def write_counts_csv(report: MonteCarloReport, path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("trial,crossings\n")
        for k, c in enumerate(report.counts):
            fh.write(f"{k},{c}\n")
