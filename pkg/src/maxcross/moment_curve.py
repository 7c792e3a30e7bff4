"""Drawings on the moment curve (t, t^2, ..., t^d) and their crossing counts.

Two vertex-disjoint (d-1)-simplices with vertices on the curve cross iff
their merged parameter sequence contains an alternating chain of d+2
vertices, i.e. has at least d+2 maximal runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Tuple

from .hypergraph import Hypergraph, complete_dpartite, disjoint_edge_pairs


@dataclass(frozen=True)
class MomentCurveDrawing:
    """Vertex v sits at parameter ``params[v]``."""

    uniformity: int
    params: Tuple[int, ...]

    def __post_init__(self):
        if len(set(self.params)) != len(self.params):
            raise ValueError("moment-curve parameters must be pairwise distinct")

    def point(self, v: int) -> Tuple[int, ...]:
        return moment_point(self.params[v], self.uniformity)

    def order(self) -> Tuple[int, ...]:
        """Vertices sorted by parameter."""
        return tuple(sorted(range(len(self.params)), key=self.params.__getitem__))


@dataclass(frozen=True)
class CrossingReport:
    total: int
    witnesses: Optional[Tuple[tuple, ...]] = None


def moment_point(t, d: int) -> tuple:
    return tuple(t ** k for k in range(1, d + 1))


def run_count(A: Sequence, B: Sequence) -> int:
    """Number of maximal runs in the A/B label sequence sorted by parameter."""
    merged = sorted([(a, 0) for a in A] + [(b, 1) for b in B])
    runs = 1 if merged else 0
    for (x, la), (y, lb) in zip(merged, merged[1:]):
        if x == y:
            raise ValueError(f"parameter {x} is shared by both simplices")
        runs += la != lb
    return runs


def alternation_cross(A: Sequence, B: Sequence) -> bool:
    d = len(A)
    if len(B) != d:
        raise ValueError("both simplices need d parameters")
    return run_count(A, B) >= d + 2


def count_crossings(h: Hypergraph, drawing: MomentCurveDrawing,
                    witnesses: bool = False) -> CrossingReport:
    params = drawing.params
    if h.vertex_count > len(params):
        raise ValueError(f"drawing places {len(params)} vertices, hypergraph has {h.vertex_count}")
    d = h.uniformity
    found = []
    total = 0
    for e, f in disjoint_edge_pairs(h):
        if run_count([params[v] for v in e], [params[v] for v in f]) >= d + 2:
            total += 1
            if witnesses:
                found.append((e, f))
    return CrossingReport(total, tuple(found) if witnesses else None)


def cm_formula(d: int) -> int:
    """Crossing pairs of K_{2d}^d with all vertices on the moment curve."""
    if d < 2:
        raise ValueError("d must be at least 2")
    top = comb(2 * d - 1, d - 1)
    if d % 2 == 0:
        return top - sum(comb(d, i) * comb(d - 1, i - 1) for i in range(1, d // 2 + 1))
    return top - 1 - sum(comb(d - 1, i) * comb(d, i) for i in range(1, d // 2 + 1))


def cm_bruteforce(d: int) -> int:
    """Count crossing bipartitions of parameters 1..2d by direct enumeration."""
    params = range(1, 2 * d + 1)
    total = 0
    for rest in combinations(range(2, 2 * d + 1), d - 1):
        A = (1,) + rest
        B = [t for t in params if t not in A]
        total += alternation_cross(A, B)
    return total


def ctilde(d: int) -> Fraction:
    return Fraction(cm_formula(d), comb(2 * d - 1, d - 1))


def theorem2_drawing(d: int, n: int) -> MomentCurveDrawing:
    """Parts of K^d_{d x n} placed consecutively along the curve, each in index order."""
    ph = complete_dpartite(d, n)
    order = [v for part in ph.parts for v in part]
    params = [0] * len(order)
    for rank, v in enumerate(order, start=1):
        params[v] = rank
    return MomentCurveDrawing(d, tuple(params))


def theorem2_value(d: int, n: int) -> int:
    return (2 ** (d - 1) - 1) * comb(n, 2) ** d


def knd_max_value(n: int, d: int, conjecture: bool = False) -> int:
    """Maximum crossing pairs over drawings of K_n^d (proven for d = 3, 4).

    Other d raise unless ``conjecture`` is set, in which case the moment-curve
    value c_m^d * C(n, 2d) is returned.
    """
    if n < 2 * d:
        raise ValueError(f"need n >= 2d = {2 * d}")
    if d == 3:
        return 3 * comb(n, 6)
    if d == 4:
        return 13 * comb(n, 8)
    if not conjecture:
        raise ValueError(f"the maximum for d={d} is only conjectured; pass conjecture=True")
    return cm_formula(d) * comb(n, 2 * d)


def identity_drawing(h: Hypergraph) -> MomentCurveDrawing:
    return MomentCurveDrawing(h.uniformity, tuple(range(1, h.vertex_count + 1)))


def parse_drawing(text: str) -> MomentCurveDrawing:
    """Header "d n", then n lines "vertex_index t"."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise ValueError("drawing header must be 'd n'")
    d, n = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != n:
        raise ValueError(f"header announces {n} vertices, found {len(rows) - 1}")
    params: list = [None] * n
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"bad drawing line: {' '.join(row)}")
        v, t = int(row[0]), int(row[1])
        if not 0 <= v < n or params[v] is not None:
            raise ValueError(f"vertex index {v} out of range or repeated")
        params[v] = t
    return MomentCurveDrawing(d, tuple(params))


def serialize_drawing(drawing: MomentCurveDrawing) -> str:
    lines = [f"{drawing.uniformity} {len(drawing.params)}"]
    lines += [f"{v} {t}" for v, t in enumerate(drawing.params)]
    return "\n".join(lines) + "\n"
