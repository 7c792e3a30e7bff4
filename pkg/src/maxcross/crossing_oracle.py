"""Crossing counts for arbitrary rectilinear drawings, decided by exact LP."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Tuple

from .exact_geom import Point, as_point, orient, require_general_position, strict_interior_intersect
from .hypergraph import Hypergraph, disjoint_edge_pairs
from .moment_curve import CrossingReport, MomentCurveDrawing


@dataclass(frozen=True)
class GeometricDrawing:
    """Vertex v sits at ``positions[v]`` in R^d; general position is checked on construction."""

    uniformity: int
    positions: Tuple[Point, ...]

    def __post_init__(self):
        for p in self.positions:
            if len(p) != self.uniformity:
                raise ValueError(f"position {p} is not {self.uniformity}-dimensional")
        require_general_position(self.positions, "drawing")

    @classmethod
    def from_coords(cls, d: int, coords) -> "GeometricDrawing":
        return cls(d, tuple(as_point(c) for c in coords))

    @classmethod
    def from_moment_drawing(cls, drawing: MomentCurveDrawing) -> "GeometricDrawing":
        d = drawing.uniformity
        return cls(d, tuple(as_point(drawing.point(v)) for v in range(len(drawing.params))))


def count_crossings_geometric(h: Hypergraph, drawing: GeometricDrawing,
                              witnesses: bool = False) -> CrossingReport:
    if h.vertex_count > len(drawing.positions):
        raise ValueError(f"drawing positions {len(drawing.positions)} vertices, "
                         f"hypergraph has {h.vertex_count}")
    if h.uniformity != drawing.uniformity:
        raise ValueError("drawing dimension differs from hypergraph uniformity")
    pos = drawing.positions
    # general position was checked when the drawing was built
    found = [
        (e, f) for e, f in disjoint_edge_pairs(h)
        if strict_interior_intersect([pos[v] for v in e], [pos[v] for v in f], check=False)
    ]
    return CrossingReport(len(found), tuple(found) if witnesses else None)


def random_general_position(n: int, d: int, seed: int, bound: int = None,
                            max_tries: int = 1000) -> GeometricDrawing:
    """n integer points drawn uniformly from [0, bound)^d, redrawing any point
    that would break general position."""
    if bound is None:
        bound = max(4 * n, 16)
    rng = random.Random(seed)
    pts = []
    tries = 0
    while len(pts) < n:
        if tries >= max_tries:
            raise RuntimeError(f"no general-position sample after {max_tries} tries "
                               f"(n={n}, d={d}, bound={bound})")
        tries += 1
        cand = tuple(Fraction(rng.randrange(bound)) for _ in range(d))
        if cand in pts:
            continue
        # only subsets through the new point can become degenerate
        if all(orient(sub + (cand,)) != 0 for sub in combinations(pts, d)):
            pts.append(cand)
    return GeometricDrawing(d, tuple(pts))


def parse_drawing(text: str) -> GeometricDrawing:
    """Header "d n", then n lines "vertex_index x_1 ... x_d" with rationals like 3/4."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise ValueError("drawing header must be 'd n'")
    d, n = int(rows[0][0]), int(rows[0][1])
    if len(rows) - 1 != n:
        raise ValueError(f"header announces {n} vertices, found {len(rows) - 1}")
    pos: list = [None] * n
    for row in rows[1:]:
        if len(row) != d + 1:
            raise ValueError(f"expected index and {d} coordinates: {' '.join(row)}")
        v = int(row[0])
        if not 0 <= v < n or pos[v] is not None:
            raise ValueError(f"vertex index {v} out of range or repeated")
        pos[v] = tuple(Fraction(c) for c in row[1:])
    return GeometricDrawing(d, tuple(pos))


def serialize_drawing(drawing: GeometricDrawing) -> str:
    lines = [f"{drawing.uniformity} {len(drawing.positions)}"]
    lines += [f"{v} " + " ".join(str(c) for c in p) for v, p in enumerate(drawing.positions)]
    return "\n".join(lines) + "\n"
