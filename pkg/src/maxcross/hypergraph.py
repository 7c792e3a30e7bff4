"""Uniform hypergraphs, standard families and the set-splitting gadget."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Iterable, List, Tuple

Edge = Tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A d-uniform hypergraph on vertices 0..n-1 with sorted, distinct edges."""

    uniformity: int
    vertex_count: int
    edges: Tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        d, n = self.uniformity, self.vertex_count
        if d < 1 or n < 0:
            raise ValueError("uniformity must be positive and vertex count non-negative")
        seen = set()
        for e in self.edges:
            if len(e) != d:
                raise ValueError(f"edge {e} does not have {d} vertices")
            if len(set(e)) != d:
                raise ValueError(f"edge {e} repeats a vertex")
            if tuple(sorted(e)) != tuple(e):
                raise ValueError(f"edge {e} is not sorted")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"edge {e} has a vertex outside [0, {n})")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)

    @classmethod
    def from_edges(cls, d: int, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(d, n, tuple(tuple(sorted(e)) for e in edges))


@dataclass(frozen=True)
class PartitionedHypergraph:
    base: Hypergraph
    parts: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class GadgetResult:
    gadget: Hypergraph
    t: int
    apex: int
    star_edges: Tuple[Edge, ...]


def complete(n: int, d: int) -> Hypergraph:
    if n < d:
        raise ValueError(f"complete hypergraph needs n >= d (got n={n}, d={d})")
    return Hypergraph(d, n, tuple(combinations(range(n), d)))


def complete_dpartite(d: int, n: int) -> PartitionedHypergraph:
    """K^d_{d x n}: part i holds vertices i*n .. i*n + n - 1."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    parts = tuple(tuple(range(i * n, (i + 1) * n)) for i in range(d))
    edges = tuple(sorted(product(*parts)))
    return PartitionedHypergraph(Hypergraph(d, d * n, edges), parts)


def disjoint_edge_pairs(h: Hypergraph) -> List[Tuple[Edge, Edge]]:
    """Unordered vertex-disjoint edge pairs, in lexicographic order of edge index."""
    sets = [frozenset(e) for e in h.edges]
    return [
        (h.edges[i], h.edges[j])
        for i, j in combinations(range(len(sets)), 2)
        if sets[i].isdisjoint(sets[j])
    ]


def disjoint_pairs(h: Hypergraph) -> int:
    return len(disjoint_edge_pairs(h))


def complete_disjoint_pairs(n: int, d: int) -> int:
    """Closed form for complete(n, d): C(n, 2d) * C(2d, d) / 2."""
    return comb(n, 2 * d) * comb(2 * d, d) // 2


def build_gadget(h: Hypergraph) -> GadgetResult:
    """Append t = C(|E|, 2) + 1 star edges sharing a new apex vertex.

    The apex gets index n; star edge i (1-based) uses the apex plus the
    (d-1)-block of new vertices n + (i-1)(d-1) + 1 .. n + i(d-1).
    """
    d, n = h.uniformity, h.vertex_count
    if d < 3:
        raise ValueError("the gadget is defined for d >= 3")
    t = comb(len(h.edges), 2) + 1
    apex = n
    stars = tuple(
        (apex,) + tuple(range(apex + (i - 1) * (d - 1) + 1, apex + i * (d - 1) + 1))
        for i in range(1, t + 1)
    )
    gadget = Hypergraph(d, n + t * (d - 1) + 1, h.edges + stars)
    return GadgetResult(gadget, t, apex, stars)


def random_hypergraph(n: int, d: int, m: int, seed: int) -> Hypergraph:
    """m distinct random d-subsets of n vertices, sorted."""
    if m > comb(n, d):
        raise ValueError("more edges requested than exist")
    rng = random.Random(seed)
    edges = set()
    while len(edges) < m:
        edges.add(tuple(sorted(rng.sample(range(n), d))))
    return Hypergraph(d, n, tuple(sorted(edges)))


def parse(text: str) -> Hypergraph:
    """Read the "d n m" header followed by m edge lines; '#' lines are comments."""
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln[0].startswith("#")]
    if not lines:
        raise ValueError("empty hypergraph file")
    try:
        d, n, m = (int(x) for x in lines[0])
    except ValueError:
        raise ValueError("header must be three integers 'd n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for k, toks in enumerate(body, start=2):
        if len(toks) != d:
            raise ValueError(f"edge line {k}: expected {d} indices, got {len(toks)}")
        e = tuple(int(x) for x in toks)
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ValueError(f"edge line {k}: indices must be strictly increasing")
        edges.append(e)
    return Hypergraph(d, n, tuple(edges))


def serialize(h: Hypergraph) -> str:
    lines = [f"{h.uniformity} {h.vertex_count} {len(h.edges)}"]
    lines += [" ".join(map(str, e)) for e in h.edges]
    return "\n".join(lines) + "\n"
