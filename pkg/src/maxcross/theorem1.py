"""Balanced-partition tallies over the 8-point order types.

For each order type the line-separable 2-sets and 4-sets are found once;
every balanced 4/4 coloring then counts the separable sets it splits evenly.
The maximum of that count over all (order type, coloring) pairs, plus one,
bounds the number of crossing pairs in any 4-dimensional drawing of K_8^4.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Dict, List, Sequence, Tuple

from .exact_geom import DegenerateConfigurationError, is_convex_position_2d, orient2d
from .ordertype_db import OrderTypeEntry

N_POINTS = 8
TWO_SUBSETS = tuple(combinations(range(N_POINTS), 2))
# the first 35 of the 70 4-subsets: each unordered 4/4 split appears once
FOUR_SUBSETS = tuple(islice(combinations(range(N_POINTS), 4), 35))


@dataclass(frozen=True)
class FeasibleSets:
    two_sets: Tuple[Tuple[int, ...], ...]
    four_sets: Tuple[Tuple[int, ...], ...]

    def all_sets(self):
        return self.two_sets + self.four_sets


@dataclass(frozen=True)
class ColoringTally:
    per_coloring: Dict[str, int]
    max_count: int
    argmax: Tuple[str, ...]


@dataclass(frozen=True)
class EntryResult:
    index: int
    points: tuple
    feasible: FeasibleSets
    tally: ColoringTally
    convex: bool


@dataclass
class Theorem1Report:
    results: List[EntryResult]
    global_max: int
    argmax_entries: List[int]
    argmax_colorings: Tuple[str, ...]
    argmax_all_convex: bool

    @property
    def crossing_bound(self) -> int:
        return self.global_max + 1

    def summary_line(self) -> str:
        return f"global max balanced = {self.global_max}; crossing bound = {self.crossing_bound}"


def balanced_colorings() -> List[str]:
    """All 70 bit strings of length 8 with four ones, in lexicographic order."""
    return [format(v, "08b") for v in range(256) if bin(v).count("1") == 4]


def _chirotope(points):
    n = len(points)
    chi = {}
    for i, j, k in combinations(range(n), 3):
        s = orient2d(points[i], points[j], points[k])
        if s == 0:
            raise DegenerateConfigurationError(f"points {i}, {j}, {k} are collinear")
        for a, b, c, sign in ((i, j, k, s), (j, k, i, s), (k, i, j, s),
                              (j, i, k, -s), (i, k, j, -s), (k, j, i, -s)):
            chi[a, b, c] = sign
    return chi


def _separable(chi, S, T) -> bool:
    # same inner-common-tangent test as exact_geom.separable_2d, on a sign table
    for p in S:
        for q in T:
            sx = {chi[p, q, r] for r in S if r != p}
            sy = {chi[p, q, r] for r in T if r != q}
            if len(sx) <= 1 and len(sy) <= 1 and (not sx or not sy or sx != sy):
                return True
    return False


def feasible_sets(entry) -> FeasibleSets:
    pts = entry.points if isinstance(entry, OrderTypeEntry) else tuple(entry)
    if len(pts) != N_POINTS:
        raise ValueError(f"need {N_POINTS} points, got {len(pts)}")
    chi = _chirotope(pts)
    everything = set(range(N_POINTS))

    def keep(subsets):
        return tuple(S for S in subsets if _separable(chi, S, sorted(everything - set(S))))

    return FeasibleSets(keep(TWO_SUBSETS), keep(FOUR_SUBSETS))


def _ones(indices, coloring) -> int:
    return sum(coloring[i] == "1" for i in indices)


def balanced_count(fs: FeasibleSets, coloring: str) -> int:
    return (sum(_ones(S, coloring) == 1 for S in fs.two_sets)
            + sum(_ones(S, coloring) == 2 for S in fs.four_sets))


def has_monochromatic_feasible_4set(fs: FeasibleSets, coloring: str) -> bool:
    # a 4-set is monochromatic iff its complement is
    return any(_ones(S, coloring) in (0, 4) for S in fs.four_sets)


def tally(fs: FeasibleSets) -> ColoringTally:
    per = {c: balanced_count(fs, c) for c in balanced_colorings()}
    top = max(per.values())
    return ColoringTally(per, top, tuple(c for c, v in per.items() if v == top))


def analyze_entry(entry: OrderTypeEntry) -> EntryResult:
    fs = feasible_sets(entry)
    return EntryResult(entry.index, entry.points, fs, tally(fs),
                       is_convex_position_2d(entry.points))


def verify_theorem1(entries: Sequence[OrderTypeEntry], workers: int = 1) -> Theorem1Report:
    """Tally every entry and take the maximum over all (entry, coloring) pairs.

    Colorings with a monochromatic separable 4-set are included: a max over
    a superset is still an upper bound.  The result depends on entry order
    only, not on scheduling.
    """
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(analyze_entry, entries, chunksize=64))
    else:
        results = [analyze_entry(e) for e in entries]
    if not results:
        raise ValueError("empty database")
    top = max(r.tally.max_count for r in results)
    winners = [r for r in results if r.tally.max_count == top]
    colorings = tuple(sorted({c for r in winners for c in r.tally.argmax}))
    return Theorem1Report(results, top, [r.index for r in winners], colorings,
                          all(r.convex for r in winners))


def summary_line(result: EntryResult) -> str:
    """``[(x1, y1), ...]: [max, ['c', ...]]``"""
    return f"{list(result.points)}: {[result.tally.max_count, list(result.tally.argmax)]}"


def write_summary(report: Theorem1Report, path) -> None:
    with open(path, "w", newline="\n") as fh:
        for r in report.results:
            fh.write(summary_line(r) + "\n")


def _cell(indices, coloring) -> str:
    bits = "".join(coloring[i] for i in indices)
    ones = bits.count("1")
    if ones in (0, len(bits)):
        kind = "M"
    elif 2 * ones == len(bits):
        kind = "B"
    else:
        kind = "I"
    return f"{bits} - {kind}"


def entry_csv(result: EntryResult, with_colors: bool = True) -> str:
    """Per-entry table: points, feasible sets and (optionally) one column per coloring."""
    sets = result.feasible.all_sets()
    colorings = balanced_colorings() if with_colors else []
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["PointSet", "Feasible_Set_Size", "Feasible_Set_Indices",
                "Feasible_Set_Points"] + colorings)
    for i in range(max(len(result.points), len(sets))):
        row = [str(result.points[i]) if i < len(result.points) else ""]
        if i < len(sets):
            S = sets[i]
            row += [len(S), str(S), str([result.points[k] for k in S])]
            row += [_cell(S, c) for c in colorings]
        else:
            row += ["", "", ""] + [""] * len(colorings)
        w.writerow(row)
    if with_colors:
        w.writerow(["", "", "", "Total Balanced Sets"]
                   + [result.tally.per_coloring[c] for c in colorings])
    return out.getvalue()


def write_entry_csvs(report: Theorem1Report, directory) -> None:
    os.makedirs(directory, exist_ok=True)
    for r in report.results:
        path = os.path.join(directory, f"point_set_{r.index}_with_color_check.csv")
        with open(path, "w", newline="") as fh:
            fh.write(entry_csv(r))
