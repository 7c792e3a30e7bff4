"""The 8-point order-type database in hexadecimal text form.

Each line holds eight tokens ``xxyy`` of four hex digits: the first byte is
x, the second y.  ``da30`` is the point (218, 48).
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from functools import cmp_to_key
from importlib import resources
from itertools import combinations
from typing import List, Sequence, Tuple

from .exact_geom import DegenerateConfigurationError, orient2d

POINTS_PER_SET = 8
EXPECTED_COUNT = 3315
BUNDLED_DB = "point_set_hex.txt"

_HEX = set(string.hexdigits)


@dataclass(frozen=True)
class OrderTypeEntry:
    index: int  # 1-based line number in the database
    points: Tuple[Tuple[int, int], ...]


@dataclass
class DbReport:
    count: int
    expected: int = EXPECTED_COUNT
    failures: List[str] = field(default_factory=list)
    duplicates: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.count == self.expected and not self.failures

    def as_text(self) -> str:
        lines = [f"entries = {self.count} (expected {self.expected})",
                 f"status = {'pass' if self.ok else 'fail'}"]
        lines += [f"failure: {f}" for f in self.failures]
        lines += [f"duplicate: line {b} repeats line {a}" for a, b in self.duplicates]
        return "\n".join(lines) + "\n"


def parse_token(tok: str) -> Tuple[int, int]:
    if len(tok) != 4 or not set(tok) <= _HEX:
        raise ValueError(f"malformed point token {tok!r}")
    return int(tok[:2], 16), int(tok[2:], 16)


def parse_hex_pointsets(text: str) -> List[OrderTypeEntry]:
    entries = []
    lines = [ln for ln in text.splitlines() if ln.strip()]
    for lineno, line in enumerate(lines, start=1):
        toks = line.split()
        if len(toks) != POINTS_PER_SET:
            raise ValueError(f"line {lineno}: expected {POINTS_PER_SET} tokens, got {len(toks)}")
        try:
            pts = tuple(parse_token(t) for t in toks)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        entries.append(OrderTypeEntry(lineno, pts))
    return entries


def serialize_hex(entries: Sequence[OrderTypeEntry]) -> str:
    return "".join(
        " ".join(f"{x:02x}{y:02x}" for x, y in e.points) + "\n" for e in entries
    )


def format_point_sets(entries: Sequence[OrderTypeEntry]) -> str:
    """One line per entry: "(x1, y1), (x2, y2), ..., (x8, y8), "."""
    return "".join("".join(f"{pt}, " for pt in e.points) + "\n" for e in entries)


def load_db(path=None) -> List[OrderTypeEntry]:
    """Parse ``path``, or the database shipped with the package when omitted."""
    if path is None:
        text = resources.files("maxcross").joinpath("data", BUNDLED_DB).read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_hex_pointsets(text)


def signature(entry) -> Tuple[int, ...]:
    """Orientations of all index triples i < j < k, lexicographic order."""
    pts = entry.points if isinstance(entry, OrderTypeEntry) else entry
    signs = []
    for a, b, c in combinations(pts, 3):
        s = orient2d(a, b, c)
        if s == 0:
            raise DegenerateConfigurationError(f"collinear points {a}, {b}, {c}")
        signs.append(s)
    return tuple(signs)


def _hull_vertices(pts) -> List[int]:
    n = len(pts)
    return [
        i for i in range(n)
        if any(all(orient2d(pts[i], pts[j], pts[k]) > 0 for k in range(n) if k not in (i, j))
               for j in range(n) if j != i)
    ]


def canonical_form(points) -> Tuple[int, ...]:
    """Relabeling- and reflection-invariant key of a general-position order type.

    Every candidate labeling starts at a hull vertex and lists the other
    points by angle around it (in either rotational sense); the key is the
    lexicographically smallest resulting orientation vector.
    """
    pts = list(points)
    n = len(pts)
    best = None
    for h in _hull_vertices(pts):
        for s in (1, -1):
            rest = sorted((i for i in range(n) if i != h),
                          key=cmp_to_key(lambda a, b: -s * orient2d(pts[h], pts[a], pts[b])))
            order = [h] + rest
            key = tuple(s * orient2d(pts[order[a]], pts[order[b]], pts[order[c]])
                        for a, b, c in combinations(range(n), 3))
            if best is None or key < best:
                best = key
    return best


def validate_db(entries: Sequence[OrderTypeEntry], expected: int = EXPECTED_COUNT) -> DbReport:
    report = DbReport(len(entries), expected)
    if len(entries) != expected:
        report.failures.append(f"expected {expected} entries, found {len(entries)}")
    seen = {}
    for e in entries:
        if len(e.points) != POINTS_PER_SET:
            report.failures.append(f"entry {e.index}: {len(e.points)} points")
            continue
        if any(not (0 <= c <= 255) for p in e.points for c in p):
            report.failures.append(f"entry {e.index}: coordinate outside [0, 255]")
        try:
            signature(e)
        except DegenerateConfigurationError as exc:
            report.failures.append(f"entry {e.index}: {exc}")
        if e.points in seen:
            report.duplicates.append((seen[e.points], e.index))
        else:
            seen[e.points] = e.index
    return report
