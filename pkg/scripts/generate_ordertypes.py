#!/usr/bin/env python3
"""Rebuild src/maxcross/data/point_set_hex.txt: one 8-bit representative per
order type of 8 points in general position (3315 types, mirror images
identified).

Order types of n points are grown from those of n-1 points by dropping a new
grid point into every cell of the line arrangement spanned by a
representative.  A cell too thin to hold a point of the 256 x 256 grid is
reached later from a different realization: the 7-point sub-configurations
of the 8-point sets found so far are fed back in until the known total is
reached.  Runs for roughly ten minutes.

    python scripts/generate_ordertypes.py [output]
"""

import sys
import time
from itertools import combinations

import numpy as np

from maxcross.ordertype_db import (EXPECTED_COUNT, OrderTypeEntry, canonical_form,
                                   serialize_hex)

GRID = 256
KNOWN_COUNTS = {3: 1, 4: 2, 5: 3, 6: 16, 7: 135, 8: EXPECTED_COUNT}
# first entry of the published database, kept as line 1
FIRST_ENTRY = ((218, 48), (157, 54), (88, 66), (76, 72), (61, 90), (13, 177), (55, 210), (243, 53))

_X, _Y = (a.ravel() for a in np.meshgrid(np.arange(GRID), np.arange(GRID), indexing="ij"))


def extensions(pts, rng):
    """One random grid point per cell of the arrangement of lines through pairs of ``pts``."""
    signs = np.array([np.sign((c - a) * (_Y - b) - (d - b) * (_X - a))
                      for (a, b), (c, d) in combinations(pts, 2)], dtype=np.int8)
    free = np.nonzero(np.all(signs != 0, axis=0))[0]
    _, cell = np.unique(signs[:, free].T, axis=0, return_inverse=True)
    cell = cell.ravel()
    for c in range(cell.max() + 1):
        members = free[cell == c]
        k = members[rng.integers(len(members))]
        yield pts + [(int(_X[k]), int(_Y[k]))]


def grow(level, rng):
    out = {}
    for reps in level.values():
        for r in reps:
            for e in extensions(r, rng):
                out.setdefault(canonical_form(e), []).append(e)
    return out


def main(path="src/maxcross/data/point_set_hex.txt"):
    rng = np.random.default_rng(1)
    triangle = [(0, 0), (GRID - 1, 0), (0, GRID - 1)]
    level = {canonical_form(triangle): [triangle]}
    for n in range(4, 9):
        t = time.time()
        found = grow(level, rng)
        print(f"n={n}: {len(found)} order types ({time.time() - t:.0f}s)", flush=True)
        if n < 8:
            assert len(found) == KNOWN_COUNTS[n], "cell insertion missed an order type"
            level = {k: v[:3] for k, v in found.items()}

    rounds = 0
    while len(found) < EXPECTED_COUNT:
        rounds += 1
        subs = {}
        for reps in found.values():
            r = reps[rng.integers(len(reps))]
            for i in range(8):
                s = r[:i] + r[i + 1:]
                subs.setdefault(canonical_form(s), []).append(s)
        picked = {k: [v[j] for j in rng.choice(len(v), size=min(2, len(v)), replace=False)]
                  for k, v in subs.items()}
        for key, reps in grow(picked, rng).items():
            found.setdefault(key, reps)
        print(f"feedback round {rounds}: {len(found)} order types", flush=True)
        if rounds > 20:
            raise SystemExit("did not reach the known count")

    first = canonical_form(FIRST_ENTRY)
    keys = [first] + sorted(k for k in found if k != first)
    reps = [FIRST_ENTRY] + [tuple(found[k][0]) for k in keys[1:]]
    entries = [OrderTypeEntry(i, pts) for i, pts in enumerate(reps, start=1)]
    with open(path, "w", newline="\n") as fh:
        fh.write(serialize_hex(entries))
    print(f"wrote {len(entries)} entries to {path}")


if __name__ == "__main__":
    main(*sys.argv[1:])
