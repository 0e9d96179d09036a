"""Shared fixture tables for the test suite.

Rank tables are bitmask-indexed: entry S is the rank of the subset with
characteristic mask S.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

P1 = [0, 2]                      # one element of rank 2
P2 = [0, 1, 2, 2]                # lift is U_{2,3}
P3 = [0, 2, 2, 3]                # lift is U_{3,4}
P4 = [0, 2, 2, 4]                # (0,2) + (0,2), rank 4
U34 = [min(bin(S).count("1"), 3) for S in range(16)]
U34_MIN_BUILDING = [1, 2, 4, 8, 15]          # singletons and the ground set
B111_MIN_BUILDING = [1, 2, 4, 7]

BOOLEAN_FIBERS = [(1, 1), (2,), (1, 2), (1, 1, 1), (2, 2), (1, 1, 2)]


def boolean_table(fibers):
    import polychow as pc
    return list(pc.boolean_polymatroid(pc.ProjectionMap(fibers)).rank_table)
