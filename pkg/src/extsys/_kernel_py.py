"""Pure-Python tuple enumeration, used when the compiled kernel is unavailable."""
from __future__ import annotations

import numpy as np


def enumerate_tuples(lo_list, hi_list, cap):
    """Enumerate index tuples (j_1, ..., j_T) of pairwise non-overlapping paths.

    ``lo_list[t][j]`` and ``hi_list[t][j]`` hold, per column, the least and
    greatest height of path j at position t (absent columns carry +/- sentinels).
    A path may follow the chosen prefix iff every column of the running
    maximum lies strictly below the candidate's minimum.

    Returns (tuples, visited, overflow).
    """
    T = len(lo_list)
    if T == 0:
        return np.zeros((1, 0), dtype=np.int32), 0, False
    lo = [[tuple(int(v) for v in row) for row in np.asarray(a)] for a in lo_list]
    hi = [[tuple(int(v) for v in row) for row in np.asarray(a)] for a in hi_list]
    out = []
    visited = 0
    choice = [0] * T

    def walk(t, floor):
        nonlocal visited
        for j, low in enumerate(lo[t]):
            visited += 1
            if visited > cap:
                return True
            for f, l in zip(floor, low):
                if f >= l:
                    break
            else:
                choice[t] = j
                nxt = tuple(f if f > h else h for f, h in zip(floor, hi[t][j]))
                if t + 1 == T:
                    out.append(tuple(choice))
                elif walk(t + 1, nxt):
                    return True
        return False

    width = len(lo[0][0])
    overflow = walk(0, (-(1 << 60),) * width)
    arr = np.array(out, dtype=np.int32).reshape(len(out), T)
    return arr, visited, overflow
