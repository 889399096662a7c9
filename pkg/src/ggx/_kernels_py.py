"""No-jit fallback kernels.

Same algorithms as `_kernels_nb`, but the inner loops run on Python integers
used as bitsets (one int per adjacency row).  Selected with GGX_NUMBA=0 or
when numba is missing.  Outputs must match the jit path bit for bit.
"""

from __future__ import annotations

import numpy as np

from ._bitset import rows_to_ints


def hole_search(adj: np.ndarray, n: int, min_len: int, budget: int):
    """Find an odd chordless cycle of length >= min_len.

    Returns (status, path_array, steps); status 0 = none, 1 = found,
    2 = budget exhausted.  One budget step per vertex pushed onto the path.
    """
    rows = rows_to_ints(adj)
    full = (1 << n) - 1
    path = [0] * (n + 2)
    cur = [0] * (n + 2)
    avail = [0] * (n + 2)
    steps = 0
    for s in range(n):
        steps += 1
        if steps > budget:
            return 2, np.empty(0, dtype=np.int64), steps
        avail[0] = full & ~((1 << (s + 1)) - 1)
        path[0] = s
        cur[0] = s + 1
        depth = 0
        adj_s = rows[s]
        while depth >= 0:
            cand = avail[depth] & rows[path[depth]] & ~((1 << cur[depth]) - 1)
            if cand == 0:
                depth -= 1
                continue
            u = (cand & -cand).bit_length() - 1
            cur[depth] = u + 1
            if depth >= 1 and (adj_s >> u) & 1:
                cycle_len = depth + 2
                if cycle_len >= min_len and cycle_len % 2 == 1:
                    out = path[: depth + 1] + [u]
                    return 1, np.array(out, dtype=np.int64), steps
                continue
            newd = depth + 1
            if newd == 1:
                avail[1] = avail[0]
            else:
                avail[newd] = avail[depth] & ~rows[path[depth]]
            avail[newd] &= ~(1 << u)
            depth = newd
            path[depth] = u
            cur[depth] = s + 1
            steps += 1
            if steps > budget:
                return 2, np.empty(0, dtype=np.int64), steps
    return 0, np.empty(0, dtype=np.int64), steps


def brute_odd_hole(nbr: np.ndarray, n: int) -> bool:
    """Exhaustively test whether any odd vertex subset of size >= 5 induces a
    chordless cycle.  nbr holds open-neighborhood bitmasks; n <= 20."""
    masks = [int(x) for x in nbr]
    for m in range(1 << n):
        k = m.bit_count()
        if k < 5 or k % 2 == 0:
            continue
        ok = True
        first = -1
        for v in range(n):
            if (m >> v) & 1:
                if first < 0:
                    first = v
                if (masks[v] & m).bit_count() != 2:
                    ok = False
                    break
        if not ok:
            continue
        visited = 1 << first
        frontier = 1 << first
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[v] & m
            frontier = nxt & ~visited
            visited |= frontier
        if visited == m:
            return True
    return False


def clique_reduce(adj: np.ndarray, n: int):
    """Repeatedly delete vertices whose open neighborhood induces a clique.

    Returns (alive bool array, removal order array)."""
    rows = rows_to_ints(adj)
    alive = np.ones(n, dtype=bool)
    alive_mask = (1 << n) - 1
    removed: list[int] = []
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not alive[v]:
                continue
            m = rows[v] & alive_mask
            is_clique = True
            mm = m
            while mm:
                u = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                if m & ~rows[u] & ~(1 << u):
                    is_clique = False
                    break
            if is_clique:
                alive[v] = False
                alive_mask &= ~(1 << v)
                removed.append(v)
                changed = True
    return alive, np.array(removed, dtype=np.int64)
