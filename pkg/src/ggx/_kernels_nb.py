"""JIT-compiled kernels over packed uint64 adjacency rows.

The three hot loops of the package live here: the induced-path DFS that looks
for odd holes, the subset-enumeration Berge oracle for tiny graphs, and the
clique-neighborhood removal scan.  `_kernels_py` carries the same algorithms
without numba; both paths must produce bit-identical results (same witnesses,
same step counts, same removal orders), which the kernel tests enforce.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U0 = np.uint64(0)
U1 = np.uint64(1)


@njit(cache=True)
def _ctz(word):
    # word is a nonzero uint64
    b = 0
    if word & np.uint64(0xFFFFFFFF) == U0:
        word >>= np.uint64(32)
        b += 32
    if word & np.uint64(0xFFFF) == U0:
        word >>= np.uint64(16)
        b += 16
    if word & np.uint64(0xFF) == U0:
        word >>= np.uint64(8)
        b += 8
    if word & np.uint64(0xF) == U0:
        word >>= np.uint64(4)
        b += 4
    if word & np.uint64(0x3) == U0:
        word >>= np.uint64(2)
        b += 2
    if word & np.uint64(0x1) == U0:
        b += 1
    return b


@njit(cache=True)
def _popcount64(word):
    c = 0
    while word != U0:
        word &= word - U1
        c += 1
    return c


@njit(cache=True)
def _next_candidate(avail_row, adj_row, start, nwords):
    """Smallest index >= start of a set bit in avail_row & adj_row, else -1."""
    w0 = start >> 6
    if w0 >= nwords:
        return -1
    for w in range(w0, nwords):
        word = avail_row[w] & adj_row[w]
        if w == w0:
            sh = np.uint64(start & 63)
            word = (word >> sh) << sh
        if word != U0:
            return (w << 6) + _ctz(word)
    return -1


@njit(cache=True)
def _hole_search_jit(adj, n, min_len, budget):
    """DFS over induced paths; returns (status, path, path_len, steps).

    status 0 = exhausted with no hole, 1 = hole found, 2 = budget ran out.
    Each push of a vertex onto the current path costs one budget step.
    """
    W = adj.shape[1]
    path = np.empty(n + 2, np.int64)
    cur = np.empty(n + 2, np.int64)
    avail = np.zeros((n + 2, W), np.uint64)
    out = np.empty(n + 2, np.int64)
    steps = 0
    for s in range(n):
        steps += 1
        if steps > budget:
            return 2, out, 0, steps
        # avail[0] = {u : s < u < n}
        ws = s >> 6
        tail = n & 63
        for w in range(W):
            if w < ws:
                avail[0, w] = U0
            else:
                word = ~U0
                if w == (n >> 6) and tail != 0:
                    word = (U1 << np.uint64(tail)) - U1
                elif w > (n >> 6):
                    word = U0
                if w == ws:
                    b = (s & 63) + 1
                    if b >= 64:
                        word = U0
                    else:
                        word &= ~((U1 << np.uint64(b)) - U1)
                avail[0, w] = word
        path[0] = s
        cur[0] = s + 1
        depth = 0
        while depth >= 0:
            u = _next_candidate(avail[depth], adj[path[depth]], cur[depth], W)
            if u < 0 or u >= n:
                depth -= 1
                continue
            cur[depth] = u + 1
            if depth >= 1 and (adj[s, u >> 6] >> np.uint64(u & 63)) & U1 != U0:
                cycle_len = depth + 2
                if cycle_len >= min_len and (cycle_len & 1) == 1:
                    for i in range(depth + 1):
                        out[i] = path[i]
                    out[depth + 1] = u
                    return 1, out, cycle_len, steps
                continue
            newd = depth + 1
            if newd == 1:
                for w in range(W):
                    avail[1, w] = avail[0, w]
            else:
                mid = path[depth]
                for w in range(W):
                    avail[newd, w] = avail[depth, w] & ~adj[mid, w]
            avail[newd, u >> 6] &= ~(U1 << np.uint64(u & 63))
            depth = newd
            path[depth] = u
            cur[depth] = s + 1
            steps += 1
            if steps > budget:
                return 2, out, 0, steps
    return 0, out, 0, steps


def hole_search(adj: np.ndarray, n: int, min_len: int, budget: int):
    """Find an odd chordless cycle of length >= min_len.

    Returns (status, path_array, steps) with status 0/1/2 as in the jit body.
    """
    status, out, plen, steps = _hole_search_jit(adj, n, min_len, budget)
    return int(status), np.array(out[:plen], dtype=np.int64), int(steps)


@njit(cache=True)
def _brute_odd_hole_jit(nbr, n):
    total = 1 << n
    for m in range(total):
        k = _popcount64(np.uint64(m))
        if k < 5 or (k & 1) == 0:
            continue
        ok = True
        first = -1
        for v in range(n):
            if (m >> v) & 1:
                if first < 0:
                    first = v
                if _popcount64(np.uint64(nbr[v] & m)) != 2:
                    ok = False
                    break
        if not ok:
            continue
        visited = 1 << first
        frontier = 1 << first
        while frontier != 0:
            nxt = 0
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= nbr[v] & m
            frontier = nxt & ~visited
            visited |= frontier
        if visited == m:
            return 1
    return 0


def brute_odd_hole(nbr: np.ndarray, n: int) -> bool:
    """Exhaustively test whether any odd vertex subset of size >= 5 induces a
    chordless cycle.  nbr holds open-neighborhood bitmasks; n <= 20."""
    return bool(_brute_odd_hole_jit(nbr.astype(np.int64), n))


@njit(cache=True)
def _clique_reduce_jit(adj, n):
    W = adj.shape[1]
    alive = np.ones(n, np.bool_)
    alive_row = np.zeros(W, np.uint64)
    for v in range(n):
        alive_row[v >> 6] |= U1 << np.uint64(v & 63)
    removed = np.empty(n, np.int64)
    nrem = 0
    m = np.empty(W, np.uint64)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not alive[v]:
                continue
            for w in range(W):
                m[w] = adj[v, w] & alive_row[w]
            is_clique = True
            for w in range(W):
                word = m[w]
                while word != U0:
                    b = _ctz(word)
                    word &= word - U1
                    u = (w << 6) + b
                    for w2 in range(W):
                        miss = m[w2] & ~adj[u, w2]
                        if w2 == w:
                            miss &= ~(U1 << np.uint64(b))
                        if miss != U0:
                            is_clique = False
                            break
                    if not is_clique:
                        break
                if not is_clique:
                    break
            if is_clique:
                alive[v] = False
                alive_row[v >> 6] &= ~(U1 << np.uint64(v & 63))
                removed[nrem] = v
                nrem += 1
                changed = True
    return alive, removed, nrem


def clique_reduce(adj: np.ndarray, n: int):
    """Repeatedly delete vertices whose open neighborhood induces a clique.

    Returns (alive bool array, removal order array)."""
    alive, removed, nrem = _clique_reduce_jit(adj, n)
    return np.array(alive, dtype=bool), np.array(removed[:nrem], dtype=np.int64)
