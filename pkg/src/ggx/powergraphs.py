"""The three graphs attached to a finite group and the class machinery on
the undirected power graph: generated-subgroup classes, closed-neighborhood
classes, and the simple/complex typing of the latter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _bitset as bs
from ._numtheory import prime_power
from .errors import CenterNotTrivialError, GraphCapExceededError
from .graphs import Digraph, Graph
from .groups import FiniteGroup

GRAPH_CAP = 25_000


def _check_graph_cap(g: FiniteGroup, cap: int) -> None:
    if g.order > cap:
        raise GraphCapExceededError(
            f"group of order {g.order} exceeds the graph cap {cap}; pass a larger cap if intended"
        )


def directed_power_graph(g: FiniteGroup, cap: int = GRAPH_CAP) -> Digraph:
    """Arc x -> y whenever y is a power of x, x != y."""
    _check_graph_cap(g, cap)
    n = g.order
    out = bs.zeros(n, n)
    for x in range(n):
        targets = np.array([t for t in set(g.powers(x)) if t != x], dtype=np.int64)
        bs.set_bits(out[x], targets)
    return Digraph(n, list(g.labels), out)


def power_graph(g: FiniteGroup, cap: int = GRAPH_CAP) -> Graph:
    """Underlying simple graph of the directed power graph."""
    _check_graph_cap(g, cap)
    n = g.order
    adj = bs.zeros(n, n)
    for x in range(n):
        targets = np.array([t for t in set(g.powers(x)) if t != x], dtype=np.int64)
        if len(targets) == 0:
            continue
        bs.set_bits(adj[x], targets)
        np.bitwise_or.at(
            adj,
            (targets, np.full(len(targets), x >> 6, dtype=np.int64)),
            np.uint64(1) << np.uint64(x & 63),
        )
    return Graph(n, list(g.labels), adj)


def enhanced_power_graph(g: FiniteGroup, cap: int = GRAPH_CAP) -> Graph:
    """Adjacent iff the two elements lie in a common cyclic subgroup.

    Built by marking each maximal cyclic subgroup as a clique; a cyclic
    subgroup is maximal when it is contained in no strictly larger one.
    """
    _check_graph_cap(g, cap)
    n = g.order
    sub_ids: dict[tuple, int] = {}
    members_by_id: list[tuple] = []
    elem_sub = np.empty(n, dtype=np.int64)
    for x in range(n):
        key = tuple(sorted(g.powers(x)))
        sid = sub_ids.setdefault(key, len(members_by_id))
        if sid == len(members_by_id):
            members_by_id.append(key)
        elem_sub[x] = sid
    non_maximal = np.zeros(len(members_by_id), dtype=bool)
    orders = g.orders()
    for x in range(n):
        ox = int(orders[x])
        for y in g.powers(x):
            if orders[y] < ox:
                non_maximal[elem_sub[y]] = True
    adj = bs.zeros(n, n)
    for sid, members in enumerate(members_by_id):
        if non_maximal[sid]:
            continue
        idx = np.array(members, dtype=np.int64)
        mask = bs.mask_of(idx, n)
        adj[idx] |= mask[None, :]
    diag = np.arange(n, dtype=np.int64)
    adj[diag, diag >> 6] &= ~(np.uint64(1) << (diag & 63).astype(np.uint64))
    return Graph(n, list(g.labels), adj)


def approx_classes(g: FiniteGroup) -> list[list[int]]:
    """Partition of the elements by equal generated subgroup, classes ordered
    by least member."""
    by_key: dict[tuple, list[int]] = {}
    for x in range(g.order):
        by_key.setdefault(tuple(sorted(g.powers(x))), []).append(x)
    return sorted(by_key.values(), key=lambda c: c[0])


def equiv_classes(pg: Graph) -> list[list[int]]:
    """Partition of the vertices by equal closed neighborhood, classes ordered
    by least member."""
    closed = pg.closed_rows()
    _, inverse = np.unique(closed, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    groups: dict[int, list[int]] = {}
    for v in range(pg.n):
        groups.setdefault(int(inverse[v]), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


@dataclass(frozen=True)
class ClassType:
    kind: str  # "simple" | "complex"
    p: int = 0
    r: int = 0
    s: int = 0


@dataclass
class CenterInfo:
    center: list[int]
    trivial: bool


@dataclass
class ClassDecomposition:
    approx: list[list[int]]
    equiv: list[list[int]]
    types: list[ClassType] | None  # aligned with equiv; None if center non-trivial


def center_of_finite_component(pg: Graph) -> CenterInfo:
    """Vertices adjacent to every other vertex."""
    degs = pg.degrees()
    center = [int(v) for v in np.flatnonzero(degs == pg.n - 1)]
    return CenterInfo(center=center, trivial=len(center) == 1)


def classify_class(pg: Graph, classes: list[list[int]], cls: list[int]) -> ClassType:
    """Type a closed-neighborhood class of a trivial-center power graph.

    Complex means both of these hold, otherwise simple:
      1. the iterated common neighborhood has prime-power size p^r and exceeds
         the class by p^(s-1) vertices for some r > s > 0;
      2. no two distinct classes of size <= |C|, each fully adjacent to the
         class, are mutually non-adjacent.
    """
    if not center_of_finite_component(pg).trivial:
        raise CenterNotTrivialError("class typing requires a trivial center")
    return _classify_with_rows(pg.closed_rows(), pg.n, classes, cls)


def _classify_with_rows(
    closed: np.ndarray, n: int, classes: list[list[int]], cls: list[int]
) -> ClassType:
    rep = cls[0]
    nbar_c = closed[rep]
    members = bs.to_indices(nbar_c, n)
    nn = closed[members[0]].copy()
    for v in members[1:]:
        nn &= closed[v]
    m = bs.popcount(nn)
    d = m - len(cls)
    pp = prime_power(m)
    if pp is None:
        return ClassType("simple")
    p, r = pp
    if d == 1:
        s = 1
    else:
        dp = prime_power(d)
        if dp is None or dp[0] != p:
            return ClassType("simple")
        s = dp[1] + 1
    if not (r > s > 0):
        return ClassType("simple")
    # condition 2: over classes fully adjacent to cls with size <= |cls|
    cands = []
    for other in classes:
        if other[0] == cls[0] or len(other) > len(cls):
            continue
        if bs.test_bit(nbar_c, other[0]) and other[0] != rep:
            cands.append(other[0])
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            if not bs.test_bit(closed[cands[i]], cands[j]):
                return ClassType("simple")
    return ClassType("complex", p=p, r=r, s=s)


def class_decomposition(g: FiniteGroup, pg: Graph | None = None) -> ClassDecomposition:
    """Generated-subgroup and closed-neighborhood partitions of the power
    graph, with class types when the center is trivial."""
    if pg is None:
        pg = power_graph(g)
    approx = approx_classes(g)
    equiv = equiv_classes(pg)
    center = center_of_finite_component(pg)
    types = None
    if center.trivial:
        closed = pg.closed_rows()
        types = [_classify_with_rows(closed, pg.n, equiv, c) for c in equiv]
    return ClassDecomposition(approx=approx, equiv=equiv, types=types)
