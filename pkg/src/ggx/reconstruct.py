"""Rebuild the enhanced power graph (exactly) and the directed power graph
(up to isomorphism) from a bare undirected power graph.

Everything here sees only the graph: no group is attached.  The center-size
case split decides the easy shapes outright; the trivial-center case runs a
purely graph-visible arc criterion over simple closed-neighborhood classes
and adds an edge between two non-adjacent vertices exactly when some third
vertex has arcs to both.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _bitset as bs
from ._numtheory import euler_phi
from .errors import (
    CenterNotTrivialError,
    NotAPowerGraphError,
    PreconditionViolatedError,
    UnsupportedCenterCaseError,
)
from .graphs import Digraph, Graph, connected, induced_subgraph
from .powergraphs import ClassType, _classify_with_rows, center_of_finite_component, equiv_classes


@dataclass
class CenterCase:
    tag: str  # CyclicPrimePower | CyclicPQ | CyclicOther | PGroup | TrivialCenter
    center: list[int]


def classify_center_case(pg: Graph) -> CenterCase:
    """Case split on the center (full-degree vertices) of a power graph."""
    degs = pg.degrees()
    S = [int(v) for v in np.flatnonzero(degs == pg.n - 1)]
    if len(S) == 0:
        raise NotAPowerGraphError("a finite group's power graph has a full-degree vertex")
    if len(S) == 1:
        return CenterCase("TrivialCenter", S)
    if len(S) == pg.n:
        return CenterCase("CyclicPrimePower", S)
    rest = sorted(set(range(pg.n)) - set(S))
    rest_connected = connected(induced_subgraph(pg, rest))
    if not rest_connected and 2 * len(S) >= pg.n:
        return CenterCase("CyclicPQ", S)
    if rest_connected:
        return CenterCase("CyclicOther", S)
    return CenterCase("PGroup", S)


@dataclass
class GraphClassData:
    """Per-vertex class bookkeeping for the arc criterion, all derived from
    the graph alone."""

    classes: list[list[int]]
    types: list[ClassType]
    class_of: np.ndarray
    sizes: np.ndarray
    center_vertex: int
    simple_mask: np.ndarray  # bool: in a simple class, not the center
    has_witness: np.ndarray  # bool per class: some neighbor forms a singleton
    # class with a non-full closed neighborhood


def graph_class_data(pg: Graph) -> GraphClassData:
    center = center_of_finite_component(pg)
    if not center.trivial:
        raise CenterNotTrivialError("arc machinery requires a trivial center")
    cen = center.center[0]
    closed = pg.closed_rows()
    classes = equiv_classes(pg)
    types = [_classify_with_rows(closed, pg.n, classes, c) for c in classes]
    class_of = np.empty(pg.n, dtype=np.int64)
    sizes = np.empty(pg.n, dtype=np.int64)
    for ci, members in enumerate(classes):
        for v in members:
            class_of[v] = ci
            sizes[v] = len(members)
    simple_mask = np.zeros(pg.n, dtype=bool)
    for ci, members in enumerate(classes):
        if types[ci].kind == "simple":
            for v in members:
                simple_mask[v] = True
    simple_mask[cen] = False
    singleton_row = bs.zeros(1, pg.n)[0]
    degs = pg.degrees()
    singles = np.array(
        [v for v in range(pg.n) if sizes[v] == 1 and degs[v] < pg.n - 1], dtype=np.int64
    )
    bs.set_bits(singleton_row, singles)
    has_witness = np.zeros(len(classes), dtype=bool)
    for ci, members in enumerate(classes):
        rep = members[0]
        has_witness[ci] = bool(np.any(pg._adj[rep] & singleton_row))
    return GraphClassData(
        classes=classes,
        types=types,
        class_of=class_of,
        sizes=sizes,
        center_vertex=cen,
        simple_mask=simple_mask,
        has_witness=has_witness,
    )


def arrow_test(pg: Graph, data: GraphClassData, z: int, x: int) -> bool:
    """Graph-visible criterion for an arc z -> x between vertices of simple
    classes: adjacency with a strictly smaller class; adjacency with an equal
    class plus a singleton-class witness neighbor of z; or equal classes."""
    if z == x:
        raise PreconditionViolatedError("arrow_test needs distinct vertices")
    if z == data.center_vertex or x == data.center_vertex:
        raise PreconditionViolatedError("arrow_test excludes the full-degree vertex")
    if not (data.simple_mask[z] and data.simple_mask[x]):
        raise PreconditionViolatedError("arrow_test is defined on simple classes only")
    cz, cx = data.class_of[z], data.class_of[x]
    if cz == cx:
        return True
    if not pg.adjacent(z, x):
        return False
    if data.sizes[x] < data.sizes[z]:
        return True
    return data.sizes[x] == data.sizes[z] and bool(data.has_witness[cz])


def _class_arrow(pg: Graph, data: GraphClassData, ci: int, cj: int) -> bool:
    """arrow_test lifted to whole classes (it is constant on them)."""
    zi, xj = data.classes[ci][0], data.classes[cj][0]
    if ci == cj:
        return True
    if not pg.adjacent(zi, xj):
        return False
    si, sj = len(data.classes[ci]), len(data.classes[cj])
    if sj < si:
        return True
    return sj == si and bool(data.has_witness[ci])


def reconstruct_enhanced(pg: Graph) -> Graph:
    """Enhanced power graph recovered from the power graph alone.

    A cyclic-group center case yields the complete graph; a one-prime center
    case copies the input; with a trivial center, edges are added between
    non-adjacent simple-class vertices that receive arcs from one common
    simple-class vertex.
    """
    case = classify_center_case(pg)
    n = pg.n
    if case.tag in ("CyclicPrimePower", "CyclicPQ", "CyclicOther"):
        full = bs.full_mask(n)
        adj = np.tile(full, (n, 1))
        _clear_diag(adj, n)
        return Graph(n, list(pg.labels), adj)
    if case.tag == "PGroup":
        return Graph(n, list(pg.labels), pg._adj.copy())
    data = graph_class_data(pg)
    adj = pg._adj.copy()
    simple_class_ids = [
        ci for ci, t in enumerate(data.types)
        if t.kind == "simple" and data.classes[ci][0] != data.center_vertex
    ]
    for ci in simple_class_ids:
        targets = bs.zeros(1, n)[0]
        any_target = False
        for cj in simple_class_ids:
            if _class_arrow(pg, data, ci, cj):
                bs.set_bits(targets, np.array(data.classes[cj], dtype=np.int64))
                any_target = True
        if not any_target:
            continue
        idx = bs.to_indices(targets, n)
        adj[idx] |= targets[None, :]
    _clear_diag(adj, n)
    return Graph(n, list(pg.labels), adj)


def _clear_diag(adj: np.ndarray, n: int) -> None:
    idx = np.arange(n, dtype=np.int64)
    adj[idx, idx >> 6] &= ~(np.uint64(1) << (idx & 63).astype(np.uint64))


def reconstruct_directed(pg: Graph) -> Digraph:
    """A digraph isomorphic to the directed power graph, for trivial-center
    inputs.

    Inside each complex class, vertices are split into blocks of the totient
    sizes phi(p^k), k = s..r, assigned in ascending vertex order; arcs run
    within blocks both ways and from higher blocks to lower ones.  Across
    simple classes the arc criterion decides; every vertex points at the
    full-degree vertex.
    """
    case = classify_center_case(pg)
    if case.tag != "TrivialCenter":
        raise UnsupportedCenterCaseError(
            f"directed reconstruction handles trivial centers only, got {case.tag}"
        )
    data = graph_class_data(pg)
    n = pg.n
    cen = data.center_vertex
    out = bs.zeros(n, n)
    # every non-center vertex has an arc to the center vertex
    wc, bc = cen >> 6, np.uint64(1) << np.uint64(cen & 63)
    out[:, wc] |= bc
    out[cen, wc] &= ~bc
    for ci, members in enumerate(data.classes):
        if members[0] == cen:
            continue
        t = data.types[ci]
        arr = np.array(members, dtype=np.int64)
        if t.kind == "simple":
            mask = bs.mask_of(arr, n)
            out[arr] |= mask[None, :]
        else:
            blocks = []
            start = 0
            for k in range(t.s, t.r + 1):
                w = euler_phi(t.p**k)
                blocks.append(arr[start : start + w])
                start += w
            if start != len(arr):
                raise AssertionError("complex class size does not match its totient blocks")
            prefix = bs.zeros(1, n)[0]
            for block in blocks:
                bmask = bs.mask_of(block, n)
                out[block] |= (prefix | bmask)[None, :]
                prefix |= bmask
    simple_class_ids = [
        ci for ci, t in enumerate(data.types)
        if t.kind == "simple" and data.classes[ci][0] != cen
    ]
    for ci in simple_class_ids:
        targets = bs.zeros(1, n)[0]
        any_t = False
        for cj in simple_class_ids:
            if ci != cj and _class_arrow(pg, data, ci, cj):
                bs.set_bits(targets, np.array(data.classes[cj], dtype=np.int64))
                any_t = True
        if any_t:
            arr = np.array(data.classes[ci], dtype=np.int64)
            out[arr] |= targets[None, :]
    _clear_diag(out, n)
    return Digraph(n, list(pg.labels), out)
