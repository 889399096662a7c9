"""Simple graphs and digraphs over packed bitset adjacency, plus the generic
operations the rest of the package builds on: complements, induced subgraphs,
strong products, twin quotients, odd-hole search, Berge recognition, and a
small-scale digraph isomorphism test.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field

import numpy as np

from . import _bitset as bs
from . import _kernels
from .errors import (
    BadVertexError,
    BudgetExhaustedError,
    PreconditionViolatedError,
    ProductCapExceededError,
    SizeCapExceededError,
)

DEFAULT_BUDGET = 10**8
PRODUCT_CAP = 10**6
ISO_SIZE_CAP = 2000


def default_budget() -> int:
    """Hole-search budget: GGX_BUDGET env var, else 10**8 extension steps."""
    v = os.environ.get("GGX_BUDGET", "").strip()
    if v:
        try:
            return int(v)
        except ValueError:
            raise ValueError(f"GGX_BUDGET is not an integer: {v!r}") from None
    return DEFAULT_BUDGET


class Graph:
    """Simple undirected graph: no loops, symmetric adjacency."""

    __slots__ = ("n", "labels", "_adj")

    def __init__(self, n: int, labels: list[str], adj: np.ndarray):
        self.n = n
        self.labels = labels
        self._adj = adj

    @classmethod
    def from_edges(cls, n: int, edges, labels: list[str] | None = None) -> "Graph":
        adj = bs.zeros(n, n)
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise BadVertexError(f"bad edge ({i}, {j}) for {n} vertices")
            adj[i, j >> 6] |= np.uint64(1) << np.uint64(j & 63)
            adj[j, i >> 6] |= np.uint64(1) << np.uint64(i & 63)
        return cls(n, labels if labels is not None else _default_labels(n), adj)

    @classmethod
    def from_bool(cls, mat: np.ndarray, labels: list[str] | None = None) -> "Graph":
        n = mat.shape[0]
        m = np.asarray(mat, dtype=bool).copy()
        np.fill_diagonal(m, False)
        m |= m.T
        g = cls(n, labels if labels is not None else _default_labels(n), bs.pack_bool_matrix(m))
        return g

    def adjacent(self, i: int, j: int) -> bool:
        return bs.test_bit(self._adj[i], j)

    def neighbors(self, i: int) -> np.ndarray:
        return bs.to_indices(self._adj[i], self.n)

    def degrees(self) -> np.ndarray:
        return bs.popcount_rows(self._adj)

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in bs.to_indices(self._adj[i], self.n):
                if j > i:
                    out.append((i, int(j)))
        return out

    def closed_rows(self) -> np.ndarray:
        """Packed closed-neighborhood rows (adjacency with self bits set)."""
        rows = self._adj.copy()
        idx = np.arange(self.n, dtype=np.int64)
        rows[idx, idx >> 6] |= np.uint64(1) << (idx & 63).astype(np.uint64)
        return rows

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


class Digraph:
    """Simple directed graph: no loops; both directions may be present."""

    __slots__ = ("n", "labels", "_out")

    def __init__(self, n: int, labels: list[str], out: np.ndarray):
        self.n = n
        self.labels = labels
        self._out = out

    @classmethod
    def from_arcs(cls, n: int, arcs, labels: list[str] | None = None) -> "Digraph":
        out = bs.zeros(n, n)
        for i, j in arcs:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise BadVertexError(f"bad arc ({i}, {j}) for {n} vertices")
            out[i, j >> 6] |= np.uint64(1) << np.uint64(j & 63)
        return cls(n, labels if labels is not None else _default_labels(n), out)

    def has_arc(self, i: int, j: int) -> bool:
        return bs.test_bit(self._out[i], j)

    def successors(self, i: int) -> np.ndarray:
        return bs.to_indices(self._out[i], self.n)

    def out_degrees(self) -> np.ndarray:
        return bs.popcount_rows(self._out)

    def in_degrees(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.int64)
        chunk = max(1, (1 << 24) // max(1, self.n))
        for i0 in range(0, self.n, chunk):
            out += bs.unpack_rows(self._out[i0 : i0 + chunk], self.n).sum(axis=0)
        return out

    def arc_count(self) -> int:
        return int(self.out_degrees().sum())

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in bs.to_indices(self._out[i], self.n):
                out.append((i, int(j)))
        return out

    def underlying_graph(self) -> Graph:
        m = bs.unpack_rows(self._out, self.n)
        return Graph.from_bool(m | m.T, list(self.labels))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count()})"


def _default_labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


@dataclass
class QuotientMap:
    """Partition of a vertex set into equal-closed-neighborhood classes."""

    class_of: np.ndarray
    representatives: np.ndarray
    classes: list[np.ndarray] = field(default_factory=list)


@dataclass
class HoleWitness:
    """An odd chordless cycle (length >= 5) in a graph or in its complement."""

    kind: str  # "hole" | "antihole"
    vertices: list[int]

    def validate(self, g: Graph) -> bool:
        vs = self.vertices
        k = len(vs)
        if k < 5 or k % 2 == 0 or len(set(vs)) != k:
            return False
        if any(not (0 <= v < g.n) for v in vs):
            return False
        want_edge = self.kind == "hole"
        if self.kind not in ("hole", "antihole"):
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = (j - i == 1) or (i == 0 and j == k - 1)
                adjacent = g.adjacent(vs[i], vs[j])
                if consecutive and adjacent != want_edge:
                    return False
                if not consecutive and adjacent == want_edge:
                    return False
        return True


@dataclass
class BergeOutcome:
    verdict: bool | None
    witness: HoleWitness | None
    steps: int
    exhausted_side: str | None = None


def complement(g: Graph) -> Graph:
    full = bs.full_mask(g.n)
    comp = (~g._adj) & full[None, :]
    idx = np.arange(g.n, dtype=np.int64)
    w = idx >> 6
    bit = np.uint64(1) << (idx & 63).astype(np.uint64)
    comp[idx, w] &= ~bit
    return Graph(g.n, list(g.labels), comp)


def induced_subgraph(g: Graph, vertices) -> Graph:
    X = np.unique(np.asarray(list(vertices), dtype=np.int64))
    if len(X) and (X[0] < 0 or X[-1] >= g.n):
        raise BadVertexError(f"vertex out of range for {g.n}-vertex graph")
    k = len(X)
    sub = bs.zeros(k, k)
    chunk = max(1, (1 << 24) // max(1, g.n))
    for i0 in range(0, k, chunk):
        rows = bs.unpack_rows(g._adj[X[i0 : i0 + chunk]], g.n)
        sub[i0 : i0 + chunk] = bs.pack_bool_matrix(rows[:, X])
    labels = [g.labels[int(x)] for x in X]
    return Graph(k, labels, sub)


def closed_neighborhood(g: Graph, x: int) -> list[int]:
    if not (0 <= x < g.n):
        raise BadVertexError(f"vertex {x} out of range")
    out = set(int(j) for j in g.neighbors(x))
    out.add(x)
    return sorted(out)


def strong_product(factors: list[Graph], cap: int = PRODUCT_CAP) -> Graph:
    """Strong product of one or more graphs, folded left to right.

    Distinct tuples are adjacent when every coordinate pair is equal or
    adjacent in its factor.
    """
    if not factors:
        raise PreconditionViolatedError("strong_product needs at least one factor")
    total = 1
    for f in factors:
        total *= f.n
        if total > cap:
            raise ProductCapExceededError(f"product would have {total}+ vertices (cap {cap})")
    acc = factors[0]
    if len(factors) == 1:
        return Graph(acc.n, list(acc.labels), acc._adj.copy())
    for nxt in factors[1:]:
        acc = _strong_pair(acc, nxt)
    return acc


def _strong_pair(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    n = n1 * n2
    c1 = bs.unpack_rows(g1.closed_rows(), n1)
    c2 = bs.unpack_rows(g2.closed_rows(), n2)
    adj = bs.zeros(n, n)
    for a in range(n1):
        block = (c1[a][None, :, None] & c2[:, None, :]).reshape(n2, n)
        adj[a * n2 : (a + 1) * n2] = bs.pack_bool_matrix(block)
    idx = np.arange(n, dtype=np.int64)
    adj[idx, idx >> 6] &= ~(np.uint64(1) << (idx & 63).astype(np.uint64))
    labels = [f"({la},{lb})" for la in g1.labels for lb in g2.labels]
    return Graph(n, labels, adj)


def twin_quotient(g: Graph) -> tuple[Graph, QuotientMap]:
    """Collapse each maximal set of vertices with equal closed neighborhoods
    to its lowest-index member and return the induced subgraph on those
    representatives."""
    closed = g.closed_rows()
    _, inverse = np.unique(closed, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    order = np.argsort(inverse, kind="stable")
    # group members per raw class; order classes by least member
    raw_classes: dict[int, list[int]] = {}
    for v in range(g.n):
        raw_classes.setdefault(int(inverse[v]), []).append(v)
    classes = sorted(raw_classes.values(), key=lambda c: c[0])
    class_of = np.empty(g.n, dtype=np.int64)
    reps = np.empty(len(classes), dtype=np.int64)
    out_classes = []
    for ci, members in enumerate(classes):
        reps[ci] = members[0]
        arr = np.array(members, dtype=np.int64)
        out_classes.append(arr)
        class_of[arr] = ci
    quotient = induced_subgraph(g, reps)
    return quotient, QuotientMap(class_of=class_of, representatives=reps, classes=out_classes)


def _components_of(g: Graph) -> list[np.ndarray]:
    """Connected components, ordered by least vertex, members ascending."""
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        visited = np.zeros(bs.word_count(g.n), dtype=np.uint64)
        bs.set_bits(visited, np.array([start], dtype=np.int64))
        frontier = [start]
        members = [start]
        while frontier:
            nxt_row = np.zeros_like(visited)
            for v in frontier:
                nxt_row |= g._adj[v]
            nxt_row &= ~visited
            visited |= nxt_row
            frontier = [int(j) for j in bs.to_indices(nxt_row, g.n)]
            members.extend(frontier)
        members = sorted(members)
        seen[np.array(members, dtype=np.int64)] = True
        comps.append(np.array(members, dtype=np.int64))
    return comps


def _is_bipartite(g: Graph) -> bool:
    color = np.full(g.n, -1, dtype=np.int8)
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            cv = color[v]
            for u in g.neighbors(v):
                u = int(u)
                if color[u] < 0:
                    color[u] = 1 - cv
                    queue.append(u)
                elif color[u] == cv:
                    return False
    return True


def _degree_prune_alive(g: Graph, min_len: int) -> np.ndarray:
    """Drop vertices that cannot lie on any induced cycle of length
    >= min_len: such a vertex needs 2 neighbors and at least min_len - 3
    non-neighbors among the cycle's members, so iterated local degree
    bounds are safe."""
    need_bar = min_len - 3
    alive = np.ones(g.n, dtype=bool)
    chunk = max(1, (1 << 24) // max(1, g.n))
    while True:
        cnt = int(alive.sum())
        if cnt == 0:
            return alive
        deg = np.zeros(g.n, dtype=np.int64)
        for i0 in range(0, g.n, chunk):
            rows = bs.unpack_rows(g._adj[i0 : i0 + chunk], g.n)
            deg[i0 : i0 + chunk] = (rows & alive[None, :]).sum(axis=1)
        bad = alive & ((deg < 2) | ((cnt - 1 - deg) < need_bar))
        if not bad.any():
            return alive
        alive &= ~bad


def _hole_pipeline(g: Graph, min_len: int, budget: int) -> tuple[int, list[int], int]:
    """Component-wise odd-hole search with two safe pre-filters: the degree
    bounds above shrink each piece (re-splitting it when that disconnects
    it), and bipartite pieces are skipped outright.  Pieces are processed in
    least-vertex order; the step budget is shared."""
    spent = 0
    queue: list[tuple[Graph, np.ndarray]] = [
        (induced_subgraph(g, comp), comp) for comp in _components_of(g)
    ]
    while queue:
        sub, idx = queue.pop(0)
        if sub.n < min_len:
            continue
        alive = _degree_prune_alive(sub, min_len)
        cnt = int(alive.sum())
        if cnt < min_len:
            continue
        if cnt < sub.n:
            kept = np.flatnonzero(alive)
            core = induced_subgraph(sub, kept)
            core_idx = idx[kept]
            queue = [
                (induced_subgraph(core, c), core_idx[c]) for c in _components_of(core)
            ] + queue
            continue
        if _is_bipartite(sub):
            continue
        status, path, steps = _kernels.hole_search(sub._adj, sub.n, min_len, budget - spent)
        spent += steps
        if status == 2:
            return 2, [], spent
        if status == 1:
            return 1, [int(idx[v]) for v in path], spent
    return 0, [], spent


def find_odd_hole(
    g: Graph, min_len: int = 5, budget: int | None = None
) -> HoleWitness | None:
    """Search for an induced odd cycle of length >= min_len.

    Deterministic DFS over induced paths in ascending vertex order, run per
    connected component after the safe pre-filters; raises
    BudgetExhaustedError when the step budget runs out, which is a distinct
    outcome from "no hole".
    """
    if min_len < 5 or min_len % 2 == 0:
        raise PreconditionViolatedError(f"min_len must be odd and >= 5, got {min_len}")
    if budget is None:
        budget = default_budget()
    status, path, steps = _hole_pipeline(g, min_len, budget)
    if status == 2:
        raise BudgetExhaustedError(steps)
    if status == 1:
        witness = HoleWitness(kind="hole", vertices=path)
        if not witness.validate(g):
            raise AssertionError(f"search produced an invalid witness: {witness}")
        return witness
    return None


def is_berge(g: Graph, budget: int | None = None) -> BergeOutcome:
    """Berge test: no odd hole in g and none in its complement.

    The complement side only searches lengths >= 7 because a five-cycle's
    complement is again a five-cycle and is caught by the first search.
    """
    if budget is None:
        budget = default_budget()
    status, path, steps = _hole_pipeline(g, 5, budget)
    if status == 2:
        return BergeOutcome(None, None, steps, "hole")
    if status == 1:
        w = HoleWitness("hole", path)
        if not w.validate(g):
            raise AssertionError("invalid hole witness")
        return BergeOutcome(False, w, steps)
    comp = complement(g)
    status2, path2, steps2 = _hole_pipeline(comp, 7, budget - steps)
    total = steps + steps2
    if status2 == 2:
        return BergeOutcome(None, None, total, "antihole")
    if status2 == 1:
        w = HoleWitness("antihole", path2)
        if not w.validate(g):
            raise AssertionError("invalid antihole witness")
        return BergeOutcome(False, w, total)
    return BergeOutcome(True, None, total)


def berge_brute_force(g: Graph) -> bool:
    """Subset-enumeration Berge oracle for graphs with at most 20 vertices.

    Enumerates every odd vertex subset of size >= 5 in the graph and its
    complement and tests whether it induces a chordless cycle.  Independent
    of the DFS used by find_odd_hole.
    """
    if g.n > 20:
        raise SizeCapExceededError("brute-force oracle is for graphs with <= 20 vertices")
    masks = _open_masks(g)
    if _kernels.brute_odd_hole(masks, g.n):
        return False
    comp = complement(g)
    if _kernels.brute_odd_hole(_open_masks(comp), comp.n):
        return False
    return True


def _open_masks(g: Graph) -> np.ndarray:
    out = np.zeros(g.n, dtype=np.int64)
    for i in range(g.n):
        m = 0
        for j in g.neighbors(i):
            m |= 1 << int(j)
        out[i] = m
    return out


def relabel_graph(g: Graph, perm: np.ndarray) -> Graph:
    """Image of g under perm, where perm[old] = new."""
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.empty(g.n, dtype=np.int64)
    inv[perm] = np.arange(g.n, dtype=np.int64)
    mat = bs.unpack_rows(g._adj, g.n)
    mat = mat[inv][:, inv]
    labels = [""] * g.n
    for old in range(g.n):
        labels[perm[old]] = g.labels[old]
    return Graph(g.n, labels, bs.pack_bool_matrix(mat))


def graphs_equal(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.labels == b.labels and bool(np.array_equal(a._adj, b._adj))


def connected(g: Graph) -> bool:
    """Connectivity by packed BFS; the empty graph counts as connected."""
    if g.n <= 1:
        return True
    visited = np.zeros(bs.word_count(g.n), dtype=np.uint64)
    frontier = [0]
    bs.set_bits(visited, np.array([0], dtype=np.int64))
    seen = 1
    while frontier:
        nxt_row = np.zeros_like(visited)
        for v in frontier:
            nxt_row |= g._adj[v]
        nxt_row &= ~visited
        visited |= nxt_row
        frontier = [int(j) for j in bs.to_indices(nxt_row, g.n)]
        seen += len(frontier)
    return seen == g.n


# ---------------------------------------------------------------------------
# digraph isomorphism


def digraph_isomorphic(a: Digraph, b: Digraph, cap: int = ISO_SIZE_CAP) -> list[int] | None:
    """Backtracking isomorphism search with degree/color refinement.

    Returns a vertex map (list: a-vertex -> b-vertex) verified to preserve
    and reflect arcs, or None after exhaustive refutation.
    """
    if a.n > cap or b.n > cap:
        raise SizeCapExceededError(f"digraph_isomorphic intended for <= {cap} vertices")
    if a.n != b.n or a.arc_count() != b.arc_count():
        return None
    n = a.n
    if n == 0:
        return []
    a_out = [list(map(int, a.successors(v))) for v in range(n)]
    b_out = [list(map(int, b.successors(v))) for v in range(n)]
    a_in = _predecessors(a)
    b_in = _predecessors(b)

    ca, cb = _joint_refine(a_out, a_in, b_out, b_in)
    if sorted(ca) != sorted(cb):
        return None

    cand_by_color: dict[int, list[int]] = {}
    for v in range(n):
        cand_by_color.setdefault(cb[v], []).append(v)

    order = sorted(range(n), key=lambda v: (len(cand_by_color.get(ca[v], [])), v))
    mapping = [-1] * n
    used = [False] * n
    mapped: list[int] = []

    def consistent(v: int, w: int) -> bool:
        for u in mapped:
            mu = mapping[u]
            if a.has_arc(v, u) != b.has_arc(w, mu):
                return False
            if a.has_arc(u, v) != b.has_arc(mu, w):
                return False
        return True

    def backtrack(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in cand_by_color.get(ca[v], []):
            if used[w] or not consistent(v, w):
                continue
            mapping[v] = w
            used[w] = True
            mapped.append(v)
            if backtrack(k + 1):
                return True
            mapped.pop()
            used[w] = False
            mapping[v] = -1
        return False

    if not backtrack(0):
        return None
    for v in range(n):
        for u in a_out[v]:
            if not b.has_arc(mapping[v], mapping[u]):
                raise AssertionError("isomorphism verification failed")
    return mapping


def _predecessors(d: Digraph) -> list[list[int]]:
    preds: list[list[int]] = [[] for _ in range(d.n)]
    for v in range(d.n):
        for u in d.successors(v):
            preds[int(u)].append(v)
    return preds


def _joint_refine(a_out, a_in, b_out, b_in) -> tuple[list[int], list[int]]:
    n = len(a_out)
    intern: dict[tuple, int] = {}

    def color_init(outs, ins):
        cols = []
        for v in range(n):
            key = ("deg", len(outs[v]), len(ins[v]))
            cols.append(intern.setdefault(key, len(intern)))
        return cols

    ca = color_init(a_out, a_in)
    cb = color_init(b_out, b_in)
    while True:
        intern_round: dict[tuple, int] = {}

        def step(cols, outs, ins):
            new = []
            for v in range(n):
                key = (
                    cols[v],
                    tuple(sorted(cols[u] for u in outs[v])),
                    tuple(sorted(cols[u] for u in ins[v])),
                )
                new.append(intern_round.setdefault(key, len(intern_round)))
            return new

        na = step(ca, a_out, a_in)
        nb = step(cb, b_out, b_in)
        if len(set(na)) == len(set(ca)) and len(set(nb)) == len(set(cb)):
            return na, nb
        ca, cb = na, nb


# ---------------------------------------------------------------------------
# serialization


def graph_to_json_obj(g: Graph | Digraph) -> dict:
    if isinstance(g, Digraph):
        return {
            "version": 1,
            "kind": "digraph",
            "labels": list(g.labels),
            "arcs": [[int(i), int(j)] for i, j in g.arcs()],
        }
    return {
        "version": 1,
        "kind": "graph",
        "labels": list(g.labels),
        "edges": [[int(i), int(j)] for i, j in g.edges()],
    }


def graph_from_json_obj(obj: dict) -> Graph | Digraph:
    if not isinstance(obj, dict) or obj.get("version") != 1:
        raise ValueError("graph JSON must be an object with version 1")
    kind = obj.get("kind")
    labels = obj.get("labels")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ValueError("graph JSON needs a list of string labels")
    n = len(labels)
    if kind == "graph":
        edges = obj.get("edges", [])
        return Graph.from_edges(n, [(int(i), int(j)) for i, j in edges], labels)
    if kind == "digraph":
        arcs = obj.get("arcs", [])
        return Digraph.from_arcs(n, [(int(i), int(j)) for i, j in arcs], labels)
    raise ValueError(f"unknown graph kind: {kind!r}")


def graph_to_json(g: Graph | Digraph) -> str:
    return json.dumps(graph_to_json_obj(g), indent=2, sort_keys=True) + "\n"


def graph_from_json(text: str) -> Graph | Digraph:
    return graph_from_json_obj(json.loads(text))


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph | Digraph) -> str:
    lines = []
    if isinstance(g, Digraph):
        lines.append("digraph {")
        for v in range(g.n):
            lines.append(f"  {_dot_quote(g.labels[v])};")
        for i, j in g.arcs():
            lines.append(f"  {_dot_quote(g.labels[i])} -> {_dot_quote(g.labels[j])};")
    else:
        lines.append("graph {")
        for v in range(g.n):
            lines.append(f"  {_dot_quote(g.labels[v])};")
        for i, j in g.edges():
            lines.append(f"  {_dot_quote(g.labels[i])} -- {_dot_quote(g.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(g: Graph | Digraph) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "target"])
    pairs = g.arcs() if isinstance(g, Digraph) else g.edges()
    for i, j in pairs:
        writer.writerow([g.labels[i], g.labels[j]])
    return buf.getvalue()
