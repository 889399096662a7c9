import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ggx.errors import (
    BadVertexError,
    BudgetExhaustedError,
    PreconditionViolatedError,
    ProductCapExceededError,
    SizeCapExceededError,
)
from ggx.graphs import (
    Digraph,
    Graph,
    HoleWitness,
    berge_brute_force,
    closed_neighborhood,
    complement,
    connected,
    digraph_isomorphic,
    find_odd_hole,
    graph_from_json,
    graph_to_json,
    graphs_equal,
    induced_subgraph,
    is_berge,
    relabel_graph,
    strong_product,
    to_csv,
    to_dot,
    twin_quotient,
)


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


@st.composite
def small_graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# --- complement ----------------------------------------------------------------


def test_complement_of_pentagon_is_pentagon():
    comp = complement(cycle_graph(5))
    assert sorted(comp.degrees().tolist()) == [2] * 5
    assert connected(comp)


def test_complement_of_complete_graph_is_edgeless():
    assert complement(complete_graph(6)).edge_count() == 0


@given(small_graphs())
@settings(max_examples=150, deadline=None)
def test_complement_is_an_involution(g):
    assert graphs_equal(complement(complement(g)), g)


# --- induced subgraphs and neighborhoods ----------------------------------------


def test_induced_full_vertex_set_is_identity():
    g = cycle_graph(7)
    assert graphs_equal(induced_subgraph(g, range(7)), g)


def test_induced_single_vertex():
    g = cycle_graph(7)
    sub = induced_subgraph(g, [3])
    assert sub.n == 1 and sub.edge_count() == 0 and sub.labels == ["v3"]


def test_induced_rejects_bad_vertex():
    with pytest.raises(BadVertexError):
        induced_subgraph(cycle_graph(4), [0, 9])


def test_closed_neighborhood_of_star_hub():
    star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert closed_neighborhood(star, 0) == [0, 1, 2, 3, 4]
    assert closed_neighborhood(star, 2) == [0, 2]


def test_closed_neighborhood_of_isolated_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    assert closed_neighborhood(g, 2) == [2]


def test_closed_neighborhood_in_power_graph_of_s5():
    # oracle: w is adjacent to (4 5) iff one is a nonzero power of the other
    from ggx.groups import build_group
    from ggx.powergraphs import power_graph

    g = build_group("S5")
    pg = power_graph(g)
    x = g.element_from_label("(4 5)")
    got = {g.labels[v] for v in closed_neighborhood(pg, x)}
    expected = set()
    for w in range(g.order):
        pw = set(g.powers(w))
        if x in pw or w in set(g.powers(x)):
            expected.add(g.labels[w])
    assert got == expected == {"e", "(4 5)", "(1 2 3)(4 5)", "(1 3 2)(4 5)"}


# --- strong products -------------------------------------------------------------


def test_k2_strong_k2_is_k4():
    k2 = complete_graph(2)
    prod = strong_product([k2, k2])
    assert prod.n == 4 and prod.edge_count() == 6


def test_strong_product_with_k1_is_identity_up_to_labels():
    g = cycle_graph(5)
    prod = strong_product([g, complete_graph(1)])
    assert prod.n == g.n
    assert np.array_equal(prod._adj, g._adj)


def test_star4_strong_k3_vertex_count():
    star4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    prod = strong_product([star4, complete_graph(3)])
    assert prod.n == 12


def test_strong_product_matches_definition():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n1, n2 = rng.integers(1, 6, 2)
        g1 = Graph.from_bool(np.triu(rng.random((n1, n1)) < 0.5, 1))
        g2 = Graph.from_bool(np.triu(rng.random((n2, n2)) < 0.5, 1))
        prod = strong_product([g1, g2])
        for a1 in range(n1):
            for b1 in range(n2):
                for a2 in range(n1):
                    for b2 in range(n2):
                        u, v = a1 * n2 + b1, a2 * n2 + b2
                        if u == v:
                            continue
                        want = (a1 == a2 or g1.adjacent(a1, a2)) and (
                            b1 == b2 or g2.adjacent(b1, b2)
                        )
                        assert prod.adjacent(u, v) == want


@given(small_graphs(max_n=4), small_graphs(max_n=4), small_graphs(max_n=4))
@settings(max_examples=60, deadline=None)
def test_strong_product_reassociates(g1, g2, g3):
    # left fold and right fold index tuples identically under row-major layout
    left = strong_product([g1, g2, g3])
    right = strong_product([g1, strong_product([g2, g3])])
    assert left.n == right.n
    assert np.array_equal(left._adj, right._adj)


def test_strong_product_cap():
    with pytest.raises(ProductCapExceededError):
        strong_product([complete_graph(10)] * 3, cap=100)


# --- twin quotient ---------------------------------------------------------------


def test_twin_quotient_of_complete_graph():
    q, qmap = twin_quotient(complete_graph(7))
    assert q.n == 1
    assert len(qmap.classes[0]) == 7


def test_twin_quotient_of_pentagon_is_identity():
    g = cycle_graph(5)
    q, qmap = twin_quotient(g)
    assert q.n == 5 and graphs_equal(q, g)


def test_twin_quotient_representatives_are_least_members():
    g = complete_graph(4)
    _, qmap = twin_quotient(g)
    assert qmap.representatives.tolist() == [0]
    assert qmap.class_of.tolist() == [0, 0, 0, 0]


@given(small_graphs(max_n=9))
@settings(max_examples=120, deadline=None)
def test_twin_quotient_preserves_berge_verdict(g):
    q, _ = twin_quotient(g)
    assert berge_brute_force(q) == berge_brute_force(g)


def test_twin_quotient_of_enhanced_a5_is_a_star():
    # 6 five-element, 10 three-element and 15 two-element maximal cyclic
    # subgroups collapse to 31 leaves around the identity
    from ggx.groups import build_group
    from ggx.powergraphs import enhanced_power_graph

    q, qmap = twin_quotient(enhanced_power_graph(build_group("A5")))
    assert q.n == 32
    degs = sorted(q.degrees().tolist())
    assert degs == [1] * 31 + [31]
    assert len(qmap.classes) == 32


# --- odd holes -------------------------------------------------------------------


def test_pentagon_hole_found():
    w = find_odd_hole(cycle_graph(5))
    assert w is not None and w.kind == "hole" and len(w.vertices) == 5


def test_complete_graph_has_no_hole():
    assert find_odd_hole(complete_graph(10)) is None


@pytest.mark.parametrize("n,expect", [(5, 5), (6, None), (7, 7), (8, None), (9, 9)])
def test_cycle_holes(n, expect):
    w = find_odd_hole(cycle_graph(n))
    if expect is None:
        assert w is None
    else:
        assert w is not None and len(w.vertices) == expect and w.validate(cycle_graph(n))


def test_min_len_threshold():
    assert find_odd_hole(cycle_graph(5), min_len=7) is None
    w = find_odd_hole(cycle_graph(9), min_len=7)
    assert w is not None and len(w.vertices) == 9


def test_min_len_must_be_odd_and_at_least_five():
    with pytest.raises(PreconditionViolatedError):
        find_odd_hole(cycle_graph(5), min_len=3)
    with pytest.raises(PreconditionViolatedError):
        find_odd_hole(cycle_graph(5), min_len=6)


def test_budget_exhaustion_is_distinct_from_no_hole():
    # C9 with min_len 9 needs many extensions; a tiny budget must not report "none"
    with pytest.raises(BudgetExhaustedError):
        find_odd_hole(cycle_graph(9), min_len=9, budget=3)


def test_petersen_graph_has_pentagon():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    g = Graph.from_edges(10, outer + inner + spokes)
    w = find_odd_hole(g)
    assert w is not None and len(w.vertices) == 5 and w.validate(g)


# --- berge -----------------------------------------------------------------------


def test_c7_is_not_berge():
    out = is_berge(cycle_graph(7))
    assert out.verdict is False and out.witness.kind == "hole"


def test_c7_complement_is_not_berge():
    out = is_berge(complement(cycle_graph(7)))
    assert out.verdict is False and out.witness.kind == "antihole"
    assert out.witness.validate(complement(cycle_graph(7)))


def test_p4_is_berge():
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert is_berge(p4).verdict is True


@given(small_graphs(max_n=10))
@settings(max_examples=150, deadline=None)
def test_search_matches_brute_force(g):
    assert is_berge(g).verdict == berge_brute_force(g)


def brute_has_odd_hole(g, min_len):
    """Subset enumeration for arbitrary minimum lengths."""
    from itertools import combinations

    for k in range(min_len, g.n + 1, 2):
        for subset in combinations(range(g.n), k):
            degs = [sum(1 for u in subset if u != v and g.adjacent(u, v)) for v in subset]
            if any(d != 2 for d in degs):
                continue
            seen = {subset[0]}
            frontier = [subset[0]]
            while frontier:
                v = frontier.pop()
                for u in subset:
                    if u not in seen and g.adjacent(u, v):
                        seen.add(u)
                        frontier.append(u)
            if len(seen) == k:
                return True
    return False


@given(small_graphs(max_n=9))
@settings(max_examples=100, deadline=None)
def test_search_matches_brute_force_at_min_len_seven(g):
    # exercises the length-aware degree bounds in the pre-filter
    found = find_odd_hole(g, min_len=7)
    assert (found is not None) == brute_has_odd_hole(g, 7)
    if found is not None:
        assert len(found.vertices) >= 7 and found.validate(g)


def test_witness_validation_rejects_wrong_shapes():
    g = cycle_graph(5)
    assert not HoleWitness("hole", [0, 1, 2]).validate(g)  # too short
    assert not HoleWitness("hole", [0, 1, 2, 3, 4, 0, 1]).validate(g)  # repeats
    assert not HoleWitness("antihole", [0, 1, 2, 3, 4]).validate(complete_graph(5))
    assert HoleWitness("hole", [0, 1, 2, 3, 4]).validate(g)


# --- digraph isomorphism ----------------------------------------------------------


def test_identical_digraphs_isomorphic():
    d = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert digraph_isomorphic(d, d) is not None


def test_directed_triangle_vs_reversal():
    d1 = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    d2 = Digraph.from_arcs(3, [(1, 0), (2, 1), (0, 2)])
    assert digraph_isomorphic(d1, d2) is not None


def test_directed_triangle_vs_path():
    d1 = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    d2 = Digraph.from_arcs(3, [(0, 1), (1, 2)])
    assert digraph_isomorphic(d1, d2) is None


def test_relabeled_digraph_isomorphic():
    rng = np.random.default_rng(11)
    for _ in range(20):
        n = int(rng.integers(2, 30))
        arcs = set()
        for _ in range(int(rng.integers(0, 3 * n))):
            i, j = rng.integers(0, n, 2)
            if i != j:
                arcs.add((int(i), int(j)))
        d1 = Digraph.from_arcs(n, sorted(arcs))
        perm = rng.permutation(n)
        d2 = Digraph.from_arcs(n, sorted((int(perm[i]), int(perm[j])) for i, j in arcs))
        mapping = digraph_isomorphic(d1, d2)
        assert mapping is not None
        for i, j in arcs:
            assert d2.has_arc(mapping[i], mapping[j])


def test_digraph_isomorphic_size_cap():
    d = Digraph.from_arcs(3, [(0, 1)])
    with pytest.raises(SizeCapExceededError):
        digraph_isomorphic(d, d, cap=2)


def test_digraph_isomorphic_refutes_structurally_close_digraphs():
    # directed power graphs of two non-isomorphic groups of equal order
    from ggx.groups import build_group
    from ggx.powergraphs import directed_power_graph

    a = directed_power_graph(build_group("C4xC4"))
    b = directed_power_graph(build_group("C8xC2"))
    assert a.n == b.n
    assert digraph_isomorphic(a, b) is None


# --- relabeling --------------------------------------------------------------------


def test_relabel_moves_adjacency_and_labels():
    g = Graph.from_edges(3, [(0, 1)], labels=["a", "b", "c"])
    perm = np.array([2, 0, 1])  # old->new
    h = relabel_graph(g, perm)
    assert h.labels == ["b", "c", "a"]
    assert h.adjacent(2, 0) and not h.adjacent(0, 1)


# --- serialization -------------------------------------------------------------------


def test_graph_json_round_trip():
    g = Graph.from_edges(4, [(0, 2), (1, 3)], labels=["w", "x", "y", "z"])
    back = graph_from_json(graph_to_json(g))
    assert graphs_equal(back, g)


def test_digraph_json_round_trip():
    d = Digraph.from_arcs(3, [(0, 1), (2, 1)], labels=["a", "b", "c"])
    back = graph_from_json(graph_to_json(d))
    assert isinstance(back, Digraph)
    assert back.arcs() == d.arcs() and back.labels == d.labels


def test_json_rejects_unknown_kind():
    with pytest.raises(ValueError):
        graph_from_json(json.dumps({"version": 1, "kind": "hypergraph", "labels": []}))


def test_dot_single_vertex():
    g = Graph.from_edges(1, [], labels=["v0"])
    assert to_dot(g) == 'graph {\n  "v0";\n}\n'


def test_dot_quotes_labels():
    g = Graph.from_edges(2, [(0, 1)], labels=['say "hi"', "b\\c"])
    text = to_dot(g)
    assert '"say \\"hi\\""' in text and '"b\\\\c"' in text


def test_dot_digraph_arrow():
    d = Digraph.from_arcs(2, [(0, 1)], labels=["a", "b"])
    assert '"a" -> "b";' in to_dot(d)


def test_csv_k3():
    g = complete_graph(3)
    assert to_csv(g) == "source,target\nv0,v1\nv0,v2\nv1,v2\n"


def test_csv_escapes_commas():
    g = Graph.from_edges(2, [(0, 1)], labels=["(1,0)", "(0,1)"])
    assert to_csv(g) == 'source,target\n"(1,0)","(0,1)"\n'


def test_export_is_deterministic():
    g = Graph.from_edges(5, [(0, 4), (1, 3), (0, 2)])
    assert graph_to_json(g) == graph_to_json(g)
    assert to_dot(g) == to_dot(g)
