import numpy as np
import pytest

from ggx.errors import CenterNotTrivialError, GraphCapExceededError
from ggx.groups import build_group
from ggx.powergraphs import (
    approx_classes,
    center_of_finite_component,
    class_decomposition,
    classify_class,
    directed_power_graph,
    enhanced_power_graph,
    equiv_classes,
    power_graph,
)


def power_adjacent_oracle(g, x, y):
    """Exhaustive powering: adjacency iff one element is a power of the other."""
    return y in set(g.powers(x)) or x in set(g.powers(y))


# --- directed power graph -----------------------------------------------------


def test_directed_power_graph_of_c3():
    d = directed_power_graph(build_group("C3"))
    assert set(d.arcs()) == {(1, 2), (2, 1), (1, 0), (2, 0)}


def test_identity_degrees():
    g = build_group("S4")
    d = directed_power_graph(g)
    assert int(d.in_degrees()[0]) == g.order - 1
    assert int(d.out_degrees()[0]) == 0


def test_generator_out_degree():
    d = directed_power_graph(build_group("C12"))
    assert int(d.out_degrees()[1]) == 11


def test_graph_cap():
    g = build_group("S7")
    with pytest.raises(GraphCapExceededError):
        power_graph(g, cap=100)


# --- power graph ----------------------------------------------------------------


def test_power_graph_edge_counts():
    assert power_graph(build_group("C6")).edge_count() == 13
    assert power_graph(build_group("S3")).edge_count() == 6


def test_power_graph_of_prime_cyclic_group_is_complete():
    pg = power_graph(build_group("C7"))
    assert pg.edge_count() == 21


@pytest.mark.parametrize("spec", ["C6", "S3", "D4", "Q8", "A4", "C4xC2"])
def test_power_graph_matches_powering_oracle(spec):
    g = build_group(spec)
    pg = power_graph(g)
    for x in range(g.order):
        for y in range(x + 1, g.order):
            assert pg.adjacent(x, y) == power_adjacent_oracle(g, x, y), (spec, x, y)


def test_arcs_project_onto_power_edges():
    for spec in ["S4", "D6", "C12"]:
        g = build_group(spec)
        assert sorted(directed_power_graph(g).underlying_graph().edges()) == sorted(
            power_graph(g).edges()
        )


# --- enhanced power graph ---------------------------------------------------------


def test_enhanced_of_cyclic_group_is_complete():
    eg = enhanced_power_graph(build_group("C10"))
    assert eg.edge_count() == 45


def test_enhanced_s5_gains_the_example_edge():
    g = build_group("S5")
    pg, eg = power_graph(g), enhanced_power_graph(g)
    a = g.element_from_label("(1 3 2)")
    b = g.element_from_label("(4 5)")
    assert eg.adjacent(a, b) and not pg.adjacent(a, b)


def test_enhanced_d4_equals_power():
    g = build_group("D4")
    assert np.array_equal(enhanced_power_graph(g)._adj, power_graph(g)._adj)


def test_power_edges_nest_in_enhanced():
    for spec in ["S5", "D12", "A5", "C30"]:
        g = build_group(spec)
        pg, eg = power_graph(g), enhanced_power_graph(g)
        assert not np.any(pg._adj & ~eg._adj)


# --- class machinery ---------------------------------------------------------------


def test_approx_classes_c6():
    assert approx_classes(build_group("C6")) == [[0], [1, 5], [2, 4], [3]]


def test_approx_classes_s3():
    g = build_group("S3")
    classes = approx_classes(g)
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 1, 1, 1, 2]
    rot = {g.element_from_label("(1 2 3)"), g.element_from_label("(1 3 2)")}
    assert rot in [set(c) for c in classes]


def test_low_order_elements_are_singleton_classes():
    g = build_group("D10")
    orders = g.orders()
    for cls in approx_classes(g):
        if int(orders[cls[0]]) <= 2:
            assert len(cls) == 1


@pytest.mark.parametrize("spec", ["S4", "D9", "C30", "Q8"])
def test_approx_class_sizes_are_totients(spec):
    from ggx._numtheory import euler_phi

    g = build_group(spec)
    orders = g.orders()
    for cls in approx_classes(g):
        assert len(cls) == euler_phi(int(orders[cls[0]]))


def test_equiv_classes_counts():
    assert len(equiv_classes(power_graph(build_group("S3")))) == 5
    d4_classes = equiv_classes(power_graph(build_group("D4")))
    assert len(d4_classes) == 6
    assert sorted(len(c) for c in d4_classes) == [1, 1, 1, 1, 1, 3]
    from ggx.graphs import Graph

    k5 = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert len(equiv_classes(k5)) == 1


def test_approx_refines_equiv():
    for spec in ["S4", "D8", "A4", "C4xC2"]:
        g = build_group(spec)
        pg = power_graph(g)
        eq = equiv_classes(pg)
        eq_of = {}
        for ci, members in enumerate(eq):
            for v in members:
                eq_of[v] = ci
        for cls in approx_classes(g):
            assert len({eq_of[v] for v in cls}) == 1, spec


def test_classify_d4_rotations_complex():
    g = build_group("D4")
    pg = power_graph(g)
    classes = equiv_classes(pg)
    target = next(c for c in classes if len(c) == 3)
    t = classify_class(pg, classes, target)
    assert (t.kind, t.p, t.r, t.s) == ("complex", 2, 2, 1)


def test_classify_s3_rotation_class_simple():
    g = build_group("S3")
    pg = power_graph(g)
    classes = equiv_classes(pg)
    rot = g.element_from_label("(1 2 3)")
    target = next(c for c in classes if rot in c)
    assert classify_class(pg, classes, target).kind == "simple"


def test_classify_s5_six_cycle_class_simple():
    g = build_group("S5")
    pg = power_graph(g)
    classes = equiv_classes(pg)
    x = g.element_from_label("(1 2 3)(4 5)")
    target = next(c for c in classes if x in c)
    assert classify_class(pg, classes, target).kind == "simple"


def test_classify_requires_trivial_center():
    g = build_group("Q8")
    pg = power_graph(g)
    classes = equiv_classes(pg)
    with pytest.raises(CenterNotTrivialError):
        classify_class(pg, classes, classes[0])


def test_center_values():
    s3 = build_group("S3")
    info = center_of_finite_component(power_graph(s3))
    assert info.center == [0] and info.trivial
    q8 = build_group("Q8")
    info = center_of_finite_component(power_graph(q8))
    assert [q8.labels[v] for v in info.center] == ["1", "-1"] and not info.trivial
    c9 = build_group("C9")
    info = center_of_finite_component(power_graph(c9))
    assert len(info.center) == 9


def test_class_decomposition_skips_types_for_nontrivial_center():
    g = build_group("Q8")
    dec = class_decomposition(g)
    assert dec.types is None
    g2 = build_group("S3")
    dec2 = class_decomposition(g2)
    assert dec2.types is not None and len(dec2.types) == len(dec2.equiv)


def test_neighborhood_equality_for_complex_class_members():
    # members of complex classes see the same closed neighborhood in the
    # power graph and the enhanced power graph
    for spec in ["D4", "D8", "D9", "S4", "S5"]:
        g = build_group(spec)
        pg, eg = power_graph(g), enhanced_power_graph(g)
        dec = class_decomposition(g, pg)
        pg_closed, eg_closed = pg.closed_rows(), eg.closed_rows()
        for cls, t in zip(dec.equiv, dec.types):
            if t.kind == "complex":
                for v in cls:
                    assert np.array_equal(pg_closed[v], eg_closed[v]), (spec, v)


def _center_case_ground_truth(g):
    """Group-side facts used to pin down the non-trivial-center case split."""
    orders = g.orders()
    n = g.order
    cyclic = bool((orders == n).any())
    from ggx._numtheory import factorize, prime_power

    fact = factorize(n) if n > 1 else {}
    is_prime_power_order = len(fact) == 1 or n == 1
    is_pq = sorted(fact.values()) == [1, 1]
    one_prime_exponents = all(prime_power(int(o)) is not None or o == 1 for o in orders.tolist())
    return cyclic, is_prime_power_order, is_pq, one_prime_exponents


def test_center_case_split_matches_group_ground_truth():
    from ggx.corpus import load_corpus
    from ggx.reconstruct import classify_center_case

    for spec in load_corpus():
        g = build_group(spec)
        pg = power_graph(g)
        case = classify_center_case(pg)
        if case.tag == "TrivialCenter":
            continue
        cyclic, is_pp, is_pq, one_prime = _center_case_ground_truth(g)
        if case.tag == "CyclicPrimePower":
            assert cyclic and is_pp, spec
        elif case.tag == "CyclicPQ":
            assert cyclic and is_pq, spec
            assert 2 * len(case.center) >= g.order, spec
        elif case.tag == "CyclicOther":
            assert cyclic and not is_pq and not is_pp, spec
        else:
            assert case.tag == "PGroup"
            assert one_prime and not cyclic, spec
            assert 2 * len(case.center) < g.order, spec
