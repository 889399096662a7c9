"""Power graphs of finite groups.

Builds the directed power graph, the power graph, and the enhanced power
graph of a finite group; rebuilds the enhanced (exactly) and directed (up to
isomorphism) graphs from the undirected power graph alone; and decides
perfectness of enhanced power graphs through twin-quotient and
clique-neighborhood reductions followed by an exhaustive odd-hole search.
"""

from .graphs import (
    BergeOutcome,
    Digraph,
    Graph,
    HoleWitness,
    QuotientMap,
    berge_brute_force,
    closed_neighborhood,
    complement,
    digraph_isomorphic,
    find_odd_hole,
    induced_subgraph,
    is_berge,
    strong_product,
    twin_quotient,
)
from .groups import (
    FiniteGroup,
    GroupSpec,
    SylowEntry,
    SylowReport,
    build_group,
    cyclic_subgroup,
    element_order,
    is_cyclic_pair,
    p_elements,
    parse_group_spec,
    prime_power_decomposition,
    sylow_report,
)
from .perfect import (
    ConditionReport,
    NilpotentReport,
    PerfectnessVerdict,
    clique_neighborhood_reduction,
    nilpotent_report,
    perfectness_verdict,
    sufficient_condition_check,
    witness_check,
)
from .powergraphs import (
    ClassDecomposition,
    ClassType,
    CenterInfo,
    approx_classes,
    center_of_finite_component,
    class_decomposition,
    classify_class,
    directed_power_graph,
    enhanced_power_graph,
    equiv_classes,
    power_graph,
)
from .reconstruct import (
    CenterCase,
    arrow_test,
    classify_center_case,
    graph_class_data,
    reconstruct_directed,
    reconstruct_enhanced,
)

__version__ = "0.1.0"

__all__ = [
    "BergeOutcome",
    "CenterCase",
    "CenterInfo",
    "ClassDecomposition",
    "ClassType",
    "ConditionReport",
    "Digraph",
    "FiniteGroup",
    "Graph",
    "GroupSpec",
    "HoleWitness",
    "NilpotentReport",
    "PerfectnessVerdict",
    "QuotientMap",
    "SylowEntry",
    "SylowReport",
    "approx_classes",
    "arrow_test",
    "berge_brute_force",
    "build_group",
    "center_of_finite_component",
    "class_decomposition",
    "classify_center_case",
    "classify_class",
    "clique_neighborhood_reduction",
    "closed_neighborhood",
    "complement",
    "cyclic_subgroup",
    "digraph_isomorphic",
    "directed_power_graph",
    "element_order",
    "enhanced_power_graph",
    "equiv_classes",
    "find_odd_hole",
    "graph_class_data",
    "induced_subgraph",
    "is_berge",
    "is_cyclic_pair",
    "nilpotent_report",
    "p_elements",
    "parse_group_spec",
    "perfectness_verdict",
    "power_graph",
    "prime_power_decomposition",
    "reconstruct_directed",
    "reconstruct_enhanced",
    "strong_product",
    "sufficient_condition_check",
    "sylow_report",
    "twin_quotient",
    "witness_check",
]
