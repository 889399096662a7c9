"""The acceptance criteria as callable checks.

Each criterion function returns a CriterionResult; the CLI `verify`
subcommand and the acceptance test module both run these, so the
command-line gate and the pytest gate are the same code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _bitset as bs
from ._numtheory import prime_divisors, prime_power
from .corpus import cached_enhanced_graph, cached_group, cached_power_graph, load_corpus
from .graphs import (
    Graph,
    berge_brute_force,
    default_budget,
    digraph_isomorphic,
    graphs_equal,
    induced_subgraph,
    is_berge,
    relabel_graph,
    strong_product,
    twin_quotient,
)
from .groups import build_group, is_cyclic_pair, p_elements, prime_power_decomposition
from .perfect import (
    clique_neighborhood_reduction,
    nilpotent_report,
    perfectness_verdict,
    sufficient_condition_check,
    witness_check,
)
from .powergraphs import (
    center_of_finite_component,
    directed_power_graph,
    enhanced_power_graph,
)
from .reconstruct import graph_class_data, reconstruct_directed, reconstruct_enhanced

RELABEL_SEED = 20240601
RANDOM_GRAPH_SEED = 987654321
S8_PENTAGON = ["(1 2 3 4 5)", "(6 7 8)", "(1 2)", "(3 4 5)", "(6 7)"]
A9_HEPTAGON = [
    "(1 2 3 4 5)",
    "(7 8 9)",
    "(1 2)(3 4)",
    "(5 6 7)",
    "(1 2)(8 9)",
    "(3 4 5)",
    "(6 7)(8 9)",
]


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def _result(name: str, failures: list[str], detail_ok: str) -> CriterionResult:
    if failures:
        shown = "; ".join(failures[:5])
        more = f" (+{len(failures) - 5} more)" if len(failures) > 5 else ""
        return CriterionResult(name, False, f"{shown}{more}")
    return CriterionResult(name, True, detail_ok)


def criterion_reconstruction_exactness(corpus: list[str] | None = None) -> CriterionResult:
    corpus = corpus if corpus is not None else load_corpus()
    failures = []
    for spec in corpus:
        pg = cached_power_graph(spec)
        truth = cached_enhanced_graph(spec)
        rec = reconstruct_enhanced(pg)
        if not graphs_equal(rec, truth):
            failures.append(f"{spec}: edge sets differ")
    return _result(
        "reconstruction-exactness",
        failures,
        f"enhanced graph rebuilt exactly for all {len(corpus)} corpus groups",
    )


def criterion_canonicality(corpus: list[str] | None = None, rounds: int = 10) -> CriterionResult:
    corpus = corpus if corpus is not None else load_corpus()
    rng = np.random.default_rng(RELABEL_SEED)
    failures = []
    for spec in corpus:
        pg = cached_power_graph(spec)
        base = reconstruct_enhanced(pg)
        for _ in range(rounds):
            perm = rng.permutation(pg.n).astype(np.int64)
            rec = reconstruct_enhanced(relabel_graph(pg, perm))
            if not graphs_equal(rec, relabel_graph(base, perm)):
                failures.append(f"{spec}: reconstruction does not commute with relabeling")
                break
    return _result(
        "canonicality",
        failures,
        f"{rounds} relabelings per group commute for all {len(corpus)} corpus groups",
    )


def _trivial_center_specs(corpus: list[str]) -> list[str]:
    out = []
    for spec in corpus:
        pg = cached_power_graph(spec)
        if center_of_finite_component(pg).trivial:
            out.append(spec)
    return out


def criterion_directed_reconstruction(corpus: list[str] | None = None) -> CriterionResult:
    corpus = corpus if corpus is not None else load_corpus()
    failures = []
    checked = 0
    for spec in _trivial_center_specs(corpus):
        g = cached_group(spec)
        if g.order > 2000:
            continue
        checked += 1
        pg = cached_power_graph(spec)
        rec = reconstruct_directed(pg)
        truth = directed_power_graph(g)
        data = graph_class_data(pg)
        all_simple = all(t.kind == "simple" for t in data.types)
        if all_simple:
            if rec.arcs() != truth.arcs():
                failures.append(f"{spec}: arc sets differ (all classes simple)")
        elif digraph_isomorphic(rec, truth) is None:
            failures.append(f"{spec}: not isomorphic to the true directed power graph")
    return _result(
        "directed-reconstruction",
        failures,
        f"isomorphic (equal when all classes simple) for {checked} trivial-center groups",
    )


def criterion_verdict_table(budget: int | None = None) -> CriterionResult:
    budget = budget if budget is not None else default_budget()
    failures = []
    for n in range(3, 8):
        v = perfectness_verdict(cached_enhanced_graph(f"S{n}"), budget)
        if v.status != "perfect":
            failures.append(f"S{n}: expected perfect, got {v.status}")
    s8 = build_group("S8")
    es8 = enhanced_power_graph(s8, cap=45_000)
    v8 = perfectness_verdict(es8, budget)
    if v8.status != "imperfect" or v8.witness is None or not v8.witness.validate(es8):
        failures.append(f"S8: expected imperfect with validated witness, got {v8.status}")
    for n in range(3, 9):
        v = perfectness_verdict(cached_enhanced_graph(f"A{n}"), budget)
        if v.status != "perfect":
            failures.append(f"A{n}: expected perfect, got {v.status}")
    if not witness_check(build_group("A9"), A9_HEPTAGON, 7):
        failures.append("A9: heptagon witness did not validate")
    return _result(
        "symmetric-alternating-verdict-table",
        failures,
        "S3..S7 perfect, S8 imperfect (validated), A3..A8 perfect, A9 heptagon validated",
    )


def criterion_counterexamples(budget: int | None = None) -> CriterionResult:
    budget = budget if budget is not None else default_budget()
    failures = []
    g = cached_group("C30xC30")
    eg = cached_enhanced_graph("C30xC30")
    v = perfectness_verdict(eg, budget)
    if v.status != "imperfect":
        failures.append(f"C30xC30: expected imperfect, got {v.status}")
    elif v.witness is None or v.witness.kind != "hole" or len(v.witness.vertices) != 5:
        failures.append("C30xC30: expected a five-vertex hole witness")
    elif not v.witness.validate(eg):
        failures.append("C30xC30: witness failed validation")
    if not witness_check(build_group("S8"), S8_PENTAGON, 5):
        failures.append("S8: pentagon witness did not validate")
    if not witness_check(build_group("A9"), A9_HEPTAGON, 7):
        failures.append("A9: heptagon witness did not validate")
    return _result(
        "counterexamples",
        failures,
        "C30xC30 pentagon found and validated; S8 pentagon and A9 heptagon validate",
    )


def criterion_theorem_audits(corpus: list[str] | None = None, budget: int | None = None) -> CriterionResult:
    corpus = corpus if corpus is not None else load_corpus()
    budget = budget if budget is not None else default_budget()
    failures = []
    for spec in corpus:
        g = cached_group(spec)
        verdict = perfectness_verdict(cached_enhanced_graph(spec), budget)
        cond = sufficient_condition_check(g)
        if cond.holds and verdict.status != "perfect":
            failures.append(f"{spec}: sufficient condition holds but verdict is {verdict.status}")
        nil = nilpotent_report(g)
        if nil.nilpotent:
            want = "perfect" if nil.predicted_perfect else "imperfect"
            if verdict.status != want:
                failures.append(f"{spec}: nilpotent prediction {want} but verdict {verdict.status}")
    a5 = cached_group("A5")
    if sufficient_condition_check(a5).holds:
        failures.append("A5: sufficient condition unexpectedly holds")
    if perfectness_verdict(cached_enhanced_graph("A5"), budget).status != "perfect":
        failures.append("A5: expected perfect")
    return _result(
        "group-criteria-audits",
        failures,
        f"condition=>perfect and nilpotent prediction<=>verdict hold on {len(corpus)} groups;"
        " A5 regression holds",
    )


def _embedding_holds(spec: str) -> str | None:
    g = cached_group(spec)
    primes = prime_divisors(g.order)
    eg = cached_enhanced_graph(spec)
    part_elems = [np.array(p_elements(g, p), dtype=np.int64) for p in primes]
    part_pos = []
    for arr in part_elems:
        pos = {int(v): i for i, v in enumerate(arr)}
        part_pos.append(pos)
    part_graphs = [induced_subgraph(eg, arr) for arr in part_elems]
    images = []
    for x in range(g.order):
        tup = prime_power_decomposition(g, x)
        images.append(tuple(part_pos[i][int(t)] for i, t in enumerate(tup)))
    if len(set(images)) != g.order:
        return f"{spec}: decomposition map is not injective"
    n = g.order
    ok = np.ones((n, n), dtype=bool)
    coords = np.array(images, dtype=np.int64)
    for i, pg in enumerate(part_graphs):
        ci = coords[:, i]
        amat = bs.unpack_rows(pg._adj, pg.n)
        condition = (ci[:, None] == ci[None, :]) | amat[np.ix_(ci, ci)]
        ok &= condition
    np.fill_diagonal(ok, False)
    emat = bs.unpack_rows(eg._adj, eg.n)
    if not np.array_equal(ok, emat):
        return f"{spec}: product adjacency differs from the enhanced graph"
    return None


def criterion_embedding(corpus: list[str] | None = None, budget: int | None = None) -> CriterionResult:
    corpus = corpus if corpus is not None else load_corpus()
    budget = budget if budget is not None else default_budget()
    failures = []
    checked = 0
    for spec in corpus:
        g = cached_group(spec)
        if g.order > 1000 or len(prime_divisors(g.order)) < 2:
            continue
        checked += 1
        err = _embedding_holds(spec)
        if err:
            failures.append(err)
    for spec in ("S3", "C4xC2xC3"):
        g = build_group(spec)
        eg = enhanced_power_graph(g)
        parts = [
            induced_subgraph(eg, np.array(p_elements(g, p), dtype=np.int64))
            for p in prime_divisors(g.order)
        ]
        product = strong_product(parts)
        outcome = is_berge(product, budget)
        if outcome.verdict is not True:
            failures.append(f"{spec}: strong product of prime-part graphs is not Berge")
    return _result(
        "embedding-strong-product",
        failures,
        f"embedding exact on {checked} multi-prime groups; S3 and C4xC2xC3 products are Berge",
    )


def criterion_enhanced_dual_oracle(corpus: list[str] | None = None) -> CriterionResult:
    corpus = corpus if corpus is not None else load_corpus()
    failures = []
    for spec in corpus:
        g = cached_group(spec)
        eg = cached_enhanced_graph(spec)
        bad = None
        for x in range(g.order):
            for y in range(x + 1, g.order):
                if eg.adjacent(x, y) != is_cyclic_pair(g, x, y):
                    bad = (x, y)
                    break
            if bad:
                break
        if bad:
            failures.append(f"{spec}: dual oracle mismatch at {bad}")
    return _result(
        "enhanced-dual-oracle",
        failures,
        f"clique construction matches the pairwise cyclic test on {len(corpus)} groups",
    )


def random_small_graphs(count: int, seed: int = RANDOM_GRAPH_SEED):
    """Deterministic stream of random graphs on at most 12 vertices."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, 13))
        p = float(rng.uniform(0.05, 0.95))
        mat = rng.random((n, n)) < p
        mat = np.triu(mat, 1)
        yield Graph.from_bool(mat | mat.T)


def criterion_search_vs_brute(count: int = 10_000) -> CriterionResult:
    failures = []
    checked = 0
    for g in random_small_graphs(count):
        checked += 1
        want = berge_brute_force(g)
        got = is_berge(g).verdict
        if got != want:
            failures.append(f"graph #{checked}: search says {got}, brute force says {want}")
            break
        q, _ = twin_quotient(g)
        if berge_brute_force(q) != want:
            failures.append(f"graph #{checked}: twin quotient changed the verdict")
            break
        r, _ = clique_neighborhood_reduction(g)
        if berge_brute_force(r) != want:
            failures.append(f"graph #{checked}: clique reduction changed the verdict")
            break
        rq, _ = clique_neighborhood_reduction(q)
        if berge_brute_force(rq) != want:
            failures.append(f"graph #{checked}: composed reductions changed the verdict")
            break
    return _result(
        "search-and-reductions-vs-brute-force",
        failures,
        f"{checked} random graphs agree under search, both reductions, and their composition",
    )


def _ground_truth_class_check(spec: str) -> list[str]:
    g = cached_group(spec)
    pg = cached_power_graph(spec)
    eg = cached_enhanced_graph(spec)
    problems = []
    data = graph_class_data(pg)
    orders = g.orders()
    pg_closed = pg.closed_rows()
    eg_closed = eg.closed_rows()
    sub_key = {}
    for x in range(g.order):
        sub_key[x] = tuple(sorted(g.powers(x)))
    for ci, members in enumerate(data.classes):
        distinct_approx = {sub_key[v] for v in members}
        claimed = data.types[ci]
        if len(distinct_approx) == 1:
            if claimed.kind != "simple":
                problems.append(f"{spec}: class of {members[0]} claimed {claimed.kind}, truth simple")
            continue
        # ground truth for a multi-generated-subgroup class
        y = max(members, key=lambda v: (int(orders[v]), -v))
        pp = prime_power(int(orders[y]))
        if pp is None:
            problems.append(f"{spec}: multi-class of {members[0]} has non-prime-power top order")
            continue
        p, r = pp
        min_order = min(int(orders[v]) for v in members)
        sp = prime_power(min_order)
        if sp is None or sp[0] != p:
            problems.append(f"{spec}: class of {members[0]} has inconsistent member orders")
            continue
        s = sp[1]
        expected = sorted(v for v in g.powers(y) if int(orders[v]) >= p**s)
        if sorted(members) != expected:
            problems.append(f"{spec}: class of {members[0]} does not have the tower form")
            continue
        if (claimed.kind, claimed.p, claimed.r, claimed.s) != ("complex", p, r, s):
            problems.append(
                f"{spec}: class of {members[0]} typed {claimed}, truth complex(p={p},r={r},s={s})"
            )
            continue
        for v in members:
            if not np.array_equal(pg_closed[v], eg_closed[v]):
                problems.append(f"{spec}: power/enhanced neighborhoods differ at {v}")
                break
    return problems


def criterion_class_machinery(corpus: list[str] | None = None) -> CriterionResult:
    corpus = corpus if corpus is not None else load_corpus()
    failures = []
    checked = 0
    for spec in _trivial_center_specs(corpus):
        checked += 1
        failures.extend(_ground_truth_class_check(spec))
    return _result(
        "class-machinery",
        failures,
        f"class typing matches group ground truth on {checked} trivial-center groups",
    )


SUITES: dict[str, list] = {
    "reconstruction": [
        criterion_reconstruction_exactness,
        criterion_canonicality,
        criterion_directed_reconstruction,
        criterion_class_machinery,
    ],
    "perfectness": [
        criterion_verdict_table,
        criterion_counterexamples,
        criterion_theorem_audits,
    ],
    "embedding": [criterion_embedding],
    "reductions": [
        criterion_enhanced_dual_oracle,
        criterion_search_vs_brute,
    ],
}


def run_suite(name: str, corpus: list[str] | None = None, budget: int | None = None):
    """Run one named suite; returns (all_passed, results)."""
    if name not in SUITES:
        raise KeyError(name)
    results = []
    for fn in SUITES[name]:
        kwargs = {}
        code = fn.__code__.co_varnames[: fn.__code__.co_argcount]
        if "corpus" in code:
            kwargs["corpus"] = corpus
        if "budget" in code:
            kwargs["budget"] = budget
        results.append(fn(**kwargs))
    return all(r.passed for r in results), results
