"""Batch checks of the finitely checkable statements.

Claim tags are the CLI vocabulary:

========  ================================================================
thm1      graphs with no path of k edges have at most (k-1)n/2 edges
thm2      graphs with no cycle of length >= k have at most (k-1)(n-1)/2 edges
thm3      connected P_k-free graphs: the two-construction maximum is exact
thm4      connected P_k-free graphs: s-clique counts obey the H(n,k,a) maximum
cor5      graphs with no cycle of length >= k: s-clique count bound
thm6      Berge-P_k-free r-graphs obey the two-regime edge bound
thm7      more than n hyperedges force a Berge path of length r+1
main      the connected benchmark dominates every oracle maximum
lemma7    a k-edge path of fat edges lifts to a Berge path of length k
lemma8    hyperedges with a thin pair are few in Berge-P_k-free input
obs9      fat hyperedges never outnumber r-cliques of the fat graph
eq1       r-clique counts add up over connected components
lemma10   connected Berge-P_k-free input has no two disjoint long fat cycles
========  ================================================================
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field

from .berge import SearchBudget, expand_fat_path, has_berge_path
from .bounds import (
    bound_connected_eg,
    bound_eg_cycle,
    bound_eg_path,
    bound_gkl,
    bound_luo_connected,
    bound_luo_cycle,
    bound_main,
    gkl_regime,
)
from .cliques import count_cliques
from .fat import FAIL, FatnessParameters, decomposition_report, fat_graph
from .graphalg import circumference, find_path
from .hypergraph import Graph, Hypergraph, connected_components, hypergraph_to_json
from .search import (
    VerificationResult,
    class_stats,
    enumeration_cap,
    extremal_table,
    random_berge_free,
    random_hypergraph,
    verify_theorem7,
)

BOUND_CLAIMS = ("thm1", "thm2", "thm3", "thm4", "cor5", "thm6", "thm7", "main")
RANDOM_CLAIMS = ("lemma7", "lemma8", "obs9", "eq1", "lemma10")
CLAIMS = BOUND_CLAIMS + RANDOM_CLAIMS


@dataclass
class SuiteConfig:
    claims: tuple[str, ...] = CLAIMS
    n_values: tuple[int, ...] = (4, 5, 6, 7)
    # None means every meaningful k for each n
    k_values: tuple[int, ...] | None = None
    r_values: tuple[int, ...] = (3,)
    hyper_k_values: tuple[int, ...] = (3, 4, 5)
    s_values: tuple[int, ...] = (2, 3)
    instances: int = 1000
    random_r_values: tuple[int, ...] = (3, 4)
    random_k_values: tuple[int, ...] = (4, 5)
    random_n_max: int = 12
    seed: int = 0
    node_limit: int = 10**8

    def __post_init__(self):
        unknown = [c for c in self.claims if c not in CLAIMS]
        if unknown:
            raise ValueError(f"unknown claims {unknown}; known: {', '.join(CLAIMS)}")
        if not self.claims or not self.n_values:
            raise ValueError("claims and n_values must be non-empty")

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(node_limit=self.node_limit)

    def to_json(self) -> dict:
        return asdict(self)


def _graph(h: Hypergraph) -> Graph:
    return Graph.from_edges(h.n, h.edges)


def _ks(n: int, ks, lo: int, hi: int) -> list[int]:
    full = range(lo, hi + 1)
    return [k for k in full if ks is None or k in ks]


def _row(res: VerificationResult, ok: bool, h: Hypergraph | None, **fields) -> None:
    res.details.append({**fields, "ok": ok})
    if not ok:
        res.fail(f"bound violated at {fields}", h)


def _graph_ns(cfg: SuiteConfig) -> list[int]:
    return [n for n in cfg.n_values if n <= enumeration_cap(2)]


def _hyper_grid(cfg: SuiteConfig):
    for r in cfg.r_values:
        for n in cfg.n_values:
            if r <= n <= enumeration_cap(r):
                yield n, r


@dataclass
class _GraphFacts:
    h: Hypergraph
    connected: bool
    longest: int
    circ: int
    cliques: dict[int, int] = field(default_factory=dict)


_FACTS: dict[int, list[_GraphFacts]] = {}


def _graph_facts(n: int, s_values) -> list[_GraphFacts]:
    if n not in _FACTS:
        _FACTS[n] = [
            _GraphFacts(st.h, st.connected, st.longest, circumference(_graph(st.h)))
            for st in class_stats(n, 2)
        ]
    facts = _FACTS[n]
    for f in facts:
        for s in s_values:
            if s not in f.cliques:
                f.cliques[s] = count_cliques(_graph(f.h), s)
    return facts


def check_thm1(cfg: SuiteConfig) -> VerificationResult:
    res = VerificationResult("thm1")
    for n in _graph_ns(cfg):
        table = extremal_table(n, 2, _ks(n, cfg.k_values, 1, n - 1), connected=False)
        for k, rec in table.items():
            res.instances += rec.instances_examined
            cap = bound_eg_path(n, k).integer_cap
            _row(res, rec.max_edges <= cap, rec.witness, n=n, k=k, oracle=rec.max_edges, bound=cap)
    return res


def check_thm2(cfg: SuiteConfig) -> VerificationResult:
    res = VerificationResult("thm2")
    for n in _graph_ns(cfg):
        facts = _graph_facts(n, ())
        for k in _ks(n, cfg.k_values, 3, n):
            ok_facts = [f for f in facts if f.circ < k]
            res.instances += len(ok_facts)
            best = max(ok_facts, key=lambda f: f.h.num_edges)
            cap = bound_eg_cycle(n, k).integer_cap
            _row(res, best.h.num_edges <= cap, best.h, n=n, k=k, oracle=best.h.num_edges, bound=cap)
    return res


def check_thm3(cfg: SuiteConfig) -> VerificationResult:
    """Exact equality, not just domination."""
    res = VerificationResult("thm3")
    for n in _graph_ns(cfg):
        table = extremal_table(n, 2, _ks(n, cfg.k_values, 3, n - 1), connected=True)
        for k, rec in table.items():
            res.instances += rec.instances_examined
            cap = bound_connected_eg(n, k).integer_cap
            _row(res, rec.max_edges == cap, rec.witness, n=n, k=k, oracle=rec.max_edges, bound=cap)
    return res


def check_thm4(cfg: SuiteConfig) -> VerificationResult:
    res = VerificationResult("thm4")
    for n in _graph_ns(cfg):
        facts = [f for f in _graph_facts(n, cfg.s_values) if f.connected]
        for k in _ks(n, cfg.k_values, 4, n - 1):
            free = [f for f in facts if f.longest < k]
            res.instances += len(free)
            for s in cfg.s_values:
                best = max(free, key=lambda f: f.cliques[s])
                cap = bound_luo_connected(n, k, s).integer_cap
                _row(res, best.cliques[s] <= cap, best.h, n=n, k=k, s=s,
                     oracle=best.cliques[s], bound=cap)
    return res


def check_cor5(cfg: SuiteConfig) -> VerificationResult:
    res = VerificationResult("cor5")
    for n in _graph_ns(cfg):
        facts = _graph_facts(n, cfg.s_values)
        for k in _ks(n, cfg.k_values, 3, n):
            free = [f for f in facts if f.circ < k]
            res.instances += len(free)
            for s in cfg.s_values:
                best = max(free, key=lambda f: f.cliques[s])
                cap = bound_luo_cycle(n, k, s).integer_cap
                _row(res, best.cliques[s] <= cap, best.h, n=n, k=k, s=s,
                     oracle=best.cliques[s], bound=cap)
    return res


def check_thm6(cfg: SuiteConfig) -> VerificationResult:
    res = VerificationResult("thm6")
    for n, r in _hyper_grid(cfg):
        ks = [k for k in cfg.hyper_k_values if gkl_regime(k, r)]
        for k, rec in extremal_table(n, r, ks, connected=False).items():
            res.instances += rec.instances_examined
            cap = bound_gkl(n, k, r).integer_cap
            _row(res, rec.max_edges <= cap, rec.witness, n=n, k=k, r=r,
                 oracle=rec.max_edges, bound=cap, regime=gkl_regime(k, r))
    return res


def check_thm7(cfg: SuiteConfig) -> VerificationResult:
    res = VerificationResult("thm7")
    for n, r in _hyper_grid(cfg):
        sub = verify_theorem7(n, r, budget=cfg.budget)
        res.instances += sub.instances
        res.details.extend(sub.details)
        if sub.counterexample:
            res.counterexample = res.counterexample or sub.counterexample
    return res


def check_main(cfg: SuiteConfig) -> VerificationResult:
    """The benchmark against connected oracle maxima, for graphs and r-graphs."""
    res = VerificationResult("main")
    grid = [(n, 2, _ks(n, cfg.k_values, 3, n - 1)) for n in _graph_ns(cfg)]
    grid += [(n, r, list(cfg.hyper_k_values)) for n, r in _hyper_grid(cfg)]
    for n, r, ks in grid:
        for k, rec in extremal_table(n, r, ks, connected=True).items():
            res.instances += rec.instances_examined
            if rec.max_edges is None:
                res.details.append({"n": n, "k": k, "r": r, "oracle": None, "ok": True})
                continue
            bound = bound_main(n, k, r)
            _row(res, rec.max_edges <= bound.value, rec.witness, n=n, k=k, r=r,
                 oracle=rec.max_edges, bound=str(bound.value))
    return res


# --------------------------------------------------------------------------
# Randomized claims
# --------------------------------------------------------------------------


def berge_free_instances(
    rng: random.Random,
    count: int,
    r_values=(3, 4),
    k_values=(4, 5),
    n_max: int = 12,
    budget: SearchBudget | None = None,
) -> list[tuple[Hypergraph, int]]:
    """Seeded Berge-P_k-free instances from three samplers in rotation.

    ``uniform`` draws a uniform edge set and rejects it if it has a Berge
    P_k; ``greedy`` grows a random maximal-ish P_k-free r-graph; ``connected``
    grows one that covers every vertex with a connected incidence graph.
    """
    out: list[tuple[Hypergraph, int]] = []
    styles = ("uniform", "greedy", "connected")
    attempt = 0
    while len(out) < count:
        style = styles[attempt % 3]
        attempt += 1
        r = rng.choice(r_values)
        k = rng.choice(k_values)
        n = rng.randint(r + 1, n_max)
        if style == "uniform":
            h = random_hypergraph(rng, n, r, rng.randint(0, 2 * n))
            if has_berge_path(h, k, budget):
                continue
        elif style == "greedy":
            h = random_berge_free(rng, n, r, k, rng.randint(1, 3 * n))
        else:
            h = random_berge_free(rng, rng.randint(r, min(n, 8)), r, k, rng.randint(1, 2 * n), connected=True)
            if h is None:
                continue
        out.append((h, k))
    return out


def fat_path_instances(
    rng: random.Random, count: int, r_values=(3, 4), k_values=(4, 5), n_max: int = 12, max_tries: int | None = None
) -> list[tuple[Hypergraph, int, list[int]]]:
    """Dense random r-graphs whose fat graph has a path of k edges, with that path."""
    out = []
    tries = 0
    max_tries = max_tries or 50 * count
    while len(out) < count and tries < max_tries:
        tries += 1
        r = rng.choice(r_values)
        k = rng.choice(k_values)
        n = rng.randint(k + 1, n_max)
        per_vertex = (1, 3) if r == 3 else (3, 8)
        h = random_hypergraph(rng, n, r, rng.randint(per_vertex[0] * n, per_vertex[1] * n))
        path = find_path(fat_graph(h, FatnessParameters(r, k)), k)
        if path:
            out.append((h, k, path))
    return out


def check_decomposition(cfg: SuiteConfig) -> dict[str, VerificationResult]:
    """lemma8, obs9, eq1 and lemma10 over one shared batch of P_k-free instances."""
    rng = random.Random(cfg.seed)
    res = {c: VerificationResult(c, exhaustive=False) for c in ("lemma8", "obs9", "eq1", "lemma10")}
    fields = {
        "lemma8": "nonfat_verdict",
        "obs9": "fat_clique_verdict",
        "eq1": "component_sum_verdict",
        "lemma10": "disjoint_cycles_verdict",
    }
    batch = berge_free_instances(
        rng, cfg.instances, cfg.random_r_values, cfg.random_k_values, cfg.random_n_max, cfg.budget
    )
    for h, k in batch:
        report = decomposition_report(h, k, cfg.budget)
        for claim, attr in fields.items():
            verdict = getattr(report, attr)
            if claim == "lemma10" and verdict != "pass" and verdict != FAIL:
                continue
            res[claim].instances += 1
            if verdict == FAIL:
                res[claim].fail(f"{attr} failed with k={k}", h, report=report.to_json())

    # component additivity again on plain random graphs, for every clique size
    for _ in range(cfg.instances):
        n = rng.randint(1, cfg.random_n_max)
        g = Graph.from_edges(n, random_hypergraph(rng, n, 2, rng.randint(0, n * (n - 1) // 2)).edges)
        parts = connected_components(g)
        for s in range(2, 6):
            total = count_cliques(g, s)
            summed = sum(count_cliques(g.induced(c), s) for c in parts)
            res["eq1"].instances += 1
            if total != summed:
                res["eq1"].fail(f"component sum {summed} != {total} for s={s}", Hypergraph.from_graph(g))
    return res


def check_lemma7(cfg: SuiteConfig) -> VerificationResult:
    rng = random.Random(cfg.seed + 7)
    res = VerificationResult("lemma7", exhaustive=False)
    batch = fat_path_instances(rng, cfg.instances, cfg.random_r_values, cfg.random_k_values, cfg.random_n_max)
    for h, k, path in batch:
        res.instances += 1
        pairs = list(zip(path, path[1:]))
        try:
            w = expand_fat_path(h, pairs, k)
        except ValueError as exc:
            res.fail(f"expansion failed: {exc}", h, k=k, path=path)
            continue
        if w.length != k or not w.is_valid(h) or not has_berge_path(h, k, cfg.budget):
            res.fail("expanded witness invalid", h, k=k, path=path)
    if res.instances < cfg.instances:
        res.note = f"only {res.instances} of {cfg.instances} requested instances had a fat P_k"
    return res


_CHECKS = {
    "thm1": check_thm1,
    "thm2": check_thm2,
    "thm3": check_thm3,
    "thm4": check_thm4,
    "cor5": check_cor5,
    "thm6": check_thm6,
    "thm7": check_thm7,
    "main": check_main,
    "lemma7": check_lemma7,
}


def verify_claims(cfg: SuiteConfig) -> list[VerificationResult]:
    out = []
    decomposition = None
    for claim in cfg.claims:
        if claim in ("lemma8", "obs9", "eq1", "lemma10"):
            if decomposition is None:
                decomposition = check_decomposition(cfg)
            out.append(decomposition[claim])
        else:
            out.append(_CHECKS[claim](cfg))
    return out


