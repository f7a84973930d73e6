"""Exhaustive extremal numbers and batch verification at small parameters.

Two exact modes back :func:`extremal_number`:

* ``enumerate``: walk every isomorphism class on ``n`` vertices (caps keep
  this to ``n <= 8`` for graphs and ``n <= 6`` for 3-graphs);
* ``branch``: include/exclude branch and bound over the candidate
  hyperedges, pruning as soon as a Berge path of length ``k`` appears. It is
  exact when it finishes inside the node budget.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .berge import SearchBudget, has_berge_path, longest_berge_path
from .canon import canonical_form
from .hypergraph import Graph, Hypergraph, hypergraph_to_json, is_connected

DEFAULT_CAPS = {2: 8, 3: 6}
DEFAULT_CAP = 6


class CapExceeded(ValueError):
    pass


def enumeration_cap(r: int) -> int:
    return DEFAULT_CAPS.get(r, DEFAULT_CAP)


@lru_cache(maxsize=None)
def _class_edge_lists(n: int, r: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Canonical edge lists of every class, by edge count then lexicographically."""
    pool = list(combinations(range(n), r))
    level: set = {()}
    out: list = [()]
    while level:
        nxt = set()
        for rep in level:
            present = set(rep)
            for e in pool:
                if e not in present:
                    nxt.add(canonical_form(n, tuple(sorted((*rep, e)))))
        out.extend(sorted(nxt))
        level = nxt
    return tuple(out)


def enumerate_hypergraphs(
    n: int, r: int, connected: bool = False, cap: int | None = None
) -> Iterator[Hypergraph]:
    """One representative per isomorphism class of r-graphs on exactly ``n`` vertices."""
    cap = enumeration_cap(r) if cap is None else cap
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap} for r={r}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    for edges in _class_edge_lists(n, r):
        h = Hypergraph(n, r, edges)
        if not connected or is_connected(h):
            yield h


@dataclass(frozen=True)
class ClassStats:
    h: Hypergraph
    connected: bool
    longest: int


@lru_cache(maxsize=None)
def class_stats(n: int, r: int) -> tuple[ClassStats, ...]:
    """Connectivity and exact longest Berge path for every class on ``n`` vertices."""
    stats = []
    for h in enumerate_hypergraphs(n, r):
        res = longest_berge_path(h)
        if not res.exact:
            raise RuntimeError(f"longest path search did not finish on {h}")
        stats.append(ClassStats(h, is_connected(h), res.length))
    return tuple(stats)


@dataclass
class ExtremalRecord:
    n: int
    k: int
    r: int
    connected: bool
    max_edges: int | None
    witness: Hypergraph | None
    instances_examined: int
    exhaustive: bool
    mode: str = "enumerate"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "connected": self.connected,
            "max_edges": self.max_edges,
            "witness": hypergraph_to_json(self.witness) if self.witness else None,
            "instances_examined": self.instances_examined,
            "exhaustive": self.exhaustive,
            "mode": self.mode,
        }


def _enumerate_extremal(n: int, k: int, r: int, connected: bool, budget) -> ExtremalRecord:
    by_size: dict[int, list[Hypergraph]] = {}
    for h in enumerate_hypergraphs(n, r, connected):
        by_size.setdefault(h.num_edges, []).append(h)
    examined = 0
    for m in sorted(by_size, reverse=True):
        for h in by_size[m]:
            examined += 1
            if not has_berge_path(h, k, budget):
                return ExtremalRecord(n, k, r, connected, m, h, examined, True)
    return ExtremalRecord(n, k, r, connected, None, None, examined, True)


class _OutOfNodes(Exception):
    pass


def _branch_extremal(n: int, k: int, r: int, connected: bool, budget: SearchBudget) -> ExtremalRecord:
    pool = list(combinations(range(n), r))
    best_edges: list | None = None
    best = -1
    nodes = 0
    examined = 0

    def accept(chosen: list) -> None:
        nonlocal best, best_edges, examined
        examined += 1
        h = Hypergraph(n, r, chosen)
        if connected and not is_connected(h):
            return
        if len(chosen) > best:
            best, best_edges = len(chosen), list(chosen)

    def walk(i: int, chosen: list) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget.node_limit:
            raise _OutOfNodes
        if len(chosen) + len(pool) - i <= best:
            return
        if i == len(pool):
            accept(chosen)
            return
        chosen.append(pool[i])
        if not has_berge_path(Hypergraph(n, r, chosen), k):
            walk(i + 1, chosen)
        chosen.pop()
        walk(i + 1, chosen)

    exhaustive = True
    try:
        if k == 1 or not pool:
            accept([])
        else:
            # any non-empty class has a copy containing the first candidate
            accept([])
            walk(1, [pool[0]])
    except _OutOfNodes:
        exhaustive = False
    witness = Hypergraph(n, r, best_edges) if best_edges is not None else None
    return ExtremalRecord(
        n, k, r, connected, best if best >= 0 else None, witness, examined, exhaustive, "branch"
    )


def extremal_number(
    n: int,
    k: int,
    r: int,
    connected: bool,
    mode: str = "auto",
    budget: SearchBudget | None = None,
) -> ExtremalRecord:
    """Most hyperedges in an (optionally connected) n-vertex r-graph with no Berge P_k.

    ``max_edges`` is ``None`` when no instance qualifies (for instance no
    connected P_k-free r-graph on ``n`` vertices exists). In ``branch`` mode a
    budget overrun yields the best value found with ``exhaustive=False``.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    budget = budget or SearchBudget()
    if mode == "auto":
        mode = "enumerate" if n <= enumeration_cap(r) else "branch"
    if mode == "enumerate":
        return _enumerate_extremal(n, k, r, connected, budget)
    if mode == "branch":
        return _branch_extremal(n, k, r, connected, budget)
    raise ValueError(f"unknown mode {mode!r}")


def extremal_table(n: int, r: int, ks: Iterable[int], connected: bool) -> dict[int, ExtremalRecord]:
    """Extremal records for several ``k`` at once from one longest-path pass."""
    stats = [s for s in class_stats(n, r) if s.connected or not connected]
    out = {}
    for k in ks:
        best: ClassStats | None = None
        for s in stats:
            if s.longest < k and (best is None or s.h.num_edges > best.h.num_edges):
                best = s
        out[k] = ExtremalRecord(
            n, k, r, connected,
            best.h.num_edges if best else None,
            best.h if best else None,
            len(stats),
            True,
        )
    return out


# --------------------------------------------------------------------------
# Random instances
# --------------------------------------------------------------------------


def random_hypergraph(rng: random.Random, n: int, r: int, m: int) -> Hypergraph:
    """``m`` distinct hyperedges drawn uniformly without replacement."""
    pool = list(combinations(range(n), r))
    return Hypergraph(n, r, rng.sample(pool, min(m, len(pool))))


def random_connected_hypergraph(
    rng: random.Random, n: int, r: int, m_range: tuple[int, int], max_tries: int = 1000
) -> Hypergraph | None:
    """Rejection-sample :func:`random_hypergraph` until the result is connected."""
    for _ in range(max_tries):
        h = random_hypergraph(rng, n, r, rng.randint(*m_range))
        if is_connected(h):
            return h
    return None


def random_berge_free(
    rng: random.Random, n: int, r: int, k: int, target: int, connected: bool = False
) -> Hypergraph | None:
    """Random greedy growth that keeps only insertions leaving no Berge P_k.

    With ``connected`` the first phase only proposes hyperedges meeting the
    vertices covered so far, until every vertex is covered; ``None`` means
    the growth got stuck before that.
    """
    pool = list(combinations(range(n), r))
    rng.shuffle(pool)
    h = Hypergraph(n, r)
    covered = 0
    full = (1 << n) - 1
    if connected:
        while covered != full:
            grew = False
            for e in pool:
                mask = sum(1 << v for v in e)
                if covered and (not mask & covered or not mask & ~covered):
                    continue
                if e in h.edges:
                    continue
                cand = h.add_edge(e)
                if not has_berge_path(cand, k):
                    h, covered, grew = cand, covered | mask, True
                    break
            if not grew:
                return None
    for e in pool:
        if h.num_edges >= target:
            break
        if e in h.edges:
            continue
        cand = h.add_edge(e)
        if not has_berge_path(cand, k):
            h = cand
    return h


# --------------------------------------------------------------------------
# Verification
# --------------------------------------------------------------------------


@dataclass
class VerificationResult:
    claim: str
    instances: int = 0
    counterexample: dict | None = None
    details: list[dict] = field(default_factory=list)
    exhaustive: bool = True
    note: str = ""

    @property
    def verdict(self) -> str:
        return "pass" if self.counterexample is None else "fail"

    def fail(self, what: str, h: Hypergraph | None = None, **extra) -> None:
        if self.counterexample is None:
            self.counterexample = {"reason": what, **extra}
            if h is not None:
                self.counterexample["instance"] = hypergraph_to_json(h)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "instances": self.instances,
            "exhaustive": self.exhaustive,
            "counterexample": self.counterexample,
            "details": self.details,
            "note": self.note,
        }


def verify_theorem7(
    n: int,
    r: int,
    mode: str = "exhaustive",
    samples: int = 10**5,
    seed: int = 0,
    budget: SearchBudget | None = None,
) -> VerificationResult:
    """Every n-vertex r-graph with more than ``n`` hyperedges has a Berge path of length r+1."""
    res = VerificationResult("thm7")
    if mode == "exhaustive":
        for h in enumerate_hypergraphs(n, r):
            if h.num_edges <= n:
                continue
            res.instances += 1
            if not has_berge_path(h, r + 1, budget):
                res.fail(f"{h.num_edges} hyperedges but no Berge path of length {r + 1}", h)
    elif mode == "random":
        rng = random.Random(seed)
        res.exhaustive = False
        total = len(list(combinations(range(n), r)))
        if total > n:
            for _ in range(samples):
                h = random_hypergraph(rng, n, r, n + 1)
                res.instances += 1
                if not has_berge_path(h, r + 1, budget):
                    res.fail(f"{h.num_edges} hyperedges but no Berge path of length {r + 1}", h)
                    break
    else:
        raise ValueError(f"unknown mode {mode!r}")
    res.details.append({"n": n, "r": r, "mode": mode, "instances": res.instances})
    return res


def write_jsonl(path, records: Iterable[dict], meta: dict) -> None:
    with open(path, "w") as fh:
        for rec in records:
            fh.write(json.dumps({**rec, "meta": meta}, sort_keys=True) + "\n")


def ks_for(n: int, ks: Sequence[int] | None, lo: int) -> list[int]:
    if ks is None:
        return list(range(lo, n))
    return [k for k in ks if lo <= k < n]


def graph_of(h: Hypergraph) -> Graph:
    return Graph.from_edges(h.n, h.edges)
