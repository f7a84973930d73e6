"""Exact Berge-path search.

A Berge path of length ``m`` is a sequence of ``m + 1`` distinct vertices and
``m`` distinct hyperedges where consecutive vertices both lie in the
hyperedge between them.
"""

from __future__ import annotations

import os
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .hypergraph import Hypergraph, VertexPair, iter_bits

DEFAULT_NODE_LIMIT = 10**8


class InvalidWitness(ValueError):
    pass


class ExpansionInfeasible(ValueError):
    """No system of distinct representatives exists for the given fat path."""


@dataclass(frozen=True)
class BergePathWitness:
    vertices: tuple[int, ...]
    hyperedges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.hyperedges)

    def validate(self, h: Hypergraph) -> None:
        """Raise :class:`InvalidWitness` unless this is a Berge path in ``h``."""
        vs, es = self.vertices, self.hyperedges
        if not vs:
            if es:
                raise InvalidWitness("hyperedges without vertices")
            return
        if len(vs) != len(es) + 1:
            raise InvalidWitness(f"{len(vs)} vertices for {len(es)} hyperedges")
        if len(set(vs)) != len(vs):
            raise InvalidWitness(f"repeated basic vertex in {vs}")
        if len(set(es)) != len(es):
            raise InvalidWitness(f"repeated hyperedge in {es}")
        for v in vs:
            if not 0 <= v < h.n:
                raise InvalidWitness(f"vertex {v} out of range")
        for i, e in enumerate(es):
            if not 0 <= e < h.num_edges:
                raise InvalidWitness(f"hyperedge index {e} out of range")
            edge = h.edges[e]
            if vs[i] not in edge or vs[i + 1] not in edge:
                raise InvalidWitness(f"hyperedge {edge} misses {vs[i]} or {vs[i + 1]}")

    def is_valid(self, h: Hypergraph) -> bool:
        try:
            self.validate(h)
        except InvalidWitness:
            return False
        return True

    def to_json(self, h: Hypergraph) -> dict:
        return {
            "length": self.length,
            "vertices": list(self.vertices),
            "hyperedges": [list(h.edges[i]) for i in self.hyperedges],
        }


EMPTY_WITNESS = BergePathWitness((), ())


@dataclass
class SearchBudget:
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: float | None = None

    def __post_init__(self):
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")

    @classmethod
    def from_env(cls) -> "SearchBudget":
        """Budget with ``BERGEPATH_NODE_LIMIT`` / ``BERGEPATH_TIME_LIMIT`` overrides."""
        nodes = os.environ.get("BERGEPATH_NODE_LIMIT")
        seconds = os.environ.get("BERGEPATH_TIME_LIMIT")
        return cls(
            node_limit=int(nodes) if nodes else DEFAULT_NODE_LIMIT,
            time_limit=float(seconds) if seconds else None,
        )


class PathResult(NamedTuple):
    length: int
    witness: BergePathWitness
    exact: bool
    nodes: int = 0
    parallel: bool = False


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Search:
    h: Hypergraph
    target: int
    budget: SearchBudget
    best_len: int = 0
    best: BergePathWitness = EMPTY_WITNESS
    nodes: int = 0
    deadline: float | None = None
    _verts: list[int] = field(default_factory=list)
    _edges: list[int] = field(default_factory=list)

    def run(self, starts: Sequence[int]) -> bool:
        """Search the given start vertices; ``True`` if the target was reached."""
        if self.budget.time_limit is not None:
            self.deadline = time.monotonic() + self.budget.time_limit
        for s in starts:
            if not self.h.vertex_edges[s]:
                continue
            if self.best_len == 0:
                self.best = BergePathWitness((s,), ())
            self._verts = [s]
            self._edges = []
            if self._extend(s, 1 << s, 0):
                return True
        return False

    def _extend(self, v: int, visited: int, used: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _BudgetExhausted
        if self.deadline is not None and not self.nodes & 1023 and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        depth = len(self._edges)
        if depth > self.best_len:
            self.best_len = depth
            self.best = BergePathWitness(tuple(self._verts), tuple(self._edges))
            if depth >= self.target:
                return True
        h = self.h
        room = min(h.n - visited.bit_count(), h.num_edges - used.bit_count())
        if depth + room <= self.best_len:
            return False
        edge_masks = h.edge_masks
        for i in iter_bits(h.vertex_edges[v] & ~used):
            for w in iter_bits(edge_masks[i] & ~visited):
                self._verts.append(w)
                self._edges.append(i)
                if self._extend(w, visited | 1 << w, used | 1 << i):
                    return True
                self._verts.pop()
                self._edges.pop()
        return False


def _search(h: Hypergraph, target: int, budget: SearchBudget, starts: Sequence[int]) -> PathResult:
    s = _Search(h, target, budget)
    try:
        s.run(starts)
    except _BudgetExhausted:
        return PathResult(s.best_len, s.best, False, s.nodes)
    return PathResult(s.best_len, s.best, True, s.nodes)


def longest_berge_path(
    h: Hypergraph, budget: SearchBudget | None = None, *, target: int | None = None, jobs: int = 1
) -> PathResult:
    """Longest Berge path by depth-first extension with a counting bound.

    Start vertices and hyperedges are tried in ascending order, so the
    sequential witness is deterministic. When ``target`` is given the search
    stops at the first path that long (the result is then exact for the
    threshold question only). With ``jobs > 1`` start vertices are split
    across processes and any optimal witness may come back.
    """
    budget = budget or SearchBudget()
    if h.num_edges == 0:
        return PathResult(0, EMPTY_WITNESS, True)
    ceiling = min(h.n - 1, h.num_edges)
    goal = ceiling if target is None else min(target, ceiling)
    if target is not None and target > ceiling:
        goal = target  # unreachable; forces a full (exhaustive) search
    starts = list(range(h.n))
    if jobs <= 1 or h.n < 2:
        return _search(h, goal, budget, starts)

    shards = [starts[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_search, [h] * jobs, [goal] * jobs, [budget] * jobs, shards))
    best = max(results, key=lambda r: r.length)
    return PathResult(
        best.length,
        best.witness,
        all(r.exact for r in results) or best.length >= goal,
        sum(r.nodes for r in results),
        True,
    )


def has_berge_path(h: Hypergraph, k: int, budget: SearchBudget | None = None) -> bool:
    """Whether ``h`` has a Berge path of length at least ``k``.

    Raises ``RuntimeError`` if the budget runs out before the question is
    settled, since a lower bound cannot answer "no".
    """
    if k < 1:
        raise ValueError(f"path length k must be at least 1, got {k}")
    if k > min(h.n - 1, h.num_edges):
        return False
    res = longest_berge_path(h, budget, target=k)
    if res.length >= k:
        return True
    if not res.exact:
        raise RuntimeError(f"search budget exhausted before deciding a Berge path of length {k}")
    return False


def berge_vw_path(h: Hypergraph, v: int, w: int) -> BergePathWitness | None:
    """A shortest Berge v-w path, found by BFS on the vertex-hyperedge incidence graph.

    A shortest alternating vertex/hyperedge walk never repeats a vertex or a
    hyperedge, so it is a Berge path as is.
    """
    if v == w:
        raise ValueError("a Berge v-w path needs v != w")
    for x in (v, w):
        if not 0 <= x < h.n:
            raise ValueError(f"vertex {x} out of range for n={h.n}")
    parent: dict[int, tuple[int, int]] = {v: (-1, -1)}
    used = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for i in iter_bits(h.vertex_edges[x] & ~used):
            used |= 1 << i
            for y in iter_bits(h.edge_masks[i]):
                if y in parent:
                    continue
                parent[y] = (x, i)
                if y == w:
                    verts, edges = [w], []
                    while parent[verts[-1]][0] != -1:
                        px, pi = parent[verts[-1]]
                        edges.append(pi)
                        verts.append(px)
                    return BergePathWitness(tuple(reversed(verts)), tuple(reversed(edges)))
                queue.append(y)
    return None


def _path_vertices(pairs: Sequence[tuple[int, int]]) -> list[int]:
    if len(pairs) == 1:
        return list(pairs[0])
    a, b = pairs[0]
    verts = [b, a] if a in pairs[1] else [a, b]
    for x, y in pairs[1:]:
        if verts[-1] == x:
            verts.append(y)
        elif verts[-1] == y:
            verts.append(x)
        else:
            raise ValueError(f"edges {pairs} do not form a path")
    if len(set(verts)) != len(verts):
        raise ValueError(f"edges {pairs} revisit a vertex")
    return verts


def distinct_representatives(candidates: Sequence[Sequence[int]]) -> list[int] | None:
    """Injective choice ``rep[i] in candidates[i]``, by augmenting paths (Kuhn).

    Candidates are tried in the given order, so a single row gets its first
    candidate. Returns ``None`` if no complete choice exists.
    """
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for c in candidates[i]:
            if c in seen:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = i
                return True
        return False

    for i in range(len(candidates)):
        if not augment(i, set()):
            return None
    rep = [0] * len(candidates)
    for c, i in owner.items():
        rep[i] = c
    return rep


def expand_fat_path(h: Hypergraph, fat_path: Sequence[tuple[int, int]], k: int) -> BergePathWitness:
    """Lift a path of fat shadow edges to a Berge path of the same length.

    Each path edge is matched to a distinct hyperedge containing it. The
    fatness threshold (2 for ``r = 3``, ``k`` for ``r > 3``) is checked up
    front; a matching failure after that means the inputs were misclassified.
    """
    from .fat import FatnessParameters

    if not fat_path:
        raise ValueError("fat path must contain at least one edge")
    params = FatnessParameters(h.r, k)
    if len(fat_path) > k:
        raise ValueError(f"path of {len(fat_path)} edges exceeds k={k}")
    pairs = [tuple(VertexPair.of(a, b)) for a, b in fat_path]
    verts = _path_vertices(pairs)
    candidates = []
    for a, b in pairs:
        if h.multiplicity(a, b) < params.threshold:
            raise ValueError(f"edge {{{a}, {b}}} is not fat (threshold {params.threshold})")
        candidates.append(h.edges_containing(a, b))
    rep = distinct_representatives(candidates)
    if rep is None:
        raise ExpansionInfeasible("expansion infeasible: no distinct hyperedge assignment")
    witness = BergePathWitness(tuple(verts), tuple(rep))
    witness.validate(h)
    return witness
