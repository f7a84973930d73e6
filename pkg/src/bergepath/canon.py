"""Canonical labelling of small uniform hypergraphs.

The canonical form is the lexicographically least relabelled edge list over
the leaves of an individualization-refinement tree. Colour refinement and
the cell-selection rule are isomorphism invariant, so the set of leaf
labellings (and hence the minimum) is too. Branches that differ by a vertex
transposition which is an automorphism are explored once.

``canonical_form_bruteforce`` is the plain minimum over all ``n!``
labellings, kept as the reference definition for tests.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

Edges = tuple[tuple[int, ...], ...]


def _relabel(edges: Edges, label) -> Edges:
    return tuple(sorted(tuple(sorted(label[u] for u in e)) for e in edges))


def canonical_form_bruteforce(n: int, edges: Edges) -> Edges:
    return min(_relabel(edges, p) for p in permutations(range(n)))


def _rank(keys: list) -> list[int]:
    order = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [order[key] for key in keys]


class _Canon:
    __slots__ = ("n", "edges", "edge_set", "others", "best")

    def __init__(self, n: int, edges: Edges):
        self.n = n
        self.edges = edges
        self.edge_set = frozenset(edges)
        # for each vertex, the rest of every edge through it
        others: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
        for e in edges:
            for v in e:
                others[v].append(tuple(u for u in e if u != v))
        self.others = others
        self.best: Edges | None = None

    def refine(self, colors: list[int]) -> list[int]:
        others = self.others
        count = len(set(colors))
        while True:
            sigs = []
            for v in range(self.n):
                rest = sorted(tuple(sorted(colors[u] for u in o)) for o in others[v])
                sigs.append((colors[v], tuple(rest)))
            colors = _rank(sigs)
            new_count = max(colors, default=-1) + 1
            if new_count == count:
                return colors
            count = new_count

    def swap_is_automorphism(self, u: int, v: int) -> bool:
        edge_set = self.edge_set
        for o in self.others[u]:
            if v in o:
                continue
            e = tuple(sorted((v, *o)))
            if e not in edge_set:
                return False
        # |edges through u| == |edges through v| holds inside a refined cell,
        # so the image of u's edges covers v's edges too
        return True

    def search(self, colors: list[int]) -> None:
        colors = self.refine(colors)
        n = self.n
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            image = _relabel(self.edges, colors)
            if self.best is None or image < self.best:
                self.best = image
            return
        target = min((len(vs), c) for c, vs in cells.items() if len(vs) > 1)[1]
        members = cells[target]
        reps: list[int] = []
        for v in members:
            if not any(self.swap_is_automorphism(w, v) for w in reps):
                reps.append(v)
        for v in reps:
            self.search(_rank([(c, 0 if x == v else 1) for x, c in enumerate(colors)]))


@lru_cache(maxsize=1 << 16)
def canonical_form(n: int, edges: Edges) -> Edges:
    """Canonical relabelled edge list of the hypergraph ``(n, edges)``.

    ``edges`` must be a tuple of sorted vertex tuples.
    """
    if not edges:
        return ()
    c = _Canon(n, edges)
    c.search([0] * n)
    assert c.best is not None
    return c.best
