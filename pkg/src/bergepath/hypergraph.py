"""Uniform hypergraphs, simple graphs, and their text/JSON formats.

Vertices are dense ids ``0..n-1``. Hyperedges are stored as sorted tuples and
the edge list itself is kept in lexicographic order, so two hypergraphs built
from the same edge set compare equal regardless of input order and edge
indices are reproducible.
"""

from __future__ import annotations

import json
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple


class ParseError(ValueError):
    """Malformed hypergraph text; ``line`` is 1-based (0 when not line-bound)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class VertexPair(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "VertexPair":
        if a == b:
            raise ValueError(f"vertex pair needs two distinct vertices, got {a} twice")
        return cls(a, b) if a < b else cls(b, a)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with one adjacency bitmask per vertex."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} adjacent to a vertex outside 0..{n - 1}")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_bits(mask):
                if not adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, adj)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    def edges(self) -> list[VertexPair]:
        return [
            VertexPair(u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in ascending order."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return Graph.from_edges(
            len(vs), [(index[a], index[b]) for a, b in self.edges() if a in index and b in index]
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges()]})"


class Hypergraph:
    """Simple r-uniform hypergraph with an eagerly built pair-multiplicity index.

    ``vertex_edges[v]`` is a bitmask over edge indices containing ``v`` and
    ``edge_masks[i]`` is the vertex bitmask of edge ``i``. Both are what the
    path search works on.
    """

    __slots__ = ("n", "r", "edges", "pair_count", "vertex_edges", "edge_masks")

    def __init__(self, n: int, r: int, edges: Iterable[Iterable[int]] = ()):
        if r < 2:
            raise ValueError(f"uniformity r must be at least 2, got {r}")
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for raw in edges:
            edge = tuple(sorted(raw))
            if len(set(edge)) != r:
                raise ValueError(f"hyperedge {edge} does not have exactly {r} distinct vertices")
            if edge[0] < 0 or edge[-1] >= n:
                raise ValueError(f"hyperedge {edge} has a vertex outside 0..{n - 1}")
            if edge in normalized:
                raise ValueError(f"duplicate hyperedge {edge}")
            normalized.add(edge)
        self.n = n
        self.r = r
        self.edges: tuple[tuple[int, ...], ...] = tuple(sorted(normalized))

        pair_count: dict[VertexPair, int] = {}
        vertex_edges = [0] * n
        edge_masks = []
        for i, edge in enumerate(self.edges):
            mask = 0
            for v in edge:
                vertex_edges[v] |= 1 << i
                mask |= 1 << v
            edge_masks.append(mask)
            for a, b in combinations(edge, 2):
                p = VertexPair(a, b)
                pair_count[p] = pair_count.get(p, 0) + 1
        self.pair_count = pair_count
        self.vertex_edges = tuple(vertex_edges)
        self.edge_masks = tuple(edge_masks)

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls(g.n, 2, g.edges())

    @classmethod
    def complete(cls, n: int, r: int) -> "Hypergraph":
        return cls(n, r, combinations(range(n), r))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def multiplicity(self, a: int, b: int) -> int:
        if a == b:
            raise ValueError("multiplicity needs two distinct vertices")
        return self.pair_count.get(VertexPair.of(a, b), 0)

    def degree(self, v: int) -> int:
        return self.vertex_edges[v].bit_count()

    def edges_containing(self, a: int, b: int) -> list[int]:
        """Indices (ascending) of hyperedges containing both ``a`` and ``b``."""
        return list(iter_bits(self.vertex_edges[a] & self.vertex_edges[b]))

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Same vertex set and uniformity, different edge set."""
        return Hypergraph(self.n, self.r, edges)

    def add_edge(self, edge: Iterable[int]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, [*self.edges, tuple(edge)])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Hypergraph)
            and (self.n, self.r, self.edges) == (other.n, other.r, other.edges)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, edges={list(self.edges)})"


# --------------------------------------------------------------------------
# Text and JSON formats
# --------------------------------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``.hg`` format: header ``r n m`` then ``m`` hyperedge lines.

    Lines starting with ``#`` and blank lines are skipped. Vertex ids within a
    line may come in any order; the serializer always writes them ascending.
    """
    header = None
    r = n = m = 0
    seen: dict[tuple[int, ...], int] = {}
    edges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(fields) != 3:
                raise ParseError("header must be 'r n m'", lineno)
            r, n, m = fields
            if r < 2 or n < 0 or m < 0:
                raise ParseError(f"invalid header values r={r} n={n} m={m}", lineno)
            header = lineno
            continue
        if len(edges) == m:
            raise ParseError(f"more than the {m} hyperedges declared in the header", lineno)
        if len(fields) != r or len(set(fields)) != r:
            raise ParseError(f"hyperedge must have exactly {r} distinct vertices", lineno)
        for v in fields:
            if not 0 <= v < n:
                raise ParseError(f"vertex id {v} out of range 0..{n - 1}", lineno)
        edge = tuple(sorted(fields))
        if edge in seen:
            raise ParseError(f"duplicate hyperedge {list(edge)} (first on line {seen[edge]})", lineno)
        seen[edge] = lineno
        edges.append(edge)
    if header is None:
        raise ParseError("missing header 'r n m'")
    if len(edges) != m:
        raise ParseError(f"header declares {m} hyperedges but {len(edges)} were given")
    return Hypergraph(n, r, edges)


def format_hypergraph(h: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{h.r} {h.n} {h.num_edges}")
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    h = parse_hypergraph(text)
    if h.r != 2:
        raise ParseError(f"graph files must have r=2, got r={h.r}", 1)
    return Graph.from_edges(h.n, h.edges)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    return format_hypergraph(Hypergraph.from_graph(g), comments)


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"r": h.r, "n": h.n, "edges": [list(e) for e in h.edges]}


def hypergraph_from_json(data: dict | str) -> Hypergraph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return Hypergraph(int(data["n"]), int(data["r"]), data["edges"])
    except KeyError as exc:
        raise ParseError(f"missing JSON field {exc.args[0]!r}") from None


def read_hypergraph(path) -> Hypergraph:
    """Load a ``.hg`` or ``.json`` file."""
    with open(path) as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return hypergraph_from_json(text)
    return parse_hypergraph(text)


# --------------------------------------------------------------------------
# Derived structures
# --------------------------------------------------------------------------


def shadow_graph(h: Hypergraph) -> Graph:
    """Graph on the same vertices joining every pair covered by a hyperedge."""
    return Graph.from_edges(h.n, h.pair_count.keys())


def is_connected(h: Hypergraph) -> bool:
    """Berge connectivity: every vertex covered and the incidence graph connected.

    For ``n <= 1`` there is no pair to join, so the answer is ``True``.
    """
    if h.n <= 1:
        return True
    if any(mask == 0 for mask in h.vertex_edges):
        return False
    reached = 1
    frontier = 1
    used_edges = 0
    full = (1 << h.n) - 1
    while frontier:
        edges = 0
        for v in iter_bits(frontier):
            edges |= h.vertex_edges[v]
        edges &= ~used_edges
        used_edges |= edges
        nxt = 0
        for i in iter_bits(edges):
            nxt |= h.edge_masks[i]
        frontier = nxt & ~reached
        reached |= frontier
    return reached == full


def graph_is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest vertex."""
    seen = 0
    parts = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            new = g.adj[v] & ~comp
            comp |= new
            queue.extend(iter_bits(new))
        seen |= comp
        parts.append(frozenset(iter_bits(comp)))
    return parts
