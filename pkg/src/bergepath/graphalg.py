"""Path and cycle searches on simple graphs.

These work on :class:`Graph` bitmasks directly and share no code with the
Berge-path solver, so the two can cross-check each other.
"""

from __future__ import annotations

from .hypergraph import Graph, iter_bits


def find_path(g: Graph, length: int | None = None) -> list[int]:
    """Vertex sequence of a path with ``length`` edges, or of a longest path.

    With ``length`` given, returns ``[]`` when no such path exists. Without
    it, returns a longest path (a single vertex for an edgeless graph with
    ``n >= 1``).
    """
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    target = n - 1 if length is None else length
    if target > n - 1:
        return []
    best: list[int] = [0]
    stack: list[int] = []

    def extend(v: int, visited: int) -> bool:
        nonlocal best
        if len(stack) > len(best):
            best = stack.copy()
            if len(best) - 1 >= target:
                return True
        # every remaining vertex reachable would still not beat the record
        if len(stack) + (n - visited.bit_count()) <= len(best):
            return False
        for w in iter_bits(adj[v] & ~visited):
            stack.append(w)
            if extend(w, visited | 1 << w):
                return True
            stack.pop()
        return False

    for s in range(n):
        stack = [s]
        if extend(s, 1 << s):
            break
    if length is not None:
        return best if len(best) - 1 >= length else []
    return best


def longest_path_length(g: Graph) -> int:
    return max(len(find_path(g)) - 1, 0)


def has_path(g: Graph, length: int) -> bool:
    if length <= 0:
        return g.n > 0
    return bool(find_path(g, length))


def cycle_vertex_sets(g: Graph, min_length: int = 3) -> set[int]:
    """Bitmasks of vertex sets spanned by some cycle of length >= ``min_length``.

    Cycles are rooted at their smallest vertex; ``(start, end, visited)``
    states are memoized, so work is bounded by ``n^2 2^n`` rather than by the
    number of paths.
    """
    found: set[int] = set()
    adj = g.adj
    min_length = max(min_length, 3)
    for start in range(g.n):
        allowed = ~((1 << start) - 1)  # vertices >= start
        seen: set[tuple[int, int]] = set()
        stack = [(start, 1 << start)]
        while stack:
            v, visited = stack.pop()
            if (v, visited) in seen:
                continue
            seen.add((v, visited))
            if visited.bit_count() >= min_length and adj[v] >> start & 1:
                found.add(visited)
            for w in iter_bits(adj[v] & ~visited & allowed):
                stack.append((w, visited | 1 << w))
    return found


def circumference(g: Graph) -> int:
    """Length of a longest cycle; 0 for forests."""
    sets = cycle_vertex_sets(g)
    return max((s.bit_count() for s in sets), default=0)


def has_disjoint_long_cycles(g: Graph, min_length: int) -> tuple[int, int] | None:
    """Two vertex-disjoint cycles each of length >= ``min_length``, if any.

    Returns the pair of cycle vertex bitmasks, or ``None``.
    """
    sets = cycle_vertex_sets(g, min_length)
    if len(sets) < 2:
        return None
    n = g.n
    full = (1 << n) - 1
    if n <= 16:
        # witness[T] = some cycle set contained in T (0 if none), by subset DP
        witness = [0] * (1 << n)
        for s in sets:
            witness[s] = s
        for bit in range(n):
            step = 1 << bit
            for t in range(1 << n):
                if t & step and not witness[t]:
                    witness[t] = witness[t ^ step]
        for s in sorted(sets):
            other = witness[full & ~s]
            if other:
                return (s, other) if s < other else (other, s)
        return None
    ordered = sorted(sets)
    for i, s in enumerate(ordered):
        for t in ordered[i + 1 :]:
            if not s & t:
                return s, t
    return None
