"""Exact s-clique counts and the clique count of the three-part graph H(n, k, a)."""

from __future__ import annotations

from math import comb

from .hypergraph import Graph, iter_bits


def binom(x: int, y: int) -> int:
    """Binomial coefficient that is 0 outside ``0 <= y <= x``."""
    if y < 0 or x < 0 or y > x:
        return 0
    return comb(x, y)


def count_cliques(g: Graph, s: int) -> int:
    """Number of s-vertex cliques in ``g``.

    Uses a pivoting succinct clique tree: each leaf stands for a set of
    "held" vertices that every counted clique contains plus a set of pivot
    vertices of which any subset may be added, so a leaf contributes
    ``C(pivots, s - held)`` without listing anything.
    """
    if s < 1:
        raise ValueError(f"clique size must be at least 1, got {s}")
    if s == 1:
        return g.n
    adj = g.adj
    total = 0

    def walk(cand: int, held: int, pivots: int) -> None:
        nonlocal total
        if held == s:
            total += 1
            return
        if held + pivots + cand.bit_count() < s:
            return
        if not cand:
            total += comb(pivots, s - held)
            return
        pivot, best = -1, -1
        for u in iter_bits(cand):
            deg = (cand & adj[u]).bit_count()
            if deg > best:
                pivot, best = u, deg
        walk(cand & adj[pivot], held, pivots + 1)
        rest = cand & ~(1 << pivot)
        for v in iter_bits(cand & ~adj[pivot] & ~(1 << pivot)):
            walk(rest & adj[v], held + 1, pivots)
            rest &= ~(1 << v)

    walk((1 << g.n) - 1, 0, 0)
    return total


def clique_counts(g: Graph, max_s: int) -> list[int]:
    """``[N_1, ..., N_max_s]``."""
    return [count_cliques(g, s) for s in range(1, max_s + 1)]


def f_formula(n: int, k: int, a: int, s: int) -> int:
    """s-clique count of H(n, k, a): ``C(k - a, s) + (n - k + a) C(a, s - 1)``."""
    if a < 1:
        raise ValueError(f"a must be at least 1, got a={a}")
    if 2 * a > k:
        raise ValueError(f"need 2a <= k, got a={a}, k={k}")
    if n < k - a:
        raise ValueError(f"need n >= k - a, got n={n}, k={k}, a={a}")
    if s < 1:
        raise ValueError(f"clique size s must be at least 1, got s={s}")
    return binom(k - a, s) + (n - k + a) * binom(a, s - 1)
