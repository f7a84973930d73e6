"""Closed-form evaluators for the extremal bounds, in exact rational arithmetic.

Every evaluator returns a :class:`BoundValue` holding the exact rational and
its floor, the largest integer count the bound allows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .cliques import binom, f_formula


@dataclass(frozen=True)
class BoundValue:
    value: Fraction
    tag: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"bound {self.tag} evaluated negative: {self.value}")

    @property
    def integer_cap(self) -> int:
        return math.floor(self.value)

    def __float__(self) -> float:
        return float(self.value)


def _bv(value, tag: str) -> BoundValue:
    return BoundValue(Fraction(value), tag)


def pascal_binom(x: int, y: int) -> int:
    """C(x, y) from Pascal's rule; an arithmetic path independent of ``math.comb``."""
    if y < 0 or x < 0 or y > x:
        return 0
    y = min(y, x - y)
    row = [1] * (y + 1)
    for i in range(1, x - y + 1):
        for j in range(1, y + 1):
            row[j] += row[j - 1]
    return row[y]


def rational_binom(x: Fraction, m: int) -> Fraction:
    """Generalized binomial ``x (x-1) ... (x-m+1) / m!`` for rational ``x``."""
    if m < 0:
        return Fraction(0)
    out = Fraction(1)
    for i in range(m):
        out *= Fraction(x) - i
    return out / math.factorial(m)


def bound_eg_path(n: int, k: int) -> BoundValue:
    """Edges in an n-vertex graph with no path of k edges: ``(k-1) n / 2``."""
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    return _bv(Fraction((k - 1) * n, 2), "eg_path")


def bound_eg_cycle(n: int, k: int) -> BoundValue:
    """Edges in an n-vertex graph with no cycle of length >= k: ``(k-1)(n-1)/2``."""
    if k < 3:
        raise ValueError(f"need k >= 3, got k={k}")
    return _bv(Fraction((k - 1) * (n - 1), 2), "eg_cycle")


def bound_connected_eg(n: int, k: int) -> BoundValue:
    if not n > k >= 3:
        raise ValueError(f"need n > k >= 3, got n={n}, k={k}")
    top = (k + 2) // 2  # ceil((k+1)/2)
    first = binom(k - 1, 2) + n - k + 1
    second = binom(top, 2) + (k - 1) // 2 * (n - top)
    return _bv(max(first, second), "connected_eg")


def bound_luo_connected(n: int, k: int, s: int) -> BoundValue:
    """s-cliques in a connected P_k-free graph: larger of the two H(n,k,a) extremes."""
    if not n - 1 >= k >= 4:
        raise ValueError(f"need n - 1 >= k >= 4, got n={n}, k={k}")
    return _bv(max(f_formula(n, k, (k - 1) // 2, s), f_formula(n, k, 1, s)), "luo_connected")


def bound_luo_cycle(n: int, k: int, s: int) -> BoundValue:
    """s-cliques with no cycle of length >= k: ``(n-1)/(k-2) C(k-1, s)``."""
    if not n >= k >= 3:
        raise ValueError(f"need n >= k >= 3, got n={n}, k={k}")
    return _bv(Fraction(n - 1, k - 2) * binom(k - 1, s), "luo_cycle")


def gkl_regime(k: int, r: int) -> str | None:
    if k > r + 1 > 3:
        return "long"
    if r >= k > 2:
        return "short"
    return None


def bound_gkl(n: int, k: int, r: int) -> BoundValue:
    """Hyperedges in a Berge-P_k-free r-graph; ``k = r + 1`` is outside both regimes."""
    regime = gkl_regime(k, r)
    if regime == "long":
        return _bv(Fraction(n, k) * binom(k, r), "gkl_long")
    if regime == "short":
        return _bv(Fraction(n * (k - 1), r + 1), "gkl_short")
    raise ValueError(f"(k={k}, r={r}) is in neither regime k > r+1 > 3 nor r >= k > 2")


def bound_main(n: int, k: int, r: int) -> BoundValue:
    """Connected benchmark ``k^(r-1) n / (2^(r-1) (r-1)!)``."""
    if r < 2 or k < 2:
        raise ValueError(f"need r >= 2 and k >= 2, got r={r}, k={k}")
    return _bv(Fraction(k ** (r - 1) * n, 2 ** (r - 1) * math.factorial(r - 1)), "main")


def bound_luocor(n: int, k: int, r: int) -> tuple[BoundValue, BoundValue]:
    """Large-n r-clique count of a connected P_k-free graph, and its majorant.

    Returns ``(exact, majorant)`` with ``a = floor((k-1)/2)``::

        exact    = (n - a) C(a, r-1) + C(a, r) + C(a, r-2)
        majorant = n C(k/2, r-1)
    """
    if k < 2 * r:
        raise ValueError(f"need k >= 2r, got k={k}, r={r}")
    a = (k - 1) // 2
    exact = (n - a) * binom(a, r - 1) + binom(a, r) + binom(a, r - 2)
    majorant = n * rational_binom(Fraction(k, 2), r - 1)
    return _bv(exact, "luocor_exact"), _bv(majorant, "luocor_majorant")


def luocor_crossover(k: int, r: int, n_max: int = 10**4) -> int | None:
    """Smallest ``n0`` in ``k+1..n_max`` with exact < majorant for all n in ``n0..n_max``.

    Scans down from ``n_max``; returns ``None`` if the inequality fails at
    ``n_max`` itself.
    """
    n0 = None
    for n in range(n_max, k, -1):
        exact, major = bound_luocor(n, k, r)
        if exact.value < major.value:
            n0 = n
        else:
            break
    return n0


def main_construction_size(n: int, k: int, r: int) -> int:
    a = (k - 1) // 2
    return binom(a, r - 1) * (n - a)


def asymptotic_ratio(n: int, k: int, r: int) -> Fraction:
    """Size of the two-class construction over the connected benchmark."""
    a = (k - 1) // 2
    if a < r - 1 or n <= a:
        raise ValueError(f"construction undefined for n={n}, k={k}, r={r}")
    return Fraction(main_construction_size(n, k, r)) / bound_main(n, k, r).value


# name -> (evaluator, argument names); used by the CLI sweep
EVALUATORS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "eg_path": (bound_eg_path, ("n", "k")),
    "eg_cycle": (bound_eg_cycle, ("n", "k")),
    "connected_eg": (bound_connected_eg, ("n", "k")),
    "luo_connected": (bound_luo_connected, ("n", "k", "s")),
    "luo_cycle": (bound_luo_cycle, ("n", "k", "s")),
    "gkl": (bound_gkl, ("n", "k", "r")),
    "main": (bound_main, ("n", "k", "r")),
    "luocor": (bound_luocor, ("n", "k", "r")),
}
