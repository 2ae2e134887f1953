"""Brute-force ground truth for maximal independent sets.

Everything here trades time for obviousness: enumeration visits every
maximal independent set (pivoting recursion, each output re-verified),
and the optimizers scan that list with one shared tie-break.  Intended
for n up to ~25; guarded by an explicit bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, WeightedGraph, bits, set_precedes

DEFAULT_BOUND = 25


class OracleBoundError(ValueError):
    """Raised when an input exceeds the enumeration size bound."""


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise OracleBoundError(f"oracle limited to n <= {bound}, got n = {n}")


def enumerate_mis(g: Graph, bound: int = DEFAULT_BOUND) -> list[frozenset[int]]:
    """All maximal independent sets of g, sorted, each one verified.

    Pivoting recursion over (chosen R, candidates P, excluded X) where
    the branching relation is non-adjacency: maximal independent sets
    of g are exactly the maximal cliques of its complement.
    """
    _check_bound(g.n, bound)
    full = g.full_bits
    # "neighbors" in the complement, self excluded
    nbar = [full & ~g.adj_bits(v) & ~(1 << v) for v in range(g.n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot: candidate from P|X maximizing |P & nbar[u]|
        pivot, best = -1, -1
        for u in bits(p | x):
            score = (p & nbar[u]).bit_count()
            if score > best:
                pivot, best = u, score
        for v in bits(p & ~nbar[pivot]):
            bv = 1 << v
            expand(r | bv, p & nbar[v], x & nbar[v])
            p ^= bv
            x |= bv

    expand(0, full, 0)
    sets = sorted(frozenset(bits(m)) for m in out)
    for s in sets:
        if not g.is_maximal_independent(s):
            raise AssertionError(f"enumeration produced a non-MIS: {sorted(s)}")
    return sets


@dataclass(frozen=True)
class OracleReport:
    value: int
    witness: frozenset[int]
    enumeration_size: int


def _best(
    sets: Iterable[frozenset[int]], weight: dict[int, int] | tuple[int, ...]
) -> tuple[int, frozenset[int]] | None:
    best: tuple[int, frozenset[int]] | None = None
    for s in sets:
        w = sum(weight[v] for v in s)
        if best is None or w < best[0] or (w == best[0] and set_precedes(s, best[1])):
            best = (w, s)
    return best


def oracle_wid(wg: WeightedGraph, bound: int = DEFAULT_BOUND) -> OracleReport:
    sets = enumerate_mis(wg.graph, bound)
    found = _best(sets, wg.weights)
    assert found is not None  # every graph has at least one MIS
    return OracleReport(found[0], found[1], len(sets))


def oracle_id(g: Graph, bound: int = DEFAULT_BOUND) -> OracleReport:
    return oracle_wid(WeightedGraph(g, (1,) * g.n), bound)


def oracle_constrained(
    wg: WeightedGraph,
    hitsets: Iterable[frozenset[int]],
    bound: int = DEFAULT_BOUND,
) -> OracleReport | None:
    """Minimum-weight MIS meeting every hitset, or None if none does."""
    demands = [frozenset(h) for h in hitsets]
    for h in demands:
        if not h:
            raise ValueError("empty hitset can never be satisfied")
    sets = enumerate_mis(wg.graph, bound)
    feasible = [s for s in sets if all(s & h for h in demands)]
    found = _best(feasible, wg.weights)
    if found is None:
        return None
    return OracleReport(found[0], found[1], len(sets))


def oracle_min_dominating(g: Graph, bound: int = DEFAULT_BOUND) -> OracleReport:
    """Minimum dominating set size by subset enumeration, smallest first."""
    _check_bound(g.n, bound)
    full = g.full_bits
    closed = [g.adj_bits(v) | (1 << v) for v in range(g.n)]
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return OracleReport(size, frozenset(combo), 0)
    raise AssertionError("unreachable: V itself dominates")
