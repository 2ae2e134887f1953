"""Shared seeded corpora.

Everything is deterministic: fixed seeds, fixed sizes.  The sizes are
the ones the acceptance gate quotes, so the session-scoped fixtures
are built once and shared between the unit tests and the gate.
"""

from __future__ import annotations

import random

import pytest

from widom.generators import gnp, sat_random, substitute_with_map
from widom.graph import Graph, WeightedGraph
from widom.patterns import C3, C4, C5, C6, CO_P5, P5, is_free
from widom.satgraph import SatPartition, ab_edges

INCLASS = (P5, CO_P5)
SHORT_CYCLES = (C3, C4, C5, C6)

# (n, p) buckets favoring the density extremes, where graphs without
# P5 or its complement stop being vanishingly rare past n=9
LADDER = (
    [(n, p) for n in range(1, 9) for p in (0.15, 0.35, 0.55, 0.75, 0.9)]
    + [(9, 0.15), (9, 0.2), (9, 0.8), (9, 0.9)]
    + [(10, 0.12), (10, 0.2), (10, 0.85)]
    + [(11, 0.12), (11, 0.88)]
    + [(12, 0.1), (12, 0.9)]
)


def _weighted(g: Graph, rng: random.Random, hi: int = 100) -> WeightedGraph:
    return WeightedGraph(g, tuple(rng.randint(0, hi) for _ in range(g.n)))


def _sample_inclass(rng: random.Random, n: int, p: float, tries: int = 500) -> Graph | None:
    for _ in range(tries):
        g = gnp(n, p, rng)
        if is_free(g, INCLASS):
            return g
    return None


@pytest.fixture(scope="session")
def inclass_corpus() -> list[WeightedGraph]:
    """1000 weighted graphs on up to 12 vertices, none containing P5
    or its complement, weights in [0, 100]."""
    rng = random.Random(20260817)
    out: list[WeightedGraph] = []
    i = 0
    while len(out) < 1000:
        n, p = LADDER[i % len(LADDER)]
        i += 1
        g = _sample_inclass(rng, n, p)
        if g is not None:
            out.append(_weighted(g, rng))
    return out


@pytest.fixture(scope="session")
def substitution_corpus() -> list[WeightedGraph]:
    """200 weighted graphs built by substituting one in-class graph
    into a vertex of another; sizes reach 17 vertices."""
    rng = random.Random(4242)
    out: list[WeightedGraph] = []
    while len(out) < 200:
        host = _sample_inclass(rng, rng.randint(4, 9), rng.choice((0.2, 0.5, 0.8)))
        plug = _sample_inclass(rng, rng.randint(2, 9), rng.choice((0.2, 0.5, 0.8)))
        if host is None or plug is None:
            continue
        g, _, _ = substitute_with_map(host, rng.randrange(host.n), plug)
        assert is_free(g, INCLASS)
        out.append(_weighted(g, rng))
    return out


@pytest.fixture(scope="session")
def constrained_instances(inclass_corpus) -> list[tuple[WeightedGraph, tuple[frozenset[int], ...]]]:
    """1000 (graph, demands) pairs; demands are 1..3 hitsets of 1..3
    vertices each, so a fair share of instances is infeasible."""
    rng = random.Random(555)
    out = []
    for wg in inclass_corpus:
        n = wg.n
        k = rng.randint(1, 3)
        demands = tuple(
            frozenset(rng.sample(range(n), rng.randint(1, min(3, n))))
            for _ in range(k)
        )
        out.append((wg, demands))
    return out


@pytest.fixture(scope="session")
def sat_corpus() -> list[tuple[Graph, SatPartition]]:
    """300 clique/matched-pair graphs with their witness partitions,
    each with at least one cross edge so the edge replacement has
    something to act on."""
    out: list[tuple[Graph, SatPartition]] = []
    seed = 0
    rng = random.Random(9090)
    while len(out) < 300:
        seed += 1
        size_a = rng.randint(1, 5)
        match_b = rng.randint(1, 4)
        p_ab = rng.choice((0.2, 0.4, 0.6, 0.8))
        g, part = sat_random(size_a, match_b, p_ab, seed)
        if not ab_edges(g, part):
            continue
        out.append((g, part))
    return out


@pytest.fixture(scope="session")
def girth_corpus() -> list[Graph]:
    """200 graphs on up to 9 vertices with no cycle of length 3..6."""
    rng = random.Random(777)
    out: list[Graph] = []
    while len(out) < 200:
        n = rng.randint(1, 9)
        g = gnp(n, rng.choice((0.08, 0.15, 0.22)), rng)
        if is_free(g, SHORT_CYCLES):
            out.append(g)
    return out


@pytest.fixture(scope="session")
def planted_corpus():
    """200 substitution instances kept together with their parts:
    (host weighted, slot, plug weighted, substituted graph, copy ids,
    outer id map)."""
    rng = random.Random(31337)
    out = []
    while len(out) < 200:
        host = _sample_inclass(rng, rng.randint(3, 9), rng.choice((0.25, 0.5, 0.75)))
        plug = _sample_inclass(rng, rng.randint(2, 9), rng.choice((0.25, 0.5, 0.75)))
        if host is None or plug is None:
            continue
        slot = rng.randrange(host.n)
        g, copy_ids, outer_map = substitute_with_map(host, slot, plug)
        whost = _weighted(host, rng, hi=60)
        wplug = _weighted(plug, rng, hi=60)
        out.append((whost, slot, wplug, g, copy_ids, outer_map))
    return out
