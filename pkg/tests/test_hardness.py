import random

from widom.generators import complete, cycle, gnp, path
from widom.graph import Graph
from widom.hardness import (
    build_wid_reduction,
    check_reduction_class,
    check_reduction_equivalence,
    dominating_to_ids,
    ids_to_dominating,
)
from widom.oracle import oracle_min_dominating, oracle_wid
from widom.patterns import C3, C4, C5, C6, SUN3, find_induced, is_free
from widom.satgraph import verify_sat_partition


def test_reduction_shape_p3():
    red = build_wid_reduction(path(3))
    t = red.target
    n = 3
    assert t.n == 3 * n
    assert len(t.graph.edges) == 2 * n + 2 * len(path(3).edges) + n * (n - 1) // 2
    assert red.layer_map == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
    for v1, v2, v3 in red.layer_map:
        assert t.weights[v1] == 1
        assert t.weights[v2] == 2
        assert t.weights[v3] == 2 * n
        assert t.graph.adjacent(v1, v2) and t.graph.adjacent(v2, v3)
        assert not t.graph.adjacent(v1, v3)
    # the heavy layer is a clique
    thirds = [t3 for _, _, t3 in red.layer_map]
    for i in range(len(thirds)):
        for j in range(i + 1, len(thirds)):
            assert t.graph.adjacent(thirds[i], thirds[j])
    # cross wiring for the edge (0,1): w2-v3 and w3-v2
    assert t.graph.adjacent(4, 2) and t.graph.adjacent(5, 1)


def test_reduction_partition_valid():
    red = build_wid_reduction(path(4))
    part = red.partition
    g = red.target.graph
    assert verify_sat_partition(g, part.a, part.b) is None
    assert part.a == frozenset(3 * v + 2 for v in range(4))
    assert part.s == 4


def test_equivalence_small_sources():
    for src in (Graph(1, []), Graph(2, []), path(2), path(3), path(4), cycle(7)):
        rep = check_reduction_equivalence(src, bound=30)
        assert rep.equal, (src.edges, rep)
        assert rep.idw_target.value == src.n + rep.gamma_dom.value


def test_equivalence_holds_even_off_class():
    # the optimum identity needs no structural assumption on the source
    for src in (complete(3), cycle(4), cycle(5), cycle(6)):
        rep = check_reduction_equivalence(src, bound=30)
        assert rep.equal


def test_class_guarantees_on_girth_corpus(girth_corpus):
    for src in girth_corpus[:60]:
        red = build_wid_reduction(src)
        rep = check_reduction_class(red)
        assert rep.source_in_class
        assert rep.ok, rep
        assert rep.partition_violation is None
        assert rep.c4 is None
        assert rep.sun3 is None


def test_c6_source_plants_a_sun():
    red = build_wid_reduction(cycle(6))
    rep = check_reduction_class(red)
    assert not rep.source_in_class
    assert rep.source_short_cycle is not None
    assert find_induced(red.target.graph, SUN3) is not None
    # the target is still a valid instance with the right optimum
    assert check_reduction_equivalence(cycle(6), bound=30).equal


def test_target_is_always_c4_free():
    rng = random.Random(71)
    for _ in range(25):
        src = gnp(rng.randint(1, 6), rng.random(), rng)
        red = build_wid_reduction(src)
        assert find_induced(red.target.graph, C4) is None


def test_witness_maps_round_trip():
    src = path(4)
    red = build_wid_reduction(src)
    dom = oracle_min_dominating(src).witness
    ids = dominating_to_ids(red, dom)
    t = red.target
    assert t.graph.is_maximal_independent(ids)
    assert t.weight_of(ids) == src.n + len(dom)
    back = ids_to_dominating(red, ids)
    assert back == dom

    best = oracle_wid(t, bound=30)
    dom2 = ids_to_dominating(red, best.witness)
    # converting an optimal target witness yields a minimum dominating set
    covered = set(dom2)
    for v in dom2:
        covered.update(src.neighborhood(v))
    assert covered == set(range(src.n))
    assert len(dom2) == oracle_min_dominating(src).value
