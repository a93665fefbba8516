import random

import pytest

import bruteforce as bf
from chordel import (
    BLOCK,
    CHORDAL,
    CLUSTER,
    CO_CHAIN,
    COMPLETE_SPLIT,
    INTERVAL,
    SPLIT,
    THRESHOLD,
    TRIVIALLY_PERFECT,
    TWO_K2_P3_FREE,
    UNIT_INTERVAL,
    Graph,
    NotInClassError,
    Obstruction,
    PatternTooLargeError,
    SplitPartition,
    are_isomorphic,
    chordal_peo,
    complement,
    delete_vertices,
    enumerate_split_partitions,
    f_free,
    find_asteroidal_triple,
    find_pattern,
    has_asteroidal_triple,
    kp_free,
    recognize,
    split_partition,
)
from chordel.recognition import (
    find_clique_of_size,
    is_perfect_elimination_ordering,
    maximum_cardinality_search,
)
from chordel import patterns as pat
from chordel.randgen import gen_chordal, gen_split, gen_threshold, gen_tree


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def check_cycle_witness(g, cycle):
    assert len(cycle) >= 4
    k = len(cycle)
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j - i == 1 or (i == 0 and j == k - 1)
            assert g.has_edge(cycle[i], cycle[j]) == adjacent


# ---------------------------------------------------------------- chordality


def test_chordal_peo_c4_hole():
    res = chordal_peo(pat.cycle_graph(4))
    assert not res.is_chordal
    check_cycle_witness(pat.cycle_graph(4), res.hole)


def test_chordal_peo_trees():
    for seed in range(20):
        t = gen_tree(9, seed)
        res = chordal_peo(t)
        assert res.is_chordal
        assert is_perfect_elimination_ordering(t, res.peo.ordering)


def test_chordal_hole_witness_on_randoms():
    for seed in range(80):
        g = random_graph(8, 0.45, seed)
        res = chordal_peo(g)
        assert res.is_chordal == (not bf.has_hole(g))
        if not res.is_chordal:
            check_cycle_witness(g, res.hole)


def test_chordal_agrees_with_cycle_pattern_scan():
    # cross-check against the independent hole enumerator, including C9
    for seed in range(40):
        g = random_graph(7, 0.5, seed)
        assert recognize(g, CHORDAL).member == (not bf.has_hole(g))
    c9 = pat.cycle_graph(9)
    assert not recognize(c9, CHORDAL).member
    check_cycle_witness(c9, recognize(c9, CHORDAL).witness)


def test_mcs_order_is_permutation():
    g = random_graph(9, 0.4, 3)
    assert sorted(maximum_cardinality_search(g)) == list(range(9))


# ---------------------------------------------------------------- split


def test_split_partition_double_star():
    part = split_partition(pat.double_star(2, 1))
    assert part == SplitPartition((0, 1), (2, 3, 4))


def test_split_partition_c5_obstruction():
    part = split_partition(pat.cycle_graph(5))
    assert isinstance(part, Obstruction)
    assert part.name == "c5"
    assert len(part.vertices) == 5


def test_split_partition_complete_graph():
    part = split_partition(pat.complete_graph(4))
    assert part == SplitPartition((0, 1, 2, 3), ())


def test_split_obstruction_kinds():
    for g, name in ((pat.two_k2(), "2k2"), (pat.cycle_graph(4), "c4")):
        part = split_partition(g)
        assert isinstance(part, Obstruction) and part.name == name
        sub = bf.induced(g, part.vertices)
        ref = {"2k2": pat.two_k2(), "c4": pat.cycle_graph(4)}[name]
        assert are_isomorphic(sub, ref)


def test_split_partition_matches_bruteforce():
    for seed in range(60):
        g = random_graph(7, 0.5, seed)
        parts = bf.split_partitions(g)
        got = split_partition(g)
        if parts:
            assert isinstance(got, SplitPartition)
            assert got.clique in parts
        else:
            assert isinstance(got, Obstruction)


def test_enumerate_split_partitions_k2():
    cliques = [p.clique for p in enumerate_split_partitions(pat.complete_graph(2))]
    assert cliques == [(0,), (0, 1), (1,)]


def test_enumerate_split_partitions_double_star():
    assert len(enumerate_split_partitions(pat.double_star(2, 1))) == 1
    smaller, _ = delete_vertices(pat.double_star(2, 1), [4])
    assert len(enumerate_split_partitions(smaller)) == 4


def test_enumerate_split_partitions_is_exhaustive():
    for seed in range(80):
        g = gen_split(7, 0.5, seed)
        want = bf.split_partitions(g)
        got = {p.clique for p in enumerate_split_partitions(g)}
        assert got == want


def test_enumerate_split_partitions_rejects_nonsplit():
    with pytest.raises(NotInClassError):
        enumerate_split_partitions(pat.cycle_graph(5))


# ------------------------------------------------------- asteroidal triples


def test_net_asteroidal_triple():
    found, triple = has_asteroidal_triple(pat.net())
    assert found and triple == (3, 4, 5)


def test_complete_graph_has_no_at():
    assert find_asteroidal_triple(pat.complete_graph(6)) is None


def test_claw_has_no_at():
    assert find_asteroidal_triple(pat.claw()) is None


def test_at_definition_spotcheck():
    # C6 has an asteroidal-free? no: C6 holds an AT of alternating vertices
    found, triple = has_asteroidal_triple(pat.cycle_graph(6))
    assert found and triple == (0, 2, 4)


# ---------------------------------------------------------- pattern search


def test_find_pattern_simple():
    assert find_pattern(pat.path_graph(4), pat.path_graph(3)) == (0, 1, 2)
    assert find_pattern(pat.cycle_graph(4), pat.complete_graph(3)) is None


def test_find_pattern_rising_sun_has_no_induced_tent():
    # every 6-subset of the rising sun induces 7, 8, or 10 edges, never 9
    assert not bf.contains_induced(pat.rising_sun(), pat.tent())
    assert find_pattern(pat.rising_sun(), pat.tent()) is None


def test_find_pattern_rising_sun_positive():
    witness = find_pattern(pat.rising_sun(), pat.diamond())
    assert witness is not None
    assert are_isomorphic(bf.induced(pat.rising_sun(), witness), pat.diamond())


def test_find_pattern_lexicographic_least():
    for seed in range(30):
        g = random_graph(7, 0.5, seed)
        for f in (pat.path_graph(3), pat.claw(), pat.complete_graph(3)):
            got = find_pattern(g, f)
            want = None
            from itertools import combinations

            for sub in combinations(range(g.n), f.n):
                if are_isomorphic(bf.induced(g, sub), f):
                    want = sub
                    break
            assert got == want


def test_find_pattern_size_cap():
    with pytest.raises(PatternTooLargeError):
        find_pattern(pat.complete_graph(12), pat.path_graph(9))


def test_find_clique_of_size():
    assert find_clique_of_size(pat.complete_graph(5), 5) == (0, 1, 2, 3, 4)
    assert find_clique_of_size(pat.cycle_graph(5), 3) is None


# --------------------------------------------------------------- recognize


POSITIVE = [
    (CHORDAL, pat.complete_graph(4)),
    (CHORDAL, pat.net()),
    (INTERVAL, pat.path_graph(5)),
    (UNIT_INTERVAL, pat.bull()),
    (UNIT_INTERVAL, pat.fitted_split_uig()),
    (SPLIT, pat.double_star(2, 1)),
    (THRESHOLD, pat.complete_split_pattern(2, 2)),
    (COMPLETE_SPLIT, pat.star_graph(4)),
    (TRIVIALLY_PERFECT, pat.star_graph(3)),
    (CLUSTER, pat.two_k2()),
    (BLOCK, pat.bull()),
    (CO_CHAIN, pat.co_p3()),
    (TWO_K2_P3_FREE, pat.complete_graph(3)),
    (kp_free(3), pat.cycle_graph(5)),
    (f_free(pat.net()), pat.tent()),
]

NEGATIVE = [
    (CHORDAL, pat.cycle_graph(5), "hole"),
    (INTERVAL, pat.net(), "asteroidal-triple"),
    (INTERVAL, pat.cycle_graph(4), "hole"),
    (UNIT_INTERVAL, pat.claw(), "claw"),
    (SPLIT, pat.two_k2(), "2k2"),
    (THRESHOLD, pat.path_graph(4), "p4"),
    (COMPLETE_SPLIT, pat.co_p3(), "co-p3"),
    (TRIVIALLY_PERFECT, pat.cycle_graph(4), "c4"),
    (CLUSTER, pat.path_graph(3), "p3"),
    (BLOCK, pat.diamond(), "diamond"),
    (CO_CHAIN, pat.empty_graph(3), "i3"),
    (CO_CHAIN, pat.cycle_graph(5), "c5"),
    (TWO_K2_P3_FREE, pat.star_graph(3), "p3"),
    (kp_free(3), pat.complete_graph(3), "k3"),
    (f_free(pat.diamond()), pat.diamond(), "pattern"),
]


@pytest.mark.parametrize("label,g", POSITIVE, ids=lambda x: getattr(x, "spelling", ""))
def test_recognize_positive(label, g):
    assert recognize(g, label).member


@pytest.mark.parametrize(
    "label,g,kind", NEGATIVE, ids=lambda x: getattr(x, "spelling", "")
)
def test_recognize_negative_with_witness(label, g, kind):
    verdict = recognize(g, label)
    assert not verdict.member
    assert verdict.witness_name == kind
    assert verdict.witness is not None


def test_recognize_witnesses_are_checkable():
    refs = {
        "2k2": pat.two_k2(),
        "c4": pat.cycle_graph(4),
        "c5": pat.cycle_graph(5),
        "p3": pat.path_graph(3),
        "p4": pat.path_graph(4),
        "co-p3": pat.co_p3(),
        "i3": pat.empty_graph(3),
        "claw": pat.claw(),
        "diamond": pat.diamond(),
    }
    for label, g, kind in NEGATIVE:
        verdict = recognize(g, label)
        if verdict.witness_name in refs:
            sub = bf.induced(g, verdict.witness)
            assert are_isomorphic(sub, refs[verdict.witness_name])


def test_recognize_agrees_with_obstruction_scan():
    # obstruction sets on random graphs, via the independent enumerator
    obstructions = {
        THRESHOLD: [pat.two_k2(), pat.cycle_graph(4), pat.path_graph(4)],
        TRIVIALLY_PERFECT: [pat.cycle_graph(4), pat.path_graph(4)],
        CLUSTER: [pat.path_graph(3)],
        COMPLETE_SPLIT: [pat.co_p3(), pat.cycle_graph(4)],
        TWO_K2_P3_FREE: [pat.two_k2(), pat.path_graph(3)],
        CO_CHAIN: [pat.empty_graph(3), pat.cycle_graph(4), pat.cycle_graph(5)],
    }
    for seed in range(40):
        g = random_graph(6, 0.5, seed)
        for label, pats in obstructions.items():
            want = not any(bf.contains_induced(g, f) for f in pats)
            assert recognize(g, label).member == want, label.spelling


def test_unit_interval_net_and_tent_rejected():
    assert not recognize(pat.net(), UNIT_INTERVAL).member
    assert not recognize(pat.tent(), UNIT_INTERVAL).member


def test_self_complementary_split_threshold():
    for seed in range(40):
        g = random_graph(7, 0.5, seed)
        assert recognize(g, SPLIT).member == recognize(complement(g), SPLIT).member
        assert (
            recognize(g, THRESHOLD).member
            == recognize(complement(g), THRESHOLD).member
        )


def test_class_containments_on_generated_instances():
    for seed in range(30):
        t, _ = gen_threshold(8, seed)
        for label in (SPLIT, TRIVIALLY_PERFECT, INTERVAL, CHORDAL):
            assert recognize(t, label).member
        s = gen_split(8, 0.5, seed)
        assert recognize(s, CHORDAL).member


def test_split_partition_family_structure():
    # pairwise structure of all split partitions of random split graphs
    for seed in range(40):
        g = gen_split(8, 0.5, seed)
        parts = enumerate_split_partitions(g)
        omega = bf.max_clique(g)
        alpha = bf.max_independent_set(g)
        for a in parts:
            for b in parts:
                if a == b:
                    continue
                assert abs(len(a.clique) - len(b.clique)) <= 1
                if len(a.clique) == len(b.clique) + 1:
                    assert set(b.clique) < set(a.clique)
                    assert len(a.clique) == omega
                    assert len(b.independent) == alpha
                elif len(a.clique) == len(b.clique):
                    strip_a = _drop_clique_edges(g, a.clique)
                    strip_b = _drop_clique_edges(g, b.clique)
                    assert are_isomorphic(strip_a, strip_b)


def _drop_clique_edges(g, cliq):
    drop = {(min(u, v), max(u, v)) for i, u in enumerate(cliq) for v in cliq[i + 1 :]}
    return Graph.from_edges(g.n, [e for e in g.edges() if e not in drop])


def test_are_isomorphic_basic():
    assert are_isomorphic(pat.net(), complement(pat.tent()))
    assert not are_isomorphic(pat.net(), pat.tent())
    for seed in range(20):
        g = random_graph(8, 0.5, seed)
        rng = random.Random(seed)
        perm = rng.sample(range(8), 8)
        h = Graph.from_edges(8, [(perm[u], perm[v]) for u, v in g.edges()])
        assert are_isomorphic(g, h)


def test_chordal_generated_instances():
    for seed in range(40):
        assert recognize(gen_chordal(9, seed), CHORDAL).member
