import random
from itertools import combinations, permutations

import pytest

from twinlines.errors import InvalidPartition, SameBlob, VertexOutOfRange
from twinlines.graph import apsp, build_graph, complete_graph, is_bipartite, is_connected
from twinlines.lines import line_of
from twinlines.twins import (
    BlobPartition,
    SplitTrace,
    blob_stats,
    blow_up,
    generate_instance,
    pullback_line,
    recognize_split_of_bipartite,
    split_vertex,
    true_twin_classes,
    twin_quotient,
    validate_partition,
)

from conftest import random_instances, small_instances
from oracles import closed_nbhd


def test_split_examples(named):
    assert split_vertex(build_graph(1, []), 0) == named["K2"]
    assert split_vertex(named["K2"], 0) == named["K3"]
    diamond = split_vertex(named["P3"], 1)
    assert diamond == named["diamond"]
    assert closed_nbhd(4, diamond.edges, 1) == closed_nbhd(4, diamond.edges, 3)
    with pytest.raises(VertexOutOfRange):
        split_vertex(named["P3"], 3)


def test_split_twins_share_a_class():
    rng = random.Random(5)
    for g, _, _ in random_instances(50, 12, seed=3):
        v = rng.randrange(g.n)
        h = split_vertex(g, v)
        cls = next(c for c in true_twin_classes(h) if v in c)
        assert h.n - 1 in cls


def test_twin_class_examples(named):
    assert true_twin_classes(named["K3"]) == [(0, 1, 2)]
    assert true_twin_classes(named["C4"]) == [(0,), (1,), (2,), (3,)]
    assert true_twin_classes(named["diamond"]) == [(0,), (1, 3), (2,)]


def test_quotient_examples(named):
    base, f = twin_quotient(named["K3"])
    assert base == build_graph(1, []) and f == (0, 0, 0)
    base, f = twin_quotient(named["diamond"])
    assert base == named["P3"] and f == (0, 1, 2, 1)
    base, f = twin_quotient(named["C5"])
    assert base == named["C5"] and f == tuple(range(5))


def test_quotient_is_twin_free_and_idempotent(instances):
    for g, _, _ in instances:
        base, f = twin_quotient(g)
        assert true_twin_classes(base) == [(x,) for x in range(base.n)]
        assert twin_quotient(base) == (base, tuple(range(base.n)))
    # a K2 base collapses to a single vertex
    g, _ = blow_up(build_graph(3, [(0, 1)]), [2, 3, 1])
    base, f = twin_quotient(g)
    assert base == build_graph(2, [])
    assert f == (0, 0, 0, 0, 0, 1)


def test_recognize_examples(named):
    bp = recognize_split_of_bipartite(named["diamond"])
    assert bp.base == named["P3"]
    assert bp.blobs == ((0,), (1, 3), (2,))
    assert recognize_split_of_bipartite(named["C5"]) is None
    assert recognize_split_of_bipartite(named["C7"]) is None
    bp = recognize_split_of_bipartite(named["C4"])
    assert bp.base == named["C4"] and not any(bp.rich_flags)
    bp = recognize_split_of_bipartite(named["K3"])
    assert bp.base.n == 1


def test_seven_blob_stats(seven_blob):
    bp = recognize_split_of_bipartite(seven_blob)
    assert bp is not None
    assert bp.base.n == 7 and is_bipartite(bp.base)
    assert sorted(len(b) for b in bp.blobs) == [1, 1, 2, 2, 2, 3, 3]
    stats = blob_stats(seven_blob, bp)
    assert (stats.p, stats.k) == (12, 4)


def test_blob_stats_examples(named):
    diamond = named["diamond"]
    stats = blob_stats(diamond, recognize_split_of_bipartite(diamond))
    assert (stats.p, stats.k, stats.max_trivial_deg, stats.chosen_B) == (2, 1, 2, 1)
    stats = blob_stats(named["C4"], recognize_split_of_bipartite(named["C4"]))
    assert (stats.p, stats.k, stats.chosen_B) == (0, 0, None)


def test_blob_stats_rejects_bad_partition(named):
    bad = BlobPartition.from_map([0, 1, 2, 2], named["P3"])
    with pytest.raises(InvalidPartition):
        blob_stats(named["diamond"], bad)
    with pytest.raises(InvalidPartition):
        BlobPartition.from_map([0, 5], named["K2"])


def test_chosen_b_lowest_maximiser():
    # star K1,4 with the centre blown up and two leaves blown up
    star = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    g, bp = blow_up(star, [2, 2, 1, 1, 2])
    stats = blob_stats(g, bp)
    assert stats.chosen_B == 0 and stats.max_trivial_deg == 2
    g, bp = blow_up(build_graph(4, [(0, 1), (2, 3), (1, 2)]), [2, 1, 1, 2])
    stats = blob_stats(g, bp)
    assert (stats.max_trivial_deg, stats.chosen_B, stats.k) == (1, 0, 2)


def test_pullback_examples(named):
    diamond = named["diamond"]
    bp = recognize_split_of_bipartite(diamond)
    base_line = (0, 1, 2)
    assert pullback_line(base_line, bp, 0, 2) == (0, 1, 2, 3)
    assert pullback_line(base_line, bp, 1, 0) == (0, 1, 2)
    with pytest.raises(SameBlob):
        pullback_line(base_line, bp, 1, 3)
    assert line_of(diamond, None, 1, 3).members == (1, 3)


def test_generate_forced_outcomes(named):
    g, trace, bp = generate_instance(1, 1, 1.0, 1, seed=11)
    assert g == named["K3"]
    assert trace.base_graph == named["K2"] and len(trace.steps) == 1
    g, trace, bp = generate_instance(2, 2, 1.0, 0, seed=3)
    assert g == build_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert g.n == 4 and all(len(g.adjacency[v]) == 2 for v in range(4))


def test_generate_is_deterministic():
    a = generate_instance(3, 3, 0.5, 5, seed=7)
    b = generate_instance(3, 3, 0.5, 5, seed=7)
    assert a[0].n == 11
    assert a[0] == b[0] and a[1] == b[1] and a[2] == b[2]
    assert a[1].to_text() == b[1].to_text()


@pytest.mark.parametrize("args", [(0, 1, 0.5, 0), (1, 1, 1.5, 0), (1, 1, -0.1, 0), (1, 1, 0.5, -1)])
def test_generate_rejects(args):
    with pytest.raises(ValueError):
        generate_instance(*args, seed=0)


def test_trace_text_round_trip():
    g, trace, bp = generate_instance(3, 2, 0.6, 4, seed=9)
    text = trace.to_text()
    assert text.splitlines()[0].startswith("base 5 ")
    assert text.splitlines()[-1] == "seed 9"
    back = SplitTrace.from_text(text)
    assert back == trace
    assert back.replay()[0] == g


def _partial(line, blob):
    hit = len(set(line) & set(blob))
    return 0 < hit < len(blob)


@pytest.fixture(scope="module")
def instances():
    return small_instances(seeds=(0, 1)) + random_instances(120, 16, seed=1)


def test_trace_partition_invariants(instances):
    for g, trace, bp in instances:
        validate_partition(g, bp)
        classes = true_twin_classes(g)
        for blob in bp.blobs:
            assert all(g.has_edge(a, b) for a, b in combinations(blob, 2))
            assert any(set(blob) <= set(c) for c in classes)
        stats = blob_stats(g, bp)
        assert stats.p >= 2 * stats.k


def test_recognition_round_trip(instances):
    for g, _, _ in instances:
        bp = recognize_split_of_bipartite(g)
        assert bp is not None and is_bipartite(bp.base)
        validate_partition(g, bp)


def test_metric_compatibility(instances):
    for g, _, bp in instances:
        d, bd = apsp(g), apsp(bp.base)
        for u, v in combinations(range(g.n), 2):
            if bp.f[u] == bp.f[v]:
                assert d[u, v] == 1
            else:
                assert d[u, v] == bd[bp.f[u], bp.f[v]]


def test_pullback_matches_lines(instances):
    for g, _, bp in instances:
        d, bd = apsp(g), apsp(bp.base)
        for u, v in combinations(range(g.n), 2):
            if bp.f[u] == bp.f[v]:
                continue
            base_line = line_of(bp.base, bd, bp.f[u], bp.f[v]).members
            assert line_of(g, d, u, v).members == pullback_line(base_line, bp, u, v)


def test_family_shapes(instances):
    for g, _, bp in instances:
        d = apsp(g)
        rich = [x for x in range(bp.base.n) if bp.is_rich(x)]
        trivial = [x for x in range(bp.base.n) if not bp.is_rich(x)]
        for x, y in combinations(rich, 2):
            ln = line_of(g, d, bp.blobs[x][0], bp.blobs[y][0])
            assert [z for z in range(bp.base.n) if _partial(ln, bp.blobs[z])] == [x, y]
        for x, y in combinations(trivial, 2):
            ln = line_of(g, d, bp.blobs[x][0], bp.blobs[y][0])
            assert not any(_partial(ln, b) for b in bp.blobs)
        for x in rich:
            for y in bp.trivial_neighbors(x):
                for u in bp.blobs[x]:
                    ln = line_of(g, d, u, bp.blobs[y][0])
                    assert [z for z in range(bp.base.n) if _partial(ln, bp.blobs[z])] == [x]


def test_trivial_neighbours_of_a_blob_at_distance_two(instances):
    for g, _, bp in instances:
        d = apsp(g)
        for x in range(bp.base.n):
            around = [bp.blobs[y][0] for y in bp.trivial_neighbors(x)]
            for a, b in combinations(around, 2):
                if not g.has_edge(a, b):
                    assert d[a, b] == 2


def test_max_trivial_degree_pigeonhole(instances):
    for g, _, bp in instances:
        if not is_connected(g):
            continue
        trivial = [x for x in range(bp.base.n) if not bp.is_rich(x)]
        if any(bp.base.has_edge(x, y) for x, y in combinations(trivial, 2)):
            continue
        stats = blob_stats(g, bp)
        if 2 <= stats.p <= g.n - 1:
            assert stats.k >= 1
            assert stats.max_trivial_deg >= -(-(g.n - stats.p) // stats.k)


# -- exhaustive check of the recognition characterisation on small graphs ------


def _canon(n, edges):
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return n, best


def _all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_recognition_is_exact_up_to_five_vertices():
    max_n = 5
    in_class = set()
    frontier = [g for m in range(1, max_n + 1) for g in _all_graphs(m) if is_bipartite(g)]
    seen = set()
    while frontier:
        g = frontier.pop()
        key = _canon(g.n, g.edges)
        if key in seen:
            continue
        seen.add(key)
        in_class.add(key)
        if g.n < max_n:
            frontier.extend(split_vertex(g, v) for v in range(g.n))
    for n in range(1, max_n + 1):
        for g in _all_graphs(n):
            recognized = recognize_split_of_bipartite(g) is not None
            assert recognized == (_canon(n, g.edges) in in_class), g.edges


def test_complete_graphs_are_in_class():
    for n in range(1, 7):
        bp = recognize_split_of_bipartite(complete_graph(n))
        assert bp is not None and bp.base.n == 1
