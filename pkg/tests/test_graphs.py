import pytest

from vertexmagic.graphs import (
    Graph,
    GraphError,
    classify_vertices,
    cycle_rank,
    degrees_same_parity,
    diameter,
    is_generalized_sun,
    lemma0_obstruction,
    read_graph_file,
    to_dot,
    two_core,
)
from vertexmagic.families import build, parse_instance


def cycle(k):
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def test_constructor_rejections():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(4, [(0, 1), (2, 3)])  # disconnected
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 5)])


def test_duplicate_edges_collapse():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 0)])
    assert g.m == 3


def test_diameter_examples():
    assert diameter(cycle(5)) == 2
    assert diameter(cycle(3)) == 1
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert diameter(star) == 2
    assert diameter(cycle(6)) == 3
    assert diameter(cycle(8)) == 4


def test_classify_path():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    prof = classify_vertices(p3)
    assert prof.pendants == {0, 2}
    assert prof.supports == {1}
    assert prof.strong_supports == {1}
    assert prof.weak_supports == frozenset()


def test_classify_cycle_no_supports():
    prof = classify_vertices(cycle(4))
    assert prof.pendants == frozenset()
    assert prof.supports == frozenset()
    assert prof.cycle_rank == 1


def test_classify_weak_support():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    prof = classify_vertices(g)
    assert prof.weak_supports == {0}
    assert prof.strong_supports == frozenset()


def test_two_core_and_cycle_rank():
    g, _ = build(parse_instance("G1(1,1,1)"))
    assert cycle_rank(g) == 1
    assert two_core(g) == {0, 1, 2}
    m11, _ = build(parse_instance("M11(0,0)"))
    assert cycle_rank(m11) == 2


def test_generalized_sun():
    g, _ = build(parse_instance("G1(1,1,1)"))
    assert is_generalized_sun(g)
    # a depth-2 tail breaks the sun property
    tail = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
    assert not is_generalized_sun(tail)
    # H7-style sun: C4 with bunches on opposite vertices
    h7, _ = build(parse_instance("H7(1,0,1)"))
    assert is_generalized_sun(h7)
    # bare cycles are excluded: the definition needs off-cycle vertices
    assert not is_generalized_sun(cycle(5))


def test_sun_implies_unicyclic():
    m11, _ = build(parse_instance("M11(0,0)"))
    assert not is_generalized_sun(m11)


def test_lemma0_obstruction():
    g, _ = build(parse_instance("M6(0,0)"))
    pair = lemma0_obstruction(g)
    assert pair is not None
    u, v = pair
    assert g.degree(u) - 1 == g.degree(v)
    assert lemma0_obstruction(cycle(5)) is None
    m7, _ = build(parse_instance("M7(0,0)"))
    assert lemma0_obstruction(m7) is not None


def test_lemma0_named_roles():
    g, roles = build(parse_instance("M6(0,0)"))
    nu = set(g.adj[roles["v1"]])
    nv = set(g.adj[roles["v3"]])
    assert len(nu & nv) == g.degree(roles["v1"]) - 1 == g.degree(roles["v3"])
    g, roles = build(parse_instance("M7(0,0)"))
    nu = set(g.adj[roles["v1"]])
    nv = set(g.adj[roles["v7"]])
    assert len(nu & nv) == g.degree(roles["v1"]) - 1 == g.degree(roles["v7"])


def test_parity():
    assert degrees_same_parity(cycle(4))
    assert not degrees_same_parity(Graph.from_edges(3, [(0, 1), (1, 2)]))
    g, _ = build(parse_instance("G1(1,1,1)"))
    assert degrees_same_parity(g)


def test_dot_deterministic():
    g, roles = build(parse_instance("G2(1,0)"))
    a = to_dot(g, roles)
    b = to_dot(g, roles)
    assert a == b
    assert "v1" in a and "--" in a


def test_classify_matches_definitions_on_random_graphs():
    import random

    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(2, 9)
        edges = set()
        for i in range(1, n):
            edges.add((rng.randrange(i), i))
        for _ in range(rng.randint(0, n)):
            u, v = rng.sample(range(n), 2)
            edges.add((min(u, v), max(u, v)))
        g = Graph.from_edges(n, sorted(edges))
        prof = classify_vertices(g)
        pendants = {v for v in range(n) if len(g.adj[v]) == 1}
        assert prof.pendants == pendants
        for v in range(n):
            nb_pendants = sum(1 for w in g.adj[v] if w in pendants)
            assert (v in prof.supports) == (nb_pendants >= 1)
            assert (v in prof.weak_supports) == (nb_pendants == 1)
            assert (v in prof.strong_supports) == (nb_pendants >= 2)
        assert prof.cycle_rank == g.m - g.n + 1


def test_graph_file_roundtrip():
    text = "4\n0 1\n1 2\n2 3\n3 0\n"
    g = read_graph_file(text)
    assert g.n == 4 and g.m == 4
    with pytest.raises(GraphError):
        read_graph_file("not a number\n0 1\n")
    with pytest.raises(GraphError):
        read_graph_file("3\n0 1 2\n")
