import random

import pytest

from vertexmagic.abelian import enumerate_abelian_groups, parse_group
from vertexmagic.families import build, enumerate_connected, parse_instance
from vertexmagic.graphs import Graph
from vertexmagic.labeling import verify_magic
from vertexmagic.oracle import OracleBoundError, naive_count, naive_exists
from vertexmagic.solver import (
    SolverBoundError,
    count_magic,
    exists_magic,
    is_group_vertex_magic_empirical,
    z2_magic,
)

Z2 = parse_group("Z2")
Z3 = parse_group("Z3")
Z4 = parse_group("Z4")


def cycle(k):
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def test_g2_paper_examples():
    g, _ = build(parse_instance("G2(1,0)"))
    assert exists_magic(g, Z4).is_witness
    assert not exists_magic(g, Z3).is_witness


def test_m3_exhausted_everywhere(catalog8):
    for params in ("0,1,0", "1,0,0", "1,1,1", "2,0,1"):
        g, _ = build(parse_instance(f"M3({params})"))
        for spec in catalog8:
            assert not exists_magic(g, spec).is_witness


def test_count_examples():
    assert count_magic(cycle(3), Z2) == 1
    assert count_magic(cycle(4), Z2) == 1
    # frozen from the unpruned enumeration oracle
    assert naive_count(cycle(4), Z3) == 6
    assert count_magic(cycle(4), Z3) == 6


def test_witnesses_verify():
    for text in ("M11(0,0)", "G1(1,1,1)", "H2(0,1,1;hub=[2])", "M5(1,1)"):
        g, _ = build(parse_instance(text))
        for spec in (Z2, Z4, parse_group("Z6")):
            out = exists_magic(g, spec)
            if out.is_witness:
                cert = verify_magic(g, out.labeling)
                assert cert is not None
                assert cert.constant == out.certificate.constant


def test_z2_shortcut_matches_search():
    for text in ("G1(1,1,1)", "G2(1,0)", "C6", "M10(0,0)", "M11(0,0)",
                 "H1(0,0;hub=[1])"):
        g, _ = build(parse_instance(text))
        assert z2_magic(g) == exists_magic(g, Z2).is_witness


def test_z2_examples():
    g, _ = build(parse_instance("G1(1,1,1)"))
    assert z2_magic(g)
    h1, _ = build(parse_instance("H1(0,0;hub=[2])"))
    assert not z2_magic(h1)
    assert z2_magic(cycle(6))


def test_tiny_graphs():
    k1 = Graph.from_edges(1, [])
    out = exists_magic(k1, Z3)
    assert out.is_witness and out.certificate.constant.is_zero()
    k2 = Graph.from_edges(2, [(0, 1)])
    out = exists_magic(k2, Z3)
    assert out.is_witness
    assert count_magic(k2, Z3) == 2  # both labels must equal mu


def test_size_bounds():
    big = Graph.from_edges(14, [(i, i + 1) for i in range(13)])
    with pytest.raises(SolverBoundError):
        exists_magic(big, Z3)
    with pytest.raises(SolverBoundError):
        count_magic(cycle(11), Z3)
    with pytest.raises(SolverBoundError):
        count_magic(cycle(4), parse_group("Z6"))
    with pytest.raises(OracleBoundError):
        naive_count(Graph.from_edges(13, [(i, i + 1) for i in range(12)]),
                    parse_group("Z8"))


def test_pruned_agrees_with_naive_small():
    """Differential spot check: full agreement is acceptance criterion 1."""
    groups = list(enumerate_abelian_groups(5))
    graphs = enumerate_connected(7, 1, 3) + enumerate_connected(7, 2, 3)
    for g in graphs:
        for spec in groups:
            assert exists_magic(g, spec).is_witness == naive_exists(g, spec)
            assert count_magic(g, spec) == naive_count(g, spec)


def test_empirical_catalog_verdicts(catalog8):
    m11, _ = build(parse_instance("M11(0,0)"))
    assert is_group_vertex_magic_empirical(m11, catalog8).survives
    m10, _ = build(parse_instance("M10(0,0)"))
    verdict = is_group_vertex_magic_empirical(m10, catalog8)
    assert verdict.refuted_by == Z3
    g1, _ = build(parse_instance("G1(2)"))
    assert not is_group_vertex_magic_empirical(g1, catalog8).survives


def test_mu_zero_witness_allowed():
    m11, _ = build(parse_instance("M11(0,0)"))
    out = exists_magic(m11, parse_group("Z5"))
    assert out.is_witness
    assert out.certificate.constant.is_zero()


def _plant_obstruction(rng):
    """Random connected graph carrying a shared-neighborhood pair."""
    base_n = rng.randint(3, 5)
    edges = set()
    for i in range(1, base_n):
        edges.add((rng.randrange(i), i))
    for _ in range(rng.randint(0, base_n)):
        a, b = rng.sample(range(base_n), 2)
        edges.add((min(a, b), max(a, b)))
    d = rng.randint(1, base_n - 1)
    shared = rng.sample(range(base_n), d)
    w = rng.choice([x for x in range(base_n) if x not in shared])
    v, u = base_n, base_n + 1
    for s in shared:
        edges.add((s, v))
        edges.add((s, u))
    edges.add((w, u))
    return Graph.from_edges(base_n + 2, sorted(edges))


def test_planted_obstructions_are_refuted():
    from vertexmagic.graphs import lemma0_obstruction

    rng = random.Random(2024)
    groups = list(enumerate_abelian_groups(5))
    found = 0
    while found < 8:
        g = _plant_obstruction(rng)
        if lemma0_obstruction(g) is None:
            continue
        found += 1
        for spec in groups:
            assert not exists_magic(g, spec).is_witness


def test_deterministic_witness():
    g, _ = build(parse_instance("M11(0,0)"))
    a = exists_magic(g, Z4)
    b = exists_magic(g, Z4)
    assert a.labeling == b.labeling
    assert a.nodes == b.nodes
