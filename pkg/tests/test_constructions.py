import random

import networkx as nx
import pytest

from ftem.constructions import (
    blow_up,
    girth,
    heawood_graph,
    lb_instance_stretch2k1,
    lb_instance_stretch3,
    parse_generator,
    projective_plane_incidence,
    random_graph,
)
from ftem.graph import GraphValidationError, WeightedGraph

from oracles import bfs_girth


def petersen():
    G = nx.petersen_graph()
    return WeightedGraph(10, [(u, v, 1) for u, v in G.edges])


def to_nx(G):
    out = nx.Graph()
    out.add_nodes_from(range(G.n))
    out.add_edges_from((u, v) for u, v, _ in G.edges)
    return out


def test_fano_incidence_graph():
    G = projective_plane_incidence(2)
    assert (G.n, G.m) == (14, 21)
    assert girth(G) == 6
    assert all(G.degree(v) == 3 for v in range(G.n))
    assert nx.is_bipartite(to_nx(G))
    assert nx.is_isomorphic(to_nx(G), to_nx(heawood_graph()))


def test_pg23_incidence_graph():
    G = projective_plane_incidence(3)
    assert (G.n, G.m) == (26, 52)
    assert girth(G) == 6


@pytest.mark.parametrize("q", [1, 4, 6])
def test_non_prime_order_rejected(q):
    with pytest.raises(ValueError):
        projective_plane_incidence(q)


def test_blow_up_petersen():
    B = blow_up(petersen(), 2)
    assert (B.n, B.m) == (20, 60)
    assert girth(B) == 4
    assert blow_up(petersen(), 1) == petersen()


def test_blow_up_vertex_ids():
    B = blow_up(WeightedGraph(2, [(0, 1, 1)]), 3)
    assert sorted((u, v) for u, v, _ in B.edges) == [(a, b) for a in range(3) for b in range(3, 6)]


@pytest.mark.parametrize("seed", range(10))
def test_blow_up_counts_random(seed):
    rng = random.Random(seed)
    base = random_graph(rng.randint(3, 12), p=0.4, seed=seed)
    t = rng.randint(1, 4)
    B = blow_up(base, t)
    assert (B.n, B.m) == (t * base.n, t * t * base.m)


def test_blow_up_rejects_bad_factor():
    with pytest.raises(ValueError):
        blow_up(petersen(), 0)


def test_stretch3_instance():
    H = lb_instance_stretch3(8, heawood_graph())
    assert (H.n, H.m) == (28, 84)
    with pytest.raises(ValueError):
        lb_instance_stretch3(3, heawood_graph())
    with pytest.raises(GraphValidationError):
        lb_instance_stretch3(8, petersen())


def test_stretch2k1_instance():
    H = lb_instance_stretch2k1(9, heawood_graph(), 2)
    assert (H.n, H.m) == (42, 189)
    # f=10 rounds sqrt up to 4
    assert lb_instance_stretch2k1(10, heawood_graph(), 2).n == 56
    with pytest.raises(GraphValidationError):
        lb_instance_stretch2k1(4, heawood_graph(), 3)


def test_girth_small_cases():
    assert girth(WeightedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])) == 3
    assert girth(WeightedGraph(4, [(0, 1, 1), (1, 2, 1), (1, 3, 1)])) == float("inf")
    assert girth(petersen()) == 5


@pytest.mark.parametrize("seed", range(15))
def test_girth_matches_oracles(seed):
    G = random_graph(10, p=0.25, seed=seed)
    expected = bfs_girth(G.n, G.edges)
    assert girth(G) == expected
    nxg = nx.girth(to_nx(G))
    assert expected == nxg


def test_random_graph_modes():
    a = random_graph(30, p=0.3, seed=4)
    assert a == random_graph(30, p=0.3, seed=4) and a != random_graph(30, p=0.3, seed=5)
    assert a.is_unit
    d = random_graph(30, m=100, weight_mode="distinct", seed=1)
    assert d.m == 100
    assert sorted(w for *_, w in d.edges) == [float(i) for i in range(1, 101)]
    u = random_graph(20, m=50, weight_mode="uniform", seed=1, weight_range=(3, 5))
    assert {w for *_, w in u.edges} <= {3.0, 4.0, 5.0}
    with pytest.raises(ValueError):
        random_graph(5, p=0.5, m=3)
    with pytest.raises(ValueError):
        random_graph(5, m=11)


def test_random_graph_edge_count_is_plausible():
    # 20 independent G(60, 0.1) draws: total edges within 5 sd of the mean
    pairs = 60 * 59 // 2
    total = sum(random_graph(60, p=0.1, seed=s).m for s in range(20))
    mean, sd = 20 * pairs * 0.1, (20 * pairs * 0.1 * 0.9) ** 0.5
    assert abs(total - mean) < 5 * sd


def test_parse_generator():
    assert parse_generator("pg2:2") == projective_plane_incidence(2)
    assert parse_generator("gnp:n=12:p=0.5:seed=3") == random_graph(12, p=0.5, seed=3)
    g = parse_generator("gnm:n=10:m=20:seed=1:w=distinct")
    assert g == random_graph(10, m=20, seed=1, weight_mode="distinct")
    assert parse_generator("blowup:f=8:k=2").m == 84
    assert parse_generator("blowup:f=9:k=2:family=sqrt").m == 189
    for bad in ("nope:1", "gnp:n=4:oops", "blowup:f=8:family=x"):
        with pytest.raises(ValueError):
            parse_generator(bad)
