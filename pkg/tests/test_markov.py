from collections import Counter
from fractions import Fraction

import pytest
from scipy import stats

from oracles import stationary_oracle
from evoalg.algebra import Graph, algebra_from_random_walk
from evoalg.errors import ConnectivityError, DegreeError, DimensionError, SpecError
from evoalg.families import build_graph
from evoalg.markov import distribution_step, simulate_walk, stationary_distribution, transition_matrix
from evoalg.rng import SplitMix64, child_seed

F = Fraction
SUITE = ["complete:5", "path:6", "cycle:7", "star:4", "bipartite:3,2", "npartite:1,2,2",
         "friendship:3", "wheel:6", "petersen", "tree:2,3"]


def test_splitmix_reference_vector():
    # published reference outputs for seed 1234567
    g = SplitMix64(1234567)
    assert [g.next_u64() for _ in range(5)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821,
    ]


def test_child_seeds_distinct():
    seeds = {child_seed(42, r) for r in range(1000)}
    assert len(seeds) == 1000


def test_below_is_in_range_and_unbiased_enough():
    g = SplitMix64(9)
    counts = Counter(g.below(3) for _ in range(30000))
    assert set(counts) == {0, 1, 2}
    assert stats.chisquare(list(counts.values())).pvalue > 0.001


def test_transition_examples():
    assert transition_matrix(build_graph("path:4")).rows[1] == (F(1, 2), 0, F(1, 2), 0)
    k3 = transition_matrix(build_graph("complete:3"))
    assert all(k3.rows[i][k] == F(1, 2) for i in range(3) for k in range(3) if i != k)
    assert transition_matrix(Graph.from_edges(1, [(1, 1)])).rows == ((F(1),),)
    with pytest.raises(DegreeError):
        transition_matrix(Graph.from_edges(2, [(1, 1)]))


@pytest.mark.parametrize("spec", SUITE)
def test_transition_equals_random_walk_algebra(spec):
    G = build_graph(spec)
    assert [list(r) for r in transition_matrix(G).rows] == algebra_from_random_walk(G).structure()


def test_distribution_examples():
    P = transition_matrix(build_graph("path:4"))
    d1 = (1, 0, 0, 0)
    assert distribution_step(d1, P, 1) == (0, 1, 0, 0)
    assert distribution_step(d1, P, 2) == (F(1, 2), 0, F(1, 2), 0)
    p0 = (F(1, 4), F(1, 4), F(1, 3), F(1, 6))
    assert distribution_step(p0, P, 0) == p0
    with pytest.raises(DimensionError):
        distribution_step((1, 0), P, 1)


@pytest.mark.parametrize("spec", ["petersen", "wheel:5", "friendship:2"])
def test_powers_stay_stochastic(spec):
    P = transition_matrix(build_graph(spec))
    n = P.n
    for start in range(n):
        p = tuple(F(int(i == start)) for i in range(n))
        for _ in range(64):
            p = distribution_step(p, P, 1)
            assert sum(p) == 1 and min(p) >= 0


def test_stationary_examples():
    assert stationary_distribution(build_graph("complete:3")) == (F(1, 3),) * 3
    assert stationary_distribution(build_graph("friendship:2")) == (F(1, 6),) * 4 + (F(1, 3),)
    assert stationary_distribution(build_graph("path:4")) == (F(1, 6), F(2, 6), F(2, 6), F(1, 6))
    with pytest.raises(ConnectivityError):
        stationary_distribution(Graph.from_edges(4, [(1, 2), (3, 4)]))


@pytest.mark.parametrize("spec", SUITE + ["file-loop"])
def test_stationary_is_degree_over_2e(spec, tmp_path):
    if spec == "file-loop":
        G = Graph.from_edges(3, [(1, 1), (1, 2), (2, 3)])
    else:
        G = build_graph(spec)
    pi = stationary_distribution(G)
    total = sum(G.degrees)
    assert pi == tuple(F(d, total) for d in G.degrees)
    assert distribution_step(pi, transition_matrix(G), 1) == pi
    assert list(pi) == stationary_oracle(G)


def test_walk_basics():
    g4 = build_graph("path:4")
    t0 = simulate_walk(g4, 3, 0, 1)
    assert t0.visit_counts == (0, 0, 1, 0) and t0.final == 3
    for seed in range(20):
        assert simulate_walk(g4, 1, 1, seed).final == 2
    with pytest.raises(SpecError):
        simulate_walk(g4, 5, 3, 1)
    with pytest.raises(SpecError):
        simulate_walk(g4, 0, 3, 1)


def test_walk_deterministic():
    G = build_graph("petersen")
    a, b = simulate_walk(G, 1, 5000, 77), simulate_walk(G, 1, 5000, 77)
    assert a == b and a.to_dict() == b.to_dict()
    assert simulate_walk(G, 1, 5000, 78).visit_counts != a.visit_counts
    assert sum(a.visit_counts) == 5001


def test_walk_csv():
    t = simulate_walk(build_graph("cycle:3"), 1, 2, 5)
    lines = t.visits_csv().splitlines()
    assert lines[0] == "vertex,visits" and len(lines) == 4


def test_k5_chi_square():
    G = build_graph("complete:5")
    P = transition_matrix(G)
    expected = distribution_step((1, 0, 0, 0, 0), P, 16)
    walks = 100_000
    finals = Counter(simulate_walk(G, 1, 16, child_seed(2024, w)).final for w in range(walks))
    obs = [finals.get(v, 0) for v in range(1, 6)]
    exp = [float(p) * walks for p in expected]
    assert stats.chisquare(obs, exp).pvalue > 0.001
