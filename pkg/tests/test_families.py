import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evoalg.errors import IngestionError, SpecError
from evoalg.families import (
    FamilySpec,
    build_graph,
    load_edge_list,
    parse_graph_spec,
    render_spec,
)


def test_named_examples():
    k8 = build_graph("complete:8")
    assert k8.n == 8 and set(k8.degrees) == {7}
    f2 = build_graph("friendship:2")
    assert f2.n == 5 and f2.degrees == (2, 2, 2, 2, 4)
    w4 = build_graph("wheel:4")
    assert w4.n == 4 and w4.regular_degree() == 3


def test_parse_examples():
    assert parse_graph_spec("bipartite:6,4") == FamilySpec("bipartite", (6, 4))
    assert parse_graph_spec("npartite:1,1,2") == FamilySpec("npartite", (1, 1, 2))
    assert parse_graph_spec("  wheel : 7 ") == FamilySpec("wheel", (7,))
    assert parse_graph_spec("petersen") == FamilySpec("petersen")
    assert parse_graph_spec("file:some/edges.txt") == FamilySpec("file", (), "some/edges.txt")


@pytest.mark.parametrize("bad", [
    "path:ten", "path:", "path:3,", "bipartite:3", "npartite:4", "tree:2",
    "hexagon:3", "path:3 x", "petersen:2", "path:0", "path:-2", "", "cycle:2", "wheel:3",
])
def test_parse_errors(bad):
    with pytest.raises(SpecError):
        build_graph(bad)


def test_parse_error_carries_position():
    with pytest.raises(SpecError) as info:
        parse_graph_spec("path:ten")
    assert info.value.position == 5


def test_labelling_conventions():
    p = build_graph("path:5")
    assert p.edges() == [(1, 2), (2, 3), (3, 4), (4, 5)]
    w = build_graph("wheel:6")
    assert w.degrees[-1] == 5 and all(d == 3 for d in w.degrees[:-1])
    assert sorted(w.neighbors[5]) == [0, 1, 2, 3, 4]
    f = build_graph("friendship:3")
    assert f.degrees[-1] == 6 and (1, 2) in f.edges() and (3, 4) in f.edges()
    b = build_graph("bipartite:2,3")
    assert sorted(b.neighbors[0]) == [2, 3, 4]
    s = build_graph("star:4")
    assert s.degrees == (4, 1, 1, 1, 1)


def test_petersen_is_the_petersen_graph():
    g = build_graph("petersen")
    ref = nx.petersen_graph()
    mine = nx.Graph([(u - 1, v - 1) for u, v in g.edges()])
    assert nx.is_isomorphic(mine, ref)


def test_tree_truncation_flagged():
    t = build_graph("tree:3,2")
    assert t.approximate
    # every vertex of T_d has degree d + 1; the root's children have d children
    assert t.n == 1 + 4 + 4 * 3
    assert t.degrees[0] == 4 and t.degrees[1] == 4 and t.degrees[-1] == 1
    assert t.regular_degree() is None
    assert not build_graph("cycle:5").approximate


@pytest.mark.parametrize("n", range(3, 30))
def test_cycles_and_completes_regular(n):
    assert build_graph(f"cycle:{n}").regular_degree() == 2
    assert build_graph(f"complete:{n}").regular_degree() == n - 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8))
def test_bipartite_equals_npartite(m, n):
    assert build_graph(f"bipartite:{m},{n}").adjacency() == build_graph(f"npartite:{m},{n}").adjacency()


@pytest.mark.parametrize("k", range(1, 12))
def test_friendship_counts(k):
    g = build_graph(f"friendship:{k}")
    assert g.n == 2 * k + 1 and g.edge_count == 3 * k


@pytest.mark.parametrize("n", range(4, 15))
def test_wheel_counts(n):
    assert build_graph(f"wheel:{n}").edge_count == 2 * (n - 1)


def test_family_sizes_match_networkx():
    pairs = [
        ("complete:6", nx.complete_graph(6)),
        ("path:7", nx.path_graph(7)),
        ("cycle:9", nx.cycle_graph(9)),
        ("star:5", nx.star_graph(5)),
        ("bipartite:3,4", nx.complete_bipartite_graph(3, 4)),
        ("npartite:1,2,3", nx.complete_multipartite_graph(1, 2, 3)),
        ("wheel:7", nx.wheel_graph(7)),
    ]
    for text, ref in pairs:
        g = build_graph(text)
        mine = nx.Graph([(u - 1, v - 1) for u, v in g.edges()])
        assert nx.is_isomorphic(mine, ref), text


specs = st.one_of(
    st.builds(lambda f, n: FamilySpec(f, (n,)), st.sampled_from(["complete", "path", "star", "friendship"]),
              st.integers(1, 50)),
    st.builds(lambda n: FamilySpec("cycle", (n,)), st.integers(3, 50)),
    st.builds(lambda n: FamilySpec("wheel", (n,)), st.integers(4, 50)),
    st.builds(lambda p: FamilySpec("npartite", tuple(p)), st.lists(st.integers(1, 9), min_size=2, max_size=5)),
    st.builds(lambda a, b: FamilySpec("bipartite", (a, b)), st.integers(1, 30), st.integers(1, 30)),
    st.builds(lambda a, b: FamilySpec("tree", (a, b)), st.integers(1, 5), st.integers(1, 4)),
    st.just(FamilySpec("petersen")),
)


@settings(max_examples=200)
@given(specs)
def test_render_parse_round_trip(spec):
    assert parse_graph_spec(render_spec(spec)) == spec


def test_edge_list(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("# a path\n1 2\n2 3  # middle\n3 4\n2 1\n")
    g = load_edge_list(f)
    assert g.adjacency() == build_graph("path:4").adjacency()

    f.write_text("1 1\n")
    loop = load_edge_list(f)
    assert loop.n == 1 and loop.degrees == (1,)

    f.write_text("0 2\n")
    with pytest.raises(IngestionError) as info:
        load_edge_list(f)
    assert info.value.line == 1

    f.write_text("1 2\n2 x\n")
    with pytest.raises(IngestionError) as info:
        load_edge_list(f)
    assert info.value.line == 2

    with pytest.raises(IngestionError):
        load_edge_list(tmp_path / "missing.txt")


def test_file_spec(tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("1 2\n2 3\n3 1\n")
    assert build_graph(f"file:{f}").regular_degree() == 2
