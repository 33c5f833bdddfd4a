from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doublejoin.graph import (
    Graph,
    adjacency_matrix,
    components,
    degree_matrix,
    disjoint_union,
    family,
    format_edge_list,
    incidence_matrix,
    is_connected,
    laplacian,
    line_graph,
    parse_edge_list,
    read_edge_list,
    regularity,
    signless_laplacian,
    write_edge_list,
)
from doublejoin.oracle import laplacian_spectrum, zero_multiplicity


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_graph_canonical_form():
    g = Graph.from_edges(3, [(2, 1), (0, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g == Graph(3, ((0, 1), (1, 2)))


@pytest.mark.parametrize(
    "n, edges",
    [(2, [(0, 0)]), (2, [(0, 1), (1, 0)]), (2, [(0, 2)])],
    ids=["loop", "parallel", "out-of-range"],
)
def test_graph_rejects_non_simple(n, edges):
    with pytest.raises(ValueError):
        Graph.from_edges(n, edges)


def test_graph_constructor_rejects_unsorted():
    with pytest.raises(ValueError):
        Graph(3, ((1, 2), (0, 1)))


def test_adjacency_examples():
    assert np.array_equal(adjacency_matrix(family("null3")), np.zeros((3, 3)))
    assert np.array_equal(adjacency_matrix(family("K3")), np.ones((3, 3)) - np.eye(3))
    assert np.array_equal(adjacency_matrix(family("P2")), [[0, 1], [1, 0]])


def test_laplacian_examples():
    assert np.array_equal(laplacian(family("P2")), [[1, -1], [-1, 1]])
    assert np.array_equal(laplacian(family("K3")), [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])


def test_signless_laplacian_examples():
    assert np.array_equal(signless_laplacian(family("P2")), [[1, 1], [1, 1]])
    assert np.array_equal(signless_laplacian(family("K3")), [[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    pet = family("petersen")
    assert np.array_equal(signless_laplacian(pet), 6 * np.eye(10, dtype=int) - laplacian(pet))


def test_incidence_examples():
    assert np.array_equal(incidence_matrix(family("P2")), [[1], [1]])
    m = incidence_matrix(family("K3"))
    assert np.array_equal(m @ m.T, 4 * np.eye(3, dtype=int) - laplacian(family("K3")))


def test_line_graph_of_c4_via_incidence():
    c4 = family("C4")
    m = incidence_matrix(c4)
    # l(C4) is again a 4-cycle; compare with a direct construction on the edge labels
    lg = line_graph(c4)
    edges = c4.edges
    direct = np.array([[int(i != j and bool(set(edges[i]) & set(edges[j]))) for j in range(4)] for i in range(4)])
    assert np.array_equal(m.T @ m - 2 * np.eye(4, dtype=int), direct)
    assert np.array_equal(adjacency_matrix(lg), direct)
    assert regularity(lg) == 2 and is_connected(lg)


def test_line_graph_examples():
    assert line_graph(family("P3")) == family("P2")
    assert line_graph(family("K3")) == family("K3")
    lp = line_graph(family("petersen"))
    assert (lp.n, lp.m) == (15, 30)


def test_families():
    assert family("K3").m == 3
    assert family("k3") == family("K3")
    assert (family("null5").n, family("null5").m) == (5, 0)
    pet = family("petersen")
    assert (pet.n, pet.m, regularity(pet)) == (10, 15, 3)
    assert family("star6").n == 6 and family("star6").m == 5
    assert family("K2,3").m == 6
    assert family("C5").edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))
    with pytest.raises(ValueError):
        family("dodecahedron")
    with pytest.raises(ValueError):
        family("C2")


def test_regularity():
    assert regularity(family("K3")) == 2
    assert regularity(family("P3")) is None
    assert regularity(family("petersen")) == 3


def test_is_connected():
    assert is_connected(family("K3"))
    assert not is_connected(family("null2"))
    assert not is_connected(Graph(3, ((0, 1),)))
    assert is_connected(family("null0"))


def test_edge_list_round_trip(tmp_path):
    g = family("petersen")
    path = tmp_path / "pet.txt"
    write_edge_list(g, path)
    assert path.read_text().splitlines()[0] == "10 15"
    assert read_edge_list(path) == g


def test_edge_list_comments_and_order():
    text = "# a triangle\n3 3\n\n1 2\n0 2\n# done\n0 1\n"
    assert parse_edge_list(text) == family("K3")


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n0 1\n", "3 1\n1 0\n", "3 1\n0 5\n", "3 1\n0 1 2\n", "3 1\nx y\n"],
    ids=["empty", "count", "order", "range", "arity", "garbage"],
)
def test_edge_list_rejects(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)


def test_format_is_canonical():
    assert format_edge_list(Graph.from_edges(3, [(1, 2), (0, 1)])) == "3 2\n0 1\n1 2\n"


@given(small_graphs())
def test_matrix_identities(g):
    lap, adj = laplacian(g), adjacency_matrix(g)
    assert np.array_equal(lap + 2 * adj, signless_laplacian(g))
    assert np.array_equal(lap, degree_matrix(g) - adj)
    m = incidence_matrix(g)
    assert np.array_equal(m @ m.T, signless_laplacian(g))
    assert np.array_equal(lap.sum(axis=1), np.zeros(g.n))
    k = regularity(g)
    if k is not None:
        assert np.array_equal(m @ m.T + lap, 2 * k * np.eye(g.n, dtype=int))
    if g.m:
        assert np.array_equal(adjacency_matrix(line_graph(g)), m.T @ m - 2 * np.eye(g.m, dtype=int))


@settings(max_examples=60)
@given(small_graphs())
def test_zero_multiplicity_counts_components(g):
    assert zero_multiplicity(laplacian_spectrum(g), 1e-8) == len(components(g))


def test_relabel_and_union():
    g = family("P3").relabel([2, 0, 1])
    assert g.edges == ((0, 1), (0, 2))
    two = disjoint_union(family("K3"), family("K3"))
    assert (two.n, two.m, len(components(two))) == (6, 6, 2)
    with pytest.raises(ValueError):
        family("P3").relabel([0, 0, 1])


def test_empty_graph_matrices():
    g = family("null0")
    for mat in (adjacency_matrix(g), laplacian(g), signless_laplacian(g)):
        assert mat.shape == (0, 0)
    assert incidence_matrix(g).shape == (0, 0)
