import numpy as np
import pytest

from doublejoin.errors import PreconditionError
from doublejoin.graph import Graph, family, incidence_matrix, laplacian, line_graph, regularity
from doublejoin.operations import Variant, double_join, join, q_graph, r_graph, subdivision, total_graph
from doublejoin.oracle import laplacian_spectrum, spectra_equal

from conftest import graphs


def is_bipartite(g):
    colour = {}
    for start in range(g.n):
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for u, v in g.edges:
                if x in (u, v):
                    y = v if x == u else u
                    if y not in colour:
                        colour[y] = 1 - colour[x]
                        stack.append(y)
                    elif colour[y] == colour[x]:
                        return False
    return True


def test_subdivision_examples():
    s = subdivision(family("K3"))
    assert (s.n, s.m) == (6, 6) and regularity(s) == 2 and is_bipartite(s)
    assert spectra_equal(laplacian_spectrum(s), laplacian_spectrum(family("C6")))
    assert subdivision(family("P2")).relabel([0, 2, 1]) == family("P3")
    sp = subdivision(family("petersen"))
    assert (sp.n, sp.m) == (25, 30)
    assert all(u < 10 <= v for u, v in sp.edges)


def test_q_graph_examples():
    assert (q_graph(family("K3")).n, q_graph(family("K3")).m) == (6, 9)
    assert q_graph(family("P2")) == subdivision(family("P2"))
    q = q_graph(family("C4"))
    assert (q.n, q.m) == (8, 12)


def test_r_graph_examples():
    assert (r_graph(family("K3")).n, r_graph(family("K3")).m) == (6, 9)
    assert r_graph(family("P2")) == family("K3")
    assert r_graph(family("C4")).m == 12


def test_total_graph_examples():
    t = total_graph(family("K3"))
    assert (t.n, t.m) == (6, 12)
    assert total_graph(family("P2")) == family("K3")
    t4 = total_graph(family("C4"))
    assert (t4.n, t4.m, regularity(t4)) == (8, 16, 4)


@pytest.mark.parametrize(
    "variant, names, expected",
    [
        ("S", ("K3", "P2", "P3"), (11, 24)),
        ("Q", ("K3", "P2", "P3"), (11, 27)),
        ("R", ("K3", "P2", "P3"), (11, 27)),
        ("T", ("K3", "P2", "P3"), (11, 30)),
    ],
)
def test_double_join_counts(variant, names, expected):
    dj = double_join(variant, *graphs(*names))
    assert (dj.n, dj.m) == expected


def test_double_join_with_empty_factors_is_variant_graph():
    g = family("K3")
    assert double_join("S", g, family("null0"), family("null0")) == subdivision(g)
    assert double_join("T", g, family("null0"), family("null0")) == total_graph(g)


def test_double_join_rejects_disconnected():
    with pytest.raises(PreconditionError):
        double_join("S", family("null2"), family("P2"), family("P3"))


def test_variant_parse():
    assert Variant.parse("q") is Variant.Q
    assert Variant.parse(Variant.T) is Variant.T
    with pytest.raises(ValueError):
        Variant.parse("X")


@pytest.mark.parametrize("names", [("K3", "P2", "P3"), ("C4", "K2", "P3"), ("K4", "null0", "C4"), ("P3", "K2", "P2")])
@pytest.mark.parametrize("variant", ["S", "Q", "R", "T"])
def test_vertex_and_edge_totals(variant, names):
    g, g1, g2 = graphs(*names)
    dj = double_join(variant, g, g1, g2)
    base = {"S": subdivision, "Q": q_graph, "R": r_graph, "T": total_graph}[variant](g)
    assert dj.n == g.n + g.m + g1.n + g2.n
    assert dj.m == base.m + g1.m + g2.m + g.n * g1.n + g.m * g2.n


def displayed_block_laplacian(variant, g, g1, g2):
    """The 4x4 block Laplacian as written for each variant, assembled by hand."""
    n, m, n1, n2 = g.n, g.m, g1.n, g2.n
    k = regularity(g)
    M = incidence_matrix(g)
    top_left = (n1 + k) * np.eye(n) + (laplacian(g) if variant in "RT" else 0)
    middle = (n2 + 2) * np.eye(m) + (laplacian(line_graph(g)) if variant in "QT" else 0)
    rows = [
        [top_left, -M, -np.ones((n, n1)), np.zeros((n, n2))],
        [-M.T, middle, np.zeros((m, n1)), -np.ones((m, n2))],
        [-np.ones((n1, n)), np.zeros((n1, m)), laplacian(g1) + n * np.eye(n1), np.zeros((n1, n2))],
        [np.zeros((n2, n)), -np.ones((n2, m)), np.zeros((n2, n1)), laplacian(g2) + m * np.eye(n2)],
    ]
    return np.block(rows)


@pytest.mark.parametrize("variant", ["S", "Q", "R", "T"])
@pytest.mark.parametrize("names", [("K3", "P2", "P3"), ("C4", "K2", "P3"), ("petersen", "P2", "C4")])
def test_block_laplacian_entrywise(variant, names):
    g, g1, g2 = graphs(*names)
    assert np.array_equal(laplacian(double_join(variant, g, g1, g2)), displayed_block_laplacian(variant, g, g1, g2))


@pytest.mark.parametrize("variant", ["S", "Q", "R", "T"])
def test_relabelling_g1_keeps_spectrum(variant):
    rng = np.random.default_rng(7)
    g, g1, g2 = graphs("K4", "P3", "C4")
    perm = [int(x) for x in rng.permutation(g1.n)]
    a = laplacian_spectrum(double_join(variant, g, g1, g2))
    b = laplacian_spectrum(double_join(variant, g, g1.relabel(perm), g2))
    assert spectra_equal(a, b, 1e-10)


def test_classical_join():
    j = join(family("K2"), family("P3"))
    assert (j.n, j.m) == (5, 1 + 2 + 6)
    assert join(family("null1"), family("null2")) == Graph(3, ((0, 1), (0, 2)))
