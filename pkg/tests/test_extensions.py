import numpy as np
import pytest

from distspec.distance import diameter, distance_matrix, wiener_index
from distspec.extensions import (
    ExtensionKind,
    extend,
    extension_diameter,
    extension_distance_matrix,
    extension_wiener,
)
from distspec.graph import DisconnectedGraphError, Graph, complete_graph, cycle_graph
from distspec.spectra import charpoly_int, d_cospectral, sym_eigenvalues

from oracles import floyd_warshall, nx_graph, random_connected_edges

KINDS = list(ExtensionKind)


def test_kind_shift():
    assert ExtensionKind.COCLIQUE.shift == 2 and ExtensionKind.CLIQUE.shift == 1
    assert ExtensionKind("clique") is ExtensionKind.CLIQUE


def test_extend_examples():
    k22 = extend(complete_graph(2), 2, "coclique")
    assert k22.n == 4 and k22.m == 4 and k22.is_cycle()
    g = Graph.from_edges(4, [(0, 1), (1, 3), (2, 3)])
    for kind in KINDS:
        assert extend(g, 1, kind) == g
    c4p = extend(cycle_graph(4), 2, "clique")
    assert c4p.n == 8 and c4p.m == 20 and set(c4p.degrees()) == {5}
    with pytest.raises(ValueError):
        extend(g, 0, "clique")


def test_fiber_major_indexing():
    g = extend(complete_graph(2), 3, "clique")
    # (x, i) -> x*q + i: vertex 4 is copy 1 of base vertex 1
    assert g.has_edge(4, 0) and g.has_edge(4, 3) and g.has_edge(4, 5)


def test_distance_matrix_examples():
    d = extension_distance_matrix(distance_matrix(complete_graph(2)), 2, "coclique")
    assert d.tolist() == [[0, 2, 1, 1], [2, 0, 1, 1], [1, 1, 0, 2], [1, 1, 2, 0]]
    assert np.array_equal(d, distance_matrix(extend(complete_graph(2), 2, "coclique")))
    dc4 = distance_matrix(cycle_graph(4))
    e = extension_distance_matrix(dc4, 2, "clique")
    for x in range(4):
        for y in range(4):
            block = e[2 * x:2 * x + 2, 2 * y:2 * y + 2]
            want = np.full((2, 2), dc4[x, y]) if x != y else np.array([[0, 1], [1, 0]])
            assert np.array_equal(block, want)
    for kind in KINDS:
        assert np.array_equal(extension_distance_matrix(dc4, 1, kind), dc4)


def test_single_vertex_coclique_is_disconnected():
    with pytest.raises(DisconnectedGraphError):
        extension_distance_matrix(np.zeros((1, 1), dtype=np.int64), 2, "coclique")
    assert extension_distance_matrix(np.zeros((1, 1), dtype=np.int64), 2, "clique").tolist() == [[0, 1], [1, 0]]


def test_closed_form_matches_bfs_and_floyd_warshall():
    rng = np.random.default_rng(31)
    for _ in range(60):
        n = int(rng.integers(2, 9))
        g = Graph.from_edges(n, random_connected_edges(rng, n))
        d = distance_matrix(g)
        for q in (1, 2, 3):
            for kind in KINDS:
                ext = extend(g, q, kind)
                closed = extension_distance_matrix(d, q, kind)
                assert closed.tolist() == floyd_warshall(ext.n, ext.edges())
                assert extension_wiener(wiener_index(d), n, q, kind) == wiener_index(closed)
                assert extension_diameter(diameter(d), q, kind) == diameter(closed)


def test_extension_wiener_examples():
    assert extension_wiener(8, 4, 2, "clique") == 36
    assert extension_wiener(8, 4, 2, ExtensionKind.CLIQUE) == wiener_index(
        distance_matrix(extend(cycle_graph(4), 2, "clique")))
    assert extension_wiener(1, 2, 2, "coclique") == 8
    for kind in KINDS:
        assert extension_wiener(17, 6, 1, kind) == 17


def test_shift_identity():
    # D(G_q) + shift*I equals J_q kron (D + shift*I) up to the fiber layout
    rng = np.random.default_rng(8)
    for _ in range(10):
        n = int(rng.integers(2, 7))
        d = distance_matrix(Graph.from_edges(n, random_connected_edges(rng, n)))
        for q in (2, 3):
            for kind in KINDS:
                s = kind.shift
                lhs = extension_distance_matrix(d, q, kind) + s * np.eye(n * q, dtype=np.int64)
                rhs = np.kron(d + s * np.eye(n, dtype=np.int64), np.ones((q, q), dtype=np.int64))
                assert np.array_equal(lhs, rhs)
                a = sym_eigenvalues(lhs).eigenvalues
                b = sym_eigenvalues(rhs).eigenvalues
                assert np.allclose(a, b, atol=1e-6)
                assert charpoly_int(lhs) == charpoly_int(rhs)


def test_cospectrality_preserved_on_sweep_pairs(sweep_classes):
    pairs = []
    for cls in sweep_classes:
        ms = cls.members
        pairs += [(ms[i].graph6, ms[j].graph6) for i in range(len(ms)) for j in range(i + 1, len(ms))]
    assert pairs, "the n <= 7 sweep must supply cospectral pairs"
    from distspec.formats import parse_graph6
    for a, b in pairs:
        g, h = parse_graph6(a), parse_graph6(b)
        for q in (2, 3):
            for kind in KINDS:
                assert d_cospectral(extend(g, q, kind), extend(h, q, kind))


def test_triangle_coclique_extension_is_octahedron():
    import networkx as nx
    g = extend(complete_graph(3), 2, "coclique")
    # K_3 coclique-extended is the octahedron K_{2,2,2}
    assert nx.is_isomorphic(nx_graph(g), nx.complete_multipartite_graph(2, 2, 2))
