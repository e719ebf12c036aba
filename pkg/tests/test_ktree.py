import numpy as np
import pytest

from distspec.distance import distance_matrix, wiener_index
from distspec.graph import DisconnectedGraphError, Graph, complete_graph, cycle_graph, path_graph
from distspec.ktree import (
    LinearKTreeCert,
    NotLinearKTreeError,
    generate_extremal_ktree,
    ktree_distance_matrix,
    ktree_wiener_bounds,
    random_linear_ktree,
    recursive_labeling,
    validate_certificate,
    wiener_linear_ktree,
)

from oracles import wiener_fw

GRID = [(5, 2), (7, 2), (7, 3), (9, 4)]


def test_complete_graph_certificate():
    for k in range(1, 6):
        cert = recursive_labeling(complete_graph(k + 1), k)
        assert cert.back_neighbors == {} and sorted(cert.labeling) == list(range(k + 1))
        assert wiener_linear_ktree(complete_graph(k + 1), k) == k * (k + 1) // 2
    assert wiener_linear_ktree(complete_graph(4), 3) == 6


def test_path_certificate():
    g = path_graph(5)
    cert = recursive_labeling(g, 1)
    pos = cert.positions()
    assert sorted(cert.back_neighbors) == [2, 3, 4]
    for p, nb in cert.back_neighbors.items():
        assert len(nb) == 1 and pos[nb[0]] < p and g.has_edge(nb[0], cert.labeling[p])
    # peeling starts from an end of the path, so an end vertex is labelled last
    assert g.degree(cert.labeling[-1]) == 1


def test_rejections():
    with pytest.raises(NotLinearKTreeError, match="no peelable vertex"):
        recursive_labeling(cycle_graph(4), 1)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(NotLinearKTreeError, match="3 vertices of degree k"):
        recursive_labeling(star, 1)
    # a 2-tree that branches: three degree-2 vertices
    branching = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)])
    with pytest.raises(NotLinearKTreeError):
        recursive_labeling(branching, 2)
    with pytest.raises(DisconnectedGraphError):
        recursive_labeling(Graph.from_edges(4, [(0, 1), (2, 3)]), 1)
    with pytest.raises(ValueError):
        recursive_labeling(path_graph(3), 3)


def test_residual_must_be_clique():
    # triangle 0-1-3 with a pendant vertex 2 on 0: one peel leaves the path 2-0-3
    g = Graph.from_edges(4, [(0, 1), (0, 3), (1, 3), (0, 2)])
    with pytest.raises(NotLinearKTreeError, match="residual k\\+1 vertices not a clique"):
        recursive_labeling(g, 2)
    # C_5 plus a chord has three degree-2 vertices
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    with pytest.raises(NotLinearKTreeError, match="3 vertices of degree k"):
        recursive_labeling(g, 2)


def test_certificate_validation_catches_tampering():
    g = generate_extremal_ktree(6, 2, "pathlike")
    cert = recursive_labeling(g, 2)
    assert validate_certificate(g, cert) == []
    bad = LinearKTreeCert(2, cert.labeling[::-1], cert.back_neighbors)
    assert validate_certificate(g, bad)
    assert validate_certificate(g, LinearKTreeCert(2, (0, 0, 1, 2, 3, 4), {})) == ["labeling is not a permutation"]


def test_algorithm_examples():
    assert wiener_linear_ktree(generate_extremal_ktree(5, 2, "pathlike"), 2) == 13
    assert wiener_linear_ktree(path_graph(6), 1) == 35
    with pytest.raises(NotLinearKTreeError):
        wiener_linear_ktree(cycle_graph(6), 1)


def test_bounds_examples():
    for n in range(2, 10):
        assert ktree_wiener_bounds(n, n - 1)[0] == n * (n - 1) // 2
    assert ktree_wiener_bounds(5, 2) == (13, 13)
    for n in range(2, 21):
        assert ktree_wiener_bounds(n, 1)[1] == n * (n * n - 1) // 6
    with pytest.raises(ValueError):
        ktree_wiener_bounds(4, 4)


@pytest.mark.parametrize("n,k", GRID)
def test_extremal_generators_attain_bounds(n, k):
    lo, hi = ktree_wiener_bounds(n, k)
    dom = generate_extremal_ktree(n, k, "dominating")
    path = generate_extremal_ktree(n, k, "pathlike")
    assert recursive_labeling(dom, k) and recursive_labeling(path, k)
    assert wiener_fw(n, dom.edges()) == wiener_linear_ktree(dom, k) == lo
    assert wiener_fw(n, path.edges()) == wiener_linear_ktree(path, k) == hi
    assert dom.degree(0) == n - 1


def test_extremal_generator_edge_cases():
    for k in range(1, 5):
        for which in ("pathlike", "dominating"):
            assert generate_extremal_ktree(k + 1, k, which) == complete_graph(k + 1)
    with pytest.raises(ValueError):
        generate_extremal_ktree(5, 1, "dominating")
    with pytest.raises(ValueError):
        generate_extremal_ktree(5, 2, "spiral")


def test_random_ktrees_against_bfs():
    rng = np.random.default_rng(77)
    for i in range(120):
        k = int(rng.integers(1, 6))
        n = int(rng.integers(k + 1, 60))
        g = random_linear_ktree(n, k, seed=i)
        d = distance_matrix(g)
        assert np.array_equal(ktree_distance_matrix(g, k), d)
        w = wiener_linear_ktree(g, k)
        assert w == wiener_index(d)
        lo, hi = ktree_wiener_bounds(n, k)
        assert lo <= w <= hi


def test_random_ktree_is_deterministic():
    assert random_linear_ktree(30, 3, seed=5) == random_linear_ktree(30, 3, seed=5)
    assert random_linear_ktree(30, 3, seed=5) != random_linear_ktree(30, 3, seed=6)


def test_both_peeling_paths_agree():
    # the whole-graph peel must accept everything the fast path does
    from distspec.ktree import _build_cert, _peel_full

    for seed in range(30):
        g = random_linear_ktree(25, 3, seed)
        cert = _build_cert(g, 3, *_peel_full(g, 3))
        assert validate_certificate(g, cert) == []
