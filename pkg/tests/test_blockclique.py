from fractions import Fraction
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np
import pytest

from distspec.blockclique import (
    BlockCliqueParams,
    NotBlockCliqueError,
    articulation_points,
    block_decomposition,
    forest_split_identity,
    random_block_clique,
    spanning_tree_count_blockclique,
    uniform_block_clique_params,
    wiener_blockclique_spectral,
)
from distspec.distance import distance_matrix, wiener_index
from distspec.graph import DisconnectedGraphError, Graph, complete_graph, cycle_graph, path_graph
from distspec.spectra import charpoly_int, laplacian_reciprocal_sum, laplacian_spectrum

from oracles import nx_graph, random_connected_edges, wiener_fw

BOWTIE = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def _random_tree(rng, n):
    return Graph.from_edges(n, [(i, int(rng.integers(i))) for i in range(1, n)])


def test_decomposition_examples():
    p4 = block_decomposition(path_graph(4))
    assert p4.blocks == ((0, 1), (1, 2), (2, 3)) and p4.cut_vertices == (1, 2)
    bt = block_decomposition(BOWTIE)
    assert bt.blocks == ((0, 1, 2), (2, 3, 4)) and bt.cut_vertices == (2,)
    k4 = block_decomposition(complete_graph(4))
    assert k4.blocks == ((0, 1, 2, 3),) and k4.cut_vertices == ()
    with pytest.raises(DisconnectedGraphError):
        block_decomposition(Graph.from_edges(3, [(0, 1)]))


def test_decomposition_matches_networkx():
    rng = np.random.default_rng(4)
    for _ in range(150):
        n = int(rng.integers(2, 25))
        g = Graph.from_edges(n, random_connected_edges(rng, n, p=float(rng.uniform(0, 0.25))))
        dec = block_decomposition(g)
        h = nx_graph(g)
        assert set(dec.blocks) == {tuple(sorted(c)) for c in nx.biconnected_components(h)}
        assert set(dec.cut_vertices) == set(nx.articulation_points(h))
        assert articulation_points(g) == sorted(nx.articulation_points(h))
        # every edge in exactly one block; blocks meet only at cut vertices
        for u, v in g.edges():
            assert sum(u in b and v in b for b in dec.blocks) == 1
        for a, b in combinations(dec.blocks, 2):
            common = set(a) & set(b)
            assert len(common) <= 1 and common <= set(dec.cut_vertices)


def test_decomposition_order_is_deterministic():
    g = Graph.from_edges(7, [(5, 6), (0, 6), (0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    blocks = block_decomposition(g).blocks
    assert blocks == tuple(sorted(blocks)) == ((0, 1, 2), (0, 6), (2, 3, 4), (5, 6))


def test_params_examples():
    rng = np.random.default_rng(1)
    t = _random_tree(rng, 9)
    assert uniform_block_clique_params(t) == BlockCliqueParams(2, 8)
    assert uniform_block_clique_params(BOWTIE) == BlockCliqueParams(3, 2)
    with pytest.raises(NotBlockCliqueError) as exc:
        uniform_block_clique_params(cycle_graph(4))
    assert exc.value.reason == "block not a clique"
    mixed = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    with pytest.raises(NotBlockCliqueError) as exc:
        uniform_block_clique_params(mixed)
    assert exc.value.reason == "mixed block orders"


def test_spectral_wiener_examples():
    assert wiener_blockclique_spectral(path_graph(3)) == 4
    assert wiener_blockclique_spectral(BOWTIE) == 14
    assert wiener_blockclique_spectral(complete_graph(4)) == 6
    with pytest.raises(NotBlockCliqueError):
        wiener_blockclique_spectral(cycle_graph(5))


def test_spanning_tree_examples():
    assert spanning_tree_count_blockclique(BlockCliqueParams(2, 7)) == 1
    assert spanning_tree_count_blockclique(BlockCliqueParams(3, 2)) == 9
    assert abs(charpoly_int(BOWTIE.laplacian())[-2]) == 45
    assert spanning_tree_count_blockclique(BlockCliqueParams(4, 1)) == 16


def test_forest_identity_examples():
    assert forest_split_identity(3) == (2, 2)
    assert forest_split_identity(2) == (1, 1)
    assert forest_split_identity(5) == (50, 50)
    with pytest.raises(ValueError):
        forest_split_identity(1)


def _two_tree_forests(b):
    # brute force: spanning forests of K_b with two trees separating vertices 0 and 1
    edges = list(combinations(range(b), 2))
    count = 0
    for sub in combinations(edges, b - 2):
        h = nx.Graph(sub)
        h.add_nodes_from(range(b))
        if nx.is_forest(h) and nx.number_connected_components(h) == 2 and not nx.has_path(h, 0, 1):
            count += 1
    return count


@pytest.mark.parametrize("b", range(2, 13))
def test_forest_identity_range(b):
    lhs, rhs = forest_split_identity(b)
    assert lhs == rhs
    if b <= 6:
        assert lhs == _two_tree_forests(b)


def test_random_block_clique_shapes():
    for seed in range(5):
        t = random_block_clique(2, 6, seed)
        assert t.n == 7 and t.m == 6 and t.is_connected()
        g = random_block_clique(3, 2, seed)
        assert g.n == 5 and uniform_block_clique_params(g) == BlockCliqueParams(3, 2)
        assert random_block_clique(4, 1, seed) == complete_graph(4)
    assert random_block_clique(4, 5, 9) == random_block_clique(4, 5, 9)


def test_spectral_formula_on_random_block_cliques():
    count = 0
    for b in (2, 3, 4, 5):
        for r in range(1, 9):
            for seed in range(6):
                g = random_block_clique(b, r, 100 * b + 10 * r + seed)
                params = uniform_block_clique_params(g)
                assert params == BlockCliqueParams(b, r) and g.n == r * (b - 1) + 1
                w = wiener_blockclique_spectral(g)
                assert isinstance(w, Fraction) and w.denominator == 1
                assert w == wiener_fw(g.n, g.edges())
                c1 = charpoly_int(g.laplacian())[g.n - 1]
                assert c1 == (-1) ** (g.n - 1) * g.n * spanning_tree_count_blockclique(params)
                count += 1
    assert count == 192


def test_tree_specialisation():
    rng = np.random.default_rng(60)
    for _ in range(60):
        n = int(rng.integers(2, 61))
        t = _random_tree(rng, n)
        assert n * laplacian_reciprocal_sum(t) == wiener_index(distance_matrix(t))


def test_vieta_consistency():
    rng = np.random.default_rng(12)
    for _ in range(30):
        n = int(rng.integers(2, 9))
        g = Graph.from_edges(n, random_connected_edges(rng, n))
        mu = np.array(laplacian_spectrum(g).eigenvalues)
        cp = charpoly_int(g.laplacian())
        # cp[k] = (-1)^k e_k(mu)
        for k in range(1, n + 1):
            e_k = sum(np.prod(c) for c in combinations(mu, k))
            want = (-1) ** k * cp[k]
            assert abs(e_k - want) <= 1e-6 * max(1.0, abs(want))
