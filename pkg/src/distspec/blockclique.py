"""Blocks, uniform block-clique graphs and their Laplacian Wiener formula."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .graph import DisconnectedGraphError, Graph


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]  # sorted vertex tuples, ordered by (min vertex, tuple)
    cut_vertices: tuple[int, ...]


def _biconnected(g: Graph):
    """Iterative lowpoint DFS.  Returns (blocks as vertex sets, cut vertices)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack = []
        # frames: (vertex, parent, neighbour iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, pos = stack[-1]
            nbrs = g.adjacency[v]
            if pos < len(nbrs):
                stack[-1] = (v, parent, pos + 1)
                u = nbrs[pos]
                if disc[u] < 0:
                    disc[u] = low[u] = timer
                    timer += 1
                    edge_stack.append((v, u))
                    if v == root:
                        root_children += 1
                    stack.append((u, v, 0))
                elif u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(comp)
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts


def articulation_points(g: Graph) -> list[int]:
    return sorted(_biconnected(g)[1])


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Maximal 2-connected subgraphs (bridges as 2-vertex blocks) and cut vertices."""
    if not g.is_connected():
        raise DisconnectedGraphError()
    blocks, cuts = _biconnected(g)
    ordered = sorted(tuple(sorted(b)) for b in blocks)
    return BlockDecomposition(tuple(ordered), tuple(sorted(cuts)))


@dataclass(frozen=True)
class BlockCliqueParams:
    b: int  # order of every block
    r: int  # number of blocks


class NotBlockCliqueError(ValueError):
    """Raised with ``reason`` ``"block not a clique"`` or ``"mixed block orders"``."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"not uniform block-clique: {reason}" + (f" ({detail})" if detail else ""))


def uniform_block_clique_params(g: Graph) -> BlockCliqueParams:
    dec = block_decomposition(g)
    if not dec.blocks:
        raise NotBlockCliqueError("no blocks", "single vertex")
    for blk in dec.blocks:
        if not g.induced_is_clique(blk):
            raise NotBlockCliqueError("block not a clique", f"block {list(blk)}")
    orders = {len(blk) for blk in dec.blocks}
    if len(orders) > 1:
        raise NotBlockCliqueError("mixed block orders", f"orders {sorted(orders)}")
    return BlockCliqueParams(orders.pop(), len(dec.blocks))


def wiener_blockclique_spectral(g: Graph) -> Fraction:
    """``(n*b/2) * sum(1/mu)`` over nonzero Laplacian eigenvalues, exactly."""
    from .spectra import laplacian_reciprocal_sum

    params = uniform_block_clique_params(g)
    return Fraction(g.n * params.b, 2) * laplacian_reciprocal_sum(g)


def spanning_tree_count_blockclique(params: BlockCliqueParams) -> int:
    """Spanning trees of a uniform block-clique graph: one Cayley count per block."""
    return params.b ** ((params.b - 2) * params.r)


def _qpow(base: int, exp: int) -> Fraction:
    return Fraction(base) ** exp


def forest_split_identity(b: int) -> tuple[int, int]:
    """Both sides of the two-tree split count for a ``b``-clique.

    The left side counts spanning forests of ``K_b`` with two trees that
    separate a fixed edge's endpoints; the right side is ``2 * b**(b-3)``.
    Negative exponents are evaluated in exact rationals.
    """
    if b < 2:
        raise ValueError("b must be >= 2")
    lhs = sum(
        comb(b - 2, i) * _qpow(i + 1, i - 1) * _qpow(b - 1 - i, b - 3 - i) for i in range(b - 1)
    )
    rhs = 2 * _qpow(b, b - 3)
    if lhs.denominator != 1 or rhs.denominator != 1:
        raise ArithmeticError(f"non-integral forest count at b={b}: {lhs}, {rhs}")
    return int(lhs), int(rhs)


def random_block_clique(b: int, r: int, seed: int) -> Graph:
    """``r`` cliques of order ``b`` glued tree-like at random shared vertices."""
    if b < 2 or r < 1:
        raise ValueError("need b >= 2 and r >= 1")
    rng = np.random.default_rng(seed)
    edges = [(u, v) for v in range(b) for u in range(v)]
    n = b
    for _ in range(r - 1):
        anchor = int(rng.integers(n))
        members = [anchor] + list(range(n, n + b - 1))
        edges += [(members[i], members[j]) for j in range(b) for i in range(j)]
        n += b - 1
    return Graph.from_edges(n, edges)
