"""Linear k-trees: recognition, O(k n^2) Wiener index, extremal families."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import DisconnectedGraphError, Graph


class NotLinearKTreeError(ValueError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"not a linear k-tree: {reason}")


@dataclass(frozen=True)
class LinearKTreeCert:
    """Recursive labeling: ``labeling[p]`` is the vertex at position ``p``.

    Positions are 0-based here; ``back_neighbors[p]`` (for ``p > k``) holds the
    ``k`` earlier-positioned neighbours of that vertex, as vertex ids.
    """

    k: int
    labeling: tuple[int, ...]
    back_neighbors: dict[int, tuple[int, ...]]

    def positions(self) -> list[int]:
        pos = [0] * len(self.labeling)
        for p, v in enumerate(self.labeling):
            pos[v] = p
        return pos

    def back_array(self) -> np.ndarray:
        """``(n, k)`` array of back-neighbour *positions*; rows ``<= k`` are unused."""
        n, k = len(self.labeling), self.k
        pos = self.positions()
        back = np.zeros((n, max(k, 1)), dtype=np.int64)
        for p, nbrs in self.back_neighbors.items():
            back[p, :] = sorted(pos[u] for u in nbrs)
        return back


def validate_certificate(g: Graph, cert: LinearKTreeCert) -> list[str]:
    n, k = g.n, cert.k
    problems = []
    if sorted(cert.labeling) != list(range(n)):
        return ["labeling is not a permutation"]
    pos = cert.positions()
    head = cert.labeling[: k + 1]
    if not g.induced_is_clique(head):
        problems.append("first k+1 positions do not induce a clique")
    for p in range(k + 1, n):
        v = cert.labeling[p]
        earlier = [u for u in g.adjacency[v] if pos[u] < p]
        nb = cert.back_neighbors.get(p)
        if nb is None or sorted(nb) != sorted(earlier):
            problems.append(f"position {p}: recorded back-neighbours differ from actual")
        if len(earlier) != k:
            problems.append(f"position {p}: {len(earlier)} earlier neighbours, expected {k}")
        elif not g.induced_is_clique(earlier):
            problems.append(f"position {p}: back-neighbourhood is not a clique")
    if n > k + 1:
        lows = sum(1 for d in g.degrees() if d == k)
        if lows != 2:
            problems.append(f"{lows} vertices of degree k, expected 2")
    return problems


def _peel_fast(g: Graph, k: int):
    """Algorithm-1 style peel: each next vertex comes from the last back-neighbourhood."""
    deg = g.degrees()
    alive = [True] * g.n
    start = [v for v in range(g.n) if deg[v] == k]
    if not start:
        return None
    order = []
    back = {}
    v = start[0]
    remaining = g.n
    while remaining > k + 1:
        nbrs = tuple(u for u in g.adjacency[v] if alive[u])
        if len(nbrs) != k:
            return None
        alive[v] = False
        remaining -= 1
        for u in nbrs:
            deg[u] -= 1
        order.append(v)
        back[v] = nbrs
        if remaining > k + 1:
            nxt = [u for u in nbrs if deg[u] == k]
            if not nxt:
                return None
            v = nxt[0]
    return order, back, alive


def _peel_full(g: Graph, k: int):
    """Peel the lowest-indexed degree-k vertex with a clique neighbourhood, anywhere."""
    deg = g.degrees()
    alive = [True] * g.n
    cand = {v for v in range(g.n) if deg[v] == k}
    order = []
    back = {}
    remaining = g.n
    while remaining > k + 1:
        v = None
        for c in sorted(cand):
            nb = [u for u in g.adjacency[c] if alive[u]]
            if g.induced_is_clique(nb):
                v = c
                break
        if v is None:
            raise NotLinearKTreeError(f"no peelable vertex with {remaining} vertices left")
        nbrs = tuple(u for u in g.adjacency[v] if alive[u])
        alive[v] = False
        cand.discard(v)
        remaining -= 1
        for u in nbrs:
            deg[u] -= 1
            if deg[u] == k:
                cand.add(u)
            else:
                cand.discard(u)
        order.append(v)
        back[v] = nbrs
    return order, back, alive


def _build_cert(g, k, order, back, alive) -> LinearKTreeCert:
    rest = [v for v in range(g.n) if alive[v]]
    labeling = tuple(rest + order[::-1])
    back_pos = {g.n - 1 - i: tuple(sorted(back[v])) for i, v in enumerate(order)}
    return LinearKTreeCert(k, labeling, back_pos)


def recursive_labeling(g: Graph, k: int) -> LinearKTreeCert:
    """Recursive labeling of a linear k-tree, validated before it is returned.

    Raises :class:`NotLinearKTreeError` naming the failing condition.
    """
    if not 1 <= k < g.n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={g.n}")
    if not g.is_connected():
        raise DisconnectedGraphError()
    if g.n > k + 1:
        lows = sum(1 for d in g.degrees() if d == k)
        if lows > 2:
            raise NotLinearKTreeError(f"{lows} vertices of degree k")
    peeled = _peel_fast(g, k)
    cert = _build_cert(g, k, *peeled) if peeled else None
    if cert is None or validate_certificate(g, cert):
        order, back, alive = _peel_full(g, k)
        rest = [v for v in range(g.n) if alive[v]]
        if not g.induced_is_clique(rest):
            raise NotLinearKTreeError("residual k+1 vertices not a clique")
        cert = _build_cert(g, k, order, back, alive)
    problems = validate_certificate(g, cert)
    if problems:
        raise NotLinearKTreeError(problems[0])
    return cert


def ktree_distance_matrix(g: Graph, k: int, cert: LinearKTreeCert | None = None) -> np.ndarray:
    """Distance matrix filled by the back-neighbourhood recurrence, in vertex order."""
    if cert is None:
        cert = recursive_labeling(g, k)
    d_pos = _kernels.ktree_fill(cert.back_array(), g.n, k)
    lab = np.asarray(cert.labeling, dtype=np.int64)
    out = np.empty_like(d_pos)
    out[np.ix_(lab, lab)] = d_pos
    return out


def wiener_linear_ktree(g: Graph, k: int) -> int:
    """Wiener index of a linear k-tree in O(k n^2)."""
    if g.n == k + 1 and g.is_complete():
        return g.n * (g.n - 1) // 2
    cert = recursive_labeling(g, k)
    d_pos = _kernels.ktree_fill(cert.back_array(), g.n, k)
    return int(d_pos.sum()) // 2


def ktree_wiener_bounds(n: int, k: int) -> tuple[int, int]:
    """Tight lower and upper Wiener bounds over linear k-trees on ``n`` vertices."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    lower_twice = k * k + k + 2 * (n * n - k * n - n)
    assert lower_twice % 2 == 0
    j = (n - 1) // k
    num = (j + 1) * (2 * j * j * k * k + j * k * (3 + k - 6 * n) + 6 * n * n - 6 * n)
    if num % 12:
        raise ArithmeticError(f"upper bound numerator {num} not divisible by 12")
    return lower_twice // 2, num // 12


def generate_extremal_ktree(n: int, k: int, which: str) -> Graph:
    """``pathlike``: vertex i adjacent to i-1..i-k.  ``dominating``: vertex 0
    adjacent to everything, the rest a pathlike linear (k-1)-tree."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if which == "pathlike":
        return Graph.from_edges(n, ((i - t, i) for i in range(1, n) for t in range(1, min(k, i) + 1)))
    if which == "dominating":
        if k == 1 and n > 3:
            raise ValueError("no linear 1-tree on more than 3 vertices has a dominating vertex")
        edges = [(0, i) for i in range(1, n)]
        edges += [(i - t, i) for i in range(2, n) for t in range(1, min(k - 1, i - 1) + 1)]
        return Graph.from_edges(n, edges)
    raise ValueError(f"unknown extremal family {which!r}")


def random_linear_ktree(n: int, k: int, seed: int, shuffle: bool = True) -> Graph:
    """Random linear k-tree: each new vertex joins one end vertex and k-1 of its neighbours."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    rng = np.random.default_rng(seed)
    nbrs: list[set[int]] = [set(range(k + 1)) - {v} for v in range(k + 1)]
    ends = [k]
    if n > k + 1:
        drop = int(rng.integers(k + 1))
        clique = [v for v in range(k + 1) if v != drop]
        nbrs.append(set(clique))
        for u in clique:
            nbrs[u].add(k + 1)
        ends = [drop, k + 1]
    for v in range(k + 2, n):
        which = int(rng.integers(2))
        w = ends[which]
        others = sorted(nbrs[w])
        others.pop(int(rng.integers(len(others))))
        clique = [w] + others
        nbrs.append(set(clique))
        for u in clique:
            nbrs[u].add(v)
        ends[which] = v
    perm = rng.permutation(n) if shuffle else np.arange(n)
    edges = [(int(perm[u]), int(perm[v])) for u in range(n) for v in nbrs[u] if u < v]
    return Graph.from_edges(n, edges)
