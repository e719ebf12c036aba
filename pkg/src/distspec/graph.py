"""Simple undirected graphs on dense vertex ids ``0..n-1``."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction or a violated graph precondition."""


class DisconnectedGraphError(GraphError):
    def __init__(self, msg: str = "graph not connected"):
        super().__init__(msg)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    ``adjacency[v]`` is the ascending, duplicate-free tuple of neighbours of
    ``v``.  Use :meth:`from_edges` rather than the raw constructor unless the
    adjacency is already canonical.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if self._checked:
            return
        if self.n < 0 or len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adjacency):
            if any(b <= a for a, b in zip(nbrs, nbrs[1:])):
                raise GraphError(f"neighbour list of {v} not sorted/unique")
            for u in nbrs:
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {u} out of range")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from an edge iterable; duplicate edges collapse, loops raise."""
        if n < 0:
            raise GraphError("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), _checked=True)

    @classmethod
    def from_adjacency_matrix(cls, a) -> "Graph":
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError("adjacency matrix must be square")
        if not np.array_equal(a, a.T) or np.any(np.diag(a)):
            raise GraphError("adjacency matrix must be symmetric with zero diagonal")
        iu, ju = np.nonzero(np.triu(a, 1))
        return cls.from_edges(a.shape[0], zip(iu.tolist(), ju.tolist()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    @cached_property
    def _nbr_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` arrays for the kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter(
            (u for a in self.adjacency for u in a), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for v, nbrs in enumerate(self.adjacency):
            a[v, list(nbrs)] = 1
        return a

    def laplacian(self) -> np.ndarray:
        a = self.adjacency_matrix()
        return np.diag(a.sum(axis=1)) - a

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Copy with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm is not a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced_is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        s = self._nbr_sets
        return all(vs[j] in s[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if not seen[u]:
                    seen[u] = 1
                    count += 1
                    stack.append(u)
        return count == self.n

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adjacency)

    def is_cycle(self) -> bool:
        return self.n >= 3 and all(len(a) == 2 for a in self.adjacency) and self.is_connected()

    def is_path(self) -> bool:
        return (
            self.n >= 1
            and self.m == self.n - 1
            and all(len(a) <= 2 for a in self.adjacency)
            and self.is_connected()
        )


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for v in range(n) for u in range(v)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


_FAMILIES = {"complete": (complete_graph, 1), "path": (path_graph, 1), "cycle": (cycle_graph, 3)}


def generate(family: str, n: int) -> Graph:
    """Named graph ``complete``, ``path`` or ``cycle`` on ``n`` vertices."""
    try:
        build, minimum = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}") from None
    if n < minimum:
        raise GraphError(f"{family} graph needs n >= {minimum}, got {n}")
    return build(n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph.from_edges(g.n + h.n, g.edges() + [(u + off, v + off) for u, v in h.edges()])
