"""BFS distance matrices and the invariants read straight off them."""
from __future__ import annotations

import numpy as np

from . import _kernels
from .graph import DisconnectedGraphError, Graph


def distance_matrix(g: Graph) -> np.ndarray:
    """Exact shortest-path distances as a read-only ``int64`` matrix.

    Raises :class:`DisconnectedGraphError` when some BFS misses a vertex.
    """
    if g.n == 0:
        raise DisconnectedGraphError("graph has no vertices")
    indptr, indices = g.csr
    d = _kernels.apsp(indptr, indices, g.n)
    if (d < 0).any():
        raise DisconnectedGraphError()
    d.setflags(write=False)
    return d


def diameter(d) -> int:
    d = np.asarray(d)
    return int(d.max()) if d.size else 0


def wiener_index(d) -> int:
    """Half the sum of all entries; the total is always even."""
    total = int(np.asarray(d, dtype=np.int64).sum())
    assert total % 2 == 0
    return total // 2


def check_distance_matrix(d, g: Graph | None = None) -> list[str]:
    """List violated distance-matrix invariants (empty when valid)."""
    d = np.asarray(d, dtype=np.int64)
    n = d.shape[0]
    problems = []
    if d.shape != (n, n):
        return ["not square"]
    if np.any(np.diag(d) != 0):
        problems.append("nonzero diagonal")
    if not np.array_equal(d, d.T):
        problems.append("not symmetric")
    off = ~np.eye(n, dtype=bool)
    if np.any(d[off] < 1):
        problems.append("off-diagonal entry below 1")
    if g is not None and not np.array_equal(d == 1, g.adjacency_matrix() == 1):
        problems.append("entries equal to 1 do not match the edge set")
    # d[i,j] <= d[i,k] + d[k,j] for every k
    if n and np.any(d[:, None, :] > d[:, :, None] + d[None, :, :]):
        problems.append("triangle inequality violated")
    return problems
