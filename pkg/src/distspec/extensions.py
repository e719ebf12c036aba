"""q-coclique and q-clique extensions.

Vertex ``(x, i)`` of an extension, with ``x`` a vertex of the base graph and
``0 <= i < q``, is stored at index ``x * q + i``.  With that layout the
distance matrix is literally ``D kron J_q + shift * (I_n kron (J_q - I_q))``.
"""
from __future__ import annotations

import enum

import numpy as np

from .graph import DisconnectedGraphError, Graph


class ExtensionKind(enum.Enum):
    COCLIQUE = "coclique"
    CLIQUE = "clique"

    @property
    def shift(self) -> int:
        """Distance between two copies of the same vertex."""
        return 2 if self is ExtensionKind.COCLIQUE else 1


def _kind(kind) -> ExtensionKind:
    return kind if isinstance(kind, ExtensionKind) else ExtensionKind(kind)


def extend(g: Graph, q: int, kind) -> Graph:
    """The q-(co)clique extension of ``g``."""
    kind = _kind(kind)
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if g.n < 1:
        raise ValueError("graph has no vertices")
    edges = []
    for x, y in g.edges():
        for i in range(q):
            for j in range(q):
                edges.append((x * q + i, y * q + j))
    if kind is ExtensionKind.CLIQUE:
        for x in range(g.n):
            for i in range(q):
                for j in range(i + 1, q):
                    edges.append((x * q + i, x * q + j))
    return Graph.from_edges(g.n * q, edges)


def extension_distance_matrix(d, q: int, kind) -> np.ndarray:
    """Closed-form distance matrix of the extension, from the base distances."""
    kind = _kind(kind)
    d = np.asarray(d, dtype=np.int64)
    n = d.shape[0]
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if n == 1 and q >= 2 and kind is ExtensionKind.COCLIQUE:
        raise DisconnectedGraphError("coclique extension of a single vertex is disconnected")
    jq = np.ones((q, q), dtype=np.int64)
    out = np.kron(d, jq) + kind.shift * np.kron(np.eye(n, dtype=np.int64), jq - np.eye(q, dtype=np.int64))
    out.setflags(write=False)
    return out


def extension_wiener(w: int, n: int, q: int, kind) -> int:
    """Wiener index of the extension from the base Wiener index ``w`` and order ``n``.

    Each base pair contributes ``q**2`` copies of its distance; each of the
    ``n * C(q, 2)`` same-vertex pairs contributes ``shift``.
    """
    kind = _kind(kind)
    return q * q * w + kind.shift * n * q * (q - 1) // 2


def extension_diameter(diam: int, q: int, kind) -> int:
    """Diameter of the extension of a connected base graph with at least two vertices."""
    if q >= 2 and _kind(kind) is ExtensionKind.COCLIQUE:
        return max(diam, 2)
    return diam
