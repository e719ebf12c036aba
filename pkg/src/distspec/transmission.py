"""Transmission indices, transmission-regularity and the related bounds."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blockclique import articulation_points
from .distance import diameter, distance_matrix
from .graph import Graph, complete_graph, path_graph
from .spectra import sym_eigenvalues


@dataclass(frozen=True)
class TransmissionProfile:
    per_vertex: tuple[int, ...]
    wiener: int
    regular_k: int | None


def transmission_profile(d) -> TransmissionProfile:
    d = np.asarray(d, dtype=np.int64)
    rows = tuple(int(x) for x in d.sum(axis=1))
    total = sum(rows)
    if total % 2:
        raise ValueError("row sums have odd total; not a distance matrix")
    k = rows[0] if rows and all(r == rows[0] for r in rows) else None
    return TransmissionProfile(rows, total // 2, k)


@dataclass
class VertexBound:
    vertex: int
    transmission: int
    lower_equality: bool
    upper_equality: bool
    witness_ok: bool


@dataclass
class VertexBoundsReport:
    n: int
    lower: int
    upper: int
    vertices: list[VertexBound]
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_vertex_bounds(profile: TransmissionProfile, g: Graph) -> VertexBoundsReport:
    """Check ``n-1 <= T(v) <= n(n-1)/2`` at every vertex and classify equality.

    Lower equality must coincide with ``v`` dominating; upper equality with
    ``g`` being a path and ``v`` one of its ends.
    """
    n = g.n
    lower, upper = n - 1, n * (n - 1) // 2
    report = VertexBoundsReport(n, lower, upper, [])
    is_path = g.is_path()
    for v, t in enumerate(profile.per_vertex):
        lo_eq = t == lower
        up_eq = t == upper
        dominating = g.degree(v) == n - 1
        path_end = is_path and g.degree(v) <= 1
        witness_ok = lo_eq == dominating and up_eq == path_end
        report.vertices.append(VertexBound(v, t, lo_eq, up_eq, witness_ok))
        if not lower <= t <= upper:
            report.violations.append(f"vertex {v}: T={t} outside [{lower}, {upper}]")
        if lo_eq != dominating:
            report.violations.append(
                f"vertex {v}: lower equality {lo_eq} but dominating {dominating}")
        if up_eq != path_end:
            report.violations.append(
                f"vertex {v}: upper equality {up_eq} but path end-vertex {path_end}")
    return report


@dataclass
class RegularBoundsReport:
    applicable: bool
    n: int
    k: int | None = None
    lower: int | None = None
    upper: int | None = None
    lower_equality: bool = False
    upper_equality: bool = False
    is_complete: bool = False
    is_cycle: bool = False
    cut_vertices: tuple[int, ...] = ()
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_transmission_regular_bounds(g: Graph) -> RegularBoundsReport:
    """Bounds ``n-1 <= k <= floor(n^2/4)`` for a k-transmission-regular graph.

    For ``n > 2`` the lower bound is tight exactly at ``K_n``, the upper one
    exactly at ``C_n``, and the graph has no cut vertex.  Graphs that are not
    transmission-regular get ``applicable=False``.
    """
    if not g.is_connected():
        return RegularBoundsReport(False, g.n)
    prof = transmission_profile(distance_matrix(g))
    if prof.regular_k is None:
        return RegularBoundsReport(False, g.n)
    n, k = g.n, prof.regular_k
    rep = RegularBoundsReport(
        True, n, k, n - 1, n * n // 4,
        lower_equality=k == n - 1,
        upper_equality=k == n * n // 4,
        is_complete=g.is_complete(),
        is_cycle=g.is_cycle(),
        cut_vertices=tuple(articulation_points(g)),
    )
    if not rep.lower <= k <= rep.upper:
        rep.violations.append(f"k={k} outside [{rep.lower}, {rep.upper}]")
    if n > 2:
        if rep.lower_equality != rep.is_complete:
            rep.violations.append(
                f"lower equality {rep.lower_equality} but complete {rep.is_complete}")
        if rep.upper_equality != rep.is_cycle:
            rep.violations.append(f"upper equality {rep.upper_equality} but cycle {rep.is_cycle}")
        if rep.cut_vertices:
            rep.violations.append(f"cut vertices {list(rep.cut_vertices)} in a transmission-regular graph")
    return rep


def corollary_diameter_bound(n: int, diam: int) -> int:
    """Largest transmission index possible at diameter ``diam``."""
    if not 1 <= diam <= max(n - 1, 1) or n < 2:
        raise ValueError(f"diameter {diam} out of range for n={n}")
    return diam * (diam - 1) // 2 + (n - diam) * diam


def corollary_witness(n: int, diam: int, h: Graph | None = None) -> Graph:
    """Path on ``diam`` vertices with one end joined to every vertex of ``h``.

    ``h`` must have ``n - diam`` vertices; it defaults to the complete graph.
    The path's far end is vertex ``diam - 1`` and attains the bound.
    """
    if not 1 <= diam <= n - 1:
        raise ValueError(f"diameter {diam} out of range for n={n}")
    if h is None:
        h = complete_graph(n - diam)
    if h.n != n - diam:
        raise ValueError(f"h must have {n - diam} vertices, has {h.n}")
    if diam == 1 and not h.is_complete():
        raise ValueError("diameter 1 needs h complete")
    edges = path_graph(diam).edges()
    edges += [(0, diam + x) for x in range(h.n)]
    edges += [(diam + u, diam + v) for u, v in h.edges()]
    return Graph.from_edges(n, edges)


def is_corollary_extremal(d, v: int) -> bool:
    """True when ``v`` sits at the end of the witness shape: one vertex at
    each distance ``1..e-1`` and the rest at the eccentricity ``e``."""
    row = np.asarray(d)[v]
    n = row.shape[0]
    e = int(row.max())
    counts = np.bincount(row, minlength=e + 1)
    return bool(np.all(counts[1:e] == 1) and counts[e] == n - e)


@dataclass
class CorollaryReport:
    n: int
    diameter: int
    bound: int
    max_transmission: int
    extremal_vertices: tuple[int, ...]
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_corollary(g: Graph, d=None) -> CorollaryReport:
    """Diameter bound on ``max T(v)`` plus the only-if shape of equality."""
    if d is None:
        d = distance_matrix(g)
    prof = transmission_profile(d)
    diam = diameter(d)
    if g.n == 1:
        return CorollaryReport(1, 0, 0, 0, ())
    bound = corollary_diameter_bound(g.n, diam)
    tmax = max(prof.per_vertex)
    ext = tuple(v for v, t in enumerate(prof.per_vertex) if t == bound)
    rep = CorollaryReport(g.n, diam, bound, tmax, ext)
    if tmax > bound:
        rep.violations.append(f"max T={tmax} exceeds bound {bound}")
    for v in ext:
        if not is_corollary_extremal(d, v):
            rep.violations.append(f"vertex {v} attains the bound without the witness shape")
    return rep


@dataclass
class Proposition4Report:
    n: int
    k: int
    wiener: int
    largest_eigenvalue: float

    @property
    def wiener_ok(self) -> bool:
        return 2 * self.wiener == self.n * self.k

    @property
    def eigen_ok(self) -> bool:
        return abs(self.largest_eigenvalue - self.k) <= 1e-8 * self.n * max(self.k, 1)

    @property
    def ok(self) -> bool:
        return self.wiener_ok and self.eigen_ok


def proposition4_check(g: Graph) -> Proposition4Report:
    """For a k-transmission-regular graph, ``W = nk/2`` and ``lambda_1 = k``."""
    d = distance_matrix(g)
    prof = transmission_profile(d)
    if prof.regular_k is None:
        raise ValueError("not transmission-regular")
    lam = sym_eigenvalues(d, "distance").eigenvalues[0]
    return Proposition4Report(g.n, prof.regular_k, prof.wiener, lam)
