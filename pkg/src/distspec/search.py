"""Small-graph enumeration and D-cospectral class search.

Two entry points:

* :func:`enumerate_connected` plus :func:`cospectral_classes` for the
  exhaustive desk-scale sweep (n <= 7);
* :func:`scan_graph6_files` for large external graph6 streams.  Records are
  hashed by a modular charpoly kernel, hash buckets are merged across chunks,
  and only colliding records are re-read and bucketed again by their exact
  integer fingerprint.
"""
from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .distance import diameter, distance_matrix, wiener_index
from .formats import FormatError, parse_graph6, write_graph6
from .graph import Graph
from .spectra import charpoly_int, fingerprint

log = logging.getLogger(__name__)

MAX_ENUM_N = 7
MAX_CANON_N = 8
FILTERS = ("any", "diff_diameter", "diff_wiener", "diff_both")


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    pi, pj = [], []
    for j in range(1, n):
        for i in range(j):
            pi.append(i)
            pj.append(j)
    return np.array(pi, dtype=np.int64), np.array(pj, dtype=np.int64)


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def canonical_code(g: Graph) -> int:
    """Minimum over all vertex permutations of the adjacency bit-string (graph6 pair order)."""
    return _canonical(g)[0]


def canonical_form(g: Graph) -> Graph:
    code, perm = _canonical(g)
    inv = [0] * g.n
    for a, v in enumerate(perm):
        inv[v] = a
    return g.relabel(inv)


def _canonical(g: Graph) -> tuple[int, list[int]]:
    if g.n > MAX_CANON_N:
        raise ValueError(f"brute-force canonical form limited to n <= {MAX_CANON_N}")
    if g.n <= 1:
        return 0, list(range(g.n))
    perms = _perm_table(g.n)
    pi, pj = _pair_index(g.n)
    code, arg = _kernels.min_code(g.adjacency_matrix(), perms, pi, pj)
    return code, perms[arg].tolist()


def _graph_from_code(n: int, code: int) -> Graph:
    pi, pj = _pair_index(n)
    npairs = len(pi)
    edges = [(int(pi[t]), int(pj[t])) for t in range(npairs) if code >> (npairs - 1 - t) & 1]
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _all_graph_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of every graph on ``n`` vertices, by vertex augmentation."""
    if n <= 1:
        return (0,)
    perms = _perm_table(n)
    pi, pj = _pair_index(n)
    codes = set()
    for base in _all_graph_codes(n - 1):
        a = np.zeros((n, n), dtype=np.int64)
        a[: n - 1, : n - 1] = _graph_from_code(n - 1, base).adjacency_matrix()
        for mask in range(1 << (n - 1)):
            for v in range(n - 1):
                a[v, n - 1] = a[n - 1, v] = mask >> v & 1
            codes.add(_kernels.min_code(a, perms, pi, pj)[0])
    return tuple(sorted(codes))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs.

    Yields in increasing canonical-code order.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}; use an external graph6 stream")
    for code in _all_graph_codes(n):
        g = _graph_from_code(n, code)
        if g.is_connected():
            yield g


# ---------------------------------------------------------------------------
# exact classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Member:
    graph6: str
    diameter: int
    wiener: int


@dataclass(frozen=True)
class CospectralClass:
    fingerprint: str  # hex of the canonical charpoly bytes
    charpoly: tuple[int, ...]
    members: tuple[Member, ...]

    @property
    def n(self) -> int:
        return len(self.charpoly) - 1


def _annotate(g: Graph) -> tuple[bytes, tuple[int, ...], Member]:
    d = distance_matrix(g)
    cp = tuple(charpoly_int(d))
    return fingerprint(cp), cp, Member(write_graph6(g), diameter(d), wiener_index(d))


def _build_classes(buckets: dict, verify_noniso: bool) -> list[CospectralClass]:
    classes = []
    for fp, (cp, members) in buckets.items():
        if len(members) < 2:
            continue
        members = sorted(members, key=lambda m: m.graph6)
        n = len(cp) - 1
        if verify_noniso and n <= MAX_CANON_N:
            codes = [canonical_code(parse_graph6(m.graph6)) for m in members]
            if len(set(codes)) != len(codes):
                dup = [m.graph6 for m, c in zip(members, codes) if codes.count(c) > 1]
                raise ValueError(f"stream not deduplicated up to isomorphism: {dup}")
        classes.append(CospectralClass(fp.hex(), cp, tuple(members)))
    classes.sort(key=lambda c: (c.n, c.fingerprint))
    return classes


def cospectral_classes(
    graphs: Iterable[Graph], skipped: list | None = None, verify_noniso: bool = True
) -> list[CospectralClass]:
    """Group connected graphs by exact distance-charpoly fingerprint.

    Singleton groups are dropped.  Disconnected inputs are skipped and, when
    ``skipped`` is given, appended to it as graph6 strings.
    """
    buckets: dict[bytes, tuple[tuple[int, ...], list[Member]]] = {}
    n_skipped = 0
    for g in graphs:
        if not g.is_connected():
            n_skipped += 1
            if skipped is not None:
                skipped.append(write_graph6(g))
            continue
        fp, cp, member = _annotate(g)
        buckets.setdefault(fp, (cp, []))[1].append(member)
    if n_skipped:
        log.warning("skipped %d disconnected graphs", n_skipped)
    return _build_classes(buckets, verify_noniso)


def _pair_differs(a: Member, b: Member, filt: str) -> bool:
    dd = a.diameter != b.diameter
    dw = a.wiener != b.wiener
    return {"any": True, "diff_diameter": dd, "diff_wiener": dw, "diff_both": dd and dw}[filt]


@dataclass
class MateReport:
    filter: str
    entries: list[tuple[CospectralClass, list[tuple[Member, Member]]]] = field(default_factory=list)

    @property
    def pairs(self) -> list[tuple[Member, Member]]:
        return [p for _, ps in self.entries for p in ps]

    def render(self) -> str:
        return render_classes([c for c, _ in self.entries], header=f"filter {self.filter}")


def mate_report(classes: Sequence[CospectralClass], filter: str = "any") -> MateReport:
    """Classes holding at least one member pair that differs per ``filter``."""
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; choose from {FILTERS}")
    rep = MateReport(filter)
    for cls in classes:
        pairs = [
            (a, b) for a, b in itertools.combinations(cls.members, 2) if _pair_differs(a, b, filter)
        ]
        if pairs:
            rep.entries.append((cls, pairs))
    return rep


def render_classes(classes: Sequence[CospectralClass], header: str | None = None) -> str:
    """One stanza per class: fingerprint hex, then ``graph6<TAB>diameter<TAB>wiener`` lines."""
    out = []
    if header is not None:
        out.append(f"# {header}; classes {len(classes)}\n")
    for cls in classes:
        out.append(f"\n{cls.fingerprint}\n")
        out.extend(f"{m.graph6}\t{m.diameter}\t{m.wiener}\n" for m in cls.members)
    return "".join(out)


def wiener_collisions(graphs: Iterable[Graph]) -> list[tuple[int, list[Member]]]:
    """Groups of graphs sharing a Wiener index but not a distance charpoly."""
    by_w: dict[int, dict[bytes, Member]] = {}
    for g in graphs:
        fp, _, member = _annotate(g)
        by_w.setdefault(member.wiener, {}).setdefault(fp, member)
    out = []
    for w in sorted(by_w):
        if len(by_w[w]) > 1:
            out.append((w, sorted(by_w[w].values(), key=lambda m: m.graph6)))
    return out


# ---------------------------------------------------------------------------
# external streams
# ---------------------------------------------------------------------------

@dataclass
class ScanResult:
    classes: list[CospectralClass]
    scanned: int
    skipped_disconnected: int
    skipped_malformed: int
    candidates: int

    @property
    def skipped(self) -> int:
        return self.skipped_disconnected + self.skipped_malformed


def _fallback_hash(line: bytes):
    """Exact-path record for lines the fast kernel declines (long headers etc.)."""
    try:
        g = parse_graph6(line)
    except FormatError:
        return None
    if not g.is_connected():
        return g.n, _kernels.STATUS_DISCONNECTED, 0, 0, 0, 0
    d = distance_matrix(g)
    hs = []
    for p, x in zip(_kernels.HASH_PRIMES, _kernels.HASH_POINTS):
        acc = 0
        for c in charpoly_int(d):
            acc = (acc * x + c) % p
        hs.append(acc)
    return g.n, _kernels.STATUS_OK, diameter(d), wiener_index(d), hs[0], hs[1]


def _process_chunk(args):
    """Hash one chunk of graph6 text.  Returns compact per-record arrays."""
    file_idx, first_line, data = args
    buf = np.frombuffer(data, dtype=np.uint8)
    nl = np.flatnonzero(buf == 10)
    starts = np.concatenate(([0], nl + 1))[: len(nl) + (0 if data.endswith(b"\n") else 1)]
    ends = np.concatenate((nl, [len(buf)]))[: len(starts)]
    has_cr = (ends > starts) & (buf[np.maximum(ends - 1, 0)] == 13)
    ends = ends - has_cr
    lineno = first_line + np.arange(len(starts), dtype=np.int64)
    keep = ends > starts
    starts, ends, lineno = starts[keep], ends[keep], lineno[keep]
    ns, status, diam, wien, h1, h2 = _kernels.scan_graph6_buffer(buf, starts, ends)
    malformed = np.zeros(len(starts), dtype=bool)
    for i in np.flatnonzero(status == _kernels.STATUS_FALLBACK):
        rec = _fallback_hash(data[starts[i]:ends[i]])
        if rec is None:
            malformed[i] = True
        else:
            ns[i], status[i], diam[i], wien[i], h1[i], h2[i] = rec
    ok = (status == _kernels.STATUS_OK) & ~malformed
    key = (ns[ok] << 52) | (h1[ok] * _kernels.HASH_PRIMES[1] + h2[ok])
    recid = (np.int64(file_idx) << 40) | lineno[ok]
    return (
        key.astype(np.int64),
        recid.astype(np.int64),
        int(len(starts)),
        int(np.count_nonzero(status == _kernels.STATUS_DISCONNECTED)),
        int(np.count_nonzero(malformed)),
    )


def _iter_chunks(paths: Sequence[str], chunk_bytes: int):
    for file_idx, path in enumerate(paths):
        line = 1
        tail = b""
        with open(path, "rb") as fh:
            while True:
                block = fh.read(chunk_bytes)
                if not block:
                    break
                block = tail + block
                cut = block.rfind(b"\n") + 1
                if cut == 0:
                    tail = block
                    continue
                tail = block[cut:]
                yield file_idx, line, block[:cut]
                line += block.count(b"\n", 0, cut)
        if tail:
            yield file_idx, line, tail


def _collect_lines(paths: Sequence[str], recids: np.ndarray) -> dict[int, bytes]:
    want: dict[int, set[int]] = {}
    for r in recids.tolist():
        want.setdefault(r >> 40, set()).add(r & ((1 << 40) - 1))
    out = {}
    for file_idx, lines in want.items():
        with open(paths[file_idx], "rb") as fh:
            for lineno, line in enumerate(fh, 1):
                if lineno in lines:
                    out[(file_idx << 40) | lineno] = line.rstrip(b"\r\n")
    return out


def scan_graph6_files(
    paths: Sequence[str | os.PathLike],
    workers: int = 1,
    chunk_bytes: int = 1 << 22,
    verify_noniso: bool = True,
) -> ScanResult:
    """Find all D-cospectral classes in newline-delimited graph6 files.

    The stream is assumed deduplicated up to isomorphism by its producer;
    members are re-checked for isomorphism only when ``n <= 8``.
    """
    paths = [os.fspath(p) for p in paths]
    chunks = _iter_chunks(paths, chunk_bytes)
    keys, recids = [], []
    scanned = disc = bad = 0
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = pool.map(_process_chunk, chunks)
            for k, r, s, d, m in results:
                keys.append(k)
                recids.append(r)
                scanned += s
                disc += d
                bad += m
    else:
        for chunk in chunks:
            k, r, s, d, m = _process_chunk(chunk)
            keys.append(k)
            recids.append(r)
            scanned += s
            disc += d
            bad += m
    key = np.concatenate(keys) if keys else np.zeros(0, np.int64)
    rec = np.concatenate(recids) if recids else np.zeros(0, np.int64)
    order = np.lexsort((rec, key))
    key, rec = key[order], rec[order]
    dup = np.zeros(len(key), dtype=bool)
    if len(key) > 1:
        same = key[1:] == key[:-1]
        dup[1:] |= same
        dup[:-1] |= same
    cand = rec[dup]
    log.info("scanned %d records, %d hash-collision candidates", scanned, len(cand))
    lines = _collect_lines(paths, cand)
    buckets: dict[bytes, tuple[tuple[int, ...], list[Member]]] = {}
    for r in cand.tolist():
        fp, cp, member = _annotate(parse_graph6(lines[r]))
        buckets.setdefault(fp, (cp, []))[1].append(member)
    classes = _build_classes(buckets, verify_noniso)
    if disc or bad:
        log.warning("skipped %d disconnected and %d malformed records", disc, bad)
    return ScanResult(classes, scanned, disc, bad, int(len(cand)))
