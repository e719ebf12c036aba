"""The numba and numpy backends must agree exactly on every kernel."""
import os
import subprocess
import sys

import numpy as np
import pytest

from distspec import _accel, _kernels
from distspec.formats import write_graph6
from distspec.graph import Graph, path_graph
from distspec.ktree import random_linear_ktree, recursive_labeling
from distspec.search import _pair_index, _perm_table
from distspec.spectra import charpoly_int

from oracles import floyd_warshall, random_connected_edges

pytestmark = pytest.mark.skipif(not _accel.NUMBA_AVAILABLE, reason="numba not installed")


def _random_graph(rng, n, connected=True):
    if connected:
        return Graph.from_edges(n, random_connected_edges(rng, n))
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < 0.2
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def test_apsp_agrees():
    rng = np.random.default_rng(1)
    for i in range(60):
        n = int(rng.integers(1, 40))
        g = _random_graph(rng, n, connected=i % 3 != 0)
        indptr, indices = g.csr
        a = _kernels.apsp(indptr, indices, n, use_numba=True)
        b = _kernels.apsp(indptr, indices, n, use_numba=False)
        assert np.array_equal(a, b)
        fw = np.array(floyd_warshall(n, g.edges()))
        assert np.array_equal(np.where(fw >= 10**9, -1, fw), a)


def test_ktree_fill_agrees():
    for seed in range(20):
        k = seed % 5 + 1
        g = random_linear_ktree(40 + seed, k, seed)
        back = recursive_labeling(g, k).back_array()
        a = _kernels.ktree_fill(back, g.n, k, use_numba=True)
        b = _kernels.ktree_fill(back, g.n, k, use_numba=False)
        assert np.array_equal(a, b)


@pytest.mark.parametrize("n", range(2, 8))
def test_min_code_agrees(n):
    rng = np.random.default_rng(n)
    perms = _perm_table(n)
    pi, pj = _pair_index(n)
    for _ in range(15):
        adj = _random_graph(rng, n, connected=False).adjacency_matrix()
        assert _kernels.min_code(adj, perms, pi, pj, use_numba=True) == \
            _kernels.min_code(adj, perms, pi, pj, use_numba=False)


def test_charpoly_mod_agrees_with_exact():
    rng = np.random.default_rng(3)
    for _ in range(40):
        n = int(rng.integers(1, 20))
        m = rng.integers(0, 12, size=(n, n))
        m = m + m.T
        exact = charpoly_int(m)
        for p in _kernels.HASH_PRIMES:
            want = [c % p for c in exact]
            assert _kernels.charpoly_mod(m, p, use_numba=True).tolist() == want
            assert _kernels.charpoly_mod(m, p, use_numba=False).tolist() == want


def _pack(records):
    data = b"".join(r + b"\n" for r in records)
    buf = np.frombuffer(data, dtype=np.uint8)
    ends = np.flatnonzero(buf == 10)
    starts = np.concatenate(([0], ends[:-1] + 1))
    return buf, starts, ends


def test_scan_agrees_and_hashes_match_exact():
    rng = np.random.default_rng(5)
    graphs = [_random_graph(rng, int(rng.integers(1, 30)), connected=i % 4 != 0) for i in range(80)]
    graphs.append(path_graph(62))
    records = [write_graph6(g).encode() for g in graphs] + [b"Bx", b"~?@A" + b"?" * 400, b"B"]
    buf, starts, ends = _pack(records)
    a = _kernels.scan_graph6_buffer(buf, starts, ends, use_numba=True)
    b = _kernels.scan_graph6_buffer(buf, starts, ends, use_numba=False)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)
    ns, status, diam, wien, h1, h2 = a
    assert status[-3:].tolist() == [_kernels.STATUS_FALLBACK] * 3
    for i, g in enumerate(graphs):
        assert ns[i] == g.n
        if not g.is_connected():
            assert status[i] == _kernels.STATUS_DISCONNECTED
            continue
        assert status[i] == _kernels.STATUS_OK
        d = np.array(floyd_warshall(g.n, g.edges()))
        assert diam[i] == d.max() and wien[i] == d.sum() // 2
        cp = charpoly_int(d)
        for h, p, x in ((h1, _kernels.HASH_PRIMES[0], _kernels.HASH_POINTS[0]),
                        (h2, _kernels.HASH_PRIMES[1], _kernels.HASH_POINTS[1])):
            acc = 0
            for c in cp:
                acc = (acc * x + c) % p
            assert h[i] == acc


def test_env_flag_selects_numpy():
    out = subprocess.run(
        [sys.executable, "-c", "from distspec import _accel; print(_accel.HAS_NUMBA)"],
        env={**os.environ, "DISTSPEC_NO_NUMBA": "1"},
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "False"
    assert _accel.NUMBA_AVAILABLE


def test_benchmark_workloads_agree():
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_backends.py"
    spec = importlib.util.spec_from_file_location("bench_backends", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    for name, fn in bench.workloads(quick=True):
        assert bench._same(fn(True), fn(False)), name
