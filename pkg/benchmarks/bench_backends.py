"""Compare the numba and numpy kernel backends on representative workloads.

    python benchmarks/bench_backends.py [--repeat 5] [--quick]

Both backends run in the same process through the ``use_numba=`` argument of
each dispatch function; outputs are checked for equality before timing.
"""
import argparse
import statistics
import time
from pathlib import Path

import numpy as np

from distspec import _accel, _kernels
from distspec.graph import Graph
from distspec.ktree import random_linear_ktree, recursive_labeling
from distspec.search import _pair_index, _perm_table

FIXTURE = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "connected8.g6"


def _random_graph(rng, n, p):
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < p
    edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    edges += [(i, i + 1) for i in range(n - 1)]
    return Graph.from_edges(n, edges)


def _time(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def workloads(quick):
    rng = np.random.default_rng(0)
    scale = 4 if quick else 1

    graphs = [_random_graph(rng, 120 // scale, 0.05) for _ in range(20)]
    csrs = [g.csr for g in graphs]

    def apsp(use):
        return tuple(_kernels.apsp(ip, ix, len(ip) - 1, use_numba=use) for ip, ix in csrs)

    kt = random_linear_ktree(1600 // scale, 3, seed=1)
    back = recursive_labeling(kt, 3).back_array()

    def ktree(use):
        return _kernels.ktree_fill(back, kt.n, 3, use_numba=use)

    n8 = 7 if quick else 8
    perms, (pi, pj) = _perm_table(n8), _pair_index(n8)
    adjs = [_random_graph(rng, n8, 0.4).adjacency_matrix() for _ in range(10)]

    def mincode(use):
        return tuple(_kernels.min_code(a, perms, pi, pj, use_numba=use) for a in adjs)

    mats = []
    for _ in range(200):
        m = rng.integers(0, 9, size=(10, 10))
        mats.append(m + m.T)

    def charpoly(use):
        return tuple(_kernels.charpoly_mod(m, _kernels.HASH_PRIMES[0], use_numba=use) for m in mats)

    data = FIXTURE.read_bytes()
    if quick:
        data = data[: data.index(b"\n", len(data) // 8) + 1]
    buf = np.frombuffer(data, dtype=np.uint8)
    ends = np.flatnonzero(buf == 10)
    starts = np.concatenate(([0], ends[:-1] + 1))

    def scan(use):
        return _kernels.scan_graph6_buffer(buf, starts, ends, use_numba=use)

    return [
        ("apsp, 20 graphs n=%d" % graphs[0].n, apsp),
        ("ktree fill, n=%d k=3" % kt.n, ktree),
        ("min code, 10 graphs n=%d" % n8, mincode),
        ("charpoly mod p, 200 of 10x10", charpoly),
        ("graph6 scan, %d records n=8" % len(starts), scan),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args()
    if not _accel.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'workload':34s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for name, fn in workloads(args.quick):
        a, b = fn(True), fn(False)  # also triggers JIT compilation
        if not _same(a, b):
            raise SystemExit(f"backends disagree on {name}")
        tn = _time(lambda: fn(True), args.repeat)
        tp = _time(lambda: fn(False), args.repeat)
        print(f"{name:34s} {tn:10.4f} {tp:10.4f} {tp / tn:8.1f}x")


if __name__ == "__main__":
    main()
