"""Hot numeric kernels.

Each kernel has a loop implementation compiled with numba and a vectorised
numpy implementation.  The public wrappers at the bottom pick one according
to :data:`distspec._accel.HAS_NUMBA`; both must agree exactly.
"""
import numpy as np

from ._accel import HAS_NUMBA, njit

# Primes below 2**26: n * p**2 stays below 2**63 for n <= 62, so sums of
# products never overflow int64 before reduction.
HASH_PRIMES = (67108859, 67108837)
HASH_POINTS = (1000003, 7919)

STATUS_OK = 0
STATUS_DISCONNECTED = 1
STATUS_FALLBACK = 2  # not decodable by the fast path (long header, bad length)

MAX_FAST_N = 62


# ---------------------------------------------------------------------------
# all-pairs BFS
# ---------------------------------------------------------------------------

@njit
def _apsp_numba(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            dv = row[v] + 1
            for e in range(indptr[v], indptr[v + 1]):
                u = indices[e]
                if row[u] < 0:
                    row[u] = dv
                    queue[tail] = u
                    tail += 1
    return dist


def _apsp_numpy(indptr, indices, n):
    a = np.zeros((n, n), dtype=np.float64)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    a[rows, indices] = 1.0
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n)
    d = 0
    while True:
        d += 1
        nxt = ((frontier @ a) > 0) & ~reached
        if not nxt.any():
            break
        dist[nxt] = d
        reached |= nxt
        frontier = nxt.astype(np.float64)
    return dist


# ---------------------------------------------------------------------------
# linear k-tree distance fill (recurrence over back-neighbourhoods)
# ---------------------------------------------------------------------------

@njit
def _ktree_fill_numba(back, n, k):
    dist = np.zeros((n, n), dtype=np.int64)
    for l in range(n):
        for i in range(l + 1, k + 1):
            dist[i, l] = 1
            dist[l, i] = 1
        for i in range(max(l + 1, k + 1), n):
            best = dist[l, back[i, 0]]
            for t in range(1, k):
                x = dist[l, back[i, t]]
                if x < best:
                    best = x
            dist[i, l] = best + 1
            dist[l, i] = best + 1
    return dist


def _ktree_fill_numpy(back, n, k):
    dist = np.zeros((n, n), dtype=np.int64)
    c = min(k + 1, n)
    dist[:c, :c] = 1 - np.eye(c, dtype=np.int64)
    for i in range(k + 1, n):
        row = dist[back[i], :i].min(axis=0) + 1
        dist[i, :i] = row
        dist[:i, i] = row
    return dist


# ---------------------------------------------------------------------------
# canonical codes by permutation minimisation
# ---------------------------------------------------------------------------

@njit
def _min_code_numba(adj, perms, pi, pj):
    best = np.int64(-1)
    arg = 0
    npairs = pi.shape[0]
    for p in range(perms.shape[0]):
        perm = perms[p]
        code = np.int64(0)
        lost = False
        for t in range(npairs):
            code = (code << 1) | adj[perm[pi[t]], perm[pj[t]]]
            # prune: once the prefix exceeds the best prefix this perm loses
            if best >= 0 and code > (best >> (npairs - 1 - t)):
                lost = True
                break
        if not lost:
            if best < 0 or code < best:
                best = code
                arg = p
    return best, arg


def _min_code_numpy(adj, perms, pi, pj):
    npairs = pi.shape[0]
    weights = np.left_shift(np.int64(1), np.arange(npairs - 1, -1, -1, dtype=np.int64))
    bits = adj[perms[:, pi], perms[:, pj]].astype(np.int64)
    codes = bits @ weights
    arg = int(np.argmin(codes))
    return int(codes[arg]), arg


# ---------------------------------------------------------------------------
# modular Berkowitz charpoly hash
# ---------------------------------------------------------------------------

@njit
def _berkowitz_mod_numba(a, n, prime):
    """Charpoly coefficients of ``a[:n, :n]`` modulo ``prime``, leading first."""
    poly = np.zeros(n + 1, dtype=np.int64)
    new = np.zeros(n + 1, dtype=np.int64)
    t = np.zeros(n + 1, dtype=np.int64)
    v = np.zeros(n, dtype=np.int64)
    w = np.zeros(n, dtype=np.int64)
    poly[0] = 1
    if n == 0:
        return poly
    poly[1] = (-a[0, 0]) % prime
    for r in range(1, n):
        t[0] = 1
        t[1] = (-a[r, r]) % prime
        for i in range(r):
            v[i] = a[i, r] % prime
        for s in range(r):
            acc = np.int64(0)
            for i in range(r):
                acc = (acc + a[r, i] * v[i]) % prime
            t[s + 2] = (-acc) % prime
            if s < r - 1:
                for i in range(r):
                    acc = np.int64(0)
                    for j in range(r):
                        acc = (acc + a[i, j] * v[j]) % prime
                    w[i] = acc
                for i in range(r):
                    v[i] = w[i]
        for i in range(r + 2):
            acc = np.int64(0)
            for j in range(min(i, r) + 1):
                acc = (acc + t[i - j] * poly[j]) % prime
            new[i] = acc
        for i in range(r + 2):
            poly[i] = new[i]
    return poly


@njit
def _horner_mod(poly, n, x, prime):
    acc = np.int64(0)
    for i in range(n + 1):
        acc = (acc * x + poly[i]) % prime
    return acc


def _berkowitz_mod_batch_numpy(a, prime):
    """Batched charpoly mod ``prime`` for ``a`` of shape ``(B, n, n)``."""
    b, n, _ = a.shape
    a = a % prime
    poly = np.zeros((b, n + 1), dtype=np.int64)
    poly[:, 0] = 1
    if n == 0:
        return poly
    poly[:, 1] = (-a[:, 0, 0]) % prime
    for r in range(1, n):
        t = np.zeros((b, r + 2), dtype=np.int64)
        t[:, 0] = 1
        t[:, 1] = (-a[:, r, r]) % prime
        sub = a[:, :r, :r]
        row = a[:, r, :r]
        v = a[:, :r, r].copy()
        for s in range(r):
            t[:, s + 2] = (-np.einsum("bi,bi->b", row, v)) % prime
            if s < r - 1:
                v = np.einsum("bij,bj->bi", sub, v) % prime
        new = np.zeros((b, r + 2), dtype=np.int64)
        for j in range(r + 1):
            new[:, j:] = (new[:, j:] + t[:, : r + 2 - j] * poly[:, j : j + 1]) % prime
        poly[:, : r + 2] = new
    return poly


def _horner_batch_numpy(poly, x, prime):
    acc = np.zeros(poly.shape[0], dtype=np.int64)
    for i in range(poly.shape[1]):
        acc = (acc * x + poly[:, i]) % prime
    return acc


# ---------------------------------------------------------------------------
# graph6 stream scan: decode, BFS, invariants, hash
# ---------------------------------------------------------------------------

@njit
def _scan_numba(buf, starts, ends, p1, p2, x1, x2):
    m = starts.shape[0]
    ns = np.zeros(m, dtype=np.int64)
    status = np.zeros(m, dtype=np.int64)
    diam = np.zeros(m, dtype=np.int64)
    wien = np.zeros(m, dtype=np.int64)
    h1 = np.zeros(m, dtype=np.int64)
    h2 = np.zeros(m, dtype=np.int64)
    adj = np.zeros((MAX_FAST_N, MAX_FAST_N), dtype=np.int64)
    dist = np.zeros((MAX_FAST_N, MAX_FAST_N), dtype=np.int64)
    queue = np.zeros(MAX_FAST_N, dtype=np.int64)
    for g in range(m):
        s = starts[g]
        e = ends[g]
        c0 = np.int64(buf[s])
        if c0 < 63 or c0 > 63 + MAX_FAST_N:
            status[g] = STATUS_FALLBACK
            continue
        n = c0 - 63
        ns[g] = n
        nbits = n * (n - 1) // 2
        nbytes = (nbits + 5) // 6
        if e - s - 1 != nbytes:
            status[g] = STATUS_FALLBACK
            continue
        bad = False
        for i in range(n):
            for j in range(n):
                adj[i, j] = 0
        k = 0
        for j in range(1, n):
            for i in range(j):
                c = np.int64(buf[s + 1 + k // 6]) - 63
                if c < 0 or c > 63:
                    bad = True
                bit = (c >> (5 - k % 6)) & 1
                adj[i, j] = bit
                adj[j, i] = bit
                k += 1
        if nbytes > 0:
            c = np.int64(buf[s + nbytes]) - 63
            pad = nbytes * 6 - nbits
            if c < 0 or c > 63 or (c & ((1 << pad) - 1)) != 0:
                bad = True
        if bad:
            status[g] = STATUS_FALLBACK
            continue
        connected = True
        total = np.int64(0)
        dmax = np.int64(0)
        for src in range(n):
            for i in range(n):
                dist[src, i] = -1
            dist[src, src] = 0
            queue[0] = src
            head = 0
            tail = 1
            while head < tail:
                v = queue[head]
                head += 1
                for u in range(n):
                    if adj[v, u] and dist[src, u] < 0:
                        dist[src, u] = dist[src, v] + 1
                        queue[tail] = u
                        tail += 1
            if tail < n:
                connected = False
                break
            for i in range(n):
                total += dist[src, i]
                if dist[src, i] > dmax:
                    dmax = dist[src, i]
        if not connected:
            status[g] = STATUS_DISCONNECTED
            continue
        diam[g] = dmax
        wien[g] = total // 2
        h1[g] = _horner_mod(_berkowitz_mod_numba(dist, n, p1), n, x1, p1)
        h2[g] = _horner_mod(_berkowitz_mod_numba(dist, n, p2), n, x2, p2)
    return ns, status, diam, wien, h1, h2


def _scan_numpy(buf, starts, ends, p1, p2, x1, x2):
    m = starts.shape[0]
    ns = np.zeros(m, dtype=np.int64)
    status = np.full(m, STATUS_FALLBACK, dtype=np.int64)
    diam = np.zeros(m, dtype=np.int64)
    wien = np.zeros(m, dtype=np.int64)
    h1 = np.zeros(m, dtype=np.int64)
    h2 = np.zeros(m, dtype=np.int64)
    if m == 0:
        return ns, status, diam, wien, h1, h2
    c0 = buf[starts].astype(np.int64)
    short = (c0 >= 63) & (c0 <= 63 + MAX_FAST_N)
    ns[short] = c0[short] - 63
    lengths = ends - starts
    for n in np.unique(ns[short]):
        n = int(n)
        nbits = n * (n - 1) // 2
        nbytes = (nbits + 5) // 6
        sel = np.nonzero(short & (ns == n) & (lengths == nbytes + 1))[0]
        if sel.size == 0:
            continue
        offs = starts[sel][:, None] + 1 + np.arange(nbytes)[None, :]
        raw = buf[offs].astype(np.int64) - 63 if nbytes else np.zeros((sel.size, 0), np.int64)
        ok = np.all((raw >= 0) & (raw <= 63), axis=1)
        bits = np.unpackbits(np.clip(raw, 0, 63).astype(np.uint8)[:, :, None], axis=2)[:, :, 2:]
        bits = bits.reshape(sel.size, nbytes * 6)
        if nbytes * 6 > nbits:
            ok &= ~bits[:, nbits:].any(axis=1)
        jj, ii = _upper_pairs(n)
        adj = np.zeros((sel.size, n, n), dtype=np.int64)
        adj[:, ii, jj] = bits[:, :nbits]
        adj[:, jj, ii] = bits[:, :nbits]
        dist = _batch_apsp_numpy(adj)
        conn = np.all(dist >= 0, axis=(1, 2))
        good = ok & conn
        status[sel[ok & ~conn]] = STATUS_DISCONNECTED
        idx = sel[good]
        status[idx] = STATUS_OK
        d = dist[good]
        diam[idx] = d.max(axis=(1, 2)) if n else 0
        wien[idx] = d.sum(axis=(1, 2)) // 2
        if d.shape[0]:
            h1[idx] = _horner_batch_numpy(_berkowitz_mod_batch_numpy(d, p1), x1, p1)
            h2[idx] = _horner_batch_numpy(_berkowitz_mod_batch_numpy(d, p2), x2, p2)
    return ns, status, diam, wien, h1, h2


def _upper_pairs(n):
    """graph6 pair order: column-major upper triangle, returns (j, i)."""
    jj, ii = [], []
    for j in range(1, n):
        for i in range(j):
            jj.append(j)
            ii.append(i)
    return np.array(jj, dtype=np.int64), np.array(ii, dtype=np.int64)


def _batch_apsp_numpy(adj):
    b, n, _ = adj.shape
    a = adj.astype(np.float64)
    dist = np.full((b, n, n), -1, dtype=np.int64)
    eye = np.broadcast_to(np.eye(n, dtype=bool), (b, n, n))
    dist[eye] = 0
    reached = eye.copy()
    frontier = eye.astype(np.float64)
    for d in range(1, n):
        nxt = (np.matmul(frontier, a) > 0) & ~reached
        if not nxt.any():
            break
        dist[nxt] = d
        reached |= nxt
        frontier = nxt.astype(np.float64)
    return dist


# ---------------------------------------------------------------------------
# public dispatch
# ---------------------------------------------------------------------------

def apsp(indptr, indices, n, use_numba=None):
    """All-pairs BFS distances (``-1`` where unreachable)."""
    if HAS_NUMBA if use_numba is None else use_numba:
        return _apsp_numba(indptr, indices, n)
    return _apsp_numpy(indptr, indices, n)


def ktree_fill(back, n, k, use_numba=None):
    """Distance matrix in recursive-label order; ``back[i]`` holds the k earlier neighbours."""
    back = np.ascontiguousarray(back, dtype=np.int64)
    if HAS_NUMBA if use_numba is None else use_numba:
        return _ktree_fill_numba(back, n, k)
    return _ktree_fill_numpy(back, n, k)


def min_code(adj, perms, pi, pj, use_numba=None):
    if HAS_NUMBA if use_numba is None else use_numba:
        code, arg = _min_code_numba(adj, perms, pi, pj)
        return int(code), int(arg)
    return _min_code_numpy(adj, perms, pi, pj)


def charpoly_mod(a, prime, use_numba=None):
    a = np.ascontiguousarray(a, dtype=np.int64) % prime
    if HAS_NUMBA if use_numba is None else use_numba:
        return _berkowitz_mod_numba(a, a.shape[0], prime)
    return _berkowitz_mod_batch_numpy(a[None], prime)[0]


def scan_graph6_buffer(buf, starts, ends, use_numba=None):
    """Decode and fingerprint the graph6 records ``buf[starts[i]:ends[i]]``.

    Returns ``(n, status, diameter, wiener, hash1, hash2)`` arrays.
    """
    args = (
        np.ascontiguousarray(buf, dtype=np.uint8),
        np.ascontiguousarray(starts, dtype=np.int64),
        np.ascontiguousarray(ends, dtype=np.int64),
        HASH_PRIMES[0], HASH_PRIMES[1], HASH_POINTS[0], HASH_POINTS[1],
    )
    if HAS_NUMBA if use_numba is None else use_numba:
        return _scan_numba(*args)
    return _scan_numpy(*args)
