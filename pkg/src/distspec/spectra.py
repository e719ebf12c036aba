"""Exact characteristic polynomials, floating spectra and D-cospectrality."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import Sequence

import numpy as np

from .distance import distance_matrix
from .graph import DisconnectedGraphError, Graph


def charpoly_int(m) -> list[int]:
    """Coefficients of ``det(xI - m)``, leading first, in exact integers.

    Division-free Berkowitz algorithm on Python ints; cost is O(n^4)
    multiplications with no floating point anywhere.
    """
    a = [[int(x) for x in row] for row in np.asarray(m, dtype=object).tolist()] if len(m) else []
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return [1]
    poly = [1, -a[0][0]]
    for r in range(1, n):
        sub = [row[:r] for row in a[:r]]
        row_r = a[r][:r]
        v = [a[i][r] for i in range(r)]
        t = [1, -a[r][r]]
        for s in range(r):
            t.append(-sum(map(mul, row_r, v)))
            if s < r - 1:
                v = [sum(map(mul, srow, v)) for srow in sub]
        poly = [sum(t[i - j] * poly[j] for j in range(min(i, r) + 1)) for i in range(r + 2)]
    return poly


def format_charpoly(coeffs: Sequence[int]) -> str:
    return " ".join(str(c) for c in coeffs)


def fingerprint(coeffs: Sequence[int]) -> bytes:
    """Canonical byte string: degree, then per coefficient a sign byte and a
    length-prefixed big-endian magnitude."""
    out = bytearray((len(coeffs) - 1).to_bytes(4, "big"))
    for c in coeffs:
        mag = abs(c)
        body = mag.to_bytes((mag.bit_length() + 7) // 8, "big")
        out.append(1 if c < 0 else 0)
        out += len(body).to_bytes(4, "big")
        out += body
    return bytes(out)


def distance_fingerprint(g: Graph) -> bytes:
    return fingerprint(charpoly_int(distance_matrix(g)))


def eval_poly(coeffs: Sequence[int], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: tuple[float, ...]  # descending
    matrix_kind: str  # "distance", "laplacian" or "matrix"


def sym_eigenvalues(m, matrix_kind: str = "matrix") -> SpectrumReport:
    """All eigenvalues of a real symmetric matrix, largest first.

    Display and sanity checks only; never use these for equality decisions.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    if a.shape[0] == 0:
        return SpectrumReport((), matrix_kind)
    vals = np.linalg.eigvalsh(a)[::-1]
    return SpectrumReport(tuple(float(x) for x in vals), matrix_kind)


def distance_spectrum(g: Graph) -> SpectrumReport:
    return sym_eigenvalues(distance_matrix(g), "distance")


def laplacian_spectrum(g: Graph) -> SpectrumReport:
    return sym_eigenvalues(g.laplacian(), "laplacian")


def d_cospectral(g: Graph, h: Graph) -> bool:
    """Exact D-cospectrality via integer charpoly equality."""
    if g.n != h.n:
        return False
    dg = distance_matrix(g)
    dh = distance_matrix(h)
    return charpoly_int(dg) == charpoly_int(dh)


def laplacian_reciprocal_sum(g: Graph) -> Fraction:
    """Sum of ``1/mu`` over the nonzero Laplacian eigenvalues, as ``-c2/c1``."""
    if g.n < 2:
        raise ValueError("need at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraphError()
    p = charpoly_int(g.laplacian())
    c1, c2 = p[g.n - 1], p[g.n - 2]
    return Fraction(-c2, c1)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
