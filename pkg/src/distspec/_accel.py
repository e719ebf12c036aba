"""Backend selection for the hot kernels.

Set ``DISTSPEC_NO_NUMBA=1`` before import to force the pure-numpy paths.
Both backends produce identical results; only speed differs.
"""
import os

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_AVAILABLE = numba is not None
HAS_NUMBA = NUMBA_AVAILABLE and os.environ.get("DISTSPEC_NO_NUMBA", "0") in ("", "0")


def njit(*args, **kwargs):
    """``numba.njit`` when numba is importable, otherwise an identity decorator.

    Compilation is lazy, so kernels never called under the numpy backend
    cost nothing.
    """
    kwargs.setdefault("cache", True)
    if NUMBA_AVAILABLE:
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]):
        return args[0]
    return lambda f: f
