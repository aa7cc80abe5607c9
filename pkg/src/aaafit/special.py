"""Demo target functions for the command-line experiments."""

from __future__ import annotations

import numpy as np

__all__ = ["zeta_truncated", "ZETA_TERMS"]

ZETA_TERMS = 10_000

# summation order: largest k first, so terms accumulate in ascending magnitude
_KS = np.arange(ZETA_TERMS, 0, -1, dtype=float)

_CHUNK = 128


def zeta_truncated(z):
    """Truncated zeta sum ``sum_{k=1}^{10000} k**(-z)``.

    Terms are accumulated from ``k = 10000`` down to ``1`` (ascending
    magnitude), which keeps rounding error at the scale of the smallest terms.
    Vectorized over complex arrays.
    """
    scalar = np.isscalar(z) or (isinstance(z, np.ndarray) and z.ndim == 0)
    zz = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
    out = np.empty(len(zz), dtype=complex)
    for lo in range(0, len(zz), _CHUNK):
        block = zz[lo:lo + _CHUNK]
        out[lo:lo + _CHUNK] = np.sum(_KS[None, :] ** (-block[:, None]), axis=1)
    if scalar:
        return complex(out[0])
    return out.reshape(np.shape(z))
