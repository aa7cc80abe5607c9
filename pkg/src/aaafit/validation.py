"""Input validation helpers shared by the functional API and the estimators."""

from __future__ import annotations

import numpy as np

__all__ = ["as_complex_vector", "as_real_vector", "check_finite", "validate_samples"]


def as_complex_vector(x, name: str = "x") -> np.ndarray:
    """Coerce ``x`` to a 1-D complex128 array.

    Accepts 1-D complex or real sequences, ``(n, 1)`` columns, and ``(n, 2)``
    real arrays interpreted as (real, imag) pairs.
    """
    arr = np.asarray(x)
    if arr.ndim == 2 and arr.shape[1] == 2 and not np.iscomplexobj(arr):
        arr = arr[:, 0] + 1j * arr[:, 1]
    elif arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    return np.ascontiguousarray(arr, dtype=np.complex128)


def as_real_vector(x, name: str = "x") -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    return np.ascontiguousarray(arr)


def check_finite(arr: np.ndarray, name: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")


def validate_samples(points, values) -> tuple[np.ndarray, np.ndarray]:
    """Validate a discrete sample set and return ``(Z, F)`` complex arrays.

    Enforces equal lengths, at least one sample, finite entries, and pairwise
    distinct sample points.  The error for a duplicate names the offending row
    so CLI messages can point at the input file line.
    """
    Z = as_complex_vector(points, "points")
    F = as_complex_vector(values, "values")
    if len(Z) != len(F):
        raise ValueError(f"points and values differ in length: {len(Z)} vs {len(F)}")
    if len(Z) == 0:
        raise ValueError("sample set is empty")
    check_finite(Z, "points")
    check_finite(F, "values")
    order = np.lexsort((Z.imag, Z.real))
    zs = Z[order]
    dup = np.nonzero(zs[1:] == zs[:-1])[0]
    if len(dup):
        row = int(max(order[dup[0]], order[dup[0] + 1]))
        raise ValueError(f"duplicate sample point {Z[row]} at row {row}")
    return Z, F
