"""Barycentric rational functions and the dense kernels built on them.

A rational function of degree at most ``m - 1`` is represented as the quotient
of two partial-fraction sums sharing one set of nodes and weights::

    r(z) = n(z) / d(z),
    n(z) = sum_j  w_j f_j / (z - s_j),
    d(z) = sum_j  w_j / (z - s_j).

This form stays numerically stable in double precision even when poles and
zeros cluster tightly, which is where the quotient-of-polynomials form breaks
down.  The two kernels every fitting routine relies on are the Loewner matrix
assembly and the smallest-right-singular-vector solve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .validation import as_complex_vector

__all__ = ["BarycentricRational", "LoewnerMatrix", "build_loewner", "min_singular_vector"]

# weights below this fraction of the largest are dropped at construction
WEIGHT_DROP_TOL = 1e-13

# value returned when evaluating exactly on a pole (d(z) = 0, n(z) != 0)
POLE_SENTINEL = complex(np.inf, 0.0)


class BarycentricRational:
    """Rational function in barycentric form.

    Parameters
    ----------
    nodes : array_like of complex
        Pairwise distinct support points ``s_j``.
    values : array_like of complex
        Function values at the nodes; the function interpolates them.
    weights : array_like of complex
        Barycentric weights.  Entries smaller than ``1e-13 * max|w|`` are
        pruned together with their node, since zero weights carry no
        information and break the interpolation property.
    """

    def __init__(self, nodes, values, weights):
        s = as_complex_vector(nodes, "nodes")
        f = as_complex_vector(values, "values")
        w = as_complex_vector(weights, "weights")
        if not (len(s) == len(f) == len(w)):
            raise ValueError("nodes, values and weights must have equal length")
        if len(s) == 0:
            raise ValueError("at least one support point is required")
        wmax = np.max(np.abs(w))
        if wmax == 0.0:
            raise ValueError("all weights are zero")
        keep = np.abs(w) >= WEIGHT_DROP_TOL * wmax
        s, f, w = s[keep], f[keep], w[keep]
        order = np.lexsort((s.imag, s.real))
        ss = s[order]
        if np.any(ss[1:] == ss[:-1]):
            raise ValueError("support points must be pairwise distinct")
        self.nodes = s
        self.values = f
        self.weights = w

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def degree(self) -> int:
        """Upper bound on the numerator/denominator degree."""
        return len(self.nodes) - 1

    def __repr__(self) -> str:
        return f"BarycentricRational(m={len(self)})"

    def __call__(self, z):
        """Evaluate at scalar or array ``z``.

        Points equal (exactly) to a node return the stored value; points where
        the denominator vanishes but the numerator does not return an infinite
        sentinel.  The function is total: no input raises.
        """
        scalar = np.isscalar(z) or (isinstance(z, np.ndarray) and z.ndim == 0)
        zz = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
        num = np.zeros(zz.shape, dtype=np.complex128)
        den = np.zeros(zz.shape, dtype=np.complex128)
        with np.errstate(divide="ignore", invalid="ignore"):
            for sj, fj, wj in zip(self.nodes, self.values, self.weights):
                t = wj / (zz - sj)
                num += t * fj
                den += t
            out = num / den
        # exact node hits: the quotient above gave nan there
        for sj, fj in zip(self.nodes, self.values):
            hit = zz == sj
            if hit.any():
                out[hit] = fj
        pole = (den == 0) & (num != 0) & ~np.isin(zz, self.nodes)
        if pole.any():
            out[pole] = POLE_SENTINEL
        if scalar:
            return complex(out[0])
        return out.reshape(np.shape(z))


@dataclass(frozen=True)
class LoewnerMatrix:
    """Rectangular Loewner matrix with its row bookkeeping.

    ``entries[i, j] = (F_i - f_j) / (Z_i - s_j)`` for non-support sample
    ``(Z_i, F_i)`` and support pair ``(s_j, f_j)``.  ``row_points`` are the
    sample points owning each row and ``row_indices`` their positions in the
    original sample order.
    """

    entries: np.ndarray
    row_points: np.ndarray
    row_indices: np.ndarray


def build_loewner(points, values, support_indices) -> LoewnerMatrix:
    """Assemble the Loewner matrix for a sample set and chosen support rows.

    Rows follow the sample order with support rows deleted; columns follow
    ``support_indices`` order.  Raises if the support set is empty, repeats an
    index, or swallows every sample (no rows would remain).
    """
    Z = as_complex_vector(points, "points")
    F = as_complex_vector(values, "values")
    if len(Z) != len(F):
        raise ValueError("points and values must have equal length")
    idx = np.asarray(support_indices, dtype=int)
    if idx.ndim != 1 or len(idx) == 0:
        raise ValueError("support_indices must be a non-empty index list")
    if len(np.unique(idx)) != len(idx):
        raise ValueError("support_indices must be distinct")
    if np.any(idx < 0) or np.any(idx >= len(Z)):
        raise ValueError("support index out of range")
    if len(idx) >= len(Z):
        raise ValueError("support set must be a strict subset of the samples")
    mask = np.ones(len(Z), dtype=bool)
    mask[idx] = False
    rows = np.nonzero(mask)[0]
    A = (F[rows, None] - F[idx][None, :]) / (Z[rows, None] - Z[idx][None, :])
    return LoewnerMatrix(entries=A, row_points=Z[rows], row_indices=rows)


def min_singular_vector(A) -> np.ndarray:
    """Unit right singular vector for the smallest singular value of ``A``.

    A matrix with fewer rows than columns is treated as padded with zero rows,
    so the answer lives in the null space.  Determinism conventions: exactly
    degenerate smallest singular values are resolved by projecting the first
    standard basis vector with a substantial component onto the degenerate
    subspace, and the phase is fixed by making the first entry of largest
    modulus real and positive.
    """
    A = np.asarray(A)
    if A.ndim != 2 or A.size == 0:
        raise ValueError("matrix must be two-dimensional and non-empty")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix contains non-finite entries")
    nrows, ncols = A.shape
    # economy SVD unless the implicit zero-padding null space is needed
    full = nrows < ncols
    _, s, Vh = np.linalg.svd(A.astype(np.complex128), full_matrices=full)
    if nrows < ncols:
        s = np.concatenate([s, np.zeros(ncols - nrows)])
    smin = s[-1]
    tie = s <= smin * (1.0 + 1e-12)
    if tie.sum() == 1:
        w = Vh[-1].conj()
    else:
        basis = Vh[tie].conj().T  # ncols x k orthonormal
        for j in range(ncols):
            proj = basis @ basis[j].conj()
            norm = np.linalg.norm(proj)
            # an orthonormal k-dim basis projects some e_j with norm >= sqrt(k/n)
            if norm > 1e-8:
                w = proj / norm
                break
    i = int(np.argmax(np.abs(w)))
    w = w * (np.conj(w[i]) / np.abs(w[i]))
    return w / np.linalg.norm(w)
