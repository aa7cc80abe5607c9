"""Iteratively reweighted least-squares refinement toward minimax fits.

A fitted rational function is near-best in the maximum norm but not best.
This second phase drives it toward the best approximation: each round solves
a sample-weighted linear least-squares problem for fresh numerator and
denominator coefficients over the frozen support set, then multiplies every
sample weight by that sample's error magnitude and renormalizes.  The weights
concentrate where the error is large, which is exactly the classical IRLS
route to equioscillation.  The error curve of the result, for complex best
approximation of degree n on a closed contour, winds 2n+1 times around the
origin with nearly constant modulus; ``winding_number`` measures this.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .barycentric import BarycentricRational, min_singular_vector
from .validation import validate_samples

__all__ = ["LawsonState", "lawson_refine", "winding_number"]

# keeps a sample weight from being absorbed at exactly zero forever
WEIGHT_FLOOR = 1e-300


@dataclass
class LawsonState:
    """Snapshot of one refinement iteration."""

    sample_weights: np.ndarray
    approximant: BarycentricRational
    max_error: float


def _candidate(nodes, alpha, beta):
    """Barycentric function with denominator coefficients ``beta`` and
    numerator coefficients ``alpha`` (support values become alpha/beta)."""
    keep = np.abs(beta) >= 1e-13 * np.max(np.abs(beta))
    return BarycentricRational(nodes[keep], alpha[keep] / beta[keep], beta[keep])


def lawson_refine(points, values, start: BarycentricRational, *,
                  max_iters: int = 20, stagnation_tol: float = 1e-3
                  ) -> tuple[BarycentricRational, list[LawsonState]]:
    """Refine ``start`` toward the minimax approximant of fixed degree.

    Support points are frozen; each iteration re-solves the numerator and
    denominator coefficients from the weighted linearized problem, so the
    refined function no longer interpolates the data at the support points.
    The iterate with the smallest maximum error seen (the start included) is
    returned, because the iteration is not monotone.

    Returns the refined function and per-iteration state snapshots.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    if stagnation_tol <= 0:
        raise ValueError("stagnation_tol must be positive")
    Z, F = validate_samples(points, values)
    n = len(Z)
    m = len(start)
    if m > n - 1:
        raise ValueError("support size exceeds sample count - 1")

    support = np.array([int(np.argmin(np.abs(Z - s))) for s in start.nodes])
    if np.any(Z[support] != start.nodes):
        raise ValueError("start's support points must be sample points")
    mask = np.ones(n, dtype=bool)
    mask[support] = False
    C = 1.0 / (Z[mask, None] - start.nodes[None, :])

    # row-normalized linearized system [C, -F C]; raw Cauchy rows can span
    # ~1e14 when samples cluster, which would sink the SVD's small end
    M = np.concatenate([C, -F[mask, None] * C], axis=1)
    M /= np.linalg.norm(M, axis=1)[:, None]

    lam = np.full(n, 1.0 / n)
    e0 = np.abs(F - start(Z))
    states = [LawsonState(lam.copy(), start, float(np.max(e0)))]
    best = states[0]
    errors = [best.max_error]
    for _ in range(max_iters):
        v = min_singular_vector(np.sqrt(lam[mask])[:, None] * M)
        cand = _candidate(start.nodes, v[:m], v[m:])
        e = np.abs(F - cand(Z))
        max_err = float(np.max(e))
        state = LawsonState(lam.copy(), cand, max_err)
        states.append(state)
        errors.append(max_err)
        if max_err < best.max_error:
            best = state
        lam = np.maximum(lam * e, WEIGHT_FLOOR)
        lam /= lam.sum()
        if len(errors) >= 6 and abs(errors[-1] - errors[-6]) <= stagnation_tol * errors[-1]:
            break
    return best.approximant, states


def winding_number(errors) -> int:
    """Winding of a discrete closed error curve about the origin.

    Accumulates argument increments between consecutive points (the closing
    edge included).  Fails on an exact zero and on increments of ``pi`` or
    more, which indicate the curve is undersampled.
    """
    e = np.asarray(errors, dtype=complex).ravel()
    if len(e) < 2:
        raise ValueError("need at least two error samples")
    if np.any(e == 0):
        raise ValueError("error curve passes exactly through zero")
    steps = np.angle(np.roll(e, -1) / e)
    if np.any(np.abs(steps) >= np.pi):
        raise ValueError("consecutive errors subtend an angle >= pi (undersampled)")
    return int(round(float(steps.sum() / (2.0 * np.pi))))
