"""Greedy/least-squares adaptive rational fitting (the AAA iteration).

Each round alternates a greedy step, which promotes the worst-fit sample to a
support point, with a linear step, which re-solves the barycentric weights as
the smallest right singular vector of the Loewner matrix over the remaining
samples.  Iteration stops when the maximum error drops below a relative
tolerance or the support budget is exhausted.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .barycentric import BarycentricRational, min_singular_vector
from .validation import validate_samples

__all__ = ["AaaResult", "aaa_fit", "cleanup"]


@dataclasses.dataclass
class AaaResult:
    """Outcome of one adaptive fit.

    ``error_history[k]`` is the maximum sample error after iteration ``k + 1``
    (that many support points).  ``final_error`` is recomputed from the
    returned approximant over all samples, so post-processing such as weight
    pruning or cleanup is reflected in it.
    """

    approximant: BarycentricRational
    error_history: list[float]
    final_error: float
    converged: bool
    support_indices: list[int] = dataclasses.field(default_factory=list)


def _solve_weights(Z, F, support):
    """Loewner smallest-singular-vector weights for the given support rows."""
    mask = np.ones(len(Z), dtype=bool)
    mask[support] = False
    s = Z[support]
    fs = F[support]
    C = 1.0 / (Z[mask, None] - s[None, :])
    A = (F[mask, None] - fs[None, :]) * C
    return s, fs, min_singular_vector(A), C, mask


def aaa_fit(points, values, *, rel_tol: float = 1e-13, max_support: int = 100,
            cleanup_spurious: bool = True, cleanup_tol: float = 1e-13) -> AaaResult:
    """Fit a barycentric rational function to samples ``(points, values)``.

    Parameters
    ----------
    rel_tol : float
        Convergence threshold relative to ``max|F|``.
    max_support : int
        Support-point budget; hitting it reports ``converged=False``.
    cleanup_spurious : bool
        Remove tiny-residue (Froissart) poles after convergence.
    cleanup_tol : float
        Residue threshold scale for the cleanup pass.
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    if max_support < 1:
        raise ValueError("max_support must be at least 1")
    Z, F = validate_samples(points, values)
    if len(Z) < 2:
        raise ValueError("need at least two samples")
    max_f = float(np.max(np.abs(F)))
    tol_abs = rel_tol * max_f

    support: list[int] = []
    active = np.ones(len(Z), dtype=bool)
    R = np.full(len(Z), np.mean(F))
    history: list[float] = []
    converged = False
    s = fs = w = None
    while len(support) < max_support:
        if active.sum() < 2:
            break  # discrete problem exhausted: cannot pick and still solve
        err = np.abs(F - R)
        err[~active] = -1.0
        pick = int(np.argmax(err))  # ties resolve to the lowest index
        support.append(pick)
        active[pick] = False
        s, fs, w, C, mask = _solve_weights(Z, F, support)
        with np.errstate(divide="ignore", invalid="ignore"):
            R = np.asarray(F, dtype=complex).copy()
            R[mask] = (C @ (w * fs)) / (C @ w)
        max_err = float(np.max(np.abs(F[mask] - R[mask])))
        history.append(max_err)
        if max_err <= tol_abs:
            converged = True
            break

    approx = BarycentricRational(s, fs, w)
    result = AaaResult(
        approximant=approx,
        error_history=history,
        final_error=float(np.max(np.abs(F - approx(Z)))),
        converged=converged,
        support_indices=list(support),
    )
    if cleanup_spurious:
        result = cleanup(result, Z, F, tol=cleanup_tol)
    return result


def _local_spacing(Z, p):
    """Mesh resolution of the samples near ``p``: the gap from the nearest
    sample to its own nearest neighbour."""
    i = int(np.argmin(np.abs(Z - p)))
    others = np.delete(Z, i)
    return float(np.min(np.abs(others - Z[i])))


def cleanup(result: AaaResult, points, values, tol: float = 1e-13) -> AaaResult:
    """Remove spurious poles (Froissart doublets) from a fit.

    A pole is deemed spurious when its residue is smaller than
    ``tol * max|F| * local sample spacing`` -- too small to carry signal at the
    resolution of the data.  For each such pole the nearest support point is
    dropped and the weights are re-solved once.  Returns the input unchanged
    when there is nothing to remove, so the operation is idempotent.
    """
    from .spectra import poles as poles_of, residues as residues_of

    Z, F = validate_samples(points, values)
    r = result.approximant
    if len(r) < 2:
        return result
    pl = poles_of(r)
    if len(pl) == 0:
        return result
    res = residues_of(r, pl)
    max_f = float(np.max(np.abs(F)))
    spacing = np.array([_local_spacing(Z, p) for p in pl])
    bad = np.abs(res) < tol * max_f * spacing
    if not bad.any():
        return result

    drop_nodes = {int(np.argmin(np.abs(r.nodes - p))) for p in pl[bad]}
    keep_nodes = [r.nodes[k] for k in range(len(r)) if k not in drop_nodes]
    if not keep_nodes:
        return result
    # map kept nodes back to sample indices for the re-solve
    support = [int(np.argmin(np.abs(Z - nd))) for nd in keep_nodes]
    s, fs, w, _, _ = _solve_weights(Z, F, support)
    approx = BarycentricRational(s, fs, w)
    return AaaResult(
        approximant=approx,
        error_history=list(result.error_history),
        final_error=float(np.max(np.abs(F - approx(Z)))),
        converged=result.converged,
        support_indices=support,
    )
