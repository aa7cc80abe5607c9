"""Poles, zeros and residues of barycentric rationals.

Both computations solve an arrowhead generalized eigenvalue problem: with
support points on the diagonal, ones down the first column and the weights
(or value-scaled weights for zeros) across the first row, the pencil's finite
eigenvalues are exactly the points where the barycentric denominator (or
numerator) vanishes.  The pencil carries two structurally infinite eigenvalues
that are filtered out.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .barycentric import BarycentricRational

__all__ = ["PoleZeroReport", "poles", "zeros", "residues", "split_poles",
           "pole_zero_report"]

# eigenvalues beyond this modulus are the pencil's structural infinities
INFINITE_EIG_CUTOFF = 1e13


def _arrowhead_eigvals(nodes: np.ndarray, first_row: np.ndarray) -> np.ndarray:
    m = len(nodes)
    E = np.zeros((m + 1, m + 1), dtype=complex)
    E[0, 1:] = first_row
    E[1:, 0] = 1.0
    E[1:, 1:] = np.diag(nodes)
    B = np.eye(m + 1, dtype=complex)
    B[0, 0] = 0.0
    lam = scipy.linalg.eigvals(E, B)
    lam = lam[np.isfinite(lam)]
    return lam[np.abs(lam) <= INFINITE_EIG_CUTOFF]


def poles(r: BarycentricRational) -> np.ndarray:
    """Finite poles of ``r``.  A single-node function is constant: no poles."""
    if len(r) < 2:
        return np.array([], dtype=complex)
    return _arrowhead_eigvals(r.nodes, r.weights)


def zeros(r: BarycentricRational) -> np.ndarray:
    """Finite zeros of ``r`` (same pencil with value-scaled weights)."""
    if len(r) < 2:
        # a constant is zero everywhere or nowhere; report no isolated zeros
        return np.array([], dtype=complex)
    return _arrowhead_eigvals(r.nodes, r.weights * r.values)


def residues(r: BarycentricRational, pole_locations=None) -> np.ndarray:
    """Residues of ``r`` at (assumed simple) poles: ``n(p) / d'(p)``.

    Nearly multiple poles make the simple-pole formula unreliable; a warning
    names the affected indices and the values are returned as computed.
    """
    pl = poles(r) if pole_locations is None else np.asarray(pole_locations, dtype=complex)
    if len(pl) == 0:
        return np.array([], dtype=complex)
    sep_scale = np.maximum(1.0, np.abs(pl))
    shaky = []
    for i in range(len(pl)):
        d = np.abs(pl - pl[i])
        d[i] = np.inf
        if np.min(d) <= 1e-13 * sep_scale[i]:
            shaky.append(i)
    if shaky:
        warnings.warn(
            f"nearly multiple poles at indices {shaky}; residues there are unreliable",
            RuntimeWarning, stacklevel=2)
    diff = pl[:, None] - r.nodes[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        n_at = np.sum(r.weights * r.values / diff, axis=1)
        dprime_at = np.sum(-r.weights / diff ** 2, axis=1)
        return n_at / dprime_at


def split_poles(pole_locations, region) -> tuple[np.ndarray, np.ndarray]:
    """Partition poles into those inside and outside a closed curve.

    Points within ``1e-12 * diameter`` of the curve cannot be classified
    reliably; they are reported outside with a warning.
    """
    pl = np.asarray(pole_locations, dtype=complex)
    if len(pl) == 0:
        empty = np.array([], dtype=complex)
        return empty, empty
    near = region.distance(pl) <= 1e-12 * region.diameter
    if near.any():
        warnings.warn(f"{int(near.sum())} pole(s) within 1e-12*diameter of the "
                      "curve; classified as outside", RuntimeWarning, stacklevel=2)
    inside_mask = region.contains(pl) & ~near
    return pl[inside_mask], pl[~inside_mask]


@dataclass
class PoleZeroReport:
    """Finite poles, zeros and pole-aligned residues of a rational function."""

    poles: np.ndarray
    zeros: np.ndarray
    residues: np.ndarray


def pole_zero_report(r: BarycentricRational) -> PoleZeroReport:
    pl = poles(r)
    return PoleZeroReport(poles=pl, zeros=zeros(r), residues=residues(r, pl))
