"""Laplace Dirichlet solver built on rational approximation of boundary data.

The method has three steps: fit the boundary data by a rational function,
keep only the poles that fall outside the domain, and solve a real linear
least-squares problem in the basis these poles induce.  Each exterior pole
``s_j`` contributes two real basis functions, the real and imaginary parts of
``1/(z - s_j)``; a polynomial part (stabilized by an Arnoldi orthogonalization
against the boundary samples) covers solutions with no finite singularities.
The result is the real part of a single analytic function, so it is harmonic
by construction and its harmonic conjugate comes for free.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .aaa import aaa_fit
from .geometry import BoundaryCurve, sample_boundary
from .spectra import poles as poles_of, split_poles
from .validation import as_complex_vector, as_real_vector

__all__ = ["HarmonicSolution", "solve_dirichlet", "solve_dirichlet_samples"]

_CHUNK = 1 << 16


def _arnoldi_basis(z: np.ndarray, degree: int):
    """Orthonormal-on-samples polynomial basis via the Arnoldi recurrence.

    Returns the basis evaluated at ``z`` and the recurrence coefficients,
    which reproduce the same polynomials at any other point set.  Plain
    monomials lose all accuracy beyond modest degrees; the recurrence keeps
    the basis well conditioned on the sample geometry.
    """
    n = len(z)
    Q = np.zeros((n, degree + 1), dtype=complex)
    H = np.zeros((degree + 1, max(degree, 1)), dtype=complex)
    Q[:, 0] = 1.0
    for k in range(degree):
        q = z * Q[:, k]
        for j in range(k + 1):
            H[j, k] = np.vdot(Q[:, j], q) / n
            q = q - H[j, k] * Q[:, j]
        H[k + 1, k] = np.linalg.norm(q) / np.sqrt(n)
        if H[k + 1, k] == 0:
            raise ValueError("polynomial basis degenerated on the samples")
        Q[:, k + 1] = q / H[k + 1, k]
    return Q, H


def _arnoldi_eval(z: np.ndarray, H: np.ndarray, degree: int) -> np.ndarray:
    Q = np.zeros((len(z), degree + 1), dtype=complex)
    Q[:, 0] = 1.0
    for k in range(degree):
        q = z * Q[:, k]
        for j in range(k + 1):
            q = q - H[j, k] * Q[:, j]
        Q[:, k + 1] = q / H[k + 1, k]
    return Q


def _real_basis_matrix(z: np.ndarray, ext_poles: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Real LS matrix: (Re, -Im) pairs per pole column, then the polynomial
    part with a single column for the constant."""
    cols = []
    for p in ext_poles:
        c = 1.0 / (z - p)
        cols.append(c.real)
        cols.append(-c.imag)
    cols.append(Q[:, 0].real)
    for k in range(1, Q.shape[1]):
        cols.append(Q[:, k].real)
        cols.append(-Q[:, k].imag)
    return np.column_stack(cols)


@dataclass
class HarmonicSolution:
    """Harmonic function as the real part of one analytic function.

    The coefficient layout is ``[a_1, b_1, ..., a_P, b_P, c_0, c_1, d_1, ...,
    c_D, d_D]`` for the analytic function

        f(z) = sum_j (a_j + i b_j) / (z - s_j)
             + c_0 q_0(z) + sum_k (c_k + i d_k) q_k(z),

    where ``q_k`` are the Arnoldi polynomials reproduced from ``hessenberg``.
    ``evaluate`` returns Re f; ``analytic`` returns f shifted so its imaginary
    part (the harmonic conjugate) vanishes at the first boundary sample.
    """

    exterior_poles: np.ndarray
    coefficients: np.ndarray
    poly_degree: int
    boundary_error: float
    hessenberg: np.ndarray
    conjugate_offset: float
    training_error: float = np.nan
    anchor: complex = 0.0  # first boundary sample, where the conjugate is 0
    n_interior_discarded: int = 0
    extra: dict = field(default_factory=dict, repr=False)

    def _analytic_raw(self, z: np.ndarray) -> np.ndarray:
        P = len(self.exterior_poles)
        c = self.coefficients
        out = np.zeros(len(z), dtype=complex)
        for j, p in enumerate(self.exterior_poles):
            out += (c[2 * j] + 1j * c[2 * j + 1]) / (z - p)
        Q = _arnoldi_eval(z, self.hessenberg, self.poly_degree)
        out += c[2 * P] * Q[:, 0]
        for k in range(1, self.poly_degree + 1):
            out += (c[2 * P + 2 * k - 1] + 1j * c[2 * P + 2 * k]) * Q[:, k]
        return out

    def analytic(self, z):
        """Analytic completion; its real part is the solution and its
        imaginary part the harmonic conjugate."""
        scalar = np.isscalar(z) or (isinstance(z, np.ndarray) and z.ndim == 0)
        zz = np.atleast_1d(np.asarray(z, dtype=complex)).ravel()
        out = np.empty(len(zz), dtype=complex)
        for lo in range(0, len(zz), _CHUNK):
            out[lo:lo + _CHUNK] = self._analytic_raw(zz[lo:lo + _CHUNK])
        out -= 1j * self.conjugate_offset
        if scalar:
            return complex(out[0])
        return out.reshape(np.shape(z))

    def evaluate(self, z):
        """Solution value(s) at ``z`` (also valid outside the domain, where it
        reveals the harmonic continuation)."""
        out = self.analytic(z)
        if np.isscalar(out):
            return out.real
        return out.real


def solve_dirichlet_samples(curve: BoundaryCurve, boundary_points, boundary_values,
                            *, tol: float = 1e-10, poly_degree: int = 10,
                            max_support: int = 250,
                            row_weights=None) -> HarmonicSolution:
    """Solve from explicit boundary samples; see :func:`solve_dirichlet`.

    ``boundary_error`` here is the misfit on the provided samples; callers
    with a data function should prefer :func:`solve_dirichlet`, which
    validates on a finer sampling.
    """
    Zb = as_complex_vector(boundary_points, "boundary_points")
    hb = as_real_vector(boundary_values, "boundary_values")
    if len(Zb) != len(hb):
        raise ValueError("boundary points and values differ in length")
    if poly_degree < 0:
        raise ValueError("poly_degree must be nonnegative")

    fit = aaa_fit(Zb, hb.astype(complex), rel_tol=tol, max_support=max_support)
    all_poles = poles_of(fit.approximant)
    inside_p, outside_p = split_poles(all_poles, curve)
    # near-boundary poles are numerically dangerous basis functions
    if len(outside_p):
        dist = curve.distance(outside_p)
        hugging = dist <= 1e-12 * curve.diameter
        if hugging.any():
            warnings.warn(f"discarding {int(hugging.sum())} pole(s) within "
                          "1e-12*diameter of the boundary", RuntimeWarning,
                          stacklevel=2)
        ext = outside_p[~hugging]
    else:
        ext = outside_p
    n_discarded = len(all_poles) - len(ext)
    if len(ext) == 0 and poly_degree == 0:
        raise ValueError("no exterior poles and no polynomial part: empty basis")

    Q, H = _arnoldi_basis(Zb, poly_degree)
    A = _real_basis_matrix(Zb, ext, Q)
    if row_weights is not None:
        rw = np.sqrt(as_real_vector(row_weights, "row_weights"))
        A = A * rw[:, None]
        rhs = hb * rw
    else:
        rhs = hb
    colnorm = np.linalg.norm(A, axis=0)
    colnorm[colnorm == 0] = 1.0
    coef, *_ = np.linalg.lstsq(A / colnorm, rhs, rcond=None)
    coef = coef / colnorm

    sol = HarmonicSolution(
        exterior_poles=ext,
        coefficients=coef,
        poly_degree=poly_degree,
        boundary_error=np.nan,
        hessenberg=H,
        conjugate_offset=0.0,
        anchor=complex(Zb[0]),
        n_interior_discarded=n_discarded,
        extra={"aaa_degree": fit.approximant.degree,
               "aaa_converged": fit.converged,
               "n_poles_inside": len(inside_p)},
    )
    sol.conjugate_offset = float(sol.analytic(np.array([Zb[0]]))[0].imag)
    train = float(np.max(np.abs(sol.evaluate(Zb) - hb)))
    sol.training_error = train
    sol.boundary_error = train
    return sol


def solve_dirichlet(curve: BoundaryCurve, h, *, tol: float = 1e-10,
                    poly_degree: int = 10, n_per_side: int | None = None,
                    cluster: bool | None = None, max_support: int = 250,
                    validation_factor: int = 3,
                    weight_rows_by_spacing: bool = False) -> HarmonicSolution:
    """Solve the Dirichlet problem ``laplace(u) = 0``, ``u = h`` on the curve.

    Parameters
    ----------
    curve : BoundaryCurve
        Domain boundary, counterclockwise.
    h : callable
        Real boundary data, evaluated at complex boundary points.
    tol : float
        Target accuracy; drives the rational fit of the data.  The achieved
        ``boundary_error`` is reported, not enforced.
    poly_degree : int
        Degree of the polynomial part of the basis.
    n_per_side : int, optional
        Boundary samples per side (per corner-to-corner arc, or in total for
        a smooth curve).  Defaults to 120 with corners, 1200 without.
    cluster : bool, optional
        Cluster samples toward corners; defaults to "when corners exist".
    validation_factor : int
        ``boundary_error`` is measured on this-times-finer fresh sampling.
    weight_rows_by_spacing : bool
        Weight least-squares rows by local sample spacing so clustered
        regions do not dominate the fit.
    """
    has_corners = curve.corner_indices is not None and len(curve.corner_indices) > 0
    if n_per_side is None:
        n_per_side = 120 if has_corners else 1200
    Zb = sample_boundary(curve, n_per_side, cluster=cluster)
    hb = as_real_vector(np.asarray(h(Zb), dtype=float), "h(boundary)")
    if not np.all(np.isfinite(hb)):
        raise ValueError("boundary data is not finite at some samples")
    rw = None
    if weight_rows_by_spacing:
        gaps = np.abs(np.roll(Zb, -1) - Zb)
        rw = 0.5 * (gaps + np.roll(gaps, 1))
    sol = solve_dirichlet_samples(curve, Zb, hb, tol=tol, poly_degree=poly_degree,
                                  max_support=max_support, row_weights=rw)
    Zv = sample_boundary(curve, validation_factor * n_per_side, cluster=cluster)
    hv = np.asarray(h(Zv), dtype=float)
    sol.boundary_error = float(np.max(np.abs(sol.evaluate(Zv) - hv)))
    return sol
