"""Scikit-learn style estimator facade over the functional API.

The estimators follow the fit/predict contract with parameters declared in
``__init__`` so ``get_params``/``set_params``/``clone`` work, which lets the
fitters drop into pipelines and grid searches.  Complex sample locations are
accepted as 1-D complex arrays or ``(n, 2)`` real arrays of (real, imag)
pairs.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .aaa import aaa_fit
from .geometry import BoundaryCurve
from .laplace import solve_dirichlet_samples
from .lawson import lawson_refine
from .validation import as_complex_vector, as_real_vector

__all__ = ["AAA", "AAALawson", "DirichletLaplace"]


class AAA(BaseEstimator):
    """Adaptive rational approximation of sampled data.

    Parameters
    ----------
    tol : float
        Relative convergence tolerance (scaled by ``max|y|``).
    max_terms : int
        Support-point budget.
    cleanup : bool
        Remove spurious tiny-residue poles after fitting.
    cleanup_tol : float
        Residue threshold scale for the cleanup pass.

    Attributes
    ----------
    rational_ : BarycentricRational
        The fitted function; also used by :meth:`predict`.
    error_history_ : list of float
    final_error_ : float
    converged_ : bool

    Examples
    --------
    >>> Z = np.exp(2j * np.pi * np.arange(100) / 100)
    >>> model = AAA().fit(Z, np.exp(Z))
    >>> model.rational_.degree
    7
    """

    def __init__(self, tol=1e-13, max_terms=100, cleanup=True, cleanup_tol=1e-13):
        self.tol = tol
        self.max_terms = max_terms
        self.cleanup = cleanup
        self.cleanup_tol = cleanup_tol

    def fit(self, X, y):
        Z = as_complex_vector(X, "X")
        F = as_complex_vector(y, "y")
        result = aaa_fit(Z, F, rel_tol=self.tol, max_support=self.max_terms,
                         cleanup_spurious=self.cleanup, cleanup_tol=self.cleanup_tol)
        self.result_ = result
        self.rational_ = result.approximant
        self.error_history_ = result.error_history
        self.final_error_ = result.final_error
        self.converged_ = result.converged
        return self

    def predict(self, X):
        if not hasattr(self, "rational_"):
            raise NotFittedError("call fit before predict")
        return self.rational_(as_complex_vector(X, "X"))


class AAALawson(BaseEstimator):
    """Minimax rational approximation of fixed degree.

    Runs the adaptive fit capped at ``degree + 1`` support points, then the
    iteratively reweighted refinement toward the best maximum-norm fit.

    Attributes
    ----------
    rational_ : BarycentricRational
        The refined function.
    states_ : list of LawsonState
    max_error_ : float
    """

    def __init__(self, degree=4, max_iters=20, stagnation_tol=1e-3):
        self.degree = degree
        self.max_iters = max_iters
        self.stagnation_tol = stagnation_tol

    def fit(self, X, y):
        Z = as_complex_vector(X, "X")
        F = as_complex_vector(y, "y")
        start = aaa_fit(Z, F, rel_tol=1e-15, max_support=self.degree + 1,
                        cleanup_spurious=False)
        refined, states = lawson_refine(Z, F, start.approximant,
                                        max_iters=self.max_iters,
                                        stagnation_tol=self.stagnation_tol)
        self.start_ = start.approximant
        self.rational_ = refined
        self.states_ = states
        self.max_error_ = float(np.max(np.abs(F - refined(Z))))
        return self

    def predict(self, X):
        if not hasattr(self, "rational_"):
            raise NotFittedError("call fit before predict")
        return self.rational_(as_complex_vector(X, "X"))


class DirichletLaplace(BaseEstimator):
    """Laplace Dirichlet solver fit on boundary samples.

    Parameters
    ----------
    curve : BoundaryCurve
        Domain boundary; needed to split poles into interior/exterior.
    tol : float
        Target accuracy for the boundary-data fit.
    poly_degree : int
        Polynomial part degree of the solution basis.
    max_terms : int
        Support budget for the boundary-data fit.

    ``fit(X, y)`` takes boundary sample locations and real data values;
    ``predict(X)`` evaluates the harmonic solution (real part), and
    :meth:`predict_analytic` the full analytic function.
    """

    def __init__(self, curve=None, tol=1e-10, poly_degree=10, max_terms=250):
        self.curve = curve
        self.tol = tol
        self.poly_degree = poly_degree
        self.max_terms = max_terms

    def fit(self, X, y):
        if not isinstance(self.curve, BoundaryCurve):
            raise ValueError("curve must be a BoundaryCurve")
        Zb = as_complex_vector(X, "X")
        hb = as_real_vector(np.asarray(y, dtype=float), "y")
        self.solution_ = solve_dirichlet_samples(
            self.curve, Zb, hb, tol=self.tol, poly_degree=self.poly_degree,
            max_support=self.max_terms)
        self.boundary_error_ = self.solution_.boundary_error
        return self

    def predict(self, X):
        if not hasattr(self, "solution_"):
            raise NotFittedError("call fit before predict")
        return self.solution_.evaluate(as_complex_vector(X, "X"))

    def predict_analytic(self, X):
        if not hasattr(self, "solution_"):
            raise NotFittedError("call fit before predict_analytic")
        return self.solution_.analytic(as_complex_vector(X, "X"))
