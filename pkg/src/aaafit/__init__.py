"""Rational approximation in barycentric form, with a Laplace solver on top.

The functional layer (``aaa_fit``, ``lawson_refine``, ``fit_interval``,
``solve_dirichlet``, pole/zero extraction) does the numerical work; the
estimator layer (``AAA``, ``AAALawson``, ``DirichletLaplace``) wraps it in a
scikit-learn style fit/predict API.  The ``aaafit`` console script exposes the
batch workflows.
"""

from .aaa import AaaResult, aaa_fit, cleanup
from .barycentric import (BarycentricRational, LoewnerMatrix, build_loewner,
                          min_singular_vector)
from .continuum import fit_interval
from .estimators import AAA, AAALawson, DirichletLaplace
from .geometry import (BoundaryCurve, circle_curve, clustered_ladder,
                       lobed_curve, polygon_curve, sample_boundary)
from .laplace import HarmonicSolution, solve_dirichlet, solve_dirichlet_samples
from .lawson import LawsonState, lawson_refine, winding_number
from .special import zeta_truncated
from .spectra import (PoleZeroReport, pole_zero_report, poles, residues,
                      split_poles, zeros)
from .validation import validate_samples

__all__ = [
    "AAA",
    "AAALawson",
    "AaaResult",
    "BarycentricRational",
    "BoundaryCurve",
    "DirichletLaplace",
    "HarmonicSolution",
    "LawsonState",
    "LoewnerMatrix",
    "PoleZeroReport",
    "aaa_fit",
    "build_loewner",
    "circle_curve",
    "cleanup",
    "clustered_ladder",
    "fit_interval",
    "lawson_refine",
    "lobed_curve",
    "min_singular_vector",
    "pole_zero_report",
    "poles",
    "polygon_curve",
    "residues",
    "sample_boundary",
    "solve_dirichlet",
    "solve_dirichlet_samples",
    "split_poles",
    "validate_samples",
    "winding_number",
    "zeros",
    "zeta_truncated",
]

__version__ = "0.1.0"
