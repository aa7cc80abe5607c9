"""Adaptive rational fitting of a function on a real interval.

The discrete fitter needs samples; on a continuum the art is choosing them.
This loop starts from a coarse Chebyshev grid and alternates three moves:
fit capped at the requested degree, locate the worst error by golden-section
search between samples, and insert a batch of new samples clustered
exponentially toward that point.  Two safeguards keep the capped fits honest:
every gap between adjacent support points gets a witness sample, and poles
that land on the interval (which a continuous target cannot justify) trigger
removal of their support point and one re-solve.  The loop stops once the
observed error stops improving at the full degree.
"""

from __future__ import annotations

import numpy as np

from .aaa import aaa_fit
from .barycentric import BarycentricRational, min_singular_vector
from .spectra import poles as poles_of

__all__ = ["fit_interval"]

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0

# ladder depth for inserted samples, exp(-INSERT_SIGMA*sqrt(k))
_INSERT_SIGMA = 2.0


def _golden_max(g, a: float, b: float, iters: int = 20):
    """Golden-section search for a local maximum of ``g`` on [a, b]."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    gc, gd = g(c), g(d)
    for _ in range(iters):
        if gc > gd:
            b, d, gd = d, c, gc
            c = b - _GOLDEN * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + _GOLDEN * (b - a)
            gd = g(d)
    return 0.5 * (a + b), max(gc, gd)


def _local_gap(x: np.ndarray, t: float) -> float:
    i = int(np.searchsorted(x, t))
    lo = x[max(i - 1, 0)]
    hi = x[min(i, len(x) - 1)]
    if hi == lo:
        hi = x[min(i + 1, len(x) - 1)]
    return max(float(hi - lo), 1e-300)


def _resolve(x, y, support):
    mask = np.ones(len(x), dtype=bool)
    mask[support] = False
    s = x[support].astype(complex)
    fs = y[support].astype(complex)
    C = 1.0 / (x[mask, None] - s[None, :])
    A = (y[mask, None].astype(complex) - fs[None, :]) * C
    return s, fs, min_singular_vector(A)


def _purge_interval_poles(x, y, support, r: BarycentricRational,
                          a: float, b: float) -> BarycentricRational:
    """Drop support points whose poles sit on the interval between samples.

    A pole with imaginary part smaller than a fraction of the local sample
    gap creates a spike no continuous target can match; its support point is
    removed and the weights re-solved.  Repeats a few times since the
    re-solve can shift the pole set.
    """
    support = list(support)
    for _ in range(5):
        pl = poles_of(r)
        on_axis = pl[(pl.real >= a) & (pl.real <= b)]
        bad = [p for p in on_axis if abs(p.imag) < 0.2 * _local_gap(x, p.real)]
        if not bad or len(support) <= 2:
            return r, support
        s = x[support]
        drop = {int(np.argmin(np.abs(s - p))) for p in bad}
        support = [si for k, si in enumerate(support) if k not in drop]
        snew, fsnew, wnew = _resolve(x, y, support)
        r = BarycentricRational(snew, fsnew, wnew)
    return r, support


def fit_interval(f, degree: int, interval=(-1.0, 1.0), *, n_insert: int = 16,
                 max_rounds: int = 40) -> BarycentricRational:
    """Fit ``f`` on a real interval by a rational function of fixed degree.

    Parameters
    ----------
    f : callable
        Vectorized real function of a real array; must be finite wherever the
        loop samples it.
    degree : int
        Target degree; the fit uses at most ``degree + 1`` support points.
    interval : (float, float)
        Endpoints ``a < b``.
    n_insert : int
        New samples added per round around the located worst error.
    max_rounds : int
        Hard cap on adaptive rounds.
    """
    a, b = float(interval[0]), float(interval[1])
    if not a < b:
        raise ValueError("interval must satisfy a < b")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    span = b - a

    def sample(t: np.ndarray) -> np.ndarray:
        v = np.asarray(f(t), dtype=float)
        if not np.all(np.isfinite(v)):
            raise ValueError("function returned a non-finite value")
        return v

    x = np.sort(0.5 * (a + b) + 0.5 * span * np.cos(np.pi * np.arange(33) / 32))
    y = sample(x)
    candidates: list[tuple[float, BarycentricRational]] = []
    best_err = np.inf
    flat_rounds = 0
    for _ in range(max_rounds):
        cap = int(min(degree + 1, max(2, len(x) // 3)))
        fit = aaa_fit(x, y.astype(complex), rel_tol=1e-15, max_support=cap,
                      cleanup_spurious=False)
        r, support = _purge_interval_poles(x, y, fit.support_indices,
                                           fit.approximant, a, b)

        def point_err(t: float) -> float:
            return abs(float(sample(np.array([t]))[0]) -
                       r(np.array([t], dtype=complex)).real[0])

        e_at = np.abs(y - r(x.astype(complex)).real)
        i0 = int(np.argmax(e_at))
        lo, hi = float(x[max(i0 - 1, 0)]), float(x[min(i0 + 1, len(x) - 1)])
        xstar, estar = _golden_max(point_err, lo, hi)
        estar = max(estar, float(e_at[i0]))
        candidates.append((estar, r))
        if len(r) == degree + 1:
            if estar >= 0.9 * best_err:
                flat_rounds += 1
                if flat_rounds >= 2:
                    break
            else:
                flat_rounds = 0
            best_err = min(best_err, estar)

        gap = max(xstar - lo, hi - xstar, 1e-16)
        k = np.arange(1, n_insert // 2 + 1, dtype=float)
        ladder = gap * np.exp(-_INSERT_SIGMA * np.sqrt(k))
        new = np.concatenate([xstar - ladder, xstar + ladder])
        # witness samples: no two support points may go unseparated
        snodes = np.sort(r.nodes.real)
        for u, v in zip(snodes[:-1], snodes[1:]):
            if not np.any((x > u) & (x < v)):
                new = np.append(new, 0.5 * (u + v))
        new = new[(new > a) & (new < b)]
        pos = np.searchsorted(x, new)
        nearest = np.minimum(np.abs(new - x[np.clip(pos - 1, 0, len(x) - 1)]),
                             np.abs(new - x[np.clip(pos, 0, len(x) - 1)]))
        new = np.unique(new[nearest > 1e-15 * span])
        if len(new) == 0:
            break
        x = np.concatenate([x, new])
        y = np.concatenate([y, sample(new)])
        order = np.argsort(x)
        x, y = x[order], y[order]

    # pick the candidate that is best on the final accumulated mesh; the
    # per-round estimate alone can miss spikes discovered by later samples
    best = None
    best_val = np.inf
    for est, r in candidates:
        mesh_err = float(np.max(np.abs(y - r(x.astype(complex)).real)))
        val = max(est, mesh_err)
        if val < best_val:
            best, best_val = r, val
    return best
