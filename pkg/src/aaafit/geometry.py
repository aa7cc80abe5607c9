"""Closed planar curves: point-in-region tests and boundary sampling.

Curves are stored as closed polylines traced counterclockwise.  Smooth domains
should be discretized with generous vertex counts; the sampling and inside
tests interpolate along the polyline, so the polyline *is* the geometry.
"""

from __future__ import annotations

import warnings

import numpy as np

from .validation import as_complex_vector

__all__ = ["BoundaryCurve", "sample_boundary", "clustered_ladder",
           "polygon_curve", "circle_curve", "lobed_curve"]

# exponential clustering strength toward corners
CLUSTER_SIGMA = 4.0

# ladder depth floor keeps clustered points representable in doubles
CLUSTER_FLOOR = 1e-14

_CHUNK = 4096


class BoundaryCurve:
    """Closed counterclockwise polyline with optional marked corners.

    Parameters
    ----------
    vertices : array_like of complex
        Curve vertices in order; the closing edge back to the first vertex is
        implied.  Must be at least 3, consecutively distinct, and
        counterclockwise (positive enclosed area).
    corner_indices : sequence of int, optional
        Vertex positions that are geometric corners; boundary sampling
        clusters toward them.
    """

    def __init__(self, vertices, corner_indices=None):
        v = as_complex_vector(vertices, "vertices")
        if len(v) >= 2 and v[0] == v[-1]:
            v = v[:-1]  # tolerate an explicitly closed input
        if len(v) < 3:
            raise ValueError("a closed curve needs at least 3 distinct vertices")
        nxt = np.roll(v, -1)
        if np.any(nxt == v):
            k = int(np.nonzero(nxt == v)[0][0])
            raise ValueError(f"consecutive duplicate vertex at index {k}")
        area = 0.5 * np.sum((v.real * nxt.imag - v.imag * nxt.real))
        if area <= 0:
            raise ValueError("vertices must be ordered counterclockwise")
        self.vertices = v
        if corner_indices is None:
            self.corner_indices = None
        else:
            ci = np.asarray(corner_indices, dtype=int)
            if np.any(ci < 0) or np.any(ci >= len(v)):
                raise ValueError("corner index out of range")
            self.corner_indices = np.unique(ci)
        seg = np.abs(nxt - v)
        self._cumlen = np.concatenate([[0.0], np.cumsum(seg)])
        self._closed = np.concatenate([v, v[:1]])

    def __repr__(self):
        nc = 0 if self.corner_indices is None else len(self.corner_indices)
        return f"BoundaryCurve({len(self.vertices)} vertices, {nc} corners)"

    @property
    def perimeter(self) -> float:
        return float(self._cumlen[-1])

    @property
    def diameter(self) -> float:
        v = self.vertices
        return float(np.hypot(np.ptp(v.real), np.ptp(v.imag)))

    def point_at(self, arclength) -> np.ndarray:
        """Interpolate positions at the given arclength parameters."""
        s = np.mod(np.asarray(arclength, dtype=float), self.perimeter)
        return np.interp(s, self._cumlen, self._closed)

    def arclength_of_vertex(self, index: int) -> float:
        return float(self._cumlen[index])

    def _winding(self, z: np.ndarray) -> np.ndarray:
        total = np.zeros(len(z))
        v = self._closed
        for k in range(len(self.vertices)):
            total += np.angle((v[k + 1] - z) / (v[k] - z))
        return total / (2.0 * np.pi)

    def distance(self, z) -> np.ndarray:
        """Distance from each point to the polyline."""
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        a = self._closed[:-1]
        b = self._closed[1:]
        ab = b - a
        ab2 = np.abs(ab) ** 2
        out = np.empty(len(z))
        for lo in range(0, len(z), _CHUNK):
            zz = z[lo:lo + _CHUNK, None]
            t = ((zz - a[None, :]) * np.conj(ab[None, :])).real / ab2[None, :]
            t = np.clip(t, 0.0, 1.0)
            d = np.abs(zz - (a[None, :] + t * ab[None, :]))
            out[lo:lo + _CHUNK] = d.min(axis=1)
        return out

    def contains(self, z) -> np.ndarray:
        """Winding-number inside test (vectorized).

        Points closer than ``1e-12 * diameter`` to the curve are ambiguous;
        they report ``False`` with a warning.
        """
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        near = self.distance(z) <= 1e-12 * self.diameter
        inside = np.zeros(len(z), dtype=bool)
        far = np.nonzero(~near)[0]
        for lo in range(0, len(far), _CHUNK):
            sel = far[lo:lo + _CHUNK]
            w = self._winding(z[sel])
            inside[sel] = np.abs(w - 1.0) < 0.5
        if near.any():
            warnings.warn(f"{int(near.sum())} query point(s) within 1e-12*diameter "
                          "of the curve; reported as outside", RuntimeWarning,
                          stacklevel=2)
        return inside


def clustered_ladder(n: int, sigma: float = CLUSTER_SIGMA) -> np.ndarray:
    """``n`` points in (0, 1), clustered exponentially toward both endpoints.

    Positions follow the root-exponential ladder ``exp(-sigma*sqrt(k))``,
    mirrored about the midpoint, clipped at a depth floor so deep ladders stay
    representable.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    half = n // 2
    k = np.arange(1, half + 1, dtype=float)
    if n % 2:
        left = 0.5 * np.exp(-sigma * (np.sqrt(half + 1.0) - np.sqrt(k)))
        t = np.concatenate([left, [0.5], 1.0 - left[::-1]])
    else:
        left = 0.5 * np.exp(-sigma * (np.sqrt(half + 0.5) - np.sqrt(k)))
        t = np.concatenate([left, 1.0 - left[::-1]])
    return np.clip(t, CLUSTER_FLOOR, 1.0 - CLUSTER_FLOOR)


def sample_boundary(curve: BoundaryCurve, n_per_side: int,
                    cluster: bool | None = None) -> np.ndarray:
    """Place sample points along the curve.

    With marked corners, each side (the arc between consecutive corners)
    receives ``n_per_side`` points clustered exponentially toward both of its
    corners; clustering matters because poles and solution singularities pile
    up there.  Without corners, or with ``cluster=False``, points are spaced
    uniformly in arclength (``n_per_side`` in total when there are no sides to
    speak of).  Floating-point duplicates arising from very deep ladders are
    dropped.
    """
    if n_per_side < 4:
        raise ValueError("need at least 4 points per side")
    if cluster is None:
        cluster = curve.corner_indices is not None and len(curve.corner_indices) > 0
    corners = curve.corner_indices
    if not cluster or corners is None or len(corners) == 0:
        total = n_per_side if corners is None or len(corners) == 0 \
            else n_per_side * len(corners)
        s = (np.arange(total) + 0.5) * curve.perimeter / total
        return curve.point_at(s)

    t = clustered_ladder(n_per_side)
    pieces = []
    L = curve.perimeter
    for i, ci in enumerate(corners):
        cj = corners[(i + 1) % len(corners)]
        s0 = curve.arclength_of_vertex(ci)
        s1 = curve.arclength_of_vertex(cj)
        if i == len(corners) - 1:
            s1 += L  # wrap the closing side
        if s1 - s0 <= 0:
            raise ValueError("degenerate boundary side (zero length)")
        pieces.append(curve.point_at(s0 + t * (s1 - s0)))
    z = np.concatenate(pieces)
    keep = np.ones(len(z), dtype=bool)
    seen: set[complex] = set()
    for i, val in enumerate(z):
        c = complex(val)
        if c in seen:
            keep[i] = False
        seen.add(c)
    return z[keep]


def polygon_curve(corners) -> BoundaryCurve:
    """Polygon with every vertex marked as a corner."""
    c = as_complex_vector(corners, "corners")
    return BoundaryCurve(c, corner_indices=np.arange(len(c)))


def circle_curve(radius: float = 1.0, center: complex = 0.0,
                 n_vertices: int = 720) -> BoundaryCurve:
    th = 2.0 * np.pi * np.arange(n_vertices) / n_vertices
    return BoundaryCurve(center + radius * np.exp(1j * th))


def lobed_curve(n_lobes: int = 5, amplitude: float = 0.15,
                n_vertices: int = 30000) -> BoundaryCurve:
    """Smooth star-shaped domain r(theta) = 1 + amplitude*cos(n_lobes*theta).

    The dense default vertex count keeps the polyline's deviation from the
    smooth curve well below solver tolerances; coarse polylines put kinks in
    the reflected boundary data that stall rational fits near 1e-5.
    """
    th = 2.0 * np.pi * np.arange(n_vertices) / n_vertices
    r = 1.0 + amplitude * np.cos(n_lobes * th)
    return BoundaryCurve(r * np.exp(1j * th))
