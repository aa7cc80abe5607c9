"""File formats for approximants, solutions, and sample data.

Approximants and harmonic solutions are stored as JSON with complex numbers
spelled as ``[re, im]`` pairs; Python's shortest-roundtrip float repr keeps
full double precision.  Bulk numeric data (samples, grids, error curves) uses
plain CSV with a header row, decimal points, and no locale dependence.
"""

from __future__ import annotations

import csv
import json
import io as _io

import numpy as np

from .barycentric import BarycentricRational
from .laplace import HarmonicSolution

__all__ = [
    "approximant_to_json", "approximant_from_json",
    "save_approximant", "load_approximant",
    "solution_to_json", "solution_from_json",
    "save_solution", "load_solution",
    "read_samples_csv", "read_vertices_csv", "write_csv",
]


def _pairs(arr) -> list[list[float]]:
    a = np.asarray(arr, dtype=complex)
    return [[float(v.real), float(v.imag)] for v in a]


def _unpairs(pairs) -> np.ndarray:
    return np.array([complex(p[0], p[1]) for p in pairs], dtype=complex)


def approximant_to_json(r: BarycentricRational) -> str:
    payload = {
        "support_points": _pairs(r.nodes),
        "support_values": _pairs(r.values),
        "weights": _pairs(r.weights),
    }
    return json.dumps(payload, indent=2)


def approximant_from_json(text: str) -> BarycentricRational:
    payload = json.loads(text)
    return BarycentricRational(
        _unpairs(payload["support_points"]),
        _unpairs(payload["support_values"]),
        _unpairs(payload["weights"]),
    )


def save_approximant(r: BarycentricRational, path) -> None:
    with open(path, "w") as fh:
        fh.write(approximant_to_json(r) + "\n")


def load_approximant(path) -> BarycentricRational:
    with open(path) as fh:
        return approximant_from_json(fh.read())


def solution_to_json(sol: HarmonicSolution) -> str:
    H = np.asarray(sol.hessenberg)
    payload = {
        "exterior_poles": _pairs(sol.exterior_poles),
        "coefficients": [float(c) for c in sol.coefficients],
        "poly_degree": int(sol.poly_degree),
        "boundary_error": float(sol.boundary_error),
        "training_error": float(sol.training_error),
        "conjugate_offset": float(sol.conjugate_offset),
        "anchor": [float(sol.anchor.real), float(sol.anchor.imag)],
        "hessenberg": {
            "shape": list(H.shape),
            "entries": _pairs(H.ravel()),
        },
    }
    return json.dumps(payload, indent=2)


def solution_from_json(text: str) -> HarmonicSolution:
    payload = json.loads(text)
    hinfo = payload["hessenberg"]
    H = _unpairs(hinfo["entries"]).reshape(hinfo["shape"])
    return HarmonicSolution(
        exterior_poles=_unpairs(payload["exterior_poles"]),
        coefficients=np.array(payload["coefficients"], dtype=float),
        poly_degree=int(payload["poly_degree"]),
        boundary_error=float(payload["boundary_error"]),
        hessenberg=H,
        conjugate_offset=float(payload["conjugate_offset"]),
        training_error=float(payload.get("training_error", np.nan)),
        anchor=complex(payload["anchor"][0], payload["anchor"][1]),
    )


def save_solution(sol: HarmonicSolution, path) -> None:
    with open(path, "w") as fh:
        fh.write(solution_to_json(sol) + "\n")


def load_solution(path) -> HarmonicSolution:
    with open(path) as fh:
        return solution_from_json(fh.read())


def _read_numeric_rows(path, n_cols_min: int):
    """CSV rows as float lists; a single non-numeric first row is a header."""
    rows = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh)):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                vals = [float(cell) for cell in row[:]]
            except ValueError:
                if lineno == 0:
                    continue  # header
                raise ValueError(f"non-numeric data at line {lineno + 1}")
            if len(vals) < n_cols_min:
                raise ValueError(f"expected at least {n_cols_min} columns "
                                 f"at line {lineno + 1}")
            rows.append(vals)
    if not rows:
        raise ValueError("no data rows found")
    return rows


def read_samples_csv(path) -> tuple[np.ndarray, np.ndarray]:
    """Sample file with columns re(z), im(z), re(f), im(f); header optional."""
    rows = _read_numeric_rows(path, 4)
    data = np.array(rows, dtype=float)
    return data[:, 0] + 1j * data[:, 1], data[:, 2] + 1j * data[:, 3]


def read_vertices_csv(path) -> np.ndarray:
    """Boundary vertex file with columns re(z), im(z); header optional."""
    rows = _read_numeric_rows(path, 2)
    data = np.array(rows, dtype=float)
    return data[:, 0] + 1j * data[:, 1]


def write_csv(path_or_buffer, header, rows) -> None:
    """Write rows of floats with repr-precision, locale-independent."""
    def _emit(fh):
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")

    if isinstance(path_or_buffer, (str, bytes)) or hasattr(path_or_buffer, "__fspath__"):
        with open(path_or_buffer, "w", newline="") as fh:
            _emit(fh)
    else:
        _emit(path_or_buffer)


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    x = float(v)
    if np.isinf(x):
        return "inf" if x > 0 else "-inf"
    if np.isnan(x):
        return "nan"
    return repr(x)


def csv_text(header, rows) -> str:
    buf = _io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()
