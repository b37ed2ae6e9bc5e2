"""Dense matrix carrier, validation helpers, and bit-exact CSV I/O.

Matrices are plain 2-D float64 ``numpy.ndarray`` objects in row-major order.
The helpers here are the single entry point for input validation: public
operations call :func:`require_matrix` (and friends) so that NaN/Inf and
negative entries are rejected up front instead of propagating.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import CsvParseError, DimensionError, ValidationError
from .rng import RandomSource

Matrix = np.ndarray


def as_matrix(values) -> Matrix:
    """Coerce to a 2-D float64 C-order array without copying when possible."""
    m = np.asarray(values, dtype=np.float64, order="C")
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={m.ndim}")
    return m


def require_matrix(values, name: str = "matrix") -> Matrix:
    """Coerce and reject non-finite entries."""
    m = as_matrix(values)
    if m.size and not np.isfinite(m).all():
        raise ValidationError(f"{name} contains NaN or Inf entries")
    return m


def require_nonnegative(values, name: str = "matrix") -> Matrix:
    m = require_matrix(values, name)
    if m.size and m.min() < 0.0:
        i, j = np.unravel_index(int(np.argmin(m)), m.shape)
        raise ValidationError(f"{name} must be nonnegative, entry ({i},{j}) = {m[i, j]}")
    return m


def matrix_from_csv(path, header: bool = False) -> Matrix:
    """Read a rectangular numeric CSV ('.' decimals, ',' delimiter).

    Raises CsvParseError naming the offending line for ragged rows or
    non-numeric fields. Negative entries are accepted here; nonnegativity is
    enforced by the operations that require it.
    """
    rows = []
    width = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if header and lineno == 1:
                continue
            fields = line.split(",")
            if width is None:
                width = len(fields)
            elif len(fields) != width:
                raise CsvParseError(
                    f"{path}: line {lineno} has {len(fields)} fields, expected {width}"
                )
            try:
                rows.append([float(f) for f in fields])
            except ValueError as exc:
                raise CsvParseError(f"{path}: line {lineno}: {exc}") from None
    if not rows:
        raise CsvParseError(f"{path}: no data rows")
    m = np.array(rows, dtype=np.float64)
    if not np.isfinite(m).all():
        raise CsvParseError(f"{path}: file contains non-finite values")
    return m


def matrix_to_csv(m: Matrix, path, header: list[str] | None = None) -> None:
    """Write a matrix as CSV using shortest exact decimal representations.

    ``repr`` of a Python float round-trips the underlying double exactly, so
    read-back through :func:`matrix_from_csv` is entrywise bit-identical.
    """
    m = require_matrix(m)
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        if header is not None:
            fh.write(",".join(header) + "\n")
        for row in m:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")
    os.replace(tmp, path)


def uniform_matrix(rows: int, cols: int, rng: RandomSource) -> Matrix:
    """Matrix with entries i.i.d. uniform on [0, 1)."""
    if rows < 1 or cols < 1:
        raise DimensionError(f"matrix dimensions must be >= 1, got {rows}x{cols}")
    return rng.random((rows, cols))
