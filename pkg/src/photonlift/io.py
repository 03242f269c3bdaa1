"""Read and write complex matrices as JSON files with [re, im] entry pairs.

The on-disk layout is a single JSON object::

    {
     "rows": 2,
     "cols": 2,
     "data": [
      [0.7071067811865476, 0.0],
      ...
     ],
     "metadata": {"free-form": "string map, optional"}
    }

``data`` is row-major with one [real, imaginary] pair per entry. Floats are
written with repr precision, so a write/read round trip reproduces every
entry bit for bit. Non-finite numbers are rejected in both directions.
"""

import json
import math
import os

import numpy as np

__all__ = ["MatrixFileError", "read_matrix", "write_matrix"]


class MatrixFileError(ValueError):
    """Matrix file is not valid JSON or does not match the expected schema."""


def _reject_constant(token: str):
    raise MatrixFileError(f"non-finite number {token!r} is not allowed")


def _require(condition: bool, path, message: str) -> None:
    if not condition:
        raise MatrixFileError(f"{path}: {message}")


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def read_matrix(path) -> np.ndarray:
    """Load a matrix file; raises OSError for I/O and MatrixFileError for content."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            raw = json.load(handle, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise MatrixFileError(f"{path}: invalid JSON: {exc}") from exc

    _require(isinstance(raw, dict), path, "top level must be a JSON object")
    for field in ("rows", "cols", "data"):
        _require(field in raw, path, f"missing required field {field!r}")
    rows, cols, data = raw["rows"], raw["cols"], raw["data"]
    for name, value in (("rows", rows), ("cols", cols)):
        _require(
            isinstance(value, int) and not isinstance(value, bool) and value >= 1,
            path,
            f"{name} must be an integer >= 1",
        )
    _require(isinstance(data, list), path, "data must be a list of [re, im] pairs")
    _require(
        len(data) == rows * cols,
        path,
        f"data holds {len(data)} entries, expected rows*cols = {rows * cols}",
    )
    if "metadata" in raw and raw["metadata"] is not None:
        metadata = raw["metadata"]
        _require(
            isinstance(metadata, dict)
            and all(
                isinstance(key, str) and isinstance(value, str)
                for key, value in metadata.items()
            ),
            path,
            "metadata must map strings to strings",
        )

    entries = np.empty(rows * cols, dtype=complex)
    for position, pair in enumerate(data):
        _require(
            isinstance(pair, list) and len(pair) == 2,
            path,
            f"data[{position}] must be a [re, im] pair",
        )
        real, imaginary = pair
        _require(
            _is_number(real) and _is_number(imaginary),
            path,
            f"data[{position}] must hold two numbers",
        )
        _require(
            math.isfinite(real) and math.isfinite(imaginary),
            path,
            f"data[{position}] must be finite",
        )
        entries[position] = complex(real, imaginary)
    return entries.reshape(rows, cols)


def write_matrix(matrix, path, metadata: dict[str, str] | None = None) -> None:
    """Write a matrix file that read_matrix restores exactly."""
    out = np.asarray(matrix, dtype=complex)
    if out.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {out.shape}")
    rows, cols = out.shape
    if rows < 1 or cols < 1:
        raise ValueError(f"rows and cols must be >= 1, got {rows}x{cols}")
    if not np.isfinite(out).all():
        raise ValueError("matrix entries must be finite (no NaN or Inf)")
    if metadata is not None and not all(
        isinstance(key, str) and isinstance(value, str)
        for key, value in metadata.items()
    ):
        raise ValueError("metadata must map strings to strings")

    # json.dumps writes floats with repr, the shortest exact representation.
    pairs = [
        json.dumps([float(entry.real), float(entry.imag)])
        for entry in out.ravel(order="C")
    ]
    lines = ["{", f' "rows": {rows},', f' "cols": {cols},', ' "data": [']
    lines += [f"  {pair}," for pair in pairs[:-1]]
    lines.append(f"  {pairs[-1]}")
    if metadata:
        lines.append(" ],")
        lines.append(f' "metadata": {json.dumps(metadata, sort_keys=True)}')
    else:
        lines.append(" ]")
    lines.append("}")
    with open(os.fspath(path), "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")
