import csv
import json
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence, Union

import numpy as np

__all__ = [
    "format_float",
    "matrix_from_json",
    "matrix_to_json",
    "to_jsonable",
    "vector_from_json",
    "write_csv",
    "write_json",
]

PathLike = Union[str, Path]


def format_float(value: float) -> str:
    """Format a float with 17 significant digits."""
    return format(float(value), ".17g")


def matrix_to_json(matrix: np.ndarray) -> List[List[float]]:
    """Convert a matrix to nested lists of Python floats."""
    return [[float(entry) for entry in row] for row in np.asarray(matrix)]


def matrix_from_json(data: Any, dim: Optional[int] = None) -> np.ndarray:
    """Convert nested lists to a real square matrix.

    Raises a ValueError when the data is not a finite square matrix or when
    its dimension differs from the given one.
    """
    try:
        matrix = np.array(data, dtype=float)
    except (TypeError, ValueError) as error:
        raise ValueError(f"Not a numeric matrix: {error}.") from error
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or not matrix.size:
        raise ValueError(f"Expected a square matrix, got shape {matrix.shape}.")
    if dim is not None and matrix.shape[0] != dim:
        raise ValueError(
            f"Expected a {dim}x{dim} matrix, got shape {matrix.shape}."
        )
    if not np.all(np.isfinite(matrix)):
        raise ValueError("Matrix entries must be finite.")
    return matrix


def vector_from_json(data: Any, dim: Optional[int] = None) -> np.ndarray:
    """Convert a list to a finite real vector of the given dimension."""
    try:
        vector = np.array(data, dtype=float)
    except (TypeError, ValueError) as error:
        raise ValueError(f"Not a numeric vector: {error}.") from error
    if vector.ndim != 1:
        raise ValueError(f"Expected a vector, got shape {vector.shape}.")
    if dim is not None and vector.shape[0] != dim:
        raise ValueError(f"Expected a vector of length {dim}, got {vector.shape[0]}.")
    if not np.all(np.isfinite(vector)):
        raise ValueError("Vector entries must be finite.")
    return vector


def to_jsonable(value: Any) -> Any:
    """Recursively convert numpy values and named tuples to JSON types."""
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if np.isfinite(value):
            return value
        return "inf" if value > 0 else "-inf" if value < 0 else "nan"
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if hasattr(value, "_asdict"):
        return to_jsonable(value._asdict())
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return value


def write_json(path: PathLike, data: Any) -> str:
    """Write data as indented JSON with sorted keys and return the text."""
    text = json.dumps(to_jsonable(data), indent=2, sort_keys=True) + "\n"
    Path(path).write_text(text)
    return text


def write_csv(
    path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> None:
    """Write rows below a header, floats with 17 significant digits."""
    with open(path, "w", newline="") as csv_file:
        writer = csv.writer(csv_file)
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [
                    format_float(item)
                    if isinstance(item, (float, np.floating))
                    else item
                    for item in row
                ]
            )
