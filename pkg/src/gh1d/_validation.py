import numpy as np

from .core import PointSet1D, make_point_set
from .exceptions import EmptySet, InvalidCoordinate


def check_points(values, name="X") -> PointSet1D:
    """Coerce a 1-D array, an (n, 1) column, or a PointSet1D into a PointSet1D."""
    if isinstance(values, PointSet1D):
        return values
    arr = np.asarray(values, dtype=float)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D or a single column, got shape {arr.shape}")
    if arr.size == 0:
        raise EmptySet(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidCoordinate(f"{name} contains NaN or infinity")
    return make_point_set(arr)


def check_column(values, name="X"):
    """Return a float array and whether the input was a column."""
    arr = np.asarray(values, dtype=float)
    column = arr.ndim == 2 and arr.shape[1] == 1
    flat = arr[:, 0] if column else arr
    if flat.ndim != 1:
        raise ValueError(f"{name} must be 1-D or a single column, got shape {arr.shape}")
    if not np.all(np.isfinite(flat)):
        raise InvalidCoordinate(f"{name} contains NaN or infinity")
    return flat, column
