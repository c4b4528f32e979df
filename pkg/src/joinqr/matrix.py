"""Dense row-major float64 matrices and the small helpers everything else builds on.

Matrices are plain 2-D numpy arrays throughout the package.  Shapes are
validated here; finiteness is enforced only at the IO and generator
boundaries, where external data enters.
"""

from __future__ import annotations

import numpy as np


def as_matrix(values, require_finite: bool = False) -> np.ndarray:
    """Coerce to a C-contiguous 2-D float64 array, validating shape."""
    a = np.ascontiguousarray(values, dtype=np.float64)
    if a.ndim == 1:
        a = a.reshape(len(a) and 1 or 0, a.shape[0] if a.shape[0] else 0)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    if require_finite and a.size and not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    return a


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"matmul dimension mismatch: {a.shape} x {b.shape}")
    return a @ b


def gram(a: np.ndarray) -> np.ndarray:
    """A^T A, mirrored from the upper triangle so the result is symmetric to the bit."""
    g = a.T @ a
    return np.triu(g) + np.triu(g, 1).T


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def transpose(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(a.T)


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.sqrt(np.einsum("ij,ij->", a, a)))


def hconcat(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"hconcat row mismatch: {a.shape} vs {b.shape}")
    return np.hstack([a, b])


def vconcat(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[1]:
        raise ValueError(f"vconcat column mismatch: {a.shape} vs {b.shape}")
    return np.vstack([a, b])


def scale(a: np.ndarray, c: float) -> np.ndarray:
    return a * float(c)


def row_slice(a: np.ndarray, start: int, stop: int) -> np.ndarray:
    return a[start:stop].copy()


def is_upper_triangular(r: np.ndarray) -> bool:
    """True when r is square with exact zeros strictly below the diagonal."""
    return r.ndim == 2 and r.shape[0] == r.shape[1] and not np.any(np.tril(r, -1))
