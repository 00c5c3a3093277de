"""Schatten p-norms, weighted norms and positive-matrix calculus.

All functions operate on dense complex square matrices and accept stacked
inputs of shape (..., d, d), applying the operation matrix by matrix.
Singular values are taken as the square roots of the eigenvalues of X*X.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "singular_values",
    "schatten_norm",
    "weighted_norm",
    "matrix_power",
    "gamma_path",
    "check_positive",
    "WeightPair",
]

HERMITIAN_TOL = 1e-12
# Smallest admissible eigenvalue, relative to the largest; below this a
# weight is rejected rather than regularized, since weighted norms diverge
# near singular weights and silent repair could mask inequality violations.
DEFINITENESS_TOL = 1e-10


def _as_square(x, name: str = "matrix") -> np.ndarray:
    arr = np.asarray(x, dtype=complex)
    if arr.ndim < 2 or arr.shape[-1] != arr.shape[-2] or arr.shape[-1] < 1:
        raise ValueError(f"{name} must be square with dimension >= 1, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} has non-finite entries")
    return arr


def singular_values(x) -> np.ndarray:
    """Singular values in nonincreasing order.

    Parameters
    ----------
    x : array_like, shape (..., d, d)
        One complex matrix or a stack of them.

    Returns
    -------
    numpy.ndarray, shape (..., d)
        Square roots of the eigenvalues of X*X, sorted nonincreasing.
    """
    arr = _as_square(x)
    if arr.shape[-1] == 1:
        return np.abs(arr[..., 0, :])
    gram = np.swapaxes(arr, -1, -2).conj() @ arr
    eigs = np.linalg.eigvalsh(gram)
    return np.sqrt(np.clip(eigs, 0.0, None))[..., ::-1]


def schatten_norm(x, p) -> float | np.ndarray:
    """Schatten p-norm (sum s_n^p)^(1/p); the operator norm at p = inf.

    Requires p >= 1 (smaller p does not give a norm).  Stacked inputs
    return an array of norms.
    """
    p = float(p)
    if p < 1.0 or math.isnan(p):
        raise ValueError(f"schatten_norm requires p >= 1, got {p}")
    s = singular_values(x)
    if math.isinf(p):
        out = s[..., 0]
    elif p == 1.0:
        out = s.sum(axis=-1)
    elif p == 2.0:
        out = np.sqrt((s * s).sum(axis=-1))
    else:
        out = (s**p).sum(axis=-1) ** (1.0 / p)
    return float(out) if np.ndim(out) == 0 else out


def check_positive(a) -> np.ndarray:
    """Validate Hermitian positive definiteness; return the Hermitian part."""
    h, _, _ = _positive_eigh(a)
    return h


def _positive_eigh(a) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Hermitian part, eigenvalues (ascending) and eigenvectors of an SPD matrix."""
    arr = _as_square(a, "weight")
    if arr.ndim != 2:
        raise ValueError(f"weight must be a single matrix, got shape {arr.shape}")
    scale = max(1.0, float(np.abs(arr).max()))
    adjoint = arr.conj().T
    if float(np.abs(arr - adjoint).max()) > HERMITIAN_TOL * scale:
        raise ValueError("weight is not Hermitian")
    h = 0.5 * (arr + adjoint)
    eigs, vecs = np.linalg.eigh(h)
    if eigs[0] <= DEFINITENESS_TOL * max(eigs[-1], 0.0) or eigs[0] <= 0.0:
        raise ValueError("weight is not positive definite")
    return h, eigs, vecs


def matrix_power(a, s: float) -> np.ndarray:
    """Real power of a positive definite matrix via its spectral decomposition."""
    _, eigs, vecs = _positive_eigh(a)
    out = (vecs * eigs ** float(s)) @ vecs.conj().T
    return 0.5 * (out + out.conj().T)


def weighted_norm(x, a, p) -> float | np.ndarray:
    """Schatten p-norm of a^(-1/2) X a^(-1/2) for a positive definite weight a.

    Coincides with the plain norm at a = I and scales as 1/t under a = t*I.
    """
    arr = _as_square(x)
    inv_sqrt = matrix_power(a, -0.5)
    if inv_sqrt.shape[0] != arr.shape[-1]:
        raise ValueError(
            f"weight dimension {inv_sqrt.shape[0]} does not match matrix dimension {arr.shape[-1]}"
        )
    return schatten_norm(inv_sqrt @ arr @ inv_sqrt, p)


def gamma_path(a, b, t: float) -> np.ndarray:
    """Geometric-mean interpolation a^(1/2) (a^(-1/2) b a^(-1/2))^t a^(1/2).

    Runs from a at t = 0 to b at t = 1 through positive definite matrices.
    """
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"path parameter t must lie in [0, 1], got {t}")
    b_h = check_positive(b)
    sqrt_a = matrix_power(a, 0.5)
    inv_sqrt_a = matrix_power(a, -0.5)
    if b_h.shape != sqrt_a.shape:
        raise ValueError("weights must have matching dimensions")
    inner = inv_sqrt_a @ b_h @ inv_sqrt_a
    out = sqrt_a @ matrix_power(inner, t) @ sqrt_a
    return 0.5 * (out + out.conj().T)


@dataclass(frozen=True, eq=False)
class WeightPair:
    """Two positive definite weights of equal dimension plus a path parameter."""

    a: np.ndarray
    b: np.ndarray
    t: float

    def __post_init__(self) -> None:
        a = check_positive(self.a)
        b = check_positive(self.b)
        if a.shape != b.shape:
            raise ValueError(f"weights have mismatched shapes {a.shape} and {b.shape}")
        t = float(self.t)
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"path parameter t must lie in [0, 1], got {t}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "t", t)

    @property
    def dimension(self) -> int:
        return self.a.shape[0]

    def gamma(self) -> np.ndarray:
        return gamma_path(self.a, self.b, self.t)
