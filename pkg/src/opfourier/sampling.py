"""Seeded random ensembles for verification campaigns.

Per-trial generators are derived by feeding (campaign seed, trial index)
into a SeedSequence, so parallel and serial trial orders draw identical
streams.
"""

from __future__ import annotations

import numpy as np

from .groups import FiniteAbelianGroup
from .transform import OperatorField

__all__ = ["trial_rng", "random_field", "random_spd", "random_unitary"]

SPD_RIDGE = 1e-3


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """PCG64 generator keyed by (seed, trial) through a SeedSequence."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(trial)]))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_field(group: FiniteAbelianGroup, dim: int, rng: np.random.Generator) -> OperatorField:
    """Field with independent complex Gaussian entries in every matrix."""
    return OperatorField(group, complex_gaussian(rng, (group.order, dim, dim)))


def random_spd(dim: int, rng: np.random.Generator, ridge: float = SPD_RIDGE) -> np.ndarray:
    """Random positive definite weight g g* + ridge * I."""
    g = complex_gaussian(rng, (dim, dim))
    return g @ g.conj().T + ridge * np.eye(dim)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random unitary from the QR factorization of a Gaussian matrix."""
    q, r = np.linalg.qr(complex_gaussian(rng, (dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))
