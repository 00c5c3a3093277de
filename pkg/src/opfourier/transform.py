"""Operator-valued Fourier transforms over finite abelian groups.

A field assigns one d x d complex matrix to each group element; its
transform at a character xi is the measure-weighted sum
B_xi = sum_theta mu(theta) A_theta conj(xi(theta)).  Two routes are
provided: a direct character-sum reference and an FFT along the cyclic
factors; they agree to roundoff and are tested against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import FiniteAbelianGroup, GroupElement

__all__ = [
    "OperatorField",
    "DualOperatorField",
    "fourier_transform",
    "fourier_transform_fast",
    "parseval_defect",
    "bochner_linearity_defect",
]


def _as_field_values(group: FiniteAbelianGroup, values) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2] or arr.shape[1] < 1:
        raise ValueError(f"field values must have shape (|G|, d, d), got {arr.shape}")
    if arr.shape[0] != group.order:
        raise ValueError(f"field has {arr.shape[0]} matrices, expected {group.order}")
    if not np.isfinite(arr).all():
        raise ValueError("field has non-finite entries")
    return arr


@dataclass(frozen=True, eq=False)
class OperatorField:
    """Map from group elements to matrices of one fixed dimension."""

    group: FiniteAbelianGroup
    values: np.ndarray  # (|G|, d, d)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_field_values(self.group, self.values))

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    def energy(self) -> float:
        """Haar-weighted squared Frobenius mass sum_theta mu ||A_theta||_F^2."""
        return self.group.haar_weight * float(np.sum(np.abs(self.values) ** 2))

    def translated(self, shift: GroupElement) -> "OperatorField":
        """Field shifted by a group element: theta -> A_(theta - shift)."""
        group = self.group
        group._check_residues(shift.residues, "element")
        res = (group._residues - np.asarray(shift.residues, dtype=np.int64)) % np.asarray(
            group.factors, dtype=np.int64
        )
        return OperatorField(group, self.values[group.indices_of(res)])


@dataclass(frozen=True, eq=False)
class DualOperatorField:
    """Map from characters to matrices, indexed in character order."""

    group: FiniteAbelianGroup
    values: np.ndarray  # (|G^|, d, d)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_field_values(self.group, self.values))

    @property
    def dim(self) -> int:
        return self.values.shape[1]


def fourier_transform(field: OperatorField) -> DualOperatorField:
    """Reference transform by direct character sums, O(|G|^2 d^2)."""
    group = field.group
    out = np.empty_like(field.values)
    for k in range(group.order):
        chi = group.char_values(group.character(k))
        out[k] = np.tensordot(chi.conj(), field.values, axes=(0, 0))
    out *= group.haar_weight
    return DualOperatorField(group, out)


def fourier_transform_fast(field: OperatorField) -> DualOperatorField:
    """FFT along each cyclic factor; matches the reference within roundoff."""
    group = field.group
    k = len(group.factors)
    if k == 0:
        spectrum = field.values * group.haar_weight
        return DualOperatorField(group, spectrum)
    d = field.dim
    shaped = field.values.reshape(group.factors + (d, d))
    spectrum = np.fft.fftn(shaped, axes=tuple(range(k))) * group.haar_weight
    return DualOperatorField(group, spectrum.reshape(group.order, d, d))


def parseval_defect(field: OperatorField) -> float:
    """Relative defect of the operator Parseval identity.

    Compares sum_xi nu B*B with sum_theta mu A*A in Frobenius norm,
    normalized by the field energy; values at roundoff level certify the
    identity together with the dual-weight normalization.
    """
    group = field.group
    dual = fourier_transform_fast(field)
    lhs = group.dual_weight * np.einsum("kij,kil->jl", dual.values.conj(), dual.values)
    rhs = group.haar_weight * np.einsum("kij,kil->jl", field.values.conj(), field.values)
    scale = field.energy()
    defect = float(np.linalg.norm(lhs - rhs))
    return defect / scale if scale > 0.0 else defect


_PROBE_KINDS = ("trace", "left", "right", "entry", "congruence")


def _resolve_probe(probe, dim: int):
    """Turn a probe description into a callable; see bochner_linearity_defect."""
    from .schatten import matrix_power

    if probe == "trace":
        return np.trace
    if isinstance(probe, tuple) and probe and probe[0] in _PROBE_KINDS:
        kind = probe[0]
        if kind == "left" and len(probe) == 2:
            m = np.asarray(probe[1], dtype=complex)
            return lambda x: m @ x
        if kind == "right" and len(probe) == 2:
            m = np.asarray(probe[1], dtype=complex)
            return lambda x: x @ m
        if kind == "entry" and len(probe) == 3:
            i, j = int(probe[1]), int(probe[2])
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"entry probe ({i}, {j}) out of range for dimension {dim}")
            return lambda x: x[i, j]
        if kind == "congruence" and len(probe) == 2:
            w = matrix_power(probe[1], -0.5)
            return lambda x: w @ x @ w
    raise ValueError(f"unsupported probe {probe!r}")


def bochner_linearity_defect(field: OperatorField, probe) -> float:
    """Defect |T(sum mu A) - sum mu T(A)| for a linear probe T.

    Supported probes: "trace", ("left", M), ("right", M), ("entry", i, j)
    and ("congruence", a) with a positive definite (applies
    a^(-1/2) X a^(-1/2)).  The two evaluation orders agree up to float
    summation error, which is what this functional measures.
    """
    apply = _resolve_probe(probe, field.dim)
    mu = field.group.haar_weight
    total = mu * field.values.sum(axis=0)
    left = apply(total)
    right = mu * sum(apply(field.values[i]) for i in range(field.group.order))
    diff = np.asarray(left) - np.asarray(right)
    return float(np.linalg.norm(diff.reshape(-1)))
