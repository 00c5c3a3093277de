"""Catalog of verifiable norm-inequality checks with structured reports.

Every check evaluates both sides of one displayed inequality and returns an
:class:`InequalityReport`; a failing check reports ratio > 1 rather than
raising, so campaigns can collect violations.  The main family compares the
dual-weighted q-th power sum of transform norms against the (q/p)-th power
of the Haar-weighted p-th power sum, with q = p/(p-1) conjugate to p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field, replace
from typing import Sequence

import numpy as np

from .schatten import WeightPair, matrix_power, schatten_norm, weighted_norm
from .transform import OperatorField, fourier_transform_fast

__all__ = [
    "InequalityReport",
    "conjugate_exponent",
    "check_main",
    "check_main_sup",
    "check_clarkson",
    "check_bhatia_kittaneh",
    "check_hausdorff_young",
    "check_weighted",
    "CLARKSON_VARIANTS",
]

TOL_DEFAULT = 1e-9


@dataclass(frozen=True)
class InequalityReport:
    """One verified inequality: lhs <= constant * rhs up to tolerance."""

    name: str
    p: float
    q: float
    lhs: float
    rhs: float
    constant: float
    ratio: float
    margin: float
    params: dict = dataclass_field(default_factory=dict)
    tol: float = TOL_DEFAULT

    @property
    def passed(self) -> bool:
        return self.ratio <= 1.0 + self.tol


def conjugate_exponent(p: float) -> float:
    """q = p/(p-1) computed in the widest native float; inf at p = 1."""
    p = float(p)
    if p < 1.0:
        raise ValueError(f"conjugate exponent needs p >= 1, got {p}")
    if p == 1.0:
        return math.inf
    wide = np.longdouble(p)
    return float(wide / (wide - 1))


def _report(name, p, q, lhs, rhs, constant, params, tol) -> InequalityReport:
    bound = constant * rhs
    if bound > 0.0:
        ratio = lhs / bound
    else:
        ratio = 0.0 if lhs == 0.0 else math.inf
    return InequalityReport(
        name=name,
        p=float(p),
        q=float(q),
        lhs=float(lhs),
        rhs=float(rhs),
        constant=float(constant),
        ratio=float(ratio),
        margin=float(bound - lhs),
        params=dict(params or {}),
        tol=float(tol),
    )


def _require_main_p(p: float) -> float:
    p = float(p)
    if not 1.0 < p <= 2.0:
        raise ValueError(
            f"exponent must satisfy 1 < p <= 2, got {p}; the p = 1 endpoint is the sup form"
        )
    return p


def check_main(field: OperatorField, p: float, *, tol: float = TOL_DEFAULT, params=None) -> InequalityReport:
    """Transform norm inequality: dual q-sum of ||B||_p^q vs (Haar p-sum)^(q/p).

    Equality holds at p = 2 (Parseval) and for fields supported on a single
    group element.
    """
    p = _require_main_p(p)
    q = conjugate_exponent(p)
    group = field.group
    dual = fourier_transform_fast(field)
    lhs = group.dual_weight * float(np.sum(np.asarray(schatten_norm(dual.values, p)) ** q))
    base = group.haar_weight * float(np.sum(np.asarray(schatten_norm(field.values, p)) ** p))
    rhs = base ** (q / p)
    return _report("main", p, q, lhs, rhs, 1.0, params, tol)


def check_main_sup(field: OperatorField, *, tol: float = TOL_DEFAULT, params=None) -> InequalityReport:
    """p = 1 endpoint: sup over characters of ||B||_1 vs the Haar sum of ||A||_1."""
    group = field.group
    dual = fourier_transform_fast(field)
    lhs = float(np.max(np.asarray(schatten_norm(dual.values, 1.0))))
    rhs = group.haar_weight * float(np.sum(np.asarray(schatten_norm(field.values, 1.0))))
    return _report("main_sup", 1.0, math.inf, lhs, rhs, 1.0, params, tol)


# Two-operator catalog.  Variant names encode the admissible p range:
#   upper_ge2 / lower_ge2   power-p bounds for p >= 2
#   upper_le2 / lower_le2   the reversed power-p bounds for 1 <= p <= 2
#   alt_ge2                 mixed-exponent bound with constant 2, p >= 2
#   dual_le2                conjugate-power bound with constant 2^(q-1), 1 < p <= 2
CLARKSON_VARIANTS = ("upper_ge2", "lower_ge2", "alt_ge2", "upper_le2", "lower_le2", "dual_le2")


def check_clarkson(a, b, p: float, variant: str, *, tol: float = TOL_DEFAULT, params=None) -> InequalityReport:
    """Two-operator norm inequalities for the pair (A + B, A - B)."""
    if variant not in CLARKSON_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {CLARKSON_VARIANTS}")
    p = float(p)
    if variant.endswith("ge2"):
        if p < 2.0:
            raise ValueError(f"variant {variant} requires p >= 2, got {p}")
    elif variant == "dual_le2":
        if not 1.0 < p <= 2.0:
            raise ValueError(f"variant {variant} requires 1 < p <= 2, got {p}")
    else:
        if not 1.0 <= p <= 2.0:
            raise ValueError(f"variant {variant} requires 1 <= p <= 2, got {p}")
    q = conjugate_exponent(p)
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    norm_plus = float(schatten_norm(a + b, p))
    norm_minus = float(schatten_norm(a - b, p))
    norm_a = float(schatten_norm(a, p))
    norm_b = float(schatten_norm(b, p))
    if variant == "upper_ge2":
        lhs = norm_plus**p + norm_minus**p
        rhs = norm_a**p + norm_b**p
        constant = 2.0 ** (p - 1)
    elif variant == "lower_ge2":
        lhs = 2.0 * (norm_a**p + norm_b**p)
        rhs = norm_plus**p + norm_minus**p
        constant = 1.0
    elif variant == "alt_ge2":
        lhs = norm_plus**p + norm_minus**p
        rhs = (norm_a**q + norm_b**q) ** (p / q)
        constant = 2.0
    elif variant == "upper_le2":
        lhs = norm_plus**p + norm_minus**p
        rhs = norm_a**p + norm_b**p
        constant = 2.0
    elif variant == "lower_le2":
        lhs = 2.0 ** (p - 1) * (norm_a**p + norm_b**p)
        rhs = norm_plus**p + norm_minus**p
        constant = 1.0
    else:  # dual_le2
        lhs = norm_plus**q + norm_minus**q
        rhs = (norm_a**p + norm_b**p) ** (q / p)
        constant = 2.0 ** (q - 1)
    return _report(f"clarkson_{variant}", p, q, lhs, rhs, constant, params, tol)


def check_bhatia_kittaneh(matrices: Sequence, p: float, *, tol: float = TOL_DEFAULT, params=None) -> InequalityReport:
    """n-tuple root-of-unity inequality: sum_k ||sum_j w^(jk) A_j||_p^q <= n (sum_j ||A_j||_p^p)^(q/p).

    Coincides with the main check on Z_n with counting measure after a
    factor-n normalization, since conjugating the characters only permutes
    the outer sum.
    """
    mats = [np.asarray(m, dtype=complex) for m in matrices]
    n = len(mats)
    if n < 2:
        raise ValueError(f"need at least two matrices, got {n}")
    p = _require_main_p(p)
    q = conjugate_exponent(p)
    stack = np.stack(mats)
    lhs = 0.0
    for k in range(n):
        phases = np.exp(2j * np.pi * ((np.arange(n) * k) % n) / n)
        combo = np.tensordot(phases, stack, axes=(0, 0))
        lhs += float(schatten_norm(combo, p)) ** q
    rhs = float(np.sum(np.asarray(schatten_norm(stack, p)) ** p)) ** (q / p)
    merged = {"n": n}
    merged.update(params or {})
    return _report("bhatia_kittaneh", p, q, lhs, rhs, float(n), merged, tol)


def check_hausdorff_young(field: OperatorField, p: float, *, tol: float = TOL_DEFAULT, params=None) -> InequalityReport:
    """Scalar special case of the main check; requires dimension 1."""
    if field.dim != 1:
        raise ValueError(f"scalar check requires dimension 1, got {field.dim}")
    report = check_main(field, p, tol=tol, params=params)
    return replace(report, name="hausdorff_young")


def check_weighted(
    field: OperatorField,
    p: float,
    a,
    b,
    t: float,
    direction: str,
    *,
    tol: float = TOL_DEFAULT,
    params=None,
) -> InequalityReport:
    """Weighted-norm transform inequality along the geometric-mean path.

    direction "a_to_gamma" bounds the gamma(t)-weighted dual sum by the
    a-weighted Haar sum; "gamma_to_a" swaps the two weight roles.  The
    operator-norm constant (||a^(1/2) b^-1 a^(1/2)|| or its a/b swap,
    raised to t) enters the q-th power form as constant^q.
    """
    if direction not in ("a_to_gamma", "gamma_to_a"):
        raise ValueError(f"unknown direction {direction!r}")
    p = _require_main_p(p)
    q = conjugate_exponent(p)
    pair = WeightPair(a, b, t)
    if pair.dimension != field.dim:
        raise ValueError(
            f"weight dimension {pair.dimension} does not match field dimension {field.dim}"
        )
    gamma = pair.gamma()
    if direction == "a_to_gamma":
        dual_w, base_w = gamma, pair.a
        kernel = matrix_power(pair.a, 0.5) @ matrix_power(pair.b, -1.0) @ matrix_power(pair.a, 0.5)
    else:
        dual_w, base_w = pair.a, gamma
        kernel = matrix_power(pair.b, 0.5) @ matrix_power(pair.a, -1.0) @ matrix_power(pair.b, 0.5)
    op_constant = float(schatten_norm(kernel, math.inf)) ** pair.t
    group = field.group
    dual = fourier_transform_fast(field)
    lhs = group.dual_weight * float(np.sum(np.asarray(weighted_norm(dual.values, dual_w, p)) ** q))
    base = group.haar_weight * float(np.sum(np.asarray(weighted_norm(field.values, base_w, p)) ** p))
    rhs = base ** (q / p)
    merged = {"direction": direction, "t": pair.t, "operator_constant": op_constant}
    merged.update(params or {})
    return _report(f"weighted_{direction}", p, q, lhs, rhs, op_constant**q, merged, tol)
