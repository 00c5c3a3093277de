"""Shared independent oracles for the test suite.

These deliberately avoid the library's own computation paths: characters
are evaluated through unreduced floating phases with cmath, transforms by
pure double loops, and singular values through LAPACK's SVD instead of the
Hermitian eigenproblem used by the package.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np


def char_oracle(factors, dual_residues, residues) -> complex:
    """Character value from the raw phase sum, no integer reduction."""
    phase = sum(m * r / n for m, r, n in zip(dual_residues, residues, factors))
    return cmath.exp(2j * cmath.pi * phase)


def dft_oracle(group, values) -> np.ndarray:
    """Transform by an explicit double loop over characters and elements."""
    values = np.asarray(values, dtype=complex)
    out = np.zeros_like(values)
    for k in range(group.order):
        dual = group.character(k).dual_residues
        for j in range(group.order):
            elem = group.element(j).residues
            z = char_oracle(group.factors, dual, elem)
            out[k] += values[j] * z.conjugate()
    return group.haar_weight * out


def svd_schatten_norm(x, p) -> float:
    """Schatten norm through numpy's SVD route."""
    s = np.linalg.svd(np.asarray(x, dtype=complex), compute_uv=False)
    if p == np.inf:
        return float(s.max())
    return float((s**p).sum() ** (1.0 / p))


def frac_part_brute(x: Fraction, p: int) -> Fraction:
    """p-adic fractional part by exhaustive search over candidates c/p^g.

    The fractional part is the unique c/p^g in [0, 1) whose difference from
    x has denominator coprime to p.
    """
    x = Fraction(x)
    den = x.denominator
    gamma = 0
    while den % p == 0:
        den //= p
        gamma += 1
    pg = p**gamma
    for c in range(pg):
        if ((x - Fraction(c, pg)).denominator) % p != 0:
            return Fraction(c, pg)
    raise AssertionError("no fractional part found")
