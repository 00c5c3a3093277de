"""Finite abelian groups with paired Haar and dual (Plancherel) weights.

A group is a product of cyclic factors Z_{n_1} x ... x Z_{n_k} carrying the
Haar measure ``haar_weight * counting``.  Its dual is again a product of the
same cyclic factors; the dual weight ``1 / (haar_weight * |G|)`` is the one
normalization for which Fourier inversion holds exactly (see
:func:`inversion_defect`).  Concrete constructors cover plain cyclic
products, truncated p-adic quotients and uniform grids on the real line.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "FiniteAbelianGroup",
    "GroupElement",
    "Character",
    "PAdicModel",
    "GridModel",
    "make_group",
    "make_padic",
    "make_grid",
    "char_eval",
    "inversion_defect",
    "frac_part",
    "padic_fractional_part",
    "parse_group_spec",
]


@dataclass(frozen=True)
class GroupElement:
    """Element of a cyclic product, one residue per factor."""

    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", tuple(int(r) for r in self.residues))


@dataclass(frozen=True)
class Character:
    """Dual-group element, one dual residue per factor."""

    dual_residues: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dual_residues", tuple(int(r) for r in self.dual_residues))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups with a uniform Haar weight per element.

    Elements and characters are enumerated in mixed-radix C order (last
    factor varies fastest), which is also the axis order used by the FFT
    path of the operator transform.
    """

    factors: tuple[int, ...]
    haar_weight: float = 1.0

    def __post_init__(self) -> None:
        factors = tuple(int(n) for n in self.factors)
        if any(n < 1 for n in factors):
            raise ValueError(f"cyclic factors must all be >= 1, got {factors}")
        weight = float(self.haar_weight)
        if not math.isfinite(weight) or weight <= 0.0:
            raise ValueError(f"haar_weight must be positive and finite, got {weight}")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "haar_weight", weight)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def dual_weight(self) -> float:
        """Dual Haar weight forced by exact Fourier inversion."""
        return 1.0 / (self.haar_weight * self.order)

    # -- enumeration ---------------------------------------------------

    @cached_property
    def _residues(self) -> np.ndarray:
        table = np.array(list(np.ndindex(*self.factors)), dtype=np.int64)
        return table.reshape(self.order, len(self.factors))

    @cached_property
    def _strides(self) -> np.ndarray:
        strides = np.ones(len(self.factors), dtype=np.int64)
        for i in range(len(self.factors) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.factors[i + 1]
        return strides

    def element(self, index: int) -> GroupElement:
        return GroupElement(tuple(self._residues[index]))

    def character(self, index: int) -> Character:
        return Character(tuple(self._residues[index]))

    def elements(self) -> Iterator[GroupElement]:
        for index in range(self.order):
            yield self.element(index)

    def characters(self) -> Iterator[Character]:
        for index in range(self.order):
            yield self.character(index)

    def _check_residues(self, residues: tuple[int, ...], kind: str) -> None:
        if len(residues) != len(self.factors):
            raise ValueError(f"{kind} has {len(residues)} residues, expected {len(self.factors)}")
        for r, n in zip(residues, self.factors):
            if not 0 <= r < n:
                raise ValueError(f"{kind} residue {r} out of range [0, {n})")

    def index_of(self, element: GroupElement) -> int:
        self._check_residues(element.residues, "element")
        return int(np.dot(np.asarray(element.residues, dtype=np.int64), self._strides))

    def char_index_of(self, character: Character) -> int:
        self._check_residues(character.dual_residues, "character")
        return int(np.dot(np.asarray(character.dual_residues, dtype=np.int64), self._strides))

    def indices_of(self, residue_array: np.ndarray) -> np.ndarray:
        """Flat indices of a (count, k) array of residue rows."""
        return np.asarray(residue_array, dtype=np.int64) @ self._strides

    # -- group law -----------------------------------------------------

    def identity(self) -> GroupElement:
        return GroupElement((0,) * len(self.factors))

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        self._check_residues(x.residues, "element")
        self._check_residues(y.residues, "element")
        return GroupElement(tuple((a + b) % n for a, b, n in zip(x.residues, y.residues, self.factors)))

    def negate(self, x: GroupElement) -> GroupElement:
        self._check_residues(x.residues, "element")
        return GroupElement(tuple((-a) % n for a, n in zip(x.residues, self.factors)))

    # -- characters ----------------------------------------------------
    #
    # Character values are exact roots of unity: the phase is reduced as an
    # integer numerator modulo lcm(factors) before exponentiation, so that
    # |xi(theta)| = 1 to machine precision on every group.

    @cached_property
    def _phase_lcm(self) -> int:
        return math.lcm(*self.factors) if self.factors else 1

    @cached_property
    def _phase_mult(self) -> np.ndarray:
        return np.array([self._phase_lcm // n for n in self.factors], dtype=np.int64)

    def char_phases(self, character: Character) -> np.ndarray:
        """Integer numerators k with xi(theta) = exp(2*pi*i*k/L), one per element."""
        self._check_residues(character.dual_residues, "character")
        m = np.asarray(character.dual_residues, dtype=np.int64)
        return (self._residues @ (m * self._phase_mult)) % self._phase_lcm

    def char_values(self, character: Character) -> np.ndarray:
        """Values of one character over all group elements, in element order."""
        phases = self.char_phases(character)
        return np.exp(2j * np.pi * phases / self._phase_lcm)

    def char_value(self, character: Character, element: GroupElement) -> complex:
        self._check_residues(character.dual_residues, "character")
        self._check_residues(element.residues, "element")
        num = sum(
            m * r * mult
            for m, r, mult in zip(character.dual_residues, element.residues, self._phase_mult)
        )
        return complex(np.exp(2j * np.pi * (num % self._phase_lcm) / self._phase_lcm))

    def character_table(self) -> np.ndarray:
        """Full (|G^|, |G|) table T[k, j] = xi_k(theta_j); O(|G|^2) memory."""
        scaled = self._residues * self._phase_mult
        phases = (scaled @ self._residues.T) % self._phase_lcm
        return np.exp(2j * np.pi * phases / self._phase_lcm)


def make_group(factors: Sequence[int], haar_weight: float = 1.0) -> FiniteAbelianGroup:
    """Build the cyclic product with the given Haar weight per element."""
    return FiniteAbelianGroup(tuple(factors), haar_weight)


def char_eval(group: FiniteAbelianGroup, character: Character, element: GroupElement) -> complex:
    """Evaluate one character at one element; unit modulus, multiplicative."""
    return group.char_value(character, element)


def inversion_defect(group: FiniteAbelianGroup, values: Sequence[complex]) -> float:
    """Max pointwise error of transform-then-invert for a scalar field.

    Computes f^(xi) = sum_theta mu f conj(xi) and reconstructs
    sum_xi nu f^ xi by direct double sums.  A defect at roundoff level
    certifies that the dual weight is normalized correctly.
    """
    f = np.asarray(values, dtype=complex).reshape(-1)
    if f.size != group.order:
        raise ValueError(f"field has {f.size} values, expected {group.order}")
    table = group.character_table()
    fhat = group.haar_weight * (table.conj() @ f)
    recon = group.dual_weight * (table.T @ fhat)
    return float(np.max(np.abs(f - recon)))


# -- truncated p-adic quotients -----------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


_ENUMERATION_BUDGET = 1 << 20


@dataclass(frozen=True)
class PAdicModel:
    """Finite quotient p^{-m} Z_p / p^M Z_p realized as Z_{p^(m+M)}.

    Element index j stands for the exact rational x = j * p^(-m), with
    arithmetic modulo p^M.  The Haar weight p^(-M) gives the unit-ball
    block total measure one; total measure of the model is p^m.
    """

    prime: int
    depth_neg: int  # m: finest fractional scale prime**-depth_neg
    depth_pos: int  # M: coarsest integer scale prime**depth_pos

    def __post_init__(self) -> None:
        if not _is_prime(int(self.prime)):
            raise ValueError(f"prime must be a prime number, got {self.prime}")
        if self.depth_neg < 0 or self.depth_pos < 0:
            raise ValueError("depths must be nonnegative")
        if self.prime ** (self.depth_neg + self.depth_pos) > _ENUMERATION_BUDGET:
            raise ValueError("model too large to enumerate")

    @property
    def modulus(self) -> int:
        return self.prime ** (self.depth_neg + self.depth_pos)

    @cached_property
    def group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup((self.modulus,), float(self.prime) ** (-self.depth_pos))

    @property
    def total_measure(self) -> float:
        return float(self.prime) ** self.depth_neg

    def element_value(self, index: int) -> Fraction:
        """Rational represented by the element with the given index."""
        if not 0 <= index < self.modulus:
            raise ValueError(f"index {index} out of range [0, {self.modulus})")
        return Fraction(index, self.prime**self.depth_neg)

    def dual_value(self, index: int) -> Fraction:
        """Rational represented by the dual element with the given index."""
        if not 0 <= index < self.modulus:
            raise ValueError(f"index {index} out of range [0, {self.modulus})")
        return Fraction(index, self.prime**self.depth_pos)

    def frac_part(self, index: int) -> Fraction:
        return padic_fractional_part(self.element_value(index), self.prime)

    def char_value(self, element_index: int, dual_index: int) -> complex:
        """Standard character exp(2*pi*i*{x*xi}_p) under the index pairing."""
        x = self.element_value(element_index) * self.dual_value(dual_index)
        t = padic_fractional_part(x, self.prime)
        return complex(np.exp(2j * np.pi * float(t)))


def padic_fractional_part(x: Fraction, p: int) -> Fraction:
    """Sum of the negative-power digits of the base-p expansion, in [0, 1).

    Zero whenever x is a p-adic integer (denominator coprime to p).
    """
    x = Fraction(x)
    den = x.denominator
    gamma = 0
    while den % p == 0:
        den //= p
        gamma += 1
    if gamma == 0:
        return Fraction(0)
    pg = p**gamma
    c = (x.numerator * pow(den, -1, pg)) % pg
    return Fraction(c, pg)


def make_padic(p: int, m: int, M: int) -> PAdicModel:
    """Truncated p-adic model with fractional depth m and integer depth M."""
    return PAdicModel(int(p), int(m), int(M))


def frac_part(model: PAdicModel, element_index: int) -> Fraction:
    """p-adic fractional part of the rational represented by the element."""
    return model.frac_part(element_index)


# -- uniform real-line grids ---------------------------------------------


@dataclass(frozen=True)
class GridModel:
    """Uniform n-dimensional grid (Z_N)^n with cell volume h^n as Haar weight.

    The induced dual weight 1/(N h)^n matches the continuum dual-measure
    convention as the grid is refined, so inequality checks on the grid
    are exact finite-group statements rather than quadrature estimates.
    """

    dimension: int
    points_per_axis: int
    spacing: float

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")
        if self.points_per_axis < 1:
            raise ValueError(f"points_per_axis must be >= 1, got {self.points_per_axis}")
        if not math.isfinite(self.spacing) or self.spacing <= 0:
            raise ValueError(f"spacing must be positive, got {self.spacing}")

    @cached_property
    def group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(
            (self.points_per_axis,) * self.dimension,
            float(self.spacing) ** self.dimension,
        )

    @property
    def dual_weight(self) -> float:
        return self.group.dual_weight

    def coordinates(self, index: int) -> np.ndarray:
        """Physical coordinates of a grid point, componentwise residue * h."""
        return self.group._residues[index] * float(self.spacing)


def make_grid(n: int, N: int, h: float) -> GridModel:
    """Grid model: n axes, N points per axis, spacing h."""
    return GridModel(int(n), int(N), float(h))


# -- spec strings ----------------------------------------------------------

_CYCLIC_TOKEN = re.compile(r"[zZ](\d+)(?:\^(\d+))?$")


def _parse_params(text: str, schema: dict, spec: str) -> dict:
    out = {}
    for item in text.split(","):
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or key not in schema:
            raise ValueError(f"unrecognized group spec {spec!r}")
        try:
            out[key] = schema[key](raw.strip())
        except ValueError:
            raise ValueError(f"bad value for {key!r} in group spec {spec!r}") from None
    missing = set(schema) - set(out)
    if missing:
        raise ValueError(f"group spec {spec!r} missing keys {sorted(missing)}")
    return out


def parse_group_spec(spec: str) -> FiniteAbelianGroup:
    """Parse a group description string.

    Grammar (keywords case-insensitive, parameter keys case-sensitive):

    * cyclic products:           ``Z4xZ3``, ``Z2^5``, ``Z6``
    * truncated p-adic quotient: ``padic:p=2,m=1,M=2``
    * real-line grid:            ``grid:n=1,N=64,h=0.125``

    Plain cyclic products get Haar weight 1 (counting measure); the model
    forms carry their own canonical weights.
    """
    s = spec.strip()
    if not s:
        raise ValueError("empty group spec")
    head, sep, tail = s.partition(":")
    if sep and head.lower() == "padic":
        kv = _parse_params(tail, {"p": int, "m": int, "M": int}, spec)
        return make_padic(kv["p"], kv["m"], kv["M"]).group
    if sep and head.lower() == "grid":
        kv = _parse_params(tail, {"n": int, "N": int, "h": float}, spec)
        return make_grid(kv["n"], kv["N"], kv["h"]).group
    if sep:
        raise ValueError(f"unrecognized group spec {spec!r}")
    factors: list[int] = []
    for token in re.split(r"[xX]", s):
        m = _CYCLIC_TOKEN.match(token.strip())
        if m is None:
            raise ValueError(f"unrecognized group spec {spec!r}")
        n = int(m.group(1))
        count = int(m.group(2) or 1)
        factors.extend([n] * count)
    return make_group(factors)
