"""Search for near-extremal fields of the main transform inequality.

The ratio of the two sides is scale invariant, so the search ascends the
unit sphere of the Haar-weighted Frobenius energy using central-difference
gradients.  Known equality configurations are fields supported on a single
group element (any admissible p) and arbitrary fields at p = 2; the
classifier tags anything else for manual inspection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import FiniteAbelianGroup, parse_group_spec
from .inequalities import conjugate_exponent
from .sampling import trial_rng
from .schatten import schatten_norm
from .transform import OperatorField

__all__ = ["SearchConfig", "SearchResult", "ratio_objective", "maximize_ratio", "classify_extremal"]

FD_STEP = 1e-6  # central-difference step, relative to parameter scale
DELTA_MASS_FRACTION = 1e-3
STALL_LIMIT = 5


@dataclass(frozen=True)
class SearchConfig:
    """Budget and schedule for one multi-restart ascent."""

    group_spec: str
    dim: int
    p: float
    restarts: int = 8
    max_iters: int = 500
    step_init: float = 0.25
    step_decay: float = 0.5
    tolerance: float = 1e-7
    seed: int = 0

    def __post_init__(self) -> None:
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not 0 < self.step_decay < 1:
            raise ValueError(f"step_decay must lie in (0, 1), got {self.step_decay}")


@dataclass(frozen=True, eq=False)
class SearchResult:
    """Best ratio found, the field achieving it, and its classification.

    restart_outcomes keeps the (ratio, classification) pair of every
    restart, so equality configurations that lose the merge (for example
    character-modulated constants, which are deltas on the dual side and
    classify as "other") remain visible.
    """

    config: SearchConfig
    best_ratio: float
    best_field: OperatorField
    iterations: int
    classification: str
    restart_outcomes: tuple[tuple[float, str], ...] = ()


def _objective_factory(group: FiniteAbelianGroup, dim: int, p: float):
    """Callable mapping flat real parameters to the main-inequality ratio."""
    q = conjugate_exponent(p)
    mu = group.haar_weight
    nu = group.dual_weight
    count = group.order
    axes = tuple(range(len(group.factors)))
    shape = group.factors + (dim, dim)

    def objective(x: np.ndarray) -> float:
        half = x.size // 2
        values = (x[:half] + 1j * x[half:]).reshape(count, dim, dim)
        if axes:
            spectrum = np.fft.fftn(values.reshape(shape), axes=axes).reshape(count, dim, dim) * mu
        else:
            spectrum = values * mu
        lhs = nu * float(np.sum(np.asarray(schatten_norm(spectrum, p)) ** q))
        base = mu * float(np.sum(np.asarray(schatten_norm(values, p)) ** p))
        if base == 0.0:
            raise ValueError("objective is undefined for the zero field")
        return lhs / base ** (q / p)

    return objective


def _field_to_params(values: np.ndarray) -> np.ndarray:
    flat = values.reshape(-1)
    return np.concatenate([flat.real, flat.imag])


def ratio_objective(field: OperatorField, p: float) -> float:
    """Main-inequality ratio of a nonzero field; invariant under field scaling."""
    if not np.any(field.values):
        raise ValueError("objective is undefined for the zero field")
    objective = _objective_factory(field.group, field.dim, p)
    return objective(_field_to_params(field.values))


def classify_extremal(field: OperatorField, p: float) -> str:
    """Tag a near-extremal field: delta-like, parseval-p2, or other."""
    mass = np.sum(np.abs(field.values) ** 2, axis=(1, 2))
    total = float(mass.sum())
    if total > 0.0 and float(mass.max()) >= (1.0 - DELTA_MASS_FRACTION) * total:
        return "delta-like"
    if abs(float(p) - 2.0) <= 1e-9:
        return "parseval-p2"
    return "other"


def _central_gradient(objective, x: np.ndarray) -> np.ndarray:
    grad = np.empty_like(x)
    for i in range(x.size):
        h = FD_STEP * (1.0 + abs(x[i]))
        orig = x[i]
        x[i] = orig + h
        f_plus = objective(x)
        x[i] = orig - h
        f_minus = objective(x)
        x[i] = orig
        grad[i] = (f_plus - f_minus) / (2.0 * h)
    return grad


def maximize_ratio(config: SearchConfig) -> SearchResult:
    """Multi-restart projected gradient ascent of the main-inequality ratio.

    Deterministic given the config: restart r draws from trial_rng(seed, r).
    Merge rule: the highest ratio wins; restarts whose ratios agree with the
    maximum within the convergence tolerance count as tied, and ties break
    first toward a delta-classified field (the analytically known maximizer
    family) and then toward the lowest restart index.  Non-ascent steps are
    accepted up to a stall limit before the step is shrunk, which rides out
    the non-smoothness of repeated singular values.
    """
    group = parse_group_spec(config.group_spec)
    objective = _objective_factory(group, config.dim, config.p)
    n_params = 2 * group.order * config.dim**2
    radius = 1.0 / np.sqrt(group.haar_weight)  # unit Haar-weighted energy

    candidates: list[tuple[float, str, np.ndarray]] = []
    total_iters = 0
    for restart in range(config.restarts):
        rng = trial_rng(config.seed, restart)
        x = rng.standard_normal(n_params)
        if restart % 2 == 1:
            x = x**3  # heavy-tailed start, covers concentrated basins
        x *= radius / np.linalg.norm(x)
        current = objective(x)
        local_best_x, local_best = x.copy(), current
        step = config.step_init
        stall = 0
        iters = 0
        while (
            iters < config.max_iters
            and step >= config.tolerance
            and local_best < 1.0 - config.tolerance
        ):
            iters += 1
            grad = _central_gradient(objective, x)
            unit = x / np.linalg.norm(x)
            grad -= np.dot(grad, unit) * unit
            grad_norm = np.linalg.norm(grad)
            if grad_norm == 0.0:
                break
            candidate = x + (step * radius) * (grad / grad_norm)
            candidate *= radius / np.linalg.norm(candidate)
            value = objective(candidate)
            x = candidate
            if value > local_best:
                local_best = value
                local_best_x = candidate.copy()
                stall = 0
            else:
                stall += 1
                if stall > STALL_LIMIT:
                    step *= config.step_decay
                    stall = 0
                    x = local_best_x.copy()
        total_iters += iters
        tag = classify_extremal(_params_to_field(group, config.dim, local_best_x), config.p)
        candidates.append((local_best, tag, local_best_x))

    top = max(value for value, _, _ in candidates)
    tied = [cand for cand in candidates if cand[0] >= top - config.tolerance]
    winner = next((cand for cand in tied if cand[1] == "delta-like"), tied[0])
    field = _params_to_field(group, config.dim, winner[2])
    return SearchResult(
        config=config,
        best_ratio=float(winner[0]),
        best_field=field,
        iterations=total_iters,
        classification=winner[1],
        restart_outcomes=tuple((float(v), t) for v, t, _ in candidates),
    )


def _params_to_field(group: FiniteAbelianGroup, dim: int, x: np.ndarray) -> OperatorField:
    half = x.size // 2
    values = (x[:half] + 1j * x[half:]).reshape(group.order, dim, dim)
    return OperatorField(group, values)
