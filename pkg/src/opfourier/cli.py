"""Batch verification driver with machine-readable reports.

Subcommands run randomized campaigns of the inequality checks and emit a
JSON document (or flat CSV) of per-check reports.  Exit status: 0 when all
checks pass, 1 when a violation was found, 2 on usage or config errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import asdict, dataclass, field as dataclass_field
from datetime import datetime, timezone

import numpy as np

from .extremal import SearchConfig, maximize_ratio
from .groups import make_grid, make_padic, parse_group_spec
from .inequalities import (
    CLARKSON_VARIANTS,
    InequalityReport,
    check_bhatia_kittaneh,
    check_clarkson,
    check_main,
    check_main_sup,
    check_weighted,
)
from .sampling import complex_gaussian, random_field, random_spd, trial_rng
from .transform import OperatorField, parseval_defect

__all__ = ["Campaign", "CampaignEntry", "RunSummary", "run_verify", "run_extremal", "run_grid_demo", "main"]

SCHEMA_VERSION = 1
RATIO_TOL = 1e-9
DEFECT_TOL = 1e-10


@dataclass(frozen=True)
class CampaignEntry:
    group_spec: str
    p_values: tuple[float, ...]
    dim: int
    trials: int
    seed: int

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        for p in self.p_values:
            if p < 1.0:
                raise ValueError(f"p values must be >= 1, got {p}")


@dataclass(frozen=True)
class Campaign:
    entries: tuple[CampaignEntry, ...]
    tolerance: float = RATIO_TOL


@dataclass(frozen=True)
class RunSummary:
    total_checks: int
    pass_count: int
    worst_ratio: float
    worst_params: dict = dataclass_field(default_factory=dict)
    wall_time_s: float = 0.0


def _summarize(reports: list[InequalityReport], wall_time: float) -> RunSummary:
    worst_ratio = -math.inf
    worst_params: dict = {}
    for report in reports:
        if report.ratio > worst_ratio:
            worst_ratio = report.ratio
            worst_params = {"name": report.name, "p": report.p, **report.params}
    return RunSummary(
        total_checks=len(reports),
        pass_count=sum(1 for r in reports if r.passed),
        worst_ratio=worst_ratio if reports else 0.0,
        worst_params=worst_params,
        wall_time_s=wall_time,
    )


def run_verify(campaign: Campaign) -> tuple[RunSummary, list[InequalityReport]]:
    """Random-field main-inequality campaign; p = 1 entries use the sup form."""
    start = time.perf_counter()
    reports: list[InequalityReport] = []
    for entry in campaign.entries:
        group = parse_group_spec(entry.group_spec)
        for trial in range(entry.trials):
            rng = trial_rng(entry.seed, trial)
            field = random_field(group, entry.dim, rng)
            base_params = {
                "group": entry.group_spec,
                "d": entry.dim,
                "seed": entry.seed,
                "trial": trial,
            }
            for p in entry.p_values:
                if p == 1.0:
                    reports.append(check_main_sup(field, tol=campaign.tolerance, params=base_params))
                else:
                    reports.append(check_main(field, p, tol=campaign.tolerance, params=base_params))
    return _summarize(reports, time.perf_counter() - start), reports


def run_parseval(campaign: Campaign, defect_tol: float = DEFECT_TOL) -> tuple[RunSummary, list[InequalityReport]]:
    """Identity campaign: relative Parseval defect against a defect tolerance."""
    start = time.perf_counter()
    reports: list[InequalityReport] = []
    for entry in campaign.entries:
        group = parse_group_spec(entry.group_spec)
        for trial in range(entry.trials):
            rng = trial_rng(entry.seed, trial)
            field = random_field(group, entry.dim, rng)
            defect = parseval_defect(field)
            reports.append(
                InequalityReport(
                    name="parseval",
                    p=2.0,
                    q=2.0,
                    lhs=defect,
                    rhs=defect_tol,
                    constant=1.0,
                    ratio=defect / defect_tol,
                    margin=defect_tol - defect,
                    params={
                        "group": entry.group_spec,
                        "d": entry.dim,
                        "seed": entry.seed,
                        "trial": trial,
                        "defect_tol": defect_tol,
                    },
                    tol=campaign.tolerance,
                )
            )
    return _summarize(reports, time.perf_counter() - start), reports


def run_weighted(
    campaign: Campaign, t_values: tuple[float, ...]
) -> tuple[RunSummary, list[InequalityReport]]:
    """Weighted campaign: random SPD weight pairs, both weight directions."""
    start = time.perf_counter()
    reports: list[InequalityReport] = []
    for entry in campaign.entries:
        group = parse_group_spec(entry.group_spec)
        for trial in range(entry.trials):
            rng = trial_rng(entry.seed, trial)
            field = random_field(group, entry.dim, rng)
            a = random_spd(entry.dim, rng)
            b = random_spd(entry.dim, rng)
            base_params = {
                "group": entry.group_spec,
                "d": entry.dim,
                "seed": entry.seed,
                "trial": trial,
            }
            for p in entry.p_values:
                if p == 1.0:
                    raise ValueError("weighted checks require 1 < p <= 2")
                for t in t_values:
                    for direction in ("a_to_gamma", "gamma_to_a"):
                        reports.append(
                            check_weighted(
                                field, p, a, b, t, direction,
                                tol=campaign.tolerance, params=base_params,
                            )
                        )
    return _summarize(reports, time.perf_counter() - start), reports


def run_clarkson(
    campaign: Campaign, tuple_sizes: tuple[int, ...]
) -> tuple[RunSummary, list[InequalityReport]]:
    """Classical catalog campaign: two-operator variants plus n-tuple checks."""
    start = time.perf_counter()
    reports: list[InequalityReport] = []
    for entry in campaign.entries:
        for trial in range(entry.trials):
            rng = trial_rng(entry.seed, trial)
            a = complex_gaussian(rng, (entry.dim, entry.dim))
            b = complex_gaussian(rng, (entry.dim, entry.dim))
            base_params = {"d": entry.dim, "seed": entry.seed, "trial": trial}
            for p in entry.p_values:
                for variant in CLARKSON_VARIANTS:
                    if variant.endswith("ge2") and p < 2.0:
                        continue
                    if variant.endswith("le2") and p > 2.0:
                        continue
                    if variant == "dual_le2" and p == 1.0:
                        continue
                    reports.append(
                        check_clarkson(a, b, p, variant, tol=campaign.tolerance, params=base_params)
                    )
                if 1.0 < p <= 2.0:
                    for n in tuple_sizes:
                        mats = [complex_gaussian(rng, (entry.dim, entry.dim)) for _ in range(n)]
                        reports.append(
                            check_bhatia_kittaneh(mats, p, tol=campaign.tolerance, params=base_params)
                        )
    return _summarize(reports, time.perf_counter() - start), reports


def run_extremal(config: SearchConfig, tolerance: float = RATIO_TOL):
    """Run one search; see extremal.maximize_ratio."""
    start = time.perf_counter()
    result = maximize_ratio(config)
    wall = time.perf_counter() - start
    return result, wall


def _bump_field(model, dim: int, rng) -> OperatorField:
    """Smooth well-localized test field: Gaussian bump times a fixed matrix."""
    group = model.group
    n = model.dimension
    extent = model.points_per_axis * model.spacing
    center = 0.5 * extent
    sigma = extent / 8.0
    coords = group._residues * model.spacing
    profile = np.exp(-np.sum((coords - center) ** 2, axis=1) / (2.0 * sigma**2))
    matrix = complex_gaussian(rng, (dim, dim))
    values = profile[:, None, None] * matrix[None, :, :]
    return OperatorField(group, values)


def run_grid_demo(
    n: int,
    N_values: tuple[int, ...],
    h_values: tuple[float, ...],
    p: float,
    dim: int,
    seed: int,
    tolerance: float = RATIO_TOL,
) -> tuple[RunSummary, list[InequalityReport]]:
    """Exact grid checks across refinements, tracking the bump-field trajectory.

    Each refinement runs the main check once on a random field and once on
    the same smooth bump profile, whose lhs/rhs pair approaches the
    continuum transform-inequality values as h shrinks and N h grows.
    """
    if len(N_values) != len(h_values):
        raise ValueError("N and h refinement lists must have equal length")
    start = time.perf_counter()
    reports: list[InequalityReport] = []
    bump_rng = trial_rng(seed, 0)
    bump_matrix_rng = trial_rng(seed, 1)
    fixed_matrix = complex_gaussian(bump_matrix_rng, (dim, dim))
    del bump_rng
    for level, (N, h) in enumerate(zip(N_values, h_values)):
        model = make_grid(n, N, h)
        group = model.group
        extent = N * h
        center = 0.5 * extent
        sigma = extent / 8.0
        coords = group._residues * h
        profile = np.exp(-np.sum((coords - center) ** 2, axis=1) / (2.0 * sigma**2))
        bump = OperatorField(group, profile[:, None, None] * fixed_matrix[None, :, :])
        params = {"group": f"grid:n={n},N={N},h={h}", "d": dim, "seed": seed, "level": level}
        reports.append(check_main(bump, p, tol=tolerance, params={**params, "field": "bump"}))
        rng = trial_rng(seed, 2 + level)
        rand = random_field(group, dim, rng)
        reports.append(check_main(rand, p, tol=tolerance, params={**params, "field": "random"}))
    return _summarize(reports, time.perf_counter() - start), reports


def run_padic_demo(
    prime: int,
    m: int,
    M: int,
    p_values: tuple[float, ...],
    dim: int,
    trials: int,
    seed: int,
    tolerance: float = RATIO_TOL,
) -> tuple[RunSummary, list[InequalityReport]]:
    """Character-consistency panel plus main-inequality trials on a p-adic model."""
    start = time.perf_counter()
    model = make_padic(prime, m, M)
    group = model.group
    reports: list[InequalityReport] = []

    # Standard character against the cyclic pairing, all index pairs.
    worst = 0.0
    for j in range(model.modulus):
        element = group.element(j)
        for k in range(model.modulus):
            lhs = model.char_value(j, k)
            rhs = group.char_value(group.character(k), element)
            worst = max(worst, abs(lhs - rhs))
    reports.append(
        InequalityReport(
            name="padic_characters",
            p=2.0,
            q=2.0,
            lhs=worst,
            rhs=1e-12,
            constant=1.0,
            ratio=worst / 1e-12,
            margin=1e-12 - worst,
            params={"prime": prime, "m": m, "M": M},
            tol=tolerance,
        )
    )
    for trial in range(trials):
        rng = trial_rng(seed, trial)
        field = random_field(group, dim, rng)
        base_params = {"group": f"padic:p={prime},m={m},M={M}", "d": dim, "seed": seed, "trial": trial}
        for p in p_values:
            if p == 1.0:
                reports.append(check_main_sup(field, tol=tolerance, params=base_params))
            else:
                reports.append(check_main(field, p, tol=tolerance, params=base_params))
    return _summarize(reports, time.perf_counter() - start), reports


# -- serialization ----------------------------------------------------------


def _json_safe(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (np.floating, np.integer)):
        return _json_safe(value.item())
    return value


def report_document(description: dict, reports: list[InequalityReport], summary: RunSummary) -> dict:
    """JSON document; generated_at is the only nondeterministic field."""
    body = {
        "schema_version": SCHEMA_VERSION,
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "campaign": _json_safe(description),
        "reports": [
            _json_safe({**asdict(r), "passed": r.passed}) for r in reports
        ],
        "summary": _json_safe(
            {
                "total_checks": summary.total_checks,
                "pass_count": summary.pass_count,
                "worst_ratio": summary.worst_ratio,
                "worst_params": summary.worst_params,
            }
        ),
    }
    return body


CSV_COLUMNS = ["name", "group", "p", "q", "d", "seed", "lhs", "rhs", "constant", "ratio", "margin", "pass"]


def reports_to_csv(reports: list[InequalityReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [
                r.name,
                r.params.get("group", ""),
                repr(r.p),
                "inf" if math.isinf(r.q) else repr(r.q),
                r.params.get("d", ""),
                r.params.get("seed", ""),
                repr(r.lhs),
                repr(r.rhs),
                repr(r.constant),
                repr(r.ratio),
                repr(r.margin),
                r.passed,
            ]
        )
    return buf.getvalue()


def _emit(args, description: dict, reports: list[InequalityReport], summary: RunSummary) -> None:
    if args.out:
        if args.format == "csv":
            text = reports_to_csv(reports)
        else:
            text = json.dumps(report_document(description, reports, summary), indent=2, sort_keys=True) + "\n"
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    worst = summary.worst_params
    worst_desc = " ".join(f"{k}={v}" for k, v in worst.items())
    print(
        f"checks: {summary.total_checks}  passed: {summary.pass_count}  "
        f"worst ratio: {summary.worst_ratio:.6g} ({worst_desc})  wall: {summary.wall_time_s:.2f}s"
    )
    failed = summary.total_checks - summary.pass_count
    if failed:
        print(f"VIOLATIONS: {failed} check(s) exceeded tolerance", file=sys.stderr)
        for r in reports:
            if not r.passed:
                print(f"  {r.name} ratio={r.ratio!r} params={r.params}", file=sys.stderr)


def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ValueError(f"expected comma-separated numbers, got {text!r}") from None


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _add_common(parser: argparse.ArgumentParser, *, trials: int = 20) -> None:
    parser.add_argument("--group", default="Z2", help="group spec, e.g. Z4xZ3, Z2^5, padic:p=2,m=1,M=2, grid:n=1,N=64,h=0.125")
    parser.add_argument("--p", default="1.5", help="comma-separated exponents in [1, 2] (1 selects the sup form)")
    parser.add_argument("--dim", type=int, default=2, help="matrix dimension d")
    parser.add_argument("--trials", type=int, default=trials, help="number of random trials")
    parser.add_argument("--seed", type=int, default=0, help="campaign seed")
    parser.add_argument("--tol", type=float, default=None, help="pass tolerance override")
    parser.add_argument("--out", default=None, help="report file path")
    parser.add_argument("--format", choices=("json", "csv"), default="json", help="report file format")


def _campaign_from_args(args) -> Campaign:
    entry = CampaignEntry(
        group_spec=args.group,
        p_values=_parse_floats(args.p),
        dim=args.dim,
        trials=args.trials,
        seed=args.seed,
    )
    return Campaign(entries=(entry,), tolerance=args.tol if args.tol is not None else RATIO_TOL)


def _exit_code(summary: RunSummary) -> int:
    return 0 if summary.pass_count == summary.total_checks else 1


def _cmd_verify(args) -> int:
    campaign = _campaign_from_args(args)
    summary, reports = run_verify(campaign)
    _emit(args, {"command": "verify", "entries": [asdict(e) for e in campaign.entries]}, reports, summary)
    return _exit_code(summary)


def _cmd_parseval(args) -> int:
    campaign = _campaign_from_args(args)
    defect_tol = args.tol if args.tol is not None else DEFECT_TOL
    campaign = Campaign(entries=campaign.entries, tolerance=RATIO_TOL)
    summary, reports = run_parseval(campaign, defect_tol=defect_tol)
    _emit(args, {"command": "parseval", "entries": [asdict(e) for e in campaign.entries]}, reports, summary)
    return _exit_code(summary)


def _cmd_weighted(args) -> int:
    campaign = _campaign_from_args(args)
    t_values = _parse_floats(args.t)
    summary, reports = run_weighted(campaign, t_values)
    _emit(
        args,
        {"command": "weighted", "t": list(t_values), "entries": [asdict(e) for e in campaign.entries]},
        reports,
        summary,
    )
    return _exit_code(summary)


def _cmd_clarkson(args) -> int:
    campaign = _campaign_from_args(args)
    sizes = _parse_ints(args.tuple_sizes)
    summary, reports = run_clarkson(campaign, sizes)
    _emit(
        args,
        {"command": "clarkson", "tuple_sizes": list(sizes), "entries": [asdict(e) for e in campaign.entries]},
        reports,
        summary,
    )
    return _exit_code(summary)


def _cmd_extremal(args) -> int:
    p_values = _parse_floats(args.p)
    if len(p_values) != 1:
        raise ValueError("extremal search takes exactly one exponent")
    config = SearchConfig(
        group_spec=args.group,
        dim=args.dim,
        p=p_values[0],
        restarts=args.restarts,
        max_iters=args.iters,
        seed=args.seed,
    )
    tolerance = args.tol if args.tol is not None else RATIO_TOL
    result, wall = run_extremal(config, tolerance)
    print(
        f"best ratio: {result.best_ratio:.9f}  classification: {result.classification}  "
        f"iterations: {result.iterations}  wall: {wall:.2f}s"
    )
    if args.out:
        values = result.best_field.values
        doc = {
            "schema_version": SCHEMA_VERSION,
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "config": asdict(config),
            "best_ratio": result.best_ratio,
            "iterations": result.iterations,
            "classification": result.classification,
            "field_real": values.real.tolist(),
            "field_imag": values.imag.tolist(),
        }
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(doc, handle, indent=2, sort_keys=True)
            handle.write("\n")
    return 0 if result.best_ratio <= 1.0 + tolerance else 1


def _cmd_padic_demo(args) -> int:
    p_values = _parse_floats(args.p)
    tolerance = args.tol if args.tol is not None else RATIO_TOL
    summary, reports = run_padic_demo(
        args.prime, args.frac_depth, args.int_depth, p_values, args.dim, args.trials, args.seed, tolerance
    )
    _emit(
        args,
        {
            "command": "padic-demo",
            "prime": args.prime,
            "m": args.frac_depth,
            "M": args.int_depth,
        },
        reports,
        summary,
    )
    return _exit_code(summary)


def _cmd_grid_demo(args) -> int:
    p_values = _parse_floats(args.p)
    if len(p_values) != 1:
        raise ValueError("grid demo takes exactly one exponent")
    N_values = _parse_ints(args.points)
    h_values = _parse_floats(args.spacings)
    tolerance = args.tol if args.tol is not None else RATIO_TOL
    summary, reports = run_grid_demo(
        args.n, N_values, h_values, p_values[0], args.dim, args.seed, tolerance
    )
    for r in reports:
        if r.params.get("field") == "bump":
            print(
                f"N={r.params['group']}  lhs={r.lhs:.9g}  rhs={r.rhs:.9g}  ratio={r.ratio:.9g}"
            )
    _emit(
        args,
        {"command": "grid-demo", "n": args.n, "N": list(N_values), "h": list(h_values)},
        reports,
        summary,
    )
    return _exit_code(summary)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opfourier",
        description="Verify operator-valued Fourier norm inequalities on finite abelian groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="main inequality on random fields")
    _add_common(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_parseval = sub.add_parser("parseval", help="operator Parseval identity defects")
    _add_common(p_parseval)
    p_parseval.set_defaults(handler=_cmd_parseval)

    p_weighted = sub.add_parser("weighted", help="weighted-norm inequality, both directions")
    _add_common(p_weighted, trials=10)
    p_weighted.add_argument("--t", default="0,0.25,0.5,0.75,1", help="comma-separated path parameters in [0, 1]")
    p_weighted.set_defaults(handler=_cmd_weighted)

    p_clarkson = sub.add_parser("clarkson", help="two-operator and n-tuple classical checks")
    _add_common(p_clarkson, trials=50)
    p_clarkson.add_argument("--tuple-sizes", default="2,3,5", help="n values for the n-tuple check")
    p_clarkson.set_defaults(handler=_cmd_clarkson)

    p_extremal = sub.add_parser("extremal", help="search for near-extremal fields")
    _add_common(p_extremal)
    p_extremal.add_argument("--restarts", type=int, default=8)
    p_extremal.add_argument("--iters", type=int, default=250)
    p_extremal.set_defaults(handler=_cmd_extremal)

    p_padic = sub.add_parser("padic-demo", help="p-adic model characters and inequality trials")
    _add_common(p_padic)
    p_padic.add_argument("--prime", type=int, default=2)
    p_padic.add_argument("--frac-depth", type=int, default=1, help="fractional depth m")
    p_padic.add_argument("--int-depth", type=int, default=2, help="integer depth M")
    p_padic.set_defaults(handler=_cmd_padic_demo)

    p_grid = sub.add_parser("grid-demo", help="grid refinements toward the continuum statement")
    _add_common(p_grid)
    p_grid.add_argument("--n", type=int, default=1, help="grid dimension")
    p_grid.add_argument("--points", default="8,16,32", help="comma-separated N refinement values")
    p_grid.add_argument("--spacings", default="1.0,0.5,0.25", help="comma-separated h values, parallel to N")
    p_grid.set_defaults(handler=_cmd_grid_demo)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    raise SystemExit(main())
