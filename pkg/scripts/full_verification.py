#!/usr/bin/env python3
"""Run the full verification campaign across the standard group matrix.

Writes one JSON report per subcommand-equivalent stage (main inequality,
Parseval defects, weighted checks) plus a flat CSV of every report row.
"""

import argparse
import json
import sys
from pathlib import Path

from opfourier.cli import (
    Campaign,
    CampaignEntry,
    report_document,
    reports_to_csv,
    run_parseval,
    run_verify,
    run_weighted,
)

GROUPS = ["Z2", "Z3", "Z8", "Z4xZ3", "Z2^4", "padic:p=2,m=1,M=2", "grid:n=1,N=16,h=0.5"]
P_VALUES = (1.1, 1.25, 1.5, 1.75, 2.0)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=25, help="trials per group and dimension")
    parser.add_argument("--dims", default="1,2,4", help="comma-separated matrix dimensions")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--outdir", default="results", help="output directory")
    args = parser.parse_args()

    dims = [int(tok) for tok in args.dims.split(",")]
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    entries = tuple(
        CampaignEntry(group_spec=g, p_values=P_VALUES, dim=d, trials=args.trials, seed=args.seed)
        for g in GROUPS
        for d in dims
    )
    campaign = Campaign(entries=entries)

    all_reports = []
    failures = 0
    for label, runner in [
        ("verify", run_verify),
        ("parseval", run_parseval),
        ("weighted", lambda c: run_weighted(c, (0.0, 0.5, 1.0))),
    ]:
        summary, reports = runner(campaign)
        all_reports.extend(reports)
        failures += summary.total_checks - summary.pass_count
        doc = report_document({"stage": label, "groups": GROUPS, "dims": dims}, reports, summary)
        path = outdir / f"{label}.json"
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        print(
            f"{label}: {summary.pass_count}/{summary.total_checks} passed, "
            f"worst ratio {summary.worst_ratio:.6g}, {summary.wall_time_s:.1f}s -> {path}"
        )

    csv_path = outdir / "all_reports.csv"
    csv_path.write_text(reports_to_csv(all_reports))
    print(f"flat table: {csv_path} ({len(all_reports)} rows)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
