#!/usr/bin/env python3
"""Run the full verification campaign and write a consolidated report.

Usage:
    python3 scripts/run_verification.py [--suite SUITE ...] [--n N]
        [--seed SEED] [--out PATH] [--format {json,csv}]

Without --suite the campaign covers every registered suite.  The exit code
is 3 when any proved claim FAILs, 0 otherwise.
"""

import argparse
import sys
import time

from kskit.verify import (
    SUITES,
    VerifyConfig,
    reports_to_csv,
    reports_to_json,
    run_suite,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", action="append", choices=sorted(SUITES), default=None)
    ap.add_argument("--n", type=int, default=20_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=str, default=None)
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    args = ap.parse_args()

    suites = args.suite or sorted(SUITES)
    cfg = VerifyConfig(seed=args.seed, n_samples=args.n)
    reports = []
    for suite in suites:
        t0 = time.perf_counter()
        batch = run_suite(suite, cfg)
        dt = time.perf_counter() - t0
        reports.extend(batch)
        statuses = ", ".join(f"{r.claim_id}={r.status}" for r in batch)
        print(f"[{suite}] {dt:.1f}s  {statuses}", file=sys.stderr)

    text = (
        reports_to_csv(reports)
        if args.format == "csv"
        else reports_to_json(reports, include_runtime=True)
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 3 if any(r.status == "FAIL" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
