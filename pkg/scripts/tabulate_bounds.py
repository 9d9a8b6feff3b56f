#!/usr/bin/env python3
"""Tabulate the closed-form hyperbolic bounds against exact values.

Produces a CSV with, per grid cell, the lower bound, the function value,
the upper bound, and the minimum inequality slack.  Useful for eyeballing
where the sandwiches are tight.

Usage:
    python3 scripts/tabulate_bounds.py [--family {survival,boundary,ml}]
        [--points N] [--out PATH]
"""

import argparse
import sys

import numpy as np
from scipy.special import gamma as _gamma

from kskit.ksfun import (
    KSParams,
    frechet_type_upper_bound,
    generalized_ml_bounds,
    ks_eval,
    mittag_leffler,
    weibull_type_bounds,
)
from kskit.mellin import ks_value_by_inversion


def _value(p: KSParams, x: float) -> float:
    lost = 1.4427 * x ** (1.0 / p.alpha) / p.m
    if lost < 200.0:
        return ks_eval(p, -x)
    return ks_value_by_inversion(p, x, step=0.1, rel_tol=1e-7)


def survival_rows(points):
    rows = []
    for a in np.linspace(0.15, 0.95, 5):
        for m in np.geomspace(0.4, 4.0, 5):
            a_, m_ = float(a), float(m)
            p = KSParams(a_, m_, m_ - 1.0)
            for x in np.geomspace(1e-3, 1e3, points):
                x = float(x)
                lo, up = weibull_type_bounds(a_, m_, x)
                v = _value(p, x)
                rows.append((a_, m_, x, lo, v, up, min(v - lo, up - v)))
    return rows


def boundary_rows(points):
    rows = []
    for a in np.linspace(0.15, 0.95, 5):
        for m in np.geomspace(0.4, 4.0, 5):
            a_, m_ = float(a), float(m)
            p = KSParams(a_, m_, m_ - 1.0 / a_)
            for x in np.geomspace(1e-3, 1e3, points):
                x = float(x)
                up = frechet_type_upper_bound(a_, m_, x)
                v = _value(p, x)
                rows.append((a_, m_, x, float("nan"), v, up, up - v))
    return rows


def ml_rows(points):
    rows = []
    for a in np.linspace(0.2, 0.9, 5):
        a_ = float(a)
        for beta in (a_, a_ + 0.5, a_ + 1.5):
            p = KSParams(a_, 1.0, (beta - 1.0) / a_)
            for x in np.geomspace(1e-3, 1e3, points):
                x = float(x)
                lo, up = generalized_ml_bounds(a_, beta, x)
                # Gamma(beta) times the two-parameter function equals the
                # three-parameter profile at m = 1, l = (beta-1)/alpha
                v = _value(p, x)
                rows.append((a_, beta, x, lo, v, up, min(v - lo, up - v)))
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=("survival", "boundary", "ml"), default="survival")
    ap.add_argument("--points", type=int, default=9)
    ap.add_argument("--out", type=str, default=None)
    args = ap.parse_args()

    rows = {
        "survival": survival_rows,
        "boundary": boundary_rows,
        "ml": ml_rows,
    }[args.family](args.points)
    header = {
        "survival": "alpha,m,x,lower,value,upper,slack",
        "boundary": "alpha,m,x,lower,value,upper,slack",
        "ml": "alpha,beta,x,lower,value,upper,slack",
    }[args.family]
    text = header + "\n" + "\n".join(",".join(repr(v) for v in r) for r in rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {args.out} ({len(rows)} rows)", file=sys.stderr)
    else:
        sys.stdout.write(text)
    worst = min(r[-1] for r in rows)
    print(f"# worst slack: {worst:.3e}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
