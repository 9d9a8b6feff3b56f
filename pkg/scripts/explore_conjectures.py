#!/usr/bin/env python3
"""Margin tables for the three open-question campaigns.

For each cell of a parameter grid the script prints the relative slack of
the conjectured inequality (positive = inequality holds with that much
room).  Everything is deterministic under --seed.

Usage:
    python3 scripts/explore_conjectures.py [--seed SEED] [--out PREFIX]
"""

import argparse
import math
import sys

import numpy as np

from kskit.gammakit import default_context, log_barnes_g
from kskit.ksfun import KSParams, ks_eval, le_roy, mittag_leffler
from kskit.mellin import ks_value_by_inversion
from kskit.stochastic import substream
from scipy.special import gamma as _gamma


def _survival(p: KSParams, x: float) -> float:
    # series while cancellation is cheap, coarse Mellin inversion beyond
    lost = 1.4427 * x ** (1.0 / p.alpha) / p.m
    if lost < 200.0:
        return ks_eval(p, -x)
    return ks_value_by_inversion(p, x, step=0.1, rel_tol=1e-7)


def boundary_lower_bound_table():
    """Conjectured algebraic lower bound on the boundary profile."""
    rows = []
    for a in (0.1, 0.25, 0.5, 0.75, 0.9):
        for m in (0.25, 0.5, 1.0, 2.0, 4.0):
            d = a * m
            if d < 0.05:
                continue
            ctx = default_context(d)
            c = d ** (-a / (m + 1.0)) * (
                _gamma(1 + a)
                * math.exp(log_barnes_g(1 - a, ctx) + log_barnes_g(1 + a, ctx))
            ) ** (-m / (m + 1.0))
            p = KSParams(a, m, m - 1.0 / a)
            for x in np.geomspace(1e-2, min(1e2, (650 * m) ** a), 8):
                x = float(x)
                val = _survival(p, x)
                lo = (1.0 + c * x) ** (-1.0 - 1.0 / m)
                rows.append((a, m, x, (val - lo) / val))
    return rows


def interior_sandwich_table(seed: int):
    """Conjectured hyperbolic sandwich strictly inside the CM region."""
    rng = substream(seed, 401)
    rows = []
    for _ in range(12):
        a = float(rng.uniform(0.25, 0.95))
        m = float(rng.uniform(0.3, 3.0))
        lo_l, hi_l = m - 1.0 / a, m
        l = float(lo_l + (hi_l - lo_l) * rng.uniform(0.1, 0.95))
        p = KSParams(a, m, l)
        c_lo = _gamma(1 + a * (l - m)) / _gamma(1 + a * (l - m + 1))
        c_hi = _gamma(1 + a * l) / _gamma(1 + a * (1 + l))
        for x in np.geomspace(1e-2, min(1e2, (650 * m) ** a), 8):
            x = float(x)
            val = _survival(p, x)
            margin = min(
                (val - 1.0 / (1.0 + c_lo * x)) / val,
                (1.0 / (1.0 + c_hi * x) - val) / val,
            )
            rows.append((a, m, l, x, margin))
    return rows


def ml_monotonicity_table():
    """Is the classical function non-increasing in its index?

    Spoiler found by this campaign: not for small index and small positive
    argument (the index-zero limit 1/(1-x) is undercut near index ~0.1).
    """
    rows = []
    a_min = {-20.0: 0.55, -5.0: 0.35, -1.0: 0.0, 0.2: 0.0, 0.8: 0.0, 2.0: 0.15}
    for x, amin in a_min.items():
        alphas = np.linspace(amin, 1.0, 25)
        vals = [
            le_roy(0.0, x) if a == 0 and x < 1 else mittag_leffler(float(a), 1.0, x)
            for a in alphas
        ]
        for i in range(len(vals) - 1):
            rows.append(
                (x, float(alphas[i]), float(alphas[i + 1]), vals[i] - vals[i + 1])
            )
    return rows


def _emit(name, header, rows, prefix):
    text = header + "\n" + "\n".join(",".join(repr(v) for v in r) for r in rows) + "\n"
    if prefix:
        path = f"{prefix}_{name}.csv"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {path} ({len(rows)} rows)", file=sys.stderr)
    else:
        print(f"# {name}")
        sys.stdout.write(text)
    worst = min(r[-1] for r in rows)
    print(f"# {name}: worst margin {worst:.3e}", file=sys.stderr)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=str, default=None, help="output file prefix")
    args = ap.parse_args()

    _emit(
        "boundary_lower_bound",
        "alpha,m,x,rel_margin",
        boundary_lower_bound_table(),
        args.out,
    )
    _emit(
        "interior_sandwich",
        "alpha,m,l,x,rel_margin",
        interior_sandwich_table(args.seed),
        args.out,
    )
    _emit(
        "index_monotonicity",
        "x,alpha_lo,alpha_hi,step",
        ml_monotonicity_table(),
        args.out,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
