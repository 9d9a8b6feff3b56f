"""Command-line front end.

Verbs: eval, mellin, density, sample, verify, explore, table.  Numeric
output uses shortest round-trip decimals; CSV is RFC-4180 style with a
header row and LF line endings; JSON keys are emitted in fixed order.
The resolved configuration (seed, precision, threads) is echoed to
stderr so stdout stays machine-parseable and byte-identical across
identical invocations.

Exit codes: 0 success, 1 domain error (including unparseable argv),
2 accuracy error, 3 verification FAIL present in a report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import AccuracyError, DomainError
from .fracdist import (
    DistParams,
    frechet_cdf,
    frechet_density,
    frechet_sample,
    gumbel_sample,
    weibull_cdf,
    weibull_density,
    weibull_sample,
)
from .ksfun import KSParams, ks_eval, le_roy, mittag_leffler
from .mellin import f_mellin, ks_mellin_integral, w_mellin, y_mellin
from .stochastic import sample_positive_stable, substream
from . import verify as _verify

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad usage through the domain-error exit code."""

    def error(self, message):
        raise DomainError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="kskit", description=__doc__, allow_abbrev=False)
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, *, seedy=False):
        sp.add_argument("--precision-bits", type=int, default=53)
        sp.add_argument("--threads", type=int, default=None)
        sp.add_argument("--format", choices=("csv", "json"), default="json")
        sp.add_argument("--out", type=str, default=None)
        if seedy:
            sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("eval", description="evaluate a special function at one point")
    sp.add_argument("target", choices=("ks", "ml", "leroy"))
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--m", type=float)
    sp.add_argument("--l", type=float)
    sp.add_argument("--beta", type=float)
    sp.add_argument("--x", type=float, required=True)
    common(sp)

    sp = sub.add_parser("mellin", description="evaluate a Mellin transform at one point")
    sp.add_argument("target", choices=("y", "ks-integral", "weibull", "frechet"))
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--m", type=float)
    sp.add_argument("--l", type=float)
    sp.add_argument("--lambda", dest="lam", type=float)
    sp.add_argument("--rho", type=float)
    sp.add_argument("--s", type=float, required=True)
    common(sp)

    sp = sub.add_parser("density", description="evaluate a distribution density")
    sp.add_argument("target", choices=("weibull", "frechet"))
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.add_argument("--rho", type=float, required=True)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--method", choices=("series", "mellin"), default=None)
    common(sp)

    sp = sub.add_parser("sample", description="draw random variates")
    sp.add_argument("target", choices=("weibull", "frechet", "gumbel", "stable"))
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--lambda", dest="lam", type=float)
    sp.add_argument("--rho", type=float)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument(
        "--strategy", choices=("inverse_cdf", "probabilistic"), default="inverse_cdf"
    )
    common(sp, seedy=True)

    sp = sub.add_parser("verify", description="run a verification suite")
    sp.add_argument("--suite", required=True, choices=sorted(_verify.SUITES))
    sp.add_argument("--n", type=int, default=20_000)
    common(sp, seedy=True)

    sp = sub.add_parser(
        "explore", description="run the conjecture exploration campaign"
    )
    sp.add_argument("--suite", default="conjectures", choices=("conjectures",))
    sp.add_argument("--n", type=int, default=20_000)
    common(sp, seedy=True)

    sp = sub.add_parser("table", description="tabulate a function on an x grid")
    sp.add_argument("target", choices=("ks", "ml", "leroy", "weibull-cdf", "frechet-cdf"))
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--m", type=float)
    sp.add_argument("--l", type=float)
    sp.add_argument("--beta", type=float)
    sp.add_argument("--lambda", dest="lam", type=float)
    sp.add_argument("--rho", type=float)
    sp.add_argument("--x-from", type=float, required=True)
    sp.add_argument("--x-to", type=float, required=True)
    sp.add_argument("--points", type=int, required=True)
    sp.add_argument("--neg", action="store_true",
                    help="negate the grid before evaluating (tabulate f(-x))")
    common(sp)
    return p


def _require(args, names):
    for name in names:
        if getattr(args, name, None) is None:
            flag = "--lambda" if name == "lam" else f"--{name}"
            raise DomainError(f"{flag} is required for this target")


def _resolve_threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("KSKIT_THREADS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"KSKIT_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _echo_config(args, threads: int):
    bits = getattr(args, "precision_bits", 53)
    seed = getattr(args, "seed", None)
    parts = [f"verb={args.verb}", f"precision_bits={bits}", f"threads={threads}"]
    if seed is not None:
        parts.append(f"seed={seed}")
    print("# config: " + " ".join(parts), file=sys.stderr)


def _emit(args, header: list[str], rows: list[list], records: list[dict]):
    """Write CSV (header + rows) or JSON (records) to --out or stdout."""
    if args.format == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(repr(v) if isinstance(v, float) else str(v) for v in row))
        text = "\n".join(lines) + "\n"
    else:
        payload = records[0] if len(records) == 1 else records
        text = json.dumps(payload, ensure_ascii=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _eval_point(args) -> float:
    if args.target == "ks":
        _require(args, ("m", "l"))
        return ks_eval(KSParams(args.alpha, args.m, args.l), args.x,
                       precision_bits=args.precision_bits)
    if args.target == "ml":
        _require(args, ("beta",))
        return mittag_leffler(args.alpha, args.beta, args.x,
                              precision_bits=args.precision_bits)
    return le_roy(args.alpha, args.x, precision_bits=args.precision_bits)


def _cmd_eval(args) -> int:
    value = _eval_point(args)
    rec = {
        "target": args.target, "alpha": args.alpha, "m": args.m, "l": args.l,
        "beta": args.beta, "x": args.x, "value": value,
        "precision_bits": args.precision_bits,
    }
    _emit(args, ["target", "x", "value"], [[args.target, args.x, value]], [rec])
    return 0


def _cmd_mellin(args) -> int:
    if args.target in ("y", "ks-integral"):
        _require(args, ("m", "l"))
        p = KSParams(args.alpha, args.m, args.l)
        value = y_mellin(p, args.s) if args.target == "y" else ks_mellin_integral(p, args.s)
    else:
        _require(args, ("lam", "rho"))
        fn = w_mellin if args.target == "weibull" else f_mellin
        value = fn(args.alpha, args.lam, args.rho, args.s)
    rec = {
        "target": args.target, "alpha": args.alpha, "m": args.m, "l": args.l,
        "lambda": args.lam, "rho": args.rho, "s": args.s, "value": value,
    }
    _emit(args, ["target", "s", "value"], [[args.target, args.s, value]], [rec])
    return 0


def _cmd_density(args) -> int:
    d = DistParams(args.alpha, args.lam, args.rho)
    fn = weibull_density if args.target == "weibull" else frechet_density
    value = fn(d, args.x, method=args.method)
    rec = {
        "target": args.target, "alpha": args.alpha, "lambda": args.lam,
        "rho": args.rho, "x": args.x, "method": args.method, "value": value,
    }
    _emit(args, ["target", "x", "value"], [[args.target, args.x, value]], [rec])
    return 0


def _cmd_sample(args) -> int:
    if args.target == "stable":
        values = sample_positive_stable(args.alpha, substream(args.seed, 0), size=args.n)
    elif args.target == "gumbel":
        _require(args, ("lam",))
        values = gumbel_sample(args.alpha, args.lam, args.n, args.seed)
    else:
        _require(args, ("lam", "rho"))
        d = DistParams(args.alpha, args.lam, args.rho)
        fn = weibull_sample if args.target == "weibull" else frechet_sample
        values = fn(d, args.n, args.seed, strategy=args.strategy)
    values = [float(v) for v in values]
    rec = {
        "target": args.target, "alpha": args.alpha, "lambda": args.lam,
        "rho": getattr(args, "rho", None), "n": args.n, "seed": args.seed,
        "values": values,
    }
    _emit(args, ["value"], [[v] for v in values], [rec])
    return 0


def _cmd_verify(args) -> int:
    cfg = _verify.VerifyConfig(seed=args.seed, n_samples=args.n)
    reports = _verify.run_suite(args.suite, cfg)
    text = _verify.reports_to_csv(reports) if args.format == "csv" \
        else _verify.reports_to_json(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 3 if any(r.status == "FAIL" for r in reports) else 0


def _table_fn(args):
    if args.target == "ks":
        _require(args, ("m", "l"))
        p = KSParams(args.alpha, args.m, args.l)
        return lambda x: ks_eval(p, x, precision_bits=args.precision_bits)
    if args.target == "ml":
        _require(args, ("beta",))
        return lambda x: mittag_leffler(args.alpha, args.beta, x,
                                        precision_bits=args.precision_bits)
    if args.target == "leroy":
        return lambda x: le_roy(args.alpha, x, precision_bits=args.precision_bits)
    _require(args, ("lam", "rho"))
    d = DistParams(args.alpha, args.lam, args.rho)
    return (lambda x: weibull_cdf(d, x)) if args.target == "weibull-cdf" \
        else (lambda x: frechet_cdf(d, x))


def _cmd_table(args) -> int:
    if args.points < 1:
        raise DomainError("--points must be >= 1")
    fn = _table_fn(args)
    if args.points == 1:
        xs = [args.x_from]
    else:
        h = (args.x_to - args.x_from) / (args.points - 1)
        xs = [args.x_from + i * h for i in range(args.points)]
    rows, records = [], []
    for x in xs:
        value = fn(-x if args.neg else x)
        rows.append([float(x), float(value)])
        records.append({"x": float(x), "value": float(value)})
    _emit(args, ["x", "value"], rows, [records] if args.format == "json" else records)
    return 0


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        threads = _resolve_threads(args)
        _echo_config(args, threads)
        handler = {
            "eval": _cmd_eval,
            "mellin": _cmd_mellin,
            "density": _cmd_density,
            "sample": _cmd_sample,
            "verify": _cmd_verify,
            "explore": _cmd_verify,
            "table": _cmd_table,
        }[args.verb]
        return handler(args)
    except DomainError as exc:
        print(f"kskit: domain error: {exc}", file=sys.stderr)
        return 1
    except AccuracyError as exc:
        print(f"kskit: accuracy error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
