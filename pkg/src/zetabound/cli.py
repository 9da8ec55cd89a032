"""Command-line interface.

Every command prints a human-readable report followed by one summary line
``RESULT command=<name> status=<PASS|FAIL> ...`` and exits with status 0
exactly when the check passed. Numeric options are read as exact decimals.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import bounds_chain, expsum, kernels, sweep
from .interval import RInterval
from .zeta_eval import RSParams, abs_zeta_half


def _decimal(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact decimal or fraction: {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return v


def _dec(q: Fraction) -> str:
    return bounds_chain.fraction_text(q)


def _fmt(x: RInterval | float, digits: int) -> str:
    if isinstance(x, RInterval):
        return x.format(digits)
    return f"{x:.{digits}g}"


def _result(command: str, passed: bool, **fields) -> int:
    extra = "".join(f" {k}={v}" for k, v in fields.items())
    print(f"RESULT command={command} status={'PASS' if passed else 'FAIL'}{extra}")
    return 0 if passed else 1


def _sweep_config(args) -> sweep.SweepConfig:
    return sweep.SweepConfig(
        piece_width=args.piece_width,
        max_depth=getattr(args, "max_depth", 20),
        rs_terms=args.terms,
        threads=args.threads,
        backend=args.backend,
    )


# -- commands ---------------------------------------------------------------------


def cmd_eval(args) -> int:
    t = RInterval.exact(args.t) if args.t_hi is None else RInterval.hull_of(
        RInterval.exact(args.t), RInterval.exact(args.t_hi)
    )
    enc = abs_zeta_half(t, RSParams(args.terms), backend=args.backend)
    print(f"t = {_fmt(t, args.digits)}")
    print(f"|zeta(1/2+it)| in {_fmt(enc.value, args.digits)}")
    print(f"method = {enc.method.value}")
    return _result("eval", True, lo=repr(enc.value.lo), hi=repr(enc.value.hi), method=enc.method.value)


def cmd_verify_range(args) -> int:
    cfg = _sweep_config(args)
    rep = sweep.verify_range(args.lo, args.hi, args.a, cfg)
    print(rep.summary())
    for a, b, why in rep.failures[:20]:
        print(f"  failed on [{a!r}, {b!r}]: {why}")
    return _result("verify-range", rep.passed, pieces=rep.pieces, failures=len(rep.failures), depth=rep.deepest)


def cmd_records(args) -> int:
    cfg = _sweep_config(args)
    rs = sweep.record_sweep(args.lo, args.hi, cfg, path=args.out, allow_long=args.long_run)
    print(rs.header())
    print(f"{len(rs)} records written to {args.out}")
    return _result("records", True, records=len(rs), out=args.out)


def cmd_table(args) -> int:
    if args.records:
        rs = sweep.read_records(args.records)
    else:
        cfg = _sweep_config(args)
        rs = sweep.record_sweep(args.lo, args.hi, cfg, allow_long=args.long_run)
    entry = sweep.table_entry(rs, args.lo, args.hi)
    print(f"range [{_dec(args.lo)}, {_dec(args.hi)}]: A = {entry.constant}")
    print(f"max y/(a^(1/6) log a) in {_fmt(entry.max_ratio, args.digits)} at a = {entry.at!r}")
    print(f"records used: {entry.records_used}")
    passed = True
    fields = {"A": str(entry.constant)}
    if args.expect is not None:
        diff = abs(Fraction(entry.constant) - args.expect)
        passed = diff <= args.tolerance
        fields["expected"] = _dec(args.expect)
        fields["diff"] = str(float(diff))
    return _result("table", passed, **fields)


def _params(args) -> bounds_chain.BoundParams:
    if args.params:
        return bounds_chain.BoundParams.load(args.params)
    return bounds_chain.BoundParams(args.k, args.theta, args.a0, args.t0)


def cmd_check_theorem(args) -> int:
    p = _params(args)
    feas = bounds_chain.feasibility(p)
    print("parameters:")
    print(p.to_text(), end="")
    print("feasibility:")
    print(feas)
    if not feas.passed:
        return _result("check-theorem", False, reason="infeasible")
    chain = bounds_chain.compute_chain(p)
    print("constants:")
    print(chain.format(args.digits))
    rep = bounds_chain.verify_large_t(p, args.target)
    print("ratio bound for t >= t0:")
    print(rep.format(args.digits))
    return _result("check-theorem", rep.passed, sup=repr(rep.sup_bound), target=_dec(args.target))


def cmd_optimize(args) -> int:
    box = {"k": tuple(args.k_range), "theta": tuple(args.theta_range), "a0": tuple(args.a0_range)}
    try:
        res = bounds_chain.optimize_params(
            box, args.t0, args.target, grid=args.grid, rounds=args.rounds, workers=args.threads
        )
    except bounds_chain.NoFeasiblePoint as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _result("optimize-params", False, reason="infeasible-box")
    print(res.params.to_text(), end="")
    print(f"certified constant: {res.constant:.{args.digits}g} ({res.evaluated} points evaluated)")
    if args.out:
        res.params.save(args.out)
    return _result("optimize-params", res.passed, constant=repr(res.constant))


def cmd_crossover(args) -> int:
    bracket = RInterval.hull_of(RInterval.exact(args.lo), RInterval.exact(args.hi))
    try:
        enc = sweep.crossover(sweep.power_log_bound(RInterval.exact(args.a)), sweep.lehman_bound, bracket, args.tol)
    except sweep.NoSignChange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _result("crossover", False, reason="no-sign-change")
    print(f"Lehman bound = {_dec(args.a)} t^(1/6) log t for t in {_fmt(enc, args.digits)}")
    return _result("crossover", True, lo=repr(enc.lo), hi=repr(enc.hi))


def cmd_min_q(args) -> int:
    target = RInterval.exact(args.target)
    enc = sweep.min_Q(target)
    print(f"|zeta(1/2)| in {_fmt(sweep.zeta_half_abs(), args.digits)}")
    print(f"least Q in {_fmt(enc, args.digits)}")
    passed = True
    fields = {"lo": repr(enc.lo), "hi": repr(enc.hi)}
    if args.certify is not None:
        ok = sweep.certify_Q(target, RInterval.exact(args.certify))
        print(f"inequality at Q = {_dec(args.certify)}: {'certified' if ok else 'NOT certified'}")
        passed = ok
        fields["certified"] = str(ok).lower()
    return _result("min-q", passed, **fields)


def cmd_check_lemmas(args) -> int:
    results = []
    if "1" in args.which:
        results.append(expsum.lemma1_battery(args.trials))
    if "2" in args.which:
        results.append(expsum.lemma2_battery(args.max_len))
    if "3" in args.which:
        results.append(expsum.lemma3_battery(args.samples))
    if "m" in args.which:
        results.append(expsum.moments_battery(args.moments))
    for r in results:
        print(r.summary())
    passed = all(r.passed for r in results) and bool(results)
    return _result("check-lemmas", passed, batteries=len(results))


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=_positive_int, default=10, help="printed significant digits")
    common.add_argument(
        "--threads", type=_positive_int, default=sweep.default_threads(), help="worker threads (default: all cores)"
    )
    common.add_argument("--backend", choices=kernels.available(), default=None, help="kernel backend")

    sweep_opts = argparse.ArgumentParser(add_help=False)
    sweep_opts.add_argument("--piece-width", type=_decimal, default=Fraction(1, 1024))
    sweep_opts.add_argument("--terms", type=int, choices=range(5), default=2, help="Riemann-Siegel correction terms")

    p = argparse.ArgumentParser(prog="zetabound", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="enclose |zeta(1/2+it)|")
    s.add_argument("--t", type=_decimal, required=True)
    s.add_argument("--t-hi", type=_decimal, default=None, help="upper end of a t interval")
    s.add_argument("--terms", type=int, choices=range(5), default=2)
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("verify-range", parents=[common, sweep_opts], help="verify |zeta| < A t^(1/6) log t")
    s.add_argument("--lo", type=_decimal, required=True)
    s.add_argument("--hi", type=_decimal, required=True)
    s.add_argument("--a", type=_decimal, required=True, help="the constant A")
    s.add_argument("--max-depth", type=_nonneg_int, default=20)
    s.set_defaults(func=cmd_verify_range)

    s = sub.add_parser("records", parents=[common, sweep_opts], help="write a record file")
    s.add_argument("--lo", type=_decimal, required=True)
    s.add_argument("--hi", type=_decimal, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--long-run", action="store_true", help="allow heights above 1000")
    s.set_defaults(func=cmd_records)

    s = sub.add_parser("table", parents=[common, sweep_opts], help="table constant for a range")
    s.add_argument("--lo", type=_decimal, required=True)
    s.add_argument("--hi", type=_decimal, required=True)
    s.add_argument("--records", default=None, help="record file (otherwise sweep now)")
    s.add_argument("--long-run", action="store_true")
    s.add_argument("--expect", type=_decimal, default=None, help="expected constant")
    s.add_argument("--tolerance", type=_decimal, default=Fraction(1, 10000))
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("check-theorem", parents=[common], help="certify the large-t constant")
    s.add_argument("--k", type=_decimal, default=Fraction("1.16"))
    s.add_argument("--theta", type=_decimal, default=Fraction("7.5"))
    s.add_argument("--a0", type=_decimal, default=Fraction("3.37"))
    s.add_argument("--t0", type=_decimal, default=Fraction("5.867e9"))
    s.add_argument("--params", default=None, help="parameter file (key = value)")
    s.add_argument("--target", type=_decimal, default=Fraction("0.732"))
    s.set_defaults(func=cmd_check_theorem)

    s = sub.add_parser("optimize-params", parents=[common], help="search (k, theta, A0)")
    s.add_argument("--k-range", type=_decimal, nargs=2, default=[Fraction("1.1"), Fraction("1.3")])
    s.add_argument("--theta-range", type=_decimal, nargs=2, default=[Fraction(5), Fraction(10)])
    s.add_argument("--a0-range", type=_decimal, nargs=2, default=[Fraction(3), Fraction(4)])
    s.add_argument("--t0", type=_decimal, default=Fraction("5.867e9"))
    s.add_argument("--target", type=_decimal, default=None)
    s.add_argument("--grid", type=_positive_int, default=7)
    s.add_argument("--rounds", type=_positive_int, default=4)
    s.add_argument("--out", default=None, help="write the best parameters here")
    s.set_defaults(func=cmd_optimize)

    s = sub.add_parser("crossover", parents=[common], help="where the Lehman bound meets A t^(1/6) log t")
    s.add_argument("--a", type=_decimal, default=Fraction("0.732"))
    s.add_argument("--lo", type=_decimal, required=True)
    s.add_argument("--hi", type=_decimal, required=True)
    s.add_argument("--tol", type=float, default=1e-3)
    s.set_defaults(func=cmd_crossover)

    s = sub.add_parser("min-q", parents=[common], help="least Q covering t = 0")
    s.add_argument("--target", type=_decimal, default=Fraction("0.732"))
    s.add_argument("--certify", type=_decimal, default=Fraction("4.678"))
    s.set_defaults(func=cmd_min_q)

    s = sub.add_parser("check-lemmas", parents=[common], help="randomized domination checks")
    s.add_argument("--which", default="123m", help="subset of 1, 2, 3, m")
    s.add_argument("--trials", type=_positive_int, default=1000)
    s.add_argument("--max-len", type=_positive_int, default=20)
    s.add_argument("--samples", type=_positive_int, default=50)
    s.add_argument("--moments", type=_positive_int, default=10_000)
    s.set_defaults(func=cmd_check_lemmas)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, sweep.LongRunRequired) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _result(args.command, False, reason=type(exc).__name__)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
