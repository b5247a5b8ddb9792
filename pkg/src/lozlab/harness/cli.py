"""Command-line interface: ``lozlab <command> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

import mpmath as mp
import numpy as np

from .. import gue, tiling
from ..charlib import characters as ch
from ..charlib.precision import as_scalar, is_exact
from ..charlib.signature import Signature
from ..limitshape import empirical_moments, limit_moment, line_index
from ..sampler import (RngStream, TooLarge, exact_sample_free, exact_sample_hex,
                       mcmc_sample_free, mcmc_sample_hex, rescale_positions)
from . import plots, suites


class UsageError(Exception):
    pass


def _ints(text):
    return [int(v) for v in text.split(",") if v.strip() != ""] if text else []


def _scalars(text):
    return [as_scalar(v) for v in text.split(",") if v.strip() != ""] if text else []


def _floats(text):
    return [float(v) for v in text.split(",") if v.strip() != ""]


def _signature(text):
    return Signature.of([Fraction(v) for v in text.split(",")]) if text else Signature(())


def fmt(v, digits: int) -> str:
    """Decimal string with an explicit number of significant digits (integers verbatim)."""
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        with mp.workprec(max(64, int(digits * 3.33) + 16)):
            return mp.nstr(mp.mpf(v.numerator) / v.denominator, digits, strip_zeros=False)
    if isinstance(v, (mp.mpf, mp.mpc)):
        return mp.nstr(v, digits, strip_zeros=False)
    return mp.nstr(mp.mpf(float(v)), digits, strip_zeros=False)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("LOZLAB_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"LOZLAB_SEED={env!r} is not an integer")


def _out(args):
    return open(args.out, "w", newline="") if getattr(args, "out", None) else sys.stdout


def _emit_report(rep, args) -> int:
    text = rep.to_json(timing=args.timing)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if rep.passed else 1


# --------------------------------------------------------------------------
# commands


def cmd_count(args):
    print(tiling.count_hex(args.n, args.m) if args.hex else tiling.count_free(args.n, args.m))
    return 0


def cmd_enumerate(args):
    gen = tiling.enumerate_hex if args.hex else tiling.enumerate_free
    try:
        stream = gen(args.n, args.m, cap=args.cap)
    except tiling.CapExceeded as e:
        print(str(e), file=sys.stderr)
        return 1
    fh = _out(args)
    for p in stream:
        fh.write(p.to_json() + "\n")
    return 0


def cmd_sample(args):
    rng = RngStream(_seed(args), args.stream)
    n, m = args.n, args.m
    if args.samples <= 0:
        raise UsageError("--samples must be positive")
    if args.method == "exact":
        draw = exact_sample_hex if args.hex else exact_sample_free
        try:
            pats = [draw(n, m, rng) for _ in range(args.samples)]
        except TooLarge as e:
            print(str(e), file=sys.stderr)
            return 1
        rows_of = lambda k: np.array([p.rows[k - 1] for p in pats])  # noqa: E731
        report = None
    else:
        thin = args.thin
        samples = args.samples
        if args.sweeps is not None:
            thin = thin or n
            samples = max(1, args.sweeps // thin)
        run = mcmc_sample_hex if args.hex else mcmc_sample_free
        keep = None if args.format == "json" else range(1, args.lines + 1)
        chain, report = run(n, m, rng, samples, args.burn_in, thin, keep_rows=keep)
        pats = list(chain.patterns()) if args.format == "json" else None
        rows_of = lambda k: chain.rows[k]  # noqa: E731
    fh = _out(args)
    if args.format == "json":
        for p in pats:
            fh.write(p.to_json() + "\n")
    else:
        w = csv.writer(fh, lineterminator="\n")
        depth = 2 * n if args.hex else n
        lines = min(args.lines, depth)
        w.writerow(["line", "k"] + [f"Y_{j}" for j in range(1, lines + 1)])
        for k in range(1, lines + 1):
            Y = rows_of(k) + np.arange(k - 1, -1, -1)[None, :]
            for s in range(Y.shape[0]):
                vals = rescale_positions(Y[s], n, m, args.regime) if args.regime else Y[s]
                w.writerow([s, k] + [fmt(v, args.digits) if args.regime else int(v) for v in vals])
    if report is not None and args.report:
        with open(args.report, "w") as fh2:
            json.dump(report.as_dict(timing=args.timing), fh2, indent=2)
    return 0


def cmd_char(args):
    op = args.op
    lam = _signature(args.lam)
    xs = _scalars(args.x)
    N = args.N
    if op == "schur_dim":
        v = ch.schur_dim(lam, N)
    elif op == "skew_schur_dim":
        v = ch.skew_schur_dim(lam, _signature(args.mu), args.M)
    elif op == "schur":
        v = ch.schur_eval(lam, xs, N)
    elif op == "normalized_schur":
        v = ch.normalized_schur(lam, xs[0], N)
    elif op == "symplectic":
        v = ch.symplectic_eval(lam, xs, N)
    elif op == "normalized_symplectic":
        v = ch.normalized_symplectic(lam, xs[0], N)
    elif op == "orthogonal":
        v = ch.orthogonal_eval(lam, xs, N)
    elif op == "phi":
        v = ch.phi_m_eval(args.m, xs, N)
    elif op == "Phi":
        if N is None:
            raise UsageError("Phi needs --N (the number of rows n)")
        v = ch.Phi_m_eval(args.m, xs, N)
    elif op == "bessel":
        v = ch.bessel_B(xs, _scalars(args.y))
    elif op == "beta_shift":
        r = ch.beta_shift_check(lam, N, as_scalar(args.beta), xs[0])
        print(json.dumps({k: (fmt(v, args.digits) if not isinstance(v, str) and not isinstance(v, int) else v)
                          for k, v in r.items()}))
        return 0
    else:
        raise UsageError(f"unknown op {op}")
    if args.exact and is_exact(v):
        print(str(v))
    else:
        print(fmt(v, args.digits))
    return 0


def cmd_gue(args):
    rng = RngStream(_seed(args), args.stream)
    if args.gue_cmd == "sample":
        fh = _out(args)
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["level", "index", "value"])
        for _ in range(args.samples):
            c = gue.sample_gue_corners(args.k, rng)
            for j, lev in enumerate(c.levels, start=1):
                for i, v in enumerate(lev, start=1):
                    w.writerow([j, i, fmt(v, args.digits)])
        return 0
    x = _floats(args.x)
    est, se = gue.mgf_gue_mc(x, len(x), args.samples, rng)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["analytic", "mc_estimate", "stderr"])
    w.writerow([fmt(gue.mgf_gue(x), args.digits), fmt(est, args.digits), fmt(se, args.digits)])
    return 0


def cmd_limitshape(args):
    rows = []
    emp = None
    if args.n:
        rng = RngStream(_seed(args), args.stream)
        m = int(round(args.a * args.n))
        if args.method == "exact":
            emp = empirical_moments((exact_sample_free(args.n, m, rng) for _ in range(args.samples)),
                                    args.x, args.rmax)
        else:
            k = line_index(args.x, args.n)
            chain, _ = mcmc_sample_free(args.n, m, rng, args.samples, keep_rows=[k])
            emp = empirical_moments(chain, args.x, args.rmax)
    fh = _out(args)
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["r", "analytic", "empirical", "stderr"])
    for r in range(args.rmax + 1):
        an = limit_moment(r, args.x, args.a)
        e = fmt(emp[r], args.digits) if emp else ""
        s = fmt(emp.stderr[r], args.digits) if emp else ""
        w.writerow([r, fmt(an, args.digits), e, s])
        rows.append((r, float(an), emp[r] if emp else float("nan"), emp.stderr[r] if emp else 0.0))
    return 0


def cmd_verify(args):
    seed = _seed(args)
    what = args.suite
    if what == "exact":
        rep = suites.verify_exact_suite(seed=seed)
    elif what == "ebk":
        x = _floats(args.x)
        rep = suites.verify_ebk_identity(args.n, args.m, len(x), x)
    elif what == "gue":
        spec = suites.RegimeSpec(args.regime, args.n, args.m, args.a)
        rep = suites.verify_gue_convergence(spec, args.k, args.samples, RngStream(seed, args.stream),
                                            method=args.method, domain="hexagon" if args.hex else "free",
                                            burn_in=args.burn_in, thin=args.thin)
    elif what == "mgf":
        rep = suites.verify_mgf_convergence(args.a, _ints(args.n_grid), _floats(args.y))
    elif what == "limit":
        rep = suites.verify_limit_shape(args.a, args.x_line, args.n, args.samples, args.rmax,
                                        RngStream(seed, args.stream), method=args.method)
    else:
        raise UsageError(f"unknown suite {what}")
    rep.seed = seed if rep.seed is None else rep.seed
    return _emit_report(rep, args)


def cmd_sweep(args):
    w = csv.writer(sys.stdout, lineterminator="\n")
    if args.what == "count":
        w.writerow(["n", "m", "count"])
        for n in range(1, args.n_max + 1):
            for m in range(0, args.m_max + 1):
                w.writerow([n, m, tiling.count_free(n, m)])
        return 0
    if args.what == "mgf":
        y = _floats(args.y)
        target = (args.a ** 2 + 2 * args.a) / 16 * sum(v * v for v in y)
        w.writerow(["n", "m", "exponent", "target", "gap"])
        with mp.workprec(128):
            for n in _ints(args.n_grid):
                m = int(round(args.a * n))
                v = suites.mgf_exponent(m, n, y)
                w.writerow([n, m, fmt(v, args.digits), fmt(target, args.digits), fmt(abs(v - target), args.digits)])
        return 0
    if args.what == "line-law":
        w.writerow(["j", "probability"])
        for j, p in enumerate(ch.line_one_law(args.m, args.n)):
            w.writerow([j, fmt(p, args.digits)])
        return 0
    raise UsageError(f"unknown sweep {args.what}")


def cmd_plot(args):
    rng = RngStream(_seed(args), args.stream)
    if args.kind == "lozenge":
        p = exact_sample_free(args.n, args.m, rng) if args.method == "exact" else \
            next(mcmc_sample_free(args.n, args.m, rng, 1, chains=1)[0].patterns())
        plots.plot_lozenges(p, args.out)
    elif args.kind == "histogram":
        if args.method == "exact":
            Y = np.array([tiling.positions(exact_sample_free(args.n, args.m, rng), 1)[0]
                          for _ in range(args.samples)])
        else:
            chain, _ = mcmc_sample_free(args.n, args.m, rng, args.samples, keep_rows=[1])
            Y = chain.positions(1)[:, 0]
        plots.plot_histogram(rescale_positions(Y, args.n, args.m, args.regime), args.out)
    elif args.kind == "moments":
        m = int(round(args.a * args.n))
        k = line_index(args.x, args.n)
        chain, _ = mcmc_sample_free(args.n, m, rng, args.samples, keep_rows=[k])
        emp = empirical_moments(chain, args.x, args.rmax)
        plots.plot_moments([(r, float(limit_moment(r, args.x, args.a)), emp[r], emp.stderr[r])
                            for r in range(1, args.rmax + 1)], args.out)
    return 0


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="default: $LOZLAB_SEED or 0")
    common.add_argument("--stream", type=int, default=0)
    common.add_argument("--precision-bits", type=int, default=None)
    common.add_argument("--digits", type=int, default=17, help="significant digits of decimal output")
    common.add_argument("--timing", action="store_true",
                        help="record wall-clock times (output is then not byte-identical)")

    p = argparse.ArgumentParser(prog="lozlab", description="Lozenge tilings with a free boundary.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="number of tilings")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--hex", action="store_true")
    c.set_defaults(fn=cmd_count)

    e = sub.add_parser("enumerate", parents=[common], help="all patterns as JSON lines")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--hex", action="store_true")
    e.add_argument("--cap", type=int, default=tiling.DEFAULT_CAP)
    e.add_argument("--out")
    e.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("sample", parents=[common], help="random tilings")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--samples", type=int, default=1)
    s.add_argument("--method", choices=["exact", "mcmc"], default="exact")
    s.add_argument("--sweeps", type=int, default=None)
    s.add_argument("--burn-in", type=int, default=None)
    s.add_argument("--thin", type=int, default=None)
    s.add_argument("--regime", choices=["standard", "tall", "wide"], default=None)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--lines", type=int, default=1, help="CSV: lines 1..LINES")
    s.add_argument("--hex", action="store_true")
    s.add_argument("--out")
    s.add_argument("--report", help="write the MCMC SamplerReport JSON here")
    s.set_defaults(fn=cmd_sample)

    ch_ = sub.add_parser("char", parents=[common], help="character evaluation")
    chs = ch_.add_subparsers(dest="char_cmd", required=True)
    ev = chs.add_parser("eval", parents=[common])
    ev.add_argument("--op", required=True, choices=[
        "schur_dim", "skew_schur_dim", "schur", "normalized_schur", "symplectic",
        "normalized_symplectic", "orthogonal", "phi", "Phi", "bessel", "beta_shift"])
    ev.add_argument("--lambda", dest="lam", default="")
    ev.add_argument("--mu", default="")
    ev.add_argument("--x", default="")
    ev.add_argument("--y", default="")
    ev.add_argument("--N", type=int, default=None)
    ev.add_argument("--M", type=int, default=0)
    ev.add_argument("--m", type=int, default=0)
    ev.add_argument("--beta", default="2")
    ev.add_argument("--exact", action="store_true", help="print exact rationals as p/q")
    ev.set_defaults(fn=cmd_char)

    g = sub.add_parser("gue", parents=[common], help="GUE corners reference")
    gs = g.add_subparsers(dest="gue_cmd", required=True)
    g1 = gs.add_parser("sample", parents=[common])
    g1.add_argument("--k", type=int, required=True)
    g1.add_argument("--samples", type=int, default=1)
    g1.add_argument("--out")
    g1.set_defaults(fn=cmd_gue)
    g2 = gs.add_parser("mgf", parents=[common])
    g2.add_argument("--x", required=True)
    g2.add_argument("--samples", type=int, default=100000)
    g2.set_defaults(fn=cmd_gue)

    ls = sub.add_parser("limitshape", parents=[common], help="limit-shape moments")
    lss = ls.add_subparsers(dest="ls_cmd", required=True)
    lm = lss.add_parser("moments", parents=[common])
    lm.add_argument("--a", type=float, required=True)
    lm.add_argument("--x", type=float, required=True)
    lm.add_argument("--rmax", type=int, default=4)
    lm.add_argument("--n", type=int, default=None)
    lm.add_argument("--samples", type=int, default=1000)
    lm.add_argument("--method", choices=["exact", "mcmc"], default="mcmc")
    lm.add_argument("--out")
    lm.set_defaults(fn=cmd_limitshape)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=["exact", "ebk", "gue", "mgf", "limit"])
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--k", type=int, default=1)
    v.add_argument("--x", default="1")
    v.add_argument("--x-line", type=float, default=0.5)
    v.add_argument("--a", type=float, default=1.0)
    v.add_argument("--y", default="1")
    v.add_argument("--n-grid", default="8,16,32,64")
    v.add_argument("--regime", choices=["standard", "tall", "wide"], default="standard")
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--method", default="auto")
    v.add_argument("--rmax", type=int, default=4)
    v.add_argument("--burn-in", type=int, default=None)
    v.add_argument("--thin", type=int, default=None)
    v.add_argument("--hex", action="store_true")
    v.add_argument("--json", help="also write the report here")
    v.set_defaults(fn=cmd_verify)

    sw = sub.add_parser("sweep", parents=[common], help="parameter sweeps as CSV")
    sw.add_argument("what", choices=["count", "mgf", "line-law"])
    sw.add_argument("--n-max", type=int, default=4)
    sw.add_argument("--m-max", type=int, default=4)
    sw.add_argument("--n", type=int, default=2)
    sw.add_argument("--m", type=int, default=2)
    sw.add_argument("--a", type=float, default=1.0)
    sw.add_argument("--y", default="1")
    sw.add_argument("--n-grid", default="8,16,32,64")
    sw.set_defaults(fn=cmd_sweep)

    pl = sub.add_parser("plot", parents=[common], help="SVG figures")
    pl.add_argument("kind", choices=["lozenge", "histogram", "moments"])
    pl.add_argument("--n", type=int, default=8)
    pl.add_argument("--m", type=int, default=8)
    pl.add_argument("--a", type=float, default=1.0)
    pl.add_argument("--x", type=float, default=0.5)
    pl.add_argument("--rmax", type=int, default=4)
    pl.add_argument("--samples", type=int, default=1000)
    pl.add_argument("--method", choices=["exact", "mcmc"], default="exact")
    pl.add_argument("--regime", choices=["standard", "tall", "wide"], default="standard")
    pl.add_argument("--out", required=True)
    pl.set_defaults(fn=cmd_plot)
    return p


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        if args.precision_bits:
            if args.precision_bits < 64:
                raise UsageError("--precision-bits must be at least 64")
            mp.mp.prec = args.precision_bits
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
