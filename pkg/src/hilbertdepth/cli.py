"""Command-line front end.

Coefficients are given in ascending order, constant term first:
``--coeffs e,b,a`` is the quadratic ``a j^2 + b j + e``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification finding.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import cubic, geometry, quadratic, sweep, verify
from .exact import fraction_decimal
from .numfn import DEFAULT_CAP, NumFnError, PreconditionFailed, beta_table, hdepth, validate

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_FINDING = 0, 1, 2, 3


def _coeffs(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--coeffs must be comma-separated integers, got {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def _range(text: str) -> tuple[int, int]:
    try:
        return sweep._parse_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like LO..HI, got {text!r}")


def _default_cap() -> int:
    env = os.environ.get("HDEPTH_CAP")
    return int(env) if env else DEFAULT_CAP


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hilbertdepth", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_coeffs(p):
        p.add_argument("--coeffs", type=_coeffs, required=True, help="a0,a1,...,an (constant term first)")
        return p

    p = with_coeffs(sub.add_parser("hdepth", help="hdepth report as JSON"))
    p.add_argument("--cap", type=int, default=None)

    p = with_coeffs(sub.add_parser("beta", help="row of beta values at d"))
    p.add_argument("--d", type=int, required=True)

    with_coeffs(sub.add_parser("classify", help="nonnegativity case analysis (quadratic) or cubic case"))
    with_coeffs(sub.add_parser("bound", help="theorem-level hdepth bound for a quadratic or cubic"))

    p = sub.add_parser("family", help="the k^2 j^2 + (k - k^2) j + 1 family")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("geometry", help="intersection points of the two parabolas")
    p.add_argument("--tol", type=_fraction, default=Fraction(1, 100))

    for name, hlp in (("sweep", "exhaustive coefficient-box sweep"), ("explore", "explore a degree")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--config", help="key = value config file")
        p.add_argument("--degree", type=int)
        p.add_argument("--range", dest="ranges", type=_range, action="append",
                       help="inclusive LO..HI, repeat once per coefficient a0..an")
        p.add_argument("--filter")
        p.add_argument("--cap", type=int, default=None)
        p.add_argument("--workers", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--out", help="CSV destination (one row per valid instance)")

    p = sub.add_parser("verify", help="run the lemma/theorem property suites")
    p.add_argument("--suite", action="append", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--quick", action="store_true", help="smaller boxes")
    return parser


def _sweep_config(args) -> sweep.SweepConfig:
    if args.config:
        with open(args.config) as fh:
            cfg = sweep.parse_config(fh.read())
    elif args.degree is not None and args.ranges:
        cfg = sweep.SweepConfig(args.degree, tuple(args.ranges))
    else:
        raise ValueError("give --config or both --degree and --range per coefficient")
    overrides = {}
    for key in ("filter", "workers", "seed", "samples"):
        v = getattr(args, key)
        if v is not None:
            overrides[key] = v
    cap = args.cap if args.cap is not None else (_default_cap() if not args.config else None)
    if cap is not None:
        overrides["cap"] = cap
    return sweep.SweepConfig(**{**cfg.__dict__, **overrides})


def _cmd_classify(h) -> dict:
    if h.degree == 2:
        p = quadratic.QuadParams.from_numfn(h)
        return quadratic.classify(p).to_dict()
    if h.degree == 3:
        p = cubic.CubicParams.from_numfn(h)
        return {
            "case": cubic.cubic_case(p).value,
            "nondecreasing": cubic.is_nondecreasing(p),
            "delta_prime": str(p.delta_prime),
            "disc3": str(cubic.disc3(p)),
        }
    raise PreconditionFailed("classify handles quadratics and cubics")


def _cmd_bound(h) -> dict:
    if h.degree == 2:
        p = quadratic.QuadParams.from_numfn(h)
        out = {"bound": quadratic.bound_quadratic(p), "case": quadratic.quad_case_label(p),
               "disc2": str(quadratic.disc2(p))}
        if p.t >= 2:
            out["f_bound_d"] = quadratic.upper_via_f2(h)
        return out
    if h.degree == 3:
        p = cubic.CubicParams.from_numfn(h)
        out = cubic.bound_cubic(p).to_dict()
        if p.t >= 2:
            out["f_bound_d"] = cubic.upper_via_f3(h)
        return out
    raise PreconditionFailed("bound handles quadratics and cubics")


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _dispatch(args)
    except (NumFnError, PreconditionFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "hdepth":
        h = validate(args.coeffs)
        cap = args.cap if args.cap is not None else _default_cap()
        print(hdepth(h, cap).to_json())
    elif cmd == "beta":
        h = validate(args.coeffs)
        if args.d < 0:
            raise ValueError("--d must be >= 0")
        print(json.dumps([str(v) for v in beta_table(h, args.d).values]))
    elif cmd == "classify":
        _emit(_cmd_classify(validate(args.coeffs)) if len(args.coeffs) != 3 else _classify_raw(args.coeffs))
    elif cmd == "bound":
        _emit(_cmd_bound(validate(args.coeffs)))
    elif cmd == "family":
        h, rep = quadratic.family_member(args.k)
        out = rep.to_dict()
        out["beta_3_6"] = str(quadratic.family_beta36(args.k))
        out["delta"] = str(quadratic.family_delta(args.k))
        out["disc2"] = str(quadratic.family_disc2(args.k))
        _emit(out)
    elif cmd == "geometry":
        _emit(geometry.k_intersections(args.tol).to_dict())
    elif cmd in ("sweep", "explore"):
        return _cmd_sweep(args)
    elif cmd == "verify":
        results = verify.run_suites(args.suite or ["all"], quick=args.quick)
        _emit([r.to_dict() for r in results])
        status = verify.exit_status(results)
        for r in results:
            for c in r.violations:
                print(f"VIOLATION {r.name}/{c.name}: {c.failures} of {c.tested}", file=sys.stderr)
            for c in r.findings:
                print(f"FINDING {r.name}/{c.name}: {c.failures} of {c.tested}", file=sys.stderr)
        return status
    return EXIT_OK


def _classify_raw(coeffs) -> dict:
    # quadratics are classified even when invalid; that is the point of the classifier
    e, b, a = coeffs
    if a <= 0 or e <= 0:
        raise PreconditionFailed("classify needs a > 0 and e > 0")
    return quadratic.classify(quadratic.QuadParams(a, b, e)).to_dict()


def _cmd_sweep(args) -> int:
    cfg = _sweep_config(args)
    rows: list = []
    if args.command == "explore":
        summary = sweep.explore_degree(cfg.degree, cfg, rows)
    else:
        summary = sweep.run_sweep(cfg, rows)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            if summary.mode == "random":
                fh.write(f"# seed={summary.seed}\n")
            sweep.write_csv(rows, cfg.degree, fh)
    print(summary.to_json())
    return EXIT_FINDING if summary.violations else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
