"""Command-line interface.

Subcommands:
  verify    run a batch suite over a random ensemble and write a report
  bound     evaluate one catalog bound on a matrix file
  optimize  minimize a bound's right side over the free parameter
  radius    numerical radius of a matrix file, optionally with the oracle

Exit status: 0 on success with zero violations, 1 when violations were
found, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .bounds import (
    ALL_BOUNDS,
    CHAIN_IDS,
    MODE_CERTIFICATE,
    MODE_INEQUALITY,
    evaluate_bound,
    optimize_lambda,
)
from .ensembles import ENSEMBLES, EnsembleConfig
from .errors import InvalidConfigError, UnknownBoundError, UnknownChainError
from .linalg import numerical_radius, numerical_radius_oracle
from .scalar_ineq import BoundParams
from .suite import DEFAULT_LAMBDA_GRID, emit_report, run_suite

_MODES = {"inequality": MODE_INEQUALITY, "certificate": MODE_CERTIFICATE}


def _csv_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _csv_floats(text: str) -> list[float]:
    return [float(item) for item in _csv_list(text)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="numrad", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="batch-verify bounds and chains on an ensemble")
    p_verify.add_argument("--ensemble", required=True, choices=ENSEMBLES)
    p_verify.add_argument("--dim", type=int, required=True)
    p_verify.add_argument("--trials", type=int, required=True)
    p_verify.add_argument("--seed", type=int, required=True)
    p_verify.add_argument("--bounds", type=_csv_list, default=None,
                          help=f"comma list from {','.join(ALL_BOUNDS)} (default: all)")
    p_verify.add_argument("--chains", type=_csv_list, default=None,
                          help=f"comma list from {','.join(CHAIN_IDS)} (default: all)")
    p_verify.add_argument("--lambda-grid", type=_csv_floats, dest="lambda_grid",
                          default=list(DEFAULT_LAMBDA_GRID))
    p_verify.add_argument("--r", type=float, default=1.0)
    p_verify.add_argument("--n", type=int, default=1)
    p_verify.add_argument("--alpha", type=float, default=0.5)
    p_verify.add_argument("--out", required=True)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.add_argument("--parallel", action="store_true")

    p_bound = sub.add_parser("bound", help="evaluate one bound on a matrix file")
    p_bound.add_argument("--matrix", required=True)
    p_bound.add_argument("--matrix2", default=None,
                         help="second matrix for product bounds (default: pair with itself)")
    p_bound.add_argument("--bound", required=True)
    p_bound.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p_bound.add_argument("--r", type=float, default=1.0)
    p_bound.add_argument("--n", type=int, default=1)
    p_bound.add_argument("--alpha", type=float, default=0.5)
    p_bound.add_argument("--mode", choices=tuple(_MODES), default=None)

    p_opt = sub.add_parser("optimize", help="minimize a bound's rhs over lambda")
    p_opt.add_argument("--matrix", required=True)
    p_opt.add_argument("--matrix2", default=None)
    p_opt.add_argument("--bound", required=True)
    p_opt.add_argument("--r", type=float, default=1.0)
    p_opt.add_argument("--n", type=int, default=1)
    p_opt.add_argument("--alpha", type=float, default=0.5)
    p_opt.add_argument("--mode", choices=tuple(_MODES), default=None)
    p_opt.add_argument("--method", choices=("auto", "closed-form", "golden-section"),
                       default="auto")

    p_rad = sub.add_parser("radius", help="numerical radius of a matrix file")
    p_rad.add_argument("--matrix", required=True)
    p_rad.add_argument("--tol", type=float, default=1e-10)
    p_rad.add_argument("--oracle-samples", dest="oracle_samples", type=int, default=None)
    p_rad.add_argument("--seed", type=int, default=0)

    return parser


def _cmd_verify(args) -> int:
    config = EnsembleConfig(ensemble=args.ensemble, dim=args.dim,
                            trials=args.trials, seed=args.seed)
    report = run_suite(config, bounds=args.bounds, chains=args.chains,
                       lambda_grid=args.lambda_grid, r=args.r, n=args.n,
                       alpha=args.alpha, parallel=args.parallel)
    emit_report(report, args.format, args.out)
    print(f"{report.violations} violation(s) in {len(report.bound_rows)} bound rows "
          f"and {len(report.chain_rows)} chain rows -> {args.out}")
    return 0 if report.violations == 0 else 1


def _result_dict(res) -> dict:
    return {
        "bound": res.bound_name,
        "mode": res.mode,
        "lambda": res.params.lam,
        "r": res.params.r,
        "n": res.params.n,
        "alpha": res.params.alpha,
        "exponent_p": res.exponent_p,
        "w_power": res.w_power_value,
        "rhs": res.rhs_value,
        "slack": res.slack,
        "holds": res.holds,
    }


def _cmd_bound(args) -> int:
    t = jsonio.load_matrix(args.matrix)
    s = jsonio.load_matrix(args.matrix2) if args.matrix2 else None
    params = BoundParams(lam=args.lam, r=args.r, n=args.n, alpha=args.alpha)
    mode = _MODES[args.mode] if args.mode else None
    results = evaluate_bound(args.bound, t, s, params, mode=mode)
    print(jsonio.dumps({"results": [_result_dict(res) for res in results]}))
    return 0 if all(res.holds for res in results) else 1


def _cmd_optimize(args) -> int:
    t = jsonio.load_matrix(args.matrix)
    s = jsonio.load_matrix(args.matrix2) if args.matrix2 else None
    mode = _MODES[args.mode] if args.mode else None
    opt = optimize_lambda(args.bound, t, s, r=args.r, n=args.n,
                          alpha=args.alpha, mode=mode, method=args.method)
    print(jsonio.dumps({
        "bound": opt.bound_name,
        "mode": opt.mode,
        "infimum": opt.infimum,
        "lambda_star": opt.lambda_star,
        "boundary": opt.boundary,
    }))
    return 0


def _cmd_radius(args) -> int:
    t = jsonio.load_matrix(args.matrix)
    out = {"radius": numerical_radius(t, args.tol), "tol": args.tol}
    if args.oracle_samples is not None:
        out["oracle"] = numerical_radius_oracle(t, args.oracle_samples, args.seed)
        out["oracle_samples"] = args.oracle_samples
        out["seed"] = args.seed
    print(jsonio.dumps(out))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "bound": _cmd_bound,
        "optimize": _cmd_optimize,
        "radius": _cmd_radius,
    }
    try:
        return handlers[args.command](args)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnknownBoundError, UnknownChainError, InvalidConfigError, ValueError,
            OverflowError) as exc:
        # KeyError subclasses repr() their message; print it bare
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
