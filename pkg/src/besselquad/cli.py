"""Command line front end.

Subcommands: single, squared, product-same, product-diff evaluate one
definite integral; weighted integrates a tabulated prefactor read from
CSV against Bessel factors; table sweeps a parameter grid from a JSON
config file; verify runs the translated-identity suite.

Output schema (json/csv/plain all carry the same fields):

    {"value": ..., "abs_error_est": ..., "strategy": ..., "nodes": ..., "seconds": ...}

Exit codes: 0 success, 2 usage or domain error, 3 a degenerate or
hazardous analytic path with fallback disallowed, 4 quadrature did not
converge.  The environment variable BESSELQUAD_TOL overrides the
default tolerance.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
import time

from .errors import (
    DomainError,
    NearDegenerateError,
    NotConvergedError,
    QuadratureRecommendedError,
)
from .ordinary_bessel import default_suite, verify_identity
from .quadrature import DEFAULT_TOL, MAX_EVALS, definite_integral
from .types import IntegralSpec
from .weighted import build_interpolant, integrate_product, integrate_single

RESIDUAL_THRESHOLD = 1e-8


def _default_tol() -> float:
    return float(os.environ.get("BESSELQUAD_TOL", DEFAULT_TOL))


def _add_common(p, needs_interval=True):
    p.add_argument("--tol", type=float, default=None, help="tolerance (default from BESSELQUAD_TOL or 1e-10)")
    p.add_argument("--strategy", choices=("auto", "recursion", "quadrature"), default="auto")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p.add_argument("--max-evals", type=int, default=MAX_EVALS, help="cap on quadrature evaluations")
    if needs_interval:
        p.add_argument("--a", type=float, required=True, help="lower limit")
        p.add_argument("--b", type=float, required=True, help="upper limit")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="besselquad",
        description="Definite integrals of monomials times spherical Bessel functions",
    )
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("single", help="int x^n j_l(alpha x) dx")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    _add_common(p)

    p = sub.add_parser("squared", help="int x^n j_l(alpha x)^2 dx")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    _add_common(p)

    p = sub.add_parser("product-same", help="int x^n j_l(alpha x) j_l(beta x) dx")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    _add_common(p)

    p = sub.add_parser("product-diff", help="int x^n j_k(alpha x) j_l(beta x) dx")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    _add_common(p)

    p = sub.add_parser("weighted", help="int f(x) * Bessel factors dx, f sampled in a CSV")
    p.add_argument("--csv", required=True, help="two columns x,f; header optional")
    p.add_argument("--degree", type=int, choices=(1, 3), default=3)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--k", type=int, default=None, help="second order (product form)")
    p.add_argument("--beta", type=float, default=None, help="second scale (product form)")
    _add_common(p)

    p = sub.add_parser("table", help="sweep a grid of parameters from a JSON config")
    p.add_argument("--config", required=True, help="JSON grid description")
    _add_common(p, needs_interval=False)

    p = sub.add_parser("verify", help="run the translated-identity suite")
    p.add_argument("--suite", choices=("appendix",), default="appendix")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p.add_argument("--tol", type=float, default=None)
    return ap


def _spec_from_args(args) -> IntegralSpec:
    if args.subcommand == "single":
        return IntegralSpec("I", args.n, args.l, args.alpha)
    if args.subcommand == "squared":
        return IntegralSpec("H", args.n, args.l, args.alpha)
    if args.subcommand == "product-same":
        return IntegralSpec("K", args.n, args.l, args.alpha, beta=args.beta)
    return IntegralSpec("L", args.n, args.l, args.alpha, k=args.k, beta=args.beta)


def _strategy_label(result) -> str:
    return "+".join(f"{kind}[{lo:g},{hi:g}]" for kind, lo, hi in result.segments)


def _evaluate(args) -> dict:
    spec = _spec_from_args(args)
    tol = args.tol if args.tol is not None else _default_tol()
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    t0 = time.perf_counter()
    res = definite_integral(
        spec,
        args.a,
        args.b,
        tol=tol,
        strategy=args.strategy,
        max_evals=args.max_evals,
        raise_on_nonconverged=True,
    )
    dt = time.perf_counter() - t0
    return {
        "value": res.value,
        "abs_error_est": res.error_estimate,
        "strategy": _strategy_label(res),
        "nodes": res.evaluations,
        "seconds": dt,
    }


def _read_samples(path: str):
    samples = []
    with open(path) as fh:
        for line in fh:
            parts = line.strip().replace(",", " ").split()
            if len(parts) < 2:
                continue
            try:
                samples.append((float(parts[0]), float(parts[1])))
            except ValueError:
                continue  # header line
    if len(samples) < 2:
        raise DomainError(f"{path}: need at least two numeric x,f rows")
    return samples


def _weighted(args) -> dict:
    tol = args.tol if args.tol is not None else _default_tol()
    interp = build_interpolant(_read_samples(args.csv), degree=args.degree)
    t0 = time.perf_counter()
    if args.k is None and args.beta is None:
        value = integrate_single(interp, args.l, args.alpha, args.a, args.b, tol=tol)
    elif args.k is None or args.beta is None:
        raise DomainError("product form needs both --k and --beta")
    else:
        value = integrate_product(
            interp, args.k, args.l, args.alpha, args.beta, args.a, args.b, tol=tol
        )
    dt = time.perf_counter() - t0
    return {
        "value": float(value),
        "abs_error_est": tol,
        "strategy": "auto(per-piece)",
        "nodes": 0,
        "seconds": dt,
    }


def _table(args) -> list:
    with open(args.config) as fh:
        cfg = json.load(fh)
    family = cfg["family"]
    if family not in ("I", "H", "K", "L"):
        raise DomainError(f"table config: unknown family {family!r}")
    tol = args.tol if args.tol is not None else float(cfg.get("tol", _default_tol()))
    a, b = float(cfg["a"]), float(cfg["b"])

    def axis(name, default=None):
        v = cfg.get(name, default)
        if v is None:
            return [None]
        return v if isinstance(v, list) else [v]

    ns = axis("n")
    ks = axis("k") if family == "L" else [None]
    ls = axis("l")
    alphas = axis("alpha", 1.0)
    betas = axis("beta") if family in ("K", "L") else [None]
    rows = []
    for n, k, l, alpha, beta in itertools.product(ns, ks, ls, alphas, betas):
        spec = IntegralSpec(family, int(n), int(l), float(alpha),
                            k=None if k is None else int(k),
                            beta=None if beta is None else float(beta))
        t0 = time.perf_counter()
        res = definite_integral(
            spec, a, b, tol=tol, strategy=args.strategy,
            max_evals=args.max_evals, raise_on_nonconverged=True,
        )
        dt = time.perf_counter() - t0
        row = {"family": family, "n": n, "k": k, "l": l, "alpha": alpha, "beta": beta,
               "value": res.value, "abs_error_est": res.error_estimate,
               "strategy": _strategy_label(res), "nodes": res.evaluations, "seconds": dt}
        rows.append(row)
    return rows


def _verify(args) -> tuple:
    tol = args.tol if args.tol is not None else 1e-11
    rows = []
    ok = True
    for identity, (a, b) in default_suite():
        r = verify_identity(identity, a, b, tol)
        good = r < RESIDUAL_THRESHOLD
        ok = ok and good
        rows.append(
            {
                "identity": identity.id,
                "n": identity.n,
                "k": identity.k,
                "l": identity.l,
                "alpha": identity.alpha,
                "beta": identity.beta,
                "a": a,
                "b": b,
                "residual": r,
                "pass": good,
            }
        )
    return ok, rows


def _emit(payload, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        json.dump(payload, stream)
        stream.write("\n")
        return
    rows = payload if isinstance(payload, list) else [payload]
    if not rows:
        return
    keys = list(rows[0].keys())
    if fmt == "csv":
        stream.write(",".join(keys) + "\n")
        for row in rows:
            stream.write(",".join(_cell(row[k]) for k in keys) + "\n")
        return
    for row in rows:
        for k in keys:
            stream.write(f"{k} = {_cell(row[k])}\n")
        if len(rows) > 1:
            stream.write("\n")


def _cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def run(args) -> tuple:
    """Execute a parsed command; returns (exit_code, payload)."""
    try:
        if args.subcommand in ("single", "squared", "product-same", "product-diff"):
            return 0, _evaluate(args)
        if args.subcommand == "weighted":
            return 0, _weighted(args)
        if args.subcommand == "table":
            return 0, _table(args)
        ok, rows = _verify(args)
        return (0 if ok else 1), rows
    except DomainError as exc:
        return 2, {"error": "domain", "message": str(exc)}
    except (NearDegenerateError, QuadratureRecommendedError) as exc:
        return 3, {"error": "near-degenerate", "message": str(exc)}
    except NotConvergedError as exc:
        payload = {"error": "not-converged", "message": str(exc)}
        if exc.result is not None:
            payload["value"] = exc.result.value
            payload["abs_error_est"] = exc.result.error_estimate
        return 4, payload
    except OSError as exc:
        return 2, {"error": "io", "message": str(exc)}
    except (ValueError, KeyError) as exc:
        # malformed config files and similar input shape problems
        return 2, {"error": "config", "message": str(exc)}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, payload = run(args)
    _emit(payload, getattr(args, "format", "plain"))
    return code


if __name__ == "__main__":
    sys.exit(main())
