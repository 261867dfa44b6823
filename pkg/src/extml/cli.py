"""Command-line surface: evaluate, tabulate, verify.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 non-convergence,
4 I/O error.  The MLX_TOL environment variable overrides the default
relative tolerance (series and quadrature); a --config file of
``key=value`` lines overrides the quadrature defaults on top of that.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Callable

from .errors import AccuracyLossError, ConvergenceError, DomainError, EvaluationError
from .extbeta import ExtendedBetaArgs, extended_beta, extended_gamma
from .fractional import FracOrder, rl_further_extended
from .mittag import (
    ExtendedMLParams,
    ml_classic,
    ml_ext_series,
    ml_extended_oy,
    ml_prabhakar,
    ml_shukla,
    ml_two_param,
)
from .quadrature import QuadratureOptions
from .special import SeriesControl
from .verify import SUITE_NAMES, run_suite

__all__ = ["OutputRecord", "main", "entry"]


class _UsageError(Exception):
    pass


@dataclass(frozen=True)
class OutputRecord:
    """One evaluation: function name, named inputs, value and diagnostics.

    Serializes to a single JSON object or CSV row; floats use their
    shortest round-trip representation, so finite doubles survive a
    round trip bit-exactly.
    """

    function: str
    inputs: dict[str, float]
    value: float
    error_estimate: float
    converged: bool

    def to_json(self) -> str:
        return json.dumps({
            "function": self.function,
            "inputs": self.inputs,
            "value": self.value,
            "error_estimate": self.error_estimate,
            "converged": self.converged,
        })

    def csv_header(self) -> list[str]:
        return ["function", *self.inputs.keys(), "value", "error_estimate", "converged"]

    def csv_row(self) -> list[str]:
        return [
            self.function,
            *(repr(v) for v in self.inputs.values()),
            repr(self.value),
            repr(self.error_estimate),
            "true" if self.converged else "false",
        ]


@dataclass(frozen=True)
class _Fn:
    flags: tuple[str, ...]
    scan: str
    run: Callable[[dict, SeriesControl, QuadratureOptions], float]


def _power(a: float) -> Callable[[float], float]:
    if a <= -1.0:
        raise DomainError(f"power exponent must be > -1 for an integrable input, got a={a}")
    return lambda t: t**a


REGISTRY: dict[str, _Fn] = {
    "ml": _Fn(("rho", "z"), "z",
              lambda v, ctl, opts: ml_classic(v["rho"], v["z"], ctl)),
    "ml2": _Fn(("rho", "sigma", "z"), "z",
               lambda v, ctl, opts: ml_two_param(v["rho"], v["sigma"], v["z"], ctl)),
    "prabhakar": _Fn(("rho", "sigma", "delta", "z"), "z",
                     lambda v, ctl, opts: ml_prabhakar(v["rho"], v["sigma"], v["delta"], v["z"], ctl)),
    "shukla": _Fn(("rho", "sigma", "delta", "q", "z"), "z",
                  lambda v, ctl, opts: ml_shukla(v["rho"], v["sigma"], v["delta"], v["q"], v["z"], ctl)),
    "oy": _Fn(("rho", "sigma", "delta", "c", "p", "z"), "z",
              lambda v, ctl, opts: ml_extended_oy(
                  v["rho"], v["sigma"], v["delta"], v["c"], v["z"], v["p"], ctl, opts)),
    "mlx": _Fn(("alpha", "beta", "gamma", "c", "lam", "rho", "p", "z"), "z",
               lambda v, ctl, opts: ml_ext_series(
                   ExtendedMLParams(v["alpha"], v["beta"], v["gamma"], v["c"],
                                    v["lam"], v["rho"], v["p"]), v["z"], ctl, opts)),
    "beta-ext": _Fn(("x", "y", "p", "lam", "rho"), "p",
                    lambda v, ctl, opts: extended_beta(
                        ExtendedBetaArgs(v["x"], v["y"], v["p"], v["lam"], v["rho"]), opts)),
    "gamma-ext": _Fn(("s", "lam", "rho"), "s",
                     lambda v, ctl, opts: extended_gamma(v["s"], v["lam"], v["rho"], opts)),
    "frac": _Fn(("a", "mu", "x", "p", "lam", "rho"), "x",
                lambda v, ctl, opts: rl_further_extended(
                    _power(v["a"]), v["x"], FracOrder(v["mu"], v["p"], v["lam"], v["rho"]), opts)),
}

_ALL_FLAGS = ("alpha", "beta", "gamma", "c", "lam", "rho", "p", "z",
              "s", "mu", "delta", "sigma", "q", "x", "y", "a")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    ap = _Parser(prog="extml", description="Extended Mittag-Leffler function toolkit")
    ap.add_argument("--config", help="key=value file overriding quadrature defaults")
    sub = ap.add_subparsers(dest="command")

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("function", help=f"one of {', '.join(REGISTRY)}")
    for f in _ALL_FLAGS:
        ev.add_argument(f"--{f}", type=float)
    ev.add_argument("--format", choices=("json", "csv"), default="json")

    tb = sub.add_parser("table", help="tabulate a function over an argument grid")
    tb.add_argument("function", help=f"one of {', '.join(REGISTRY)}")
    for f in _ALL_FLAGS:
        tb.add_argument(f"--{f}", type=float)
    tb.add_argument("--z-start", type=float, required=True,
                    help="grid start (the scan variable: z for the ML family, "
                         "p for beta-ext, s for gamma-ext, x for frac)")
    tb.add_argument("--z-end", type=float, required=True)
    tb.add_argument("--steps", type=int, required=True)
    tb.add_argument("--out", required=True)
    tb.add_argument("--format", choices=("csv", "json"), default="csv")

    vf = sub.add_parser("verify", help="run an identity-verification suite")
    vf.add_argument("--suite", default="all",
                    help=f"one of all, {', '.join(SUITE_NAMES)}")
    vf.add_argument("--tol", type=float, default=None)
    vf.add_argument("--seed", type=int, default=7)
    vf.add_argument("--report", choices=("text", "json"), default="text")

    return ap


def _load_config(path: str) -> dict[str, float]:
    keys = {"rel_tol": float, "abs_tol": float, "max_level": int, "max_evals": int}
    out: dict[str, float] = {}
    try:
        with open(path) as fh:
            for ln, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise _UsageError(f"{path}:{ln}: expected key=value, got {line!r}")
                key, _, val = line.partition("=")
                key = key.strip()
                if key not in keys:
                    raise _UsageError(f"{path}:{ln}: unknown config key {key!r}")
                out[key] = keys[key](val.strip())
    except OSError as exc:
        raise _UsageError(f"cannot read config {path}: {exc}") from exc
    except ValueError as exc:
        raise _UsageError(f"bad value in config {path}: {exc}") from exc
    return out


def _tolerances(config_path: str | None) -> tuple[SeriesControl, QuadratureOptions]:
    quad: dict = {}
    series: dict = {}
    env = os.environ.get("MLX_TOL")
    if env is not None:
        try:
            rel = float(env)
        except ValueError as exc:
            raise _UsageError(f"MLX_TOL is not a number: {env!r}") from exc
        quad["rel_tol"] = rel
        series["rel_tol"] = rel
    if config_path:
        quad.update(_load_config(config_path))
    try:
        return SeriesControl(**series), QuadratureOptions(**quad)
    except DomainError as exc:
        raise _UsageError(str(exc)) from exc


def _collect_inputs(ns, fn: _Fn, override: dict[str, float] | None = None) -> dict[str, float]:
    inputs: dict[str, float] = {}
    for flag in fn.flags:
        val = (override or {}).get(flag, getattr(ns, flag))
        if val is None:
            raise _UsageError(f"missing required flag --{flag} for {ns.function}")
        inputs[flag] = float(val)
    return inputs


def _evaluate(ns, ctl, opts, override=None) -> OutputRecord:
    fn = REGISTRY[ns.function]
    inputs = _collect_inputs(ns, fn, override)
    value = fn.run(inputs, ctl, opts)
    err = max(opts.rel_tol * abs(value), opts.abs_tol)
    return OutputRecord(ns.function, inputs, value, err, True)


def _cmd_eval(ns, ctl, opts) -> int:
    rec = _evaluate(ns, ctl, opts)
    if ns.format == "json":
        print(rec.to_json())
    else:
        print(",".join(rec.csv_header()))
        print(",".join(rec.csv_row()))
    return 0


def _cmd_table(ns, ctl, opts) -> int:
    fn = REGISTRY[ns.function]
    if ns.steps < 2:
        raise _UsageError(f"--steps must be >= 2, got {ns.steps}")
    if not ns.z_start < ns.z_end:
        raise _UsageError(f"--z-start must be < --z-end, got {ns.z_start} and {ns.z_end}")
    records = []
    for i in range(ns.steps):
        zi = ns.z_start + (ns.z_end - ns.z_start) * i / (ns.steps - 1)
        records.append(_evaluate(ns, ctl, opts, override={fn.scan: zi}))
    try:
        with open(ns.out, "w", newline="") as fh:
            if ns.format == "csv":
                writer = csv.writer(fh)
                writer.writerow(records[0].csv_header())
                for rec in records:
                    writer.writerow(rec.csv_row())
            else:
                fh.write("[\n" + ",\n".join(r.to_json() for r in records) + "\n]\n")
    except OSError as exc:
        print(f"error: cannot write {ns.out}: {exc}", file=sys.stderr)
        return 4
    return 0


def _cmd_verify(ns, ctl, opts) -> int:
    if ns.suite != "all" and ns.suite not in SUITE_NAMES:
        raise _UsageError(f"unknown suite {ns.suite!r}; choose from all, {', '.join(SUITE_NAMES)}")
    checks = sorted(run_suite(ns.suite, ns.seed, ns.tol, ctl, opts), key=lambda c: c.name)
    hard_fail = [c for c in checks if not c.report.passed and not c.informational]

    if ns.report == "json":
        payload = [{
            "name": c.name,
            "lhs": c.report.lhs,
            "rhs": c.report.rhs,
            "abs_gap": c.report.abs_gap,
            "rel_gap": c.report.rel_gap,
            "tol": c.report.tol,
            "passed": c.report.passed,
            "informational": c.informational,
            "note": c.note,
        } for c in checks]
        print(json.dumps(payload, indent=1))
    else:
        for c in checks:
            status = "PASS" if c.report.passed else "FAIL"
            tag = " [informational]" if c.informational else ""
            print(f"{status}{tag} {c.name}  lhs={c.report.lhs!r} rhs={c.report.rhs!r} "
                  f"rel_gap={c.report.rel_gap:.3e} tol={c.report.tol:.1e}")
            if c.note:
                print(f"      note: {c.note}")
        n_pass = sum(c.report.passed for c in checks)
        n_info_fail = sum(not c.report.passed and c.informational for c in checks)
        print(f"summary: {len(checks)} checks, {n_pass} passed, {len(hard_fail)} failed"
              f" ({n_info_fail} informational failures do not affect the exit code)")
    return 0 if not hard_fail else 3


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        if ns.command is None:
            raise _UsageError("a command is required: eval, table or verify")
        if ns.command in ("eval", "table") and ns.function not in REGISTRY:
            raise _UsageError(
                f"unknown function {ns.function!r}; choose from {', '.join(REGISTRY)}")
        ctl, opts = _tolerances(ns.config)
        if ns.command == "eval":
            return _cmd_eval(ns, ctl, opts)
        if ns.command == "table":
            return _cmd_table(ns, ctl, opts)
        return _cmd_verify(ns, ctl, opts)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, AccuracyLossError, EvaluationError) as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
