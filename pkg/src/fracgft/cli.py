"""Command-line front end: JSON in, JSON (or CSV) out.

Exit codes: 0 success, 1 invalid input, 2 internal error. Errors are written
to stderr as ``{"error": {"code", "message", "field"}}``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__
from .bounds import distortion_function, distortion_operator, radius_convex, radius_starlike
from .classify import ClassParams, extremal, is_member
from .closure import WeightVector, convex_combination, hadamard_with_order
from .errors import DomainError, GFTError
from .fracops import TremblayParams, tremblay, tremblay_derivative
from .series import GapSeries
from .verify import run_suite


class UsageError(GFTError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dumps(payload: Any) -> str:
    # repr-based float output is the shortest string that round-trips exactly
    return json.dumps(payload, separators=(",", ":"), allow_nan=False)


def _load_json(source: str, field: str) -> Any:
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {source}: {exc.strerror}", field) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed JSON in {source}: {exc.msg}", field) from None


def _series(source: str, field: str = "series") -> GapSeries:
    return GapSeries.from_dict(_load_json(source, field))


def _params(args) -> ClassParams:
    data: dict[str, Any] = {}
    if args.params:
        data.update(_load_json(args.params, "params"))
    for name in ("k", "tau", "mu", "delta", "gamma"):
        value = getattr(args, name)
        if value is not None:
            data[name] = value
    return ClassParams.from_dict(data, allow_delta_one=args.allow_delta_one)


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--params", help="ClassParams JSON file ('-' for stdin)")
    p.add_argument("--k", type=int)
    for name in ("tau", "mu", "delta", "gamma"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--allow-delta-one", action="store_true", help="admit delta = 1")


def cmd_check(args, out) -> None:
    m = is_member(_series(args.series), _params(args))
    out.write(_dumps({"member": m.member, "functional": m.functional, "margin": m.margin}) + "\n")


def cmd_extremal(args, out) -> None:
    out.write(_dumps(extremal(_params(args)).to_dict()) + "\n")


def cmd_transform(args, out) -> None:
    f = _series(args.series)
    tp = TremblayParams(args.tau, args.mu)
    image = (tremblay_derivative if args.derivative else tremblay)(f, tp)
    payload = {
        "head": image.head,
        "head_power": image.head_power,
        "terms": [{"power": e, "c": c} for e, c in image.terms.items()],
    }
    out.write(_dumps(payload) + "\n")


def cmd_distortion(args, out) -> None:
    p = _params(args)
    operator = args.beta is not None or args.alpha_op is not None
    if operator and (args.beta is None or args.alpha_op is None):
        raise DomainError("--beta and --alpha-op must be given together", "beta")

    def envelope(r):
        if operator:
            return distortion_operator(p, args.beta, args.alpha_op, r)
        return distortion_function(p, r)

    if args.emit_csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["r", "lo", "hi"])
        for r in np.linspace(0.0, args.r_max, args.points):
            iv = envelope(float(r))
            writer.writerow([repr(float(r)), repr(iv.lo), repr(iv.hi)])
        return
    if args.r is None:
        raise DomainError("--r is required unless --emit-csv is given", "r")
    iv = envelope(args.r)
    out.write(_dumps({"lo": iv.lo, "hi": iv.hi}) + "\n")


def cmd_radius(args, out) -> None:
    fn = radius_starlike if args.kind == "starlike" else radius_convex
    res = fn(_params(args), args.alpha)
    out.write(_dumps({"r": res.r, "nu_star": res.nu_star, "capped": res.capped}) + "\n")


def cmd_hadamard(args, out) -> None:
    p = _params(args)
    omega, xi = hadamard_with_order(_series(args.series), _series(args.series2, "series2"), p)
    payload = {"omega": omega.to_dict(), "xi": xi, "member_at_xi": is_member(omega, p, order=xi).member}
    out.write(_dumps(payload) + "\n")


def cmd_combine(args, out) -> None:
    fs = [_series(s) for s in args.series]
    if args.eta is not None:
        if len(fs) != 2 or args.weights:
            raise DomainError("--eta needs exactly two --series and no --weights", "eta")
        if not 0.0 <= args.eta <= 1.0:
            raise DomainError(f"eta must lie in [0, 1], got {args.eta!r}", "eta")
        weights = (1.0 - args.eta, args.eta)
    elif args.weights:
        try:
            weights = tuple(float(x) for x in args.weights.split(","))
        except ValueError:
            raise DomainError("weights must be comma-separated numbers", "weights") from None
    else:
        weights = tuple(1.0 / len(fs) for _ in fs)
    out.write(_dumps(convex_combination(fs, WeightVector(weights)).to_dict()) + "\n")


def cmd_verify(args, out) -> None:
    report = run_suite(args.suite, args.seed)
    text = _dumps(report) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        clean = "clean" if not report["violations"] else f"{len(report['violations'])} violations"
        print(f"{args.suite}: {report['cases']} cases, {clean}", file=sys.stderr)
    else:
        out.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracgft", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="membership decision for a series")
    p.add_argument("--series", required=True)
    _add_params(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("extremal", help="extremal function of a class")
    _add_params(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("transform", help="Tremblay operator image of a series")
    p.add_argument("--series", required=True)
    p.add_argument("--tau", type=float, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--derivative", action="store_true", help="emit the image's derivative")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("distortion", help="distortion envelope at |z| = r")
    _add_params(p)
    p.add_argument("--r", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--alpha-op", type=float)
    p.add_argument("--emit-csv", action="store_true", help="write an (r, lo, hi) sweep as CSV")
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--r-max", type=float, default=0.99)
    p.set_defaults(func=cmd_distortion)

    p = sub.add_parser("radius", help="radius of starlikeness or convexity")
    _add_params(p)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--kind", choices=("starlike", "convex"), default="starlike")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("hadamard", help="modified Hadamard product and its order")
    p.add_argument("--series", required=True)
    p.add_argument("--series2", required=True)
    _add_params(p)
    p.set_defaults(func=cmd_hadamard)

    p = sub.add_parser("combine", help="convex combination of series")
    p.add_argument("--series", action="append", required=True)
    p.add_argument("--weights", help="comma-separated weights summing to 1")
    p.add_argument("--eta", type=float, help="segment parameter for two series")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("verify", help="run seeded numeric verification suites")
    p.add_argument("--suite", choices=("all", "membership", "radius", "distortion", "fracops"), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        args.func(args, out)
    except GFTError as exc:
        print(_dumps({"error": exc.to_dict()}), file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(_dumps({"error": {"code": "internal", "message": str(exc), "field": None}}), file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
