"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import serialize
from .errors import AlpertError, ShapeMismatch
from .fourier import sample_csv
from .mra import DecomposedSignal, PiecewiseLegendreSignal, decompose, reconstruct
from .ratmath import DEFAULT_PRECISION, Matrix
from .scaling import build_scaling
from .verify import format_table, run_all
from .wavelet import build_wavelet, eval_wavelet, hat_d_factor

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _precision(text: str) -> int:
    v = _positive_int(text)
    if v < 53:
        raise argparse.ArgumentTypeError("precision must be at least 53 bits")
    return v


def _default_precision() -> int:
    env = os.environ.get("ALPERT_PRECISION")
    if env is None:
        return DEFAULT_PRECISION
    try:
        return _precision(env)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"ALPERT_PRECISION: {exc}")


def build_parser(default_prec: int = DEFAULT_PRECISION) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_precision, default=default_prec, metavar="BITS",
                        help="working precision for floating checks (default: $ALPERT_PRECISION or 128)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    ap = argparse.ArgumentParser(prog="alpert", description="Alpert multiwavelets via Legendre polynomials.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scaling", parents=[common], help="refinement matrices C_-1, C_1")
    p.add_argument("-n", "--multiplicity", type=_positive_int, required=True)
    p.add_argument("--exact", action="store_true", help="emit exact surd entries")

    p = sub.add_parser("wavelet", parents=[common], help="wavelet matrices D_-1, D_1")
    p.add_argument("-n", "--multiplicity", type=_positive_int, required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--factored", action="store_true", help="emit diag + rational core form of D_1")

    p = sub.add_parser("verify", parents=[common], help="run all consistency checks")
    p.add_argument("--n-max", "-n", dest="n_max", type=_positive_int, default=4)
    p.add_argument("--tol", type=float, default=1e-25)

    p = sub.add_parser("transform", parents=[common], help="decompose or reconstruct a signal file")
    p.add_argument("input")
    p.add_argument("--levels", type=_nonneg_int, default=None)
    p.add_argument("--direction", choices=("decompose", "reconstruct"), default="decompose")

    p = sub.add_parser("eval", parents=[common], help="sample f_k^n on [-1, 1] to CSV")
    p.add_argument("-n", "--multiplicity", type=_positive_int, required=True)
    p.add_argument("-k", type=_positive_int, required=True)
    p.add_argument("--points", type=_positive_int, default=201)

    p = sub.add_parser("fourier", parents=[common], help="sample the Fourier transform of f_k^n to CSV")
    p.add_argument("-n", "--multiplicity", type=_positive_int, required=True)
    p.add_argument("-k", type=_positive_int, required=True)
    p.add_argument("--tmin", type=float, default=-20.0)
    p.add_argument("--tmax", type=float, default=20.0)
    p.add_argument("--points", type=_positive_int, default=81)
    return ap


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8") as fh:
        fh.write(text)


def _matrices_doc(n: int, named: dict, exact: bool, fmt: str) -> str:
    if fmt == "csv":
        return serialize.matrices_to_csv(named, exact)
    doc = {"n": n}
    doc.update({k: serialize.matrix_to_json(m, exact) for k, m in named.items()})
    return serialize.dumps(doc)


def cmd_scaling(args) -> int:
    pair = build_scaling(args.multiplicity)
    _emit(_matrices_doc(pair.n, {"c_minus": pair.c_minus, "c_plus": pair.c_plus}, args.exact, args.format),
          args.output)
    return EXIT_OK


def cmd_wavelet(args) -> int:
    pair = build_wavelet(args.multiplicity)
    if args.factored:
        diag, core = hat_d_factor(pair)
        if args.format == "csv":
            text = serialize.matrices_to_csv({"diag": Matrix([[d] for d in diag]), "core": core}, exact=True)
        else:
            text = serialize.dumps(serialize.factored_to_json(pair.n, diag, core))
    else:
        text = _matrices_doc(pair.n, {"d_minus": pair.d_minus, "d_plus": pair.d_plus}, args.exact, args.format)
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_all(args.n_max, args.precision, args.tol)
    if args.format == "json":
        text = serialize.dumps([{"check": r.name, "passed": bool(r.passed), "max_deviation": r.max_deviation,
                                 "exact": r.exact, "detail": r.detail} for r in results])
    else:
        text = format_table(results)
    _emit(text, args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def _read_signal(path: str):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        if path.endswith(".csv"):
            return serialize.signal_from_csv(text)
        return serialize.signal_from_json(json.loads(text))
    except (ShapeMismatch, ValueError) as exc:
        raise InputError(f"{path}: {exc}")


def cmd_transform(args) -> int:
    obj = _read_signal(args.input)
    if args.direction == "decompose":
        if not isinstance(obj, PiecewiseLegendreSignal):
            raise UsageError("decompose needs a plain signal (no 'details' key)")
        result = decompose(obj, args.levels)
        text = (serialize.decomposition_to_csv(result) if args.format == "csv"
                else serialize.dumps(serialize.decomposition_to_json(result)))
    else:
        if not isinstance(obj, DecomposedSignal):
            raise UsageError("reconstruct needs a decomposition (with a 'details' key)")
        result = reconstruct(obj)
        text = (serialize.signal_to_csv(result) if args.format == "csv"
                else serialize.dumps(serialize.signal_to_json(result)))
    _emit(text, args.output)
    return EXIT_OK


def _check_k(args) -> None:
    if args.k > args.multiplicity:
        raise UsageError(f"-k {args.k} exceeds the multiplicity {args.multiplicity}")


def cmd_eval(args) -> int:
    _check_k(args)
    ts = np.linspace(-1.0, 1.0, args.points)
    vals = eval_wavelet(args.multiplicity, args.k, ts)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "value"])
    for t, v in zip(np.atleast_1d(ts), np.atleast_1d(vals)):
        w.writerow([repr(float(t)), repr(float(v))])
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def cmd_fourier(args) -> int:
    _check_k(args)
    ts = np.linspace(args.tmin, args.tmax, args.points)
    _emit(sample_csv(args.multiplicity, args.k, ts), args.output)
    return EXIT_OK


COMMANDS = {"scaling": cmd_scaling, "wavelet": cmd_wavelet, "verify": cmd_verify,
            "transform": cmd_transform, "eval": cmd_eval, "fourier": cmd_fourier}


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_precision())
    except UsageError as exc:
        print(f"alpert: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"alpert: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, InputError) as exc:
        print(f"alpert: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ShapeMismatch, AlpertError, ValueError) as exc:
        print(f"alpert: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
