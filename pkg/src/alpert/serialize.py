"""JSON / CSV encodings for matrices and signals.

An exact entry is ``{"num": int, "den": int, "radicand": int, "float": float}``
meaning ``num/den * sqrt(radicand)``; the float is informational only.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

import numpy as np

from .errors import ShapeMismatch
from .mra import DecomposedSignal, PiecewiseLegendreSignal
from .ratmath import Matrix, Surd, as_surd


def surd_to_json(x) -> dict:
    s = as_surd(x)
    return {"num": s.coeff.numerator, "den": s.coeff.denominator, "radicand": s.radicand, "float": float(s)}


def surd_from_json(d: dict):
    try:
        q = Fraction(int(d["num"]), int(d["den"]))
        r = int(d["radicand"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed exact entry {d!r}") from exc
    if r < 1:
        raise ValueError(f"radicand must be positive, got {r}")
    s = Surd(q, r)
    return s.coeff if s.radicand == 1 else s


def matrix_to_json(m: Matrix, exact: bool = True) -> list:
    if exact:
        return [[surd_to_json(x) for x in m.row(i)] for i in range(m.rows)]
    return m.to_float()


def matrix_from_json(rows: list) -> Matrix:
    return Matrix([[surd_from_json(x) for x in r] for r in rows])


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def matrices_to_csv(named: dict, exact: bool) -> str:
    """One row per entry: ``name,row,col`` then either ``num,den,radicand,float`` or ``value``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "row", "col"] + (["num", "den", "radicand", "float"] if exact else ["value"]))
    for name, m in named.items():
        for i in range(m.rows):
            for j in range(m.cols):
                x = m[i, j]
                if exact:
                    e = surd_to_json(x)
                    w.writerow([name, i, j, e["num"], e["den"], e["radicand"], repr(e["float"])])
                else:
                    w.writerow([name, i, j, repr(float(x))])
    return buf.getvalue()


def factored_to_json(n: int, diag, core: Matrix) -> dict:
    return {"n": n, "diag": [surd_to_json(x) for x in diag], "core": matrix_to_json(core)}


# --- signals ---------------------------------------------------------------

def signal_to_json(s: PiecewiseLegendreSignal) -> dict:
    return {"n": s.n, "level": s.level, "blocks": s.blocks.tolist()}


def decomposition_to_json(d: DecomposedSignal) -> dict:
    return {"n": d.n, "level": d.level, "coarse": d.coarse.blocks.tolist(),
            "coarse_level": d.coarse.level, "details": [x.tolist() for x in d.details]}


def signal_from_json(obj: dict) -> PiecewiseLegendreSignal | DecomposedSignal:
    """Parse either a plain signal or a decomposition (recognized by its ``details`` key)."""
    try:
        n = int(obj["n"])
        if "details" in obj:
            coarse = PiecewiseLegendreSignal(n, int(obj.get("coarse_level", 0)), np.array(obj["coarse"], dtype=float).reshape(-1, n))
            details = [np.array(x, dtype=float).reshape(-1, n) for x in obj["details"]]
            return DecomposedSignal(n, coarse, details)
        return PiecewiseLegendreSignal(n, int(obj["level"]), np.array(obj["blocks"], dtype=float))
    except (KeyError, TypeError) as exc:
        raise ShapeMismatch(f"malformed signal document: {exc}") from exc
    except ValueError as exc:
        raise ShapeMismatch(str(exc)) from exc


def signal_to_csv(s: PiecewiseLegendreSignal) -> str:
    """Block-major: one line per block holding its ``n`` coefficients."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["block"] + [f"c{j}" for j in range(s.n)])
    for b, row in enumerate(s.blocks):
        w.writerow([b] + [repr(float(x)) for x in row])
    return buf.getvalue()


def signal_from_csv(text: str) -> PiecewiseLegendreSignal:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0][0] != "block":
        raise ShapeMismatch("CSV signal must start with a 'block,c0,..' header")
    n = len(rows[0]) - 1
    data = np.array([[float(x) for x in r[1:]] for r in rows[1:] if r], dtype=float).reshape(-1, n)
    m = data.shape[0]
    level = m.bit_length() - 1
    if m != 2 ** level:
        raise ShapeMismatch(f"block count {m} is not a power of two")
    return PiecewiseLegendreSignal(n, level, data)


def decomposition_to_csv(d: DecomposedSignal) -> str:
    """``kind,level,block,c0..`` rows: the coarse blocks, then details level by level."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "level", "block"] + [f"c{j}" for j in range(d.n)])
    for b, row in enumerate(d.coarse.blocks):
        w.writerow(["coarse", d.coarse.level, b] + [repr(float(x)) for x in row])
    for j, det in enumerate(d.details):
        for b, row in enumerate(det):
            w.writerow(["detail", d.coarse.level + j, b] + [repr(float(x)) for x in row])
    return buf.getvalue()
