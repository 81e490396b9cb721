import json
import math
from fractions import Fraction as F

import numpy as np

from alpert import serialize
from alpert.cli import main
from alpert.ratmath import Surd
from alpert.tables import C_MINUS_10, parse_entry


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_scaling_n1(capsys):
    code, out, _ = run(capsys, "scaling", "-n", "1")
    assert code == 0
    assert json.loads(out)["c_minus"] == [[1.0]]


def test_scaling_exact_table(capsys):
    code, out, _ = run(capsys, "scaling", "-n", "10", "--exact")
    assert code == 0
    C = serialize.matrix_from_json(json.loads(out)["c_minus"])
    assert all(C[i, j] == parse_entry(C_MINUS_10[i][j]) for i in range(10) for j in range(10))


def test_bad_multiplicity(capsys):
    assert run(capsys, "scaling", "-n", "0")[0] == 2
    assert run(capsys, "wavelet", "-n", "0")[0] == 2
    assert run(capsys, "scaling", "-n", "x")[0] == 2


def test_wavelet_factored(capsys):
    code, out, _ = run(capsys, "wavelet", "-n", "2", "--factored")
    doc = json.loads(out)
    assert code == 0
    assert [serialize.surd_from_json(d) for d in doc["diag"]] == [Surd(F(1, 2), 6), Surd(F(3, 4), 2)]
    code, out, _ = run(capsys, "wavelet", "-n", "1", "--factored", "--format", "csv")
    assert code == 0 and out.startswith("name,row,col,num,den,radicand,float")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "-n", "4", "--format", "csv")
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("checks passed")
    code, out, _ = run(capsys, "verify", "--n-max", "2")
    assert code == 0 and all(r["passed"] for r in json.loads(out))
    assert run(capsys, "verify", "--tol", "abc")[0] == 2


def test_verify_failure_exit(capsys):
    # an impossible tolerance makes the floating checks fail
    code, out, _ = run(capsys, "verify", "-n", "2", "--tol", "-1", "--format", "csv")
    assert code == 1 and "FAIL" in out


def test_transform_roundtrip(tmp_path, capsys):
    rng = np.random.default_rng(5)
    src = tmp_path / "s.json"
    blocks = rng.standard_normal((8, 2))
    src.write_text(json.dumps({"n": 2, "level": 3, "blocks": blocks.tolist()}))
    dec = tmp_path / "d.json"
    assert run(capsys, "transform", str(src), "-o", str(dec))[0] == 0
    code, out, _ = run(capsys, "transform", str(dec), "--direction", "reconstruct")
    assert code == 0
    assert np.allclose(json.loads(out)["blocks"], blocks, atol=1e-12)


def test_transform_constant_csv(tmp_path, capsys):
    src = tmp_path / "c.csv"
    src.write_text("block,c0,c1\n" + "".join(f"{b},0.5,0\n" for b in range(4)))
    code, out, _ = run(capsys, "transform", str(src), "--format", "csv")
    assert code == 0
    for line in out.splitlines()[1:]:
        if line.startswith("detail"):
            assert all(abs(float(v)) <= 1e-12 for v in line.split(",")[3:])


def test_transform_io_errors(tmp_path, capsys):
    assert run(capsys, "transform", str(tmp_path / "missing.json"))[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "transform", str(bad))[0] == 3


def test_eval_haar(capsys):
    code, out, _ = run(capsys, "eval", "-n", "1", "-k", "1", "--points", "5")
    assert code == 0
    vals = [float(r.split(",")[1]) for r in out.splitlines()[1:]]
    assert all(abs(abs(v) - 1 / math.sqrt(2)) < 1e-15 for v in vals)


def test_fourier_zero(capsys):
    code, out, _ = run(capsys, "fourier", "-n", "2", "-k", "2", "--tmin", "0", "--tmax", "0", "--points", "1")
    assert code == 0
    assert out.splitlines()[1] == "0.0,0.0,0.0"


def test_k_out_of_range(capsys):
    assert run(capsys, "eval", "-n", "2", "-k", "3")[0] == 2
    assert run(capsys, "fourier", "-n", "2", "-k", "3")[0] == 2


def test_precision_env(monkeypatch, capsys):
    monkeypatch.setenv("ALPERT_PRECISION", "20")
    assert run(capsys, "scaling", "-n", "1")[0] == 2
    monkeypatch.setenv("ALPERT_PRECISION", "200")
    assert run(capsys, "verify", "-n", "1")[0] == 0


def test_deterministic(capsys):
    a = run(capsys, "wavelet", "-n", "5", "--exact")[1]
    b = run(capsys, "wavelet", "-n", "5", "--exact")[1]
    assert a == b
