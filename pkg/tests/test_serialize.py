import json
from fractions import Fraction as F

import numpy as np
import pytest

from alpert import serialize
from alpert.errors import ShapeMismatch
from alpert.mra import PiecewiseLegendreSignal, decompose
from alpert.ratmath import Matrix, Surd
from alpert.scaling import build_scaling
from alpert.wavelet import build_wavelet, hat_d_factor


def test_surd_json():
    e = serialize.surd_to_json(Surd(F(-7, 256), 19))
    assert (e["num"], e["den"], e["radicand"]) == (-7, 256, 19)
    assert serialize.surd_from_json(e) == Surd(F(-7, 256), 19)
    assert serialize.surd_from_json({"num": 3, "den": 4, "radicand": 1}) == F(3, 4)
    with pytest.raises(ValueError):
        serialize.surd_from_json({"num": 1, "den": 2})
    with pytest.raises(ValueError):
        serialize.surd_from_json({"num": 1, "den": 2, "radicand": 0})


@pytest.mark.parametrize("n", [1, 6, 10])
def test_matrix_roundtrip_exact(n):
    for m in (build_scaling(n).c_minus, build_wavelet(n).d_plus):
        text = serialize.dumps(serialize.matrix_to_json(m))
        assert serialize.matrix_from_json(json.loads(text)) == m


def test_float_matrix():
    m = Matrix([[Surd(F(1, 2), 3)]])
    assert serialize.matrix_to_json(m, exact=False) == [[pytest.approx(0.8660254037844386)]]


def test_csv_matrices():
    pair = build_scaling(2)
    text = serialize.matrices_to_csv({"c_minus": pair.c_minus}, exact=True)
    rows = text.splitlines()
    assert rows[0] == "name,row,col,num,den,radicand,float"
    assert rows[3].startswith("c_minus,1,0,-1,2,3,")
    text = serialize.matrices_to_csv({"c_minus": pair.c_minus}, exact=False)
    assert text.splitlines()[0] == "name,row,col,value"


def test_factored_json():
    diag, core = hat_d_factor(build_wavelet(2))
    doc = serialize.factored_to_json(2, diag, core)
    assert doc["n"] == 2
    assert serialize.surd_from_json(doc["diag"][1]) == Surd(F(3, 4), 2)
    assert serialize.matrix_from_json(doc["core"]) == core


def test_signal_roundtrips():
    s = PiecewiseLegendreSignal(3, 2, np.random.default_rng(0).standard_normal((4, 3)))
    back = serialize.signal_from_json(json.loads(serialize.dumps(serialize.signal_to_json(s))))
    assert np.array_equal(back.blocks, s.blocks) and back.level == 2
    back = serialize.signal_from_csv(serialize.signal_to_csv(s))
    assert np.array_equal(back.blocks, s.blocks)
    d = decompose(s, 1)
    back = serialize.signal_from_json(serialize.decomposition_to_json(d))
    assert back.coarse.level == 1 and len(back.details) == 1
    assert np.array_equal(back.details[0], d.details[0])
    assert serialize.decomposition_to_csv(d).splitlines()[0] == "kind,level,block,c0,c1,c2"


def test_signal_errors():
    with pytest.raises(ShapeMismatch):
        serialize.signal_from_json({"n": 2, "level": 1, "blocks": [[1, 2]]})
    with pytest.raises(ShapeMismatch):
        serialize.signal_from_json({"level": 0})
    with pytest.raises(ShapeMismatch):
        serialize.signal_from_csv("block,c0\n0,1\n1,2\n2,3\n")
    with pytest.raises(ShapeMismatch):
        serialize.signal_from_csv("x,y\n")
