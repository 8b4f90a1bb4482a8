import json
from fractions import Fraction

import pytest

from orbitlim.errors import InputError
from orbitlim.forms import Form, FormsDerivation, LeftMult
from orbitlim.linalg import RatMatrix, Subspace
from orbitlim.normal_cone import Rejected
from orbitlim.serialize import dumps, form_from_json, form_to_json, to_jsonable, vector_from_json


def test_form_roundtrip():
    x, y = Form.variable(2, 0), Form.variable(2, 1)
    f = (x * x).scale(Fraction(3, 4)) - x * y
    data = form_to_json(f)
    assert data[0] == {"coeff": "3/4", "exp": [2, 0]}
    assert form_from_json(data, 2) == f


def test_bad_inputs():
    with pytest.raises(InputError):
        form_from_json([{"coeff": "1", "exp": [1]}], 2)
    with pytest.raises(InputError):
        form_from_json([{"exp": [1, 0]}], 2)
    with pytest.raises(InputError):
        vector_from_json(LeftMult(2, 1), [["a"], ["1"]])


def test_subspace_and_dataclass():
    s = Subspace([(2, 4)], 2)
    assert to_jsonable(s) == {"dim": 1, "ambient_dim": 2, "basis": [["1", "2"]]}
    r = to_jsonable(Rejected(RatMatrix.identity(1), Fraction(1, 2), 0))
    assert r["verdict"] == "Rejected" and r["value"] == "1/2"


def test_dumps_deterministic():
    rep = FormsDerivation(2, 2)
    v = vector_from_json(rep, [{"coeff": "1", "exp": [1, 1]}])
    report = {"b": v, "a": Fraction(-2, 3)}
    out = dumps(report)
    assert out == dumps(dict(reversed(list(report.items()))))
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["a"] == "-2/3"
