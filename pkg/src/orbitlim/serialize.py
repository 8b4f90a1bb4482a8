"""Canonical JSON encoding of reports and decoding of scenario vectors.

Rationals are strings ("3/4"), forms are term lists [{"coeff", "exp"}] in
descending lex order, subspaces carry their RREF rows, and every dict is
emitted with sorted keys so identical inputs give byte-identical output.
"""

import dataclasses
import json
from fractions import Fraction

from .errors import InputError
from .forms import Form, FormsDerivation
from .grading import OnePS
from .linalg import RatMatrix, Subspace, rational_str, to_rational
from .strata import CharacterSet

SCHEMA = 1


def form_to_json(f):
    return [{"coeff": rational_str(c), "exp": list(e)} for e, c in f.terms()]


def form_from_json(data, n_vars, degree=None):
    try:
        terms = [(tuple(int(x) for x in t["exp"]), to_rational(t["coeff"])) for t in data]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad form term list: {data!r}") from exc
    if any(len(e) != n_vars for e, _ in terms):
        raise InputError(f"form exponents must have length {n_vars}")
    if degree is None:
        degree = sum(terms[0][0]) if terms else 0
    return Form(n_vars, degree, terms)


def matrix_to_json(m):
    return [[rational_str(x) for x in row] for row in m.to_rows()]


def matrix_from_json(data):
    try:
        return RatMatrix([[to_rational(x) for x in row] for row in data])
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad matrix: {data!r}") from exc


def vector_from_json(rep, data):
    if isinstance(rep, FormsDerivation):
        v = form_from_json(data, rep.n_vars, rep.degree)
    else:
        v = matrix_from_json(data)
    rep.validate(v)
    return v


def vector_to_json(v):
    if isinstance(v, Form):
        return form_to_json(v)
    return matrix_to_json(v)


def to_jsonable(obj):
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, Form):
        return form_to_json(obj)
    if isinstance(obj, RatMatrix):
        return matrix_to_json(obj)
    if isinstance(obj, Subspace):
        return {"dim": obj.dim, "ambient_dim": obj.ambient_dim, "basis": [[rational_str(x) for x in r] for r in obj.vectors()]}
    if isinstance(obj, CharacterSet):
        return [list(c) for c in obj.chars]
    if isinstance(obj, OnePS):
        return obj.to_json()
    if dataclasses.is_dataclass(obj):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        if hasattr(type(obj), "verdict"):
            out["verdict"] = type(obj).verdict
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(report):
    doc = dict(to_jsonable(report))
    doc["schema"] = SCHEMA
    return json.dumps(doc, sort_keys=True, indent=2)
