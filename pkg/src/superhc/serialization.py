"""JSON schemas: algebras, enveloping-algebra elements, polynomials.

The wire formats are strict (unknown fields are rejected) and canonical
(sorted keys, reduced scalar strings), so serialised output is byte-stable
and usable in golden tests.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Sequence

from .apoly import APoly
from .linalg import ScalarMatrix
from .liesuper import LieSuperalgebra, SuperVector
from .pbw import UEAElement
from .scalars import scalar_from_string, scalar_to_string

Q = Fraction


class SchemaError(Exception):
    pass


def _expect_keys(obj: dict, required: Sequence[str], optional: Sequence[str] = ()):
    if not isinstance(obj, dict):
        raise SchemaError(f"expected object, got {type(obj).__name__}")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise SchemaError(f"unknown fields: {sorted(unknown)}")
    missing = set(required) - set(obj)
    if missing:
        raise SchemaError(f"missing fields: {sorted(missing)}")


def _matrix_to_json(m: ScalarMatrix) -> List[List[str]]:
    return [[scalar_to_string(m.entry(i, j)) for j in range(m.ncols)]
            for i in range(m.nrows)]


def _matrix_from_json(rows: List[List[str]], dim: int) -> ScalarMatrix:
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise SchemaError("matrix has wrong shape")
    return ScalarMatrix.from_rows(
        [[scalar_from_string(x) for x in row] for row in rows])


def _vector_to_json(v: SuperVector) -> List[str]:
    return [scalar_to_string(x) for x in v.dense()]


def _vector_from_json(coords: List[str], g: LieSuperalgebra) -> SuperVector:
    if len(coords) != g.dim:
        raise SchemaError("vector has wrong length")
    vals = [scalar_from_string(x) for x in coords]
    return SuperVector(g, {i: x for i, x in enumerate(vals) if x})


def algebra_to_json(g: LieSuperalgebra) -> dict:
    brackets = []
    for (i, j) in sorted(g.brackets):
        out = g.brackets[(i, j)]
        brackets.append({
            "i": i, "j": j,
            "out": [{"k": k, "coeff": scalar_to_string(out[k])}
                    for k in sorted(out)]})
    data = {
        "basis": [{"name": n, "parity": p} for n, p in zip(g.names, g.parity)],
        "brackets": brackets,
        "form": _matrix_to_json(g.form) if g.form is not None else None,
        "theta": _matrix_to_json(g.theta) if g.theta is not None else None,
        "decomposition": None,
    }
    if g.decomposition is not None:
        data["decomposition"] = {
            "center": [_vector_to_json(v) for v in g.decomposition["center"]],
            "ideals": [[_vector_to_json(v) for v in ideal]
                       for ideal in g.decomposition["ideals"]],
        }
    return data


def algebra_from_json(data: dict) -> LieSuperalgebra:
    _expect_keys(data, ["basis", "brackets"], ["form", "theta", "decomposition"])
    names, parity = [], []
    for entry in data["basis"]:
        _expect_keys(entry, ["name", "parity"])
        if entry["parity"] not in (0, 1):
            raise SchemaError(f"bad parity {entry['parity']!r}")
        names.append(entry["name"])
        parity.append(entry["parity"])
    dim = len(names)
    brackets: Dict = {}
    for entry in data["brackets"]:
        _expect_keys(entry, ["i", "j", "out"])
        i, j = entry["i"], entry["j"]
        if not (0 <= i < dim and 0 <= j < dim):
            raise SchemaError(f"bracket index out of range: ({i}, {j})")
        out = {}
        for term in entry["out"]:
            _expect_keys(term, ["k", "coeff"])
            if not 0 <= term["k"] < dim:
                raise SchemaError(f"output index out of range: {term['k']}")
            out[term["k"]] = scalar_from_string(term["coeff"])
        if (i, j) in brackets:
            raise SchemaError(f"duplicate bracket entry ({i}, {j})")
        brackets[(i, j)] = out
    form = theta = None
    if data.get("form") is not None:
        form = _matrix_from_json(data["form"], dim)
    if data.get("theta") is not None:
        theta = _matrix_from_json(data["theta"], dim)
    g = LieSuperalgebra(names, parity, brackets, form=form, theta=theta)
    if data.get("decomposition") is not None:
        dec = data["decomposition"]
        _expect_keys(dec, ["center", "ideals"])
        g.decomposition = {
            "center": [_vector_from_json(v, g) for v in dec["center"]],
            "ideals": [[_vector_from_json(v, g) for v in ideal]
                       for ideal in dec["ideals"]],
        }
    return g


def uea_to_json(u: UEAElement) -> list:
    return [{"monomial": list(m), "coeff": scalar_to_string(u[m])}
            for m in sorted(u, key=lambda m: (len(m), m))]


def uea_from_json(data: list) -> UEAElement:
    out: UEAElement = {}
    for entry in data:
        _expect_keys(entry, ["monomial", "coeff"])
        m = tuple(entry["monomial"])
        out[m] = out.get(m, Q(0)) + scalar_from_string(entry["coeff"])
    return {m: c for m, c in out.items() if c}


def poly_to_json(p: APoly, names: Sequence[str]) -> dict:
    terms = []
    for e in sorted(p.terms, key=lambda e: (sum(e), e)):
        exps = {names[i]: k for i, k in enumerate(e) if k}
        terms.append({"exps": exps, "coeff": scalar_to_string(p.terms[e])})
    return {"terms": terms}


def poly_from_json(data: dict, names: Sequence[str]) -> APoly:
    _expect_keys(data, ["terms"])
    pos = {n: i for i, n in enumerate(names)}
    out = APoly.zero(len(names))
    for entry in data["terms"]:
        _expect_keys(entry, ["exps", "coeff"])
        e = [0] * len(names)
        for n, k in entry["exps"].items():
            if n not in pos:
                raise SchemaError(f"unknown variable {n!r} (have {list(names)})")
            if not isinstance(k, int) or k < 0:
                raise SchemaError(f"bad exponent {k!r}")
            e[pos[n]] = k
        out = out + APoly(len(names), {tuple(e): scalar_from_string(entry["coeff"])})
    return out


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
