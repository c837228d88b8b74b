"""JSON/CSV wire formats. Scalars travel as canonical strings ("p/q", "p")."""

from __future__ import annotations

import json
from typing import Sequence

from .hermite import NodeSystem, PartialFraction
from .matrix import Matrix
from .poly import Polynomial
from .scalar import Field

_SCALAR = {"type": ["string", "integer"]}
_NODES = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "object",
        "properties": {"alpha": _SCALAR, "multiplicity": {"type": "integer", "minimum": 1}},
        "required": ["alpha", "multiplicity"],
        "additionalProperties": False,
    },
}
_ALPHAS = {"type": "array", "minItems": 1, "items": _SCALAR}
_RHS = {"type": "array", "items": _SCALAR}
_EXPONENTS = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
}


def _schema(**props):
    return {
        "type": "object",
        "properties": props,
        "required": list(props),
        "additionalProperties": False,
    }


SCHEMAS = {
    "invert": _schema(nodes=_NODES),
    "invert-rs": _schema(nodes=_NODES, exponents=_EXPONENTS),
    "invert-usual": _schema(alphas=_ALPHAS),
    "solve": _schema(nodes=_NODES, rhs=_RHS),
    "solve-usual": _schema(alphas=_ALPHAS, rhs=_RHS),
    "partfrac": _schema(nodes=_NODES),
    "basis": _schema(nodes=_NODES),
    "companion": _schema(nodes=_NODES),
}


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True) + "\n"


def scalar_in(value, field: Field):
    if isinstance(value, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(value, int):
        return field.coerce(value)
    return field.parse(value)


def node_system_from_json(nodes: list, field: Field) -> NodeSystem:
    return NodeSystem(
        tuple(scalar_in(nd["alpha"], field) for nd in nodes),
        tuple(nd["multiplicity"] for nd in nodes),
        field,
    )


def node_system_to_json(system: NodeSystem) -> dict:
    f = system.field
    return {"nodes": [{"alpha": f.format(a), "multiplicity": m} for a, m in system.pairs]}


def vector_to_json(values: Sequence, field: Field) -> list:
    return [field.format(v) for v in values]


def matrix_to_json(m: Matrix, field: Field) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [vector_to_json(r, field) for r in m.entries]}


def matrix_from_json(obj: dict, field: Field) -> Matrix:
    rows = [[scalar_in(c, field) for c in r] for r in obj["entries"]]
    m = Matrix(rows)
    if m.shape != (obj["rows"], obj["cols"]):
        raise ValueError(f"declared shape {(obj['rows'], obj['cols'])} but entries are {m.shape}")
    return m


def polynomial_to_json(p: Polynomial, field: Field) -> list:
    return vector_to_json(p.coeffs, field)


def polynomial_from_json(coeffs: list, field: Field) -> Polynomial:
    return Polynomial(scalar_in(c, field) for c in coeffs)


def partial_fractions_to_json(terms: Sequence[PartialFraction], field: Field) -> list:
    # node indices are 1-based on the wire
    return [
        {"node": t.node + 1, "exponent": t.exponent, "coefficient": field.format(t.coefficient)}
        for t in terms
    ]


def csv_rows(rows: Sequence[Sequence[str]]) -> str:
    return "".join(",".join(r) + "\n" for r in rows)
