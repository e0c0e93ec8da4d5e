"""JSON Schemas for the input documents read by the command line tool.

The files under ``docs/formats/`` are generated from this module::

    python -m poisson_hpa.formats docs/formats
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Dict

RATIONAL = {
    "description": "exact rational: an integer or a string like \"-3/2\"",
    "oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}],
}
POLY = {"type": "string", "description": "polynomial text, e.g. \"3/2 x^2 y - z + 1/12 h x\""}
INDEX = {"type": "integer", "minimum": 1}
NAME = {"type": "string", "pattern": r"^[A-Za-z_][A-Za-z_0-9]*$"}

LIE = {
    "type": "object",
    "description": "structure constants; entry [i, j, k, c] means [e_i, e_j] has c e_k (1-based, i < j)",
    "properties": {
        "dim": {"type": "integer", "minimum": 0},
        "brackets": {"type": "array", "items": {
            "type": "array", "prefixItems": [INDEX, INDEX, INDEX, RATIONAL],
            "minItems": 4, "maxItems": 4}},
    },
    "required": ["dim"],
    "additionalProperties": False,
}
OMEGA = {
    "type": "array",
    "description": "entries [i, j, c] meaning omega(e_i, e_j) = c (antisymmetry implied)",
    "items": {"type": "array", "prefixItems": [INDEX, INDEX, RATIONAL], "minItems": 3, "maxItems": 3},
}
COMPONENT = {
    "type": "object",
    "properties": {"indices": {"type": "array", "items": INDEX}, "poly": POLY},
    "required": ["indices", "poly"],
    "additionalProperties": False,
}
MULTIVECTOR = {"type": "array", "items": COMPONENT}
VARIABLES = {"type": "array", "items": NAME, "uniqueItems": True}
ORDER = {"type": ["integer", "null"], "minimum": 1,
         "description": "truncation order N in h (terms h^k with k >= N are dropped)"}


def _doc(title: str, properties: Dict[str, Any], required) -> Dict[str, Any]:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": title,
        "type": "object",
        "properties": {"comment": {"type": "string"}, **properties},
        "required": list(required),
        "additionalProperties": False,
    }


HPA_PROPS = {
    "lie": LIE,
    "variables": VARIABLES,
    "order": ORDER,
    "sigma0": MULTIVECTOR,
    "sigma1": {"type": "array", "items": {
        "type": "object",
        "properties": {"basis": INDEX, "components": MULTIVECTOR},
        "required": ["basis", "components"], "additionalProperties": False}},
    "sigma2": {"type": "array", "items": {
        "type": "object",
        "properties": {"pair": {"type": "array", "items": INDEX, "minItems": 2, "maxItems": 2},
                       "poly": POLY},
        "required": ["pair", "poly"], "additionalProperties": False}},
    "tau": {"type": "array", "description": "gauge parameter, one polynomial per basis vector",
            "items": {"type": "object", "properties": {"basis": INDEX, "poly": POLY},
                      "required": ["basis", "poly"], "additionalProperties": False}},
    "omega": OMEGA,
    "probe_degree": {"type": "integer", "minimum": 0, "maximum": 4},
}

GROUP = {
    "type": "object",
    "description": "finite group: element names and multiplication table of names (row g, column h gives gh)",
    "properties": {
        "elements": {"type": "array", "items": {"type": "string"}, "minItems": 1, "uniqueItems": True},
        "table": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
    },
    "required": ["elements", "table"],
    "additionalProperties": False,
}
VECTOR = {"type": "array", "items": RATIONAL}
MATRIX = {"type": "array", "items": VECTOR}
TERMS = {"type": "array", "description": "linear combination as [k, c] pairs with 1-based basis index k",
         "items": {"type": "array", "prefixItems": [INDEX, RATIONAL], "minItems": 2, "maxItems": 2}}
ALGEBRA = {
    "type": "object",
    "properties": {
        "basis": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "products": {"type": "array", "items": {
            "type": "object",
            "properties": {"key": {"type": "array", "items": INDEX, "minItems": 2, "maxItems": 2},
                           "value": TERMS},
            "required": ["key", "value"], "additionalProperties": False}},
        "unit": VECTOR,
    },
    "required": ["basis", "products", "unit"],
    "additionalProperties": False,
}

SCHEMAS: Dict[str, Dict[str, Any]] = {
    "lie": _doc("Lie algebra document", {"lie": LIE, "omega": OMEGA}, ["lie"]),
    "hpa": _doc("HPA document", HPA_PROPS, ["lie", "variables"]),
    "moment": _doc("moment map document", {
        "lie": LIE, "variables": VARIABLES, "order": ORDER, "pi": MULTIVECTOR,
        "mu": {"type": "array", "items": POLY}, "omega": OMEGA,
    }, ["lie", "variables", "pi", "mu"]),
    "graded-algebra": _doc("group-graded algebra document", {
        "group": GROUP,
        "basis": {"type": "object", "description": "basis labels of A_g, keyed by element name",
                  "additionalProperties": {"type": "array", "items": {"type": "string"}}},
        "products": {"type": "array", "items": {
            "type": "object",
            "description": "key [g, i, h, j]: product of basis i of A_g with basis j of A_h, "
                           "value: terms in A_gh",
            "properties": {"key": {"type": "array", "prefixItems": [
                {"type": "string"}, INDEX, {"type": "string"}, INDEX], "minItems": 4, "maxItems": 4},
                "value": TERMS},
            "required": ["key", "value"], "additionalProperties": False}},
        "unit": VECTOR,
        "units": {"type": "object", "description": "chosen <g> as coordinates in A_g",
                  "additionalProperties": VECTOR},
        "action": {"type": "object", "description": "hand-built (rho, c) to check instead of deriving it",
                   "properties": {
                       "rho": {"type": "object", "additionalProperties": MATRIX},
                       "c": {"type": "array", "items": {
                           "type": "object",
                           "properties": {"pair": {"type": "array", "items": {"type": "string"},
                                                   "minItems": 2, "maxItems": 2},
                                          "value": VECTOR},
                           "required": ["pair", "value"], "additionalProperties": False}}},
                   "required": ["rho", "c"], "additionalProperties": False},
    }, ["group", "basis", "products", "unit"]),
    "crossed": _doc("crossed product document", {
        "group": GROUP, "algebra": ALGEBRA,
        "action": {"type": "object", "description": "matrix of each element on the algebra basis "
                                                    "(column i is the image of basis i)",
                   "additionalProperties": MATRIX},
    }, ["group", "algebra", "action"]),
    "central-ext": _doc("central extension document", {
        "group": GROUP,
        "cocycle": {"type": "array", "description": "entries [g, h, c]; missing pairs default to 1",
                    "items": {"type": "array", "prefixItems": [{"type": "string"}, {"type": "string"},
                                                               RATIONAL],
                              "minItems": 3, "maxItems": 3}},
    }, ["group", "cocycle"]),
    "star": _doc("star product document", {
        "variables": VARIABLES,
        "pi": MULTIVECTOR,
        "scale": {"type": "boolean", "description": "multiply pi by h before quantizing"},
        "weights": {"type": "array", "items": RATIONAL, "minItems": 3, "maxItems": 3},
        "pairs": {"type": "array", "items": {"type": "array", "items": POLY,
                                             "minItems": 2, "maxItems": 2}},
        "assoc_degree": {"type": "integer", "minimum": 0, "maximum": 3},
    }, ["variables", "pi"]),
    "probes": _doc("weight-solving probe document", {
        "probes": {"type": "array", "items": {
            "type": "object",
            "properties": {"variables": VARIABLES, "pi": MULTIVECTOR},
            "required": ["variables", "pi"], "additionalProperties": False}},
        "max_degree": {"type": "integer", "minimum": 1, "maximum": 3},
    }, ["probes"]),
}


def write_all(directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for name, schema in SCHEMAS.items():
        (directory / f"{name}.schema.json").write_text(render(schema))


def render(schema: Dict[str, Any]) -> str:
    return json.dumps(schema, indent=2, ensure_ascii=False) + "\n"


if __name__ == "__main__":  # pragma: no cover
    write_all(Path(sys.argv[1] if len(sys.argv) > 1 else "docs/formats"))
