"""JSON matroid documents.

A document is an object with a ``"type"`` field::

    {"type": "uniform", "rank": 2, "size": 4}
    {"type": "graphic", "edges": [[0, 1], [1, 2], [0, 2]]}
    {"type": "bases", "n": 3, "bases": [[0, 1], [0, 2], [1, 2]]}
    {"type": "linear", "matrix": [["1", "0", "1/2"], ["0", "1", "-3"]]}
    {"type": "dual", "inner": {...}}
    {"type": "minor", "inner": {...}, "delete": [0], "contract": [3]}
    {"type": "truncation", "inner": {...}, "steps": 1}
    {"type": "direct_sum", "left": {...}, "right": {...}}
    {"type": "coloop_extension", "inner": {...}, "label": 7}
    {"type": "named", "id": "K5"}
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import DomainError
from .matroid import (BasisMatroid, ColoopExtension, GraphicMatroid, LinearMatroid, Matroid,
                      MinorMatroid, UniformMatroid, rank_axiom_violations)

__all__ = ["ParseError", "parse_matroid", "load_matroid", "dump_matroid", "VALIDATE_LIMIT"]

VALIDATE_LIMIT = 8


class ParseError(DomainError):
    """A document is malformed; ``location`` is a JSON-path-like pointer."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def _field(doc: dict, key: str, where: str) -> Any:
    if key not in doc:
        raise ParseError(where, f"missing field {key!r}")
    return doc[key]


def _int(value, where: str, minimum: int | None = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(where, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ParseError(where, f"expected an integer >= {minimum}, got {value}")
    return value


def _int_list(value, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError(where, "expected a list of integers")
    return [_int(x, f"{where}[{i}]") for i, x in enumerate(value)]


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(where, f"rationals must be integers or 'p/q' strings, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(where, f"cannot read {value!r} as a rational") from None
    raise ParseError(where, f"unexpected entry {value!r}")


def _build(doc, where: str) -> Matroid:
    if not isinstance(doc, dict):
        raise ParseError(where, "expected an object")
    kind = _field(doc, "type", where)
    try:
        if kind == "uniform":
            return UniformMatroid(_int(_field(doc, "rank", where), f"{where}.rank"),
                                  _int(_field(doc, "size", where), f"{where}.size"))
        if kind == "graphic":
            edges = _field(doc, "edges", where)
            if not isinstance(edges, list):
                raise ParseError(f"{where}.edges", "expected a list of vertex pairs")
            pairs = []
            for i, e in enumerate(edges):
                if not isinstance(e, list) or len(e) != 2:
                    raise ParseError(f"{where}.edges[{i}]", "expected a pair of vertices")
                pairs.append(tuple(e))
            return GraphicMatroid(pairs)
        if kind == "bases":
            n = _int(_field(doc, "n", where), f"{where}.n")
            raw = _field(doc, "bases", where)
            if not isinstance(raw, list):
                raise ParseError(f"{where}.bases", "expected a list of element lists")
            bases = [_int_list(B, f"{where}.bases[{i}]") for i, B in enumerate(raw)]
            ground = list(range(n))
            if "ground" in doc:
                ground = _int_list(doc["ground"], f"{where}.ground")
                if len(ground) != n:
                    raise ParseError(f"{where}.ground", f"expected {n} labels")
            for i, B in enumerate(bases):
                if not set(B) <= set(ground):
                    raise ParseError(f"{where}.bases[{i}]", "elements outside the ground set")
            return BasisMatroid(bases, ground=ground)
        if kind == "linear":
            rows = _field(doc, "matrix", where)
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise ParseError(f"{where}.matrix", "expected a list of rows")
            return LinearMatroid([[_rational(c, f"{where}.matrix[{i}][{j}]")
                                   for j, c in enumerate(row)] for i, row in enumerate(rows)])
        if kind == "dual":
            return _build(_field(doc, "inner", where), f"{where}.inner").dual()
        if kind == "minor":
            inner = _build(_field(doc, "inner", where), f"{where}.inner")
            dele = _int_list(doc.get("delete", []), f"{where}.delete")
            con = _int_list(doc.get("contract", []), f"{where}.contract")
            return MinorMatroid(inner, deleted=dele, contracted=con)
        if kind == "truncation":
            inner = _build(_field(doc, "inner", where), f"{where}.inner")
            return inner.truncate(_int(doc.get("steps", 1), f"{where}.steps"))
        if kind == "direct_sum":
            left = _build(_field(doc, "left", where), f"{where}.left")
            right = _build(_field(doc, "right", where), f"{where}.right")
            return left.direct_sum(right)
        if kind == "coloop_extension":
            inner = _build(_field(doc, "inner", where), f"{where}.inner")
            return ColoopExtension(inner, _int(_field(doc, "label", where), f"{where}.label"))
        if kind == "named":
            from .corpus import named
            name = _field(doc, "id", where)
            if not isinstance(name, str):
                raise ParseError(f"{where}.id", "expected a string")
            return named(name)
    except ParseError:
        raise
    except DomainError as exc:
        raise ParseError(where, str(exc)) from None
    raise ParseError(f"{where}.type", f"unknown matroid type {kind!r}")


def parse_matroid(doc, validate: bool = True) -> Matroid:
    """Build a matroid from a parsed document (a dict) or a JSON string."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    M = _build(doc, "$")
    if validate and len(M) <= VALIDATE_LIMIT:
        problems = rank_axiom_violations(M, VALIDATE_LIMIT)
        if problems:
            raise ParseError("$", "rank axioms fail: " + "; ".join(problems[:3]))
    return M


def load_matroid(path, validate: bool = True) -> Matroid:
    text = Path(path).read_text(encoding="utf-8")
    return parse_matroid(text, validate)


def dump_matroid(M: Matroid) -> str:
    return json.dumps(M.to_document(), sort_keys=True)
