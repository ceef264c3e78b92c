"""JSON instance documents.

A document lists objects rank by rank and covering edges by ``[rank, index]``
coordinates::

    {"name": "A",
     "complete": true,
     "ranks": [[{"label": "0", "aut": 1}], [{"label": "1", "aut": 1}]],
     "edges": [{"src": [0, 0], "dst": [1, 0], "hom": 1}]}

``u`` and ``d`` are never stored; they are recomputed on import.  ``complete``
is optional and defaults to false.
"""

from __future__ import annotations

import json

import jsonschema

from .core import UpdownTable, build_table
from .errors import SchemaError, UpdownError

_POSITIVE = {"type": "integer", "minimum": 1}
_COORD = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}

SCHEMA = {
    "type": "object",
    "required": ["name", "ranks", "edges"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "complete": {"type": "boolean"},
        "ranks": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["label", "aut"],
                    "additionalProperties": False,
                    "properties": {"label": {"type": "string"}, "aut": _POSITIVE},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["src", "dst", "hom"],
                "additionalProperties": False,
                "properties": {"src": _COORD, "dst": _COORD, "hom": _POSITIVE},
            },
        },
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


def _check_schema(doc: object) -> None:
    errors = sorted(_VALIDATOR.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        raise SchemaError(first.message, path=first.json_path)


def from_document(doc: object) -> UpdownTable:
    _check_schema(doc)
    specs = [[(o["label"], o["aut"]) for o in row] for row in doc["ranks"]]
    edges = [(e["src"], e["dst"], e["hom"]) for e in doc["edges"]]
    try:
        return build_table(doc["name"], specs, edges, complete=doc.get("complete", False))
    except UpdownError as err:
        if err.edge_index is not None and err.path is None:
            err.path = f"$.edges[{err.edge_index}]"
        raise


def import_json(text: str) -> UpdownTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"not valid JSON: {err.msg} (line {err.lineno}, column {err.colno})", path="$") from None
    return from_document(doc)


def to_document(table: UpdownTable) -> dict:
    doc: dict = {"name": table.name}
    if table.complete:
        doc["complete"] = True
    doc["ranks"] = [[{"label": r.label, "aut": r.aut_order} for r in row] for row in table.ranks]
    doc["edges"] = [
        {"src": list(e.src), "dst": list(e.dst), "hom": e.hom_size} for _, e in sorted(table.edges.items())
    ]
    return doc


def _dump(x) -> str:
    return json.dumps(x, ensure_ascii=False, separators=(", ", ": "))


def export_json(table: UpdownTable) -> str:
    """Deterministic text: one object or edge per line, ranks and edges in id order."""
    doc = to_document(table)
    lines = ["{", f'  "name": {_dump(doc["name"])},']
    if table.complete:
        lines.append('  "complete": true,')
    lines.append('  "ranks": [')
    for n, row in enumerate(doc["ranks"]):
        tail = "," if n < len(doc["ranks"]) - 1 else ""
        if not row:
            lines.append(f"    []{tail}")
            continue
        lines.append("    [")
        lines.extend(f"      {_dump(o)}{',' if i < len(row) - 1 else ''}" for i, o in enumerate(row))
        lines.append(f"    ]{tail}")
    lines.append("  ],")
    if doc["edges"]:
        lines.append('  "edges": [')
        n_edges = len(doc["edges"])
        lines.extend(f"    {_dump(e)}{',' if k < n_edges - 1 else ''}" for k, e in enumerate(doc["edges"]))
        lines.append("  ]")
    else:
        lines.append('  "edges": []')
    lines.append("}")
    return "\n".join(lines) + "\n"
