"""Per-semigroup records and their JSON / CSV / text serializations.

JSON: UTF-8, keys sorted, two-space indent, trailing newline; one document
per invocation with a ``rows`` array. CSV: header row, RFC 4180 quoting,
CRLF line ends; list cells are space-separated integers, booleans are
``true``/``false`` and missing values are empty.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence

from .core import NumericalSemigroup
from .ideals import bounds_report, is_nearly_gorenstein, trace_ideal
from .threegen import frobenius3, genus_identity_check, residue3, structure_matrix

SCHEMA_VERSION = "1"

ROW_COLUMNS = (
    "gens",
    "mult",
    "edim",
    "frobenius",
    "genus",
    "n",
    "type",
    "pf",
    "residue",
    "trace_sporadic",
    "position",
    "symmetric",
    "almost_symmetric",
    "nearly_gorenstein",
    "cor13_ok",
    "q12_ok",
)

TRACE_COLUMNS = ("trace_gens", "also_equals_M")
MATRIX_COLUMNS = ("matrix_a", "matrix_b", "matrix_c", "matrix_d", "residue3", "frobenius3", "genus_identity_ok")


def semigroup_record(H: NumericalSemigroup, pad: int = 0) -> dict[str, Any]:
    td = trace_ideal(H, pad)
    br = bounds_report(H, pad)
    return {
        "gens": list(H.gens),
        "mult": H.mult,
        "edim": H.edim,
        "frobenius": H.frobenius,
        "genus": H.genus,
        "n": H.nongaps_count,
        "type": H.type,
        "pf": list(H.pseudo_frobenius),
        "residue": td.residue,
        "trace_sporadic": list(td.sporadic),
        "position": td.position.value,
        "symmetric": H.is_symmetric,
        "almost_symmetric": H.is_almost_symmetric,
        "nearly_gorenstein": is_nearly_gorenstein(H, pad),
        "cor13_ok": br.cor13_ok and br.cor13_tight,
        "q12_ok": br.q12_ok,
    }


def trace_fields(H: NumericalSemigroup, pad: int = 0) -> dict[str, Any]:
    td = trace_ideal(H, pad)
    return {"trace_gens": list(td.ideal.gens), "also_equals_M": td.also_equals_M}


def matrix_fields(H: NumericalSemigroup) -> dict[str, Any]:
    res3, d = residue3(H)
    if H.is_symmetric:
        return {"matrix_a": None, "matrix_b": None, "matrix_c": None, "matrix_d": None,
                "residue3": res3, "frobenius3": None, "genus_identity_ok": None}
    m = structure_matrix(H)
    return {
        "matrix_a": list(m.a),
        "matrix_b": list(m.b),
        "matrix_c": list(m.c),
        "matrix_d": list(d),
        "residue3": res3,
        "frobenius3": frobenius3(H, m),
        "genus_identity_ok": genus_identity_check(H, m).ok,
    }


def make_report(command: str, inputs: dict, rows: list[dict], summary: dict | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "rows": rows,
        "summary": summary or {},
    }


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(csv_cell(v) for v in value)
    return str(value)


def parse_csv_cell(text: str, like: Any) -> Any:
    """Inverse of ``csv_cell`` given an example of the expected JSON value."""
    if text == "":
        return [] if isinstance(like, list) else None
    if isinstance(like, bool):
        return text == "true"
    if isinstance(like, int):
        return int(text)
    if isinstance(like, list):
        return [int(t) for t in text.split()]
    return text


def csv_header(columns: Sequence[str]) -> str:
    return csv_line(columns)


def csv_line(cells: Iterable[Any]) -> str:
    buf = io.StringIO()
    csv.writer(buf).writerow([c if isinstance(c, str) else csv_cell(c) for c in cells])
    return buf.getvalue()


def csv_row(row: dict, columns: Sequence[str]) -> str:
    return csv_line(csv_cell(row.get(c)) for c in columns)


def to_csv(rows: Iterable[dict], columns: Sequence[str]) -> str:
    return csv_header(columns) + "".join(csv_row(r, columns) for r in rows)


def to_text(row: dict, keys: Sequence[str] | None = None) -> str:
    keys = keys or list(row)
    return "".join(f"{k}: {json.dumps(row[k]) if not isinstance(row[k], str) else row[k]}\n" for k in keys)
