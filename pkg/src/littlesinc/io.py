"""Deterministic CSV/JSON serialization of flat result records."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Mapping, Sequence

from . import __version__


def format_float(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = format(x, ".17g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format_float(v)
    if hasattr(v, "item"):  # numpy scalar
        return _cell(v.item())
    return str(v)


def _columns(records: Sequence[Mapping], columns: Sequence[str] | None) -> list[str]:
    if columns is not None:
        return list(columns)
    return list(records[0].keys()) if records else []


def emit_csv(records: Sequence[Mapping], columns: Sequence[str] | None = None) -> bytes:
    cols = _columns(records, columns)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for rec in records:
        w.writerow([_cell(rec[c]) for c in cols])
    return buf.getvalue().encode()


def _json_value(v: Any) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        s = format_float(v)
        return json.dumps(s) if s in ("nan", "inf", "-inf") else s
    if hasattr(v, "item") and not hasattr(v, "__len__"):
        return _json_value(v.item())
    if isinstance(v, Mapping):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_value(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    return json.dumps(str(v))


def emit_json(records: Sequence[Mapping], meta: Mapping | None = None) -> bytes:
    meta = dict(meta or {})
    meta.setdefault("version", __version__)
    head = {k: meta[k] for k in sorted(meta)}
    body = ",\n  ".join(_json_value(dict(r)) for r in records)
    data = f"[\n  {body}\n]" if records else "[]"
    return f'{{"meta": {_json_value(head)}, "data": {data}}}\n'.encode()


def emit(records: Sequence[Mapping], fmt: str = "csv", columns: Sequence[str] | None = None,
         meta: Mapping | None = None) -> bytes:
    """Serialize ``records`` as CSV (header + rows) or a ``{meta, data}`` JSON object."""
    if fmt == "csv":
        return emit_csv(records, columns)
    if fmt == "json":
        return emit_json(records, meta)
    raise ValueError(f"unknown format {fmt!r}")


_SPECIAL = {"nan": math.nan, "inf": math.inf, "-inf": -math.inf}


def _parse_cell(s: str) -> Any:
    if s in _SPECIAL:
        return _SPECIAL[s]
    if s == "true":
        return True
    if s == "false":
        return False
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def parse_csv(payload: bytes | str) -> list[dict]:
    text = payload.decode() if isinstance(payload, bytes) else payload
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        return []
    header = rows[0]
    return [dict(zip(header, map(_parse_cell, row))) for row in rows[1:]]


def _restore(v):
    if isinstance(v, str) and v in _SPECIAL:
        return _SPECIAL[v]
    if isinstance(v, dict):
        return {k: _restore(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_restore(x) for x in v]
    return v


def parse_json(payload: bytes | str) -> tuple[dict, list[dict]]:
    obj = json.loads(payload)
    return obj["meta"], [_restore(r) for r in obj["data"]]


def write_output(payload: bytes, path: str | None, stream=None) -> None:
    if path is None or path == "-":
        import sys

        out = stream or sys.stdout.buffer
        out.write(payload)
        out.flush()
        return
    with open(path, "wb") as fh:
        fh.write(payload)


def records_from_columns(**cols: Iterable) -> list[dict]:
    keys = list(cols)
    return [dict(zip(keys, row)) for row in zip(*cols.values())]
