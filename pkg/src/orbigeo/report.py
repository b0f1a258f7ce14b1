"""Report documents: JSON/CSV serialization with full-precision numbers.

Floats are rendered in scientific notation with 17 significant digits so
every serialized value round-trips exactly; output is deterministic for a
fixed argv (timestamps are dropped under the reproducible flag).
"""

from __future__ import annotations

import math
from datetime import datetime, timezone

from ._version import __version__


def format_float(x):
    if x == math.inf:
        return '"inf"'
    if x == -math.inf:
        return '"-inf"'
    return format(float(x), ".16e")


def dumps(obj, indent=0):
    """JSON text with floats at full precision."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{inner}"{key}": {dumps(value, indent + 1)}' for key, value in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{inner}{dumps(value, indent + 1)}" for value in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    text = str(obj).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def provenance(tolerance=None, reproducible=False, **extra):
    head = {"tool": "orbigeo", "version": __version__}
    if tolerance is not None:
        head["tolerance"] = tolerance
    for key, value in extra.items():
        if value is not None:
            head[key] = value
    if not reproducible:
        head["generated"] = datetime.now(timezone.utc).isoformat()
    return head


def document(payload, prov):
    return dumps({"provenance": prov, **payload}) + "\n"


def csv_field(value):
    if isinstance(value, float):
        return format(value, ".16e")
    text = str(value)
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def csv_document(header, rows, prov):
    """RFC-4180 rows with a leading provenance comment line."""
    prov_text = " ".join(f"{key}={value}" for key, value in prov.items())
    lines = [f"# provenance: {prov_text}"]
    lines.append(",".join(csv_field(h) for h in header))
    for row in rows:
        lines.append(",".join(csv_field(value) for value in row))
    return "\r\n".join(lines) + "\r\n"
