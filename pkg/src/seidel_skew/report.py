"""JSON envelope shared by every CLI command.

Floats are written with 17 significant digits so they re-read bit-exactly;
the stdlib encoder would print the shortest repr instead, hence the small
hand-rolled serializer.
"""
from __future__ import annotations

import hashlib
import json
import math

SCHEMA_VERSION = "1"


def _encode(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite float {obj} cannot be serialized")
        text = format(obj, ".17g")
        if not any(ch in text for ch in ".eE"):
            text += ".0"
        return text
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [_encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(pad + i for i in items) + "\n" + end + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(pad + i for i in items) + "\n" + end + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    return _encode(obj, indent, 0) + "\n"


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def envelope(command: str, input_bytes: bytes, status: str, payload=None, message=None) -> dict:
    if status not in ("pass", "fail", "error"):
        raise ValueError(f"bad status {status!r}")
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_digest": digest(input_bytes),
        "status": status,
    }
    if status == "error":
        out["message"] = message or "error"
    else:
        out["payload"] = payload
        if message:
            out["message"] = message
    return out
