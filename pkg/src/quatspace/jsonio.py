"""JSON interchange: {"algebra": ..., "alpha": [w,x,y,z], "beta": [w,x,y,z]}.

Floats are written with 17 significant digits, enough to round-trip any
double exactly.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .action import Minquat
from .extquat import ExtQuaternion
from .rings import DomainError, UnitKind


class JsonFormatError(ValueError):
    """Malformed interchange document."""


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise JsonFormatError(f"non-finite number {x!r} cannot be serialised")
    text = format(x, ".17g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def dumps(obj) -> str:
    """Compact JSON with every float at 17 significant digits."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist())
    if isinstance(obj, (bool, np.bool_)) or obj is None or isinstance(obj, str):
        return json.dumps(obj if not isinstance(obj, np.bool_) else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _four(doc, key):
    try:
        values = doc[key]
    except KeyError:
        raise JsonFormatError(f"missing key {key!r}") from None
    if not isinstance(values, list) or len(values) != 4:
        raise JsonFormatError(f"{key!r} must be a list of 4 numbers")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            raise JsonFormatError(f"{key!r} entries must be finite numbers, got {v!r}")
        out.append(float(v))
    return out


def ext_to_json(q: ExtQuaternion) -> dict:
    if q.shape != ():
        raise JsonFormatError("only single elements are serialised")
    return {
        "algebra": q.kind.label,
        "alpha": [float(v) for v in q.alpha.data],
        "beta": [float(v) for v in q.beta.data],
    }


def ext_from_json(doc, default_algebra=None) -> ExtQuaternion:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise JsonFormatError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise JsonFormatError("expected a JSON object")
    algebra = doc.get("algebra", default_algebra)
    if algebra is None:
        raise JsonFormatError("missing key 'algebra'")
    if not isinstance(algebra, str):
        raise JsonFormatError("'algebra' must be a string")
    try:
        kind = UnitKind.parse(algebra)
    except DomainError:
        raise JsonFormatError(f"unknown algebra {algebra!r}") from None
    return ExtQuaternion(kind, _four(doc, "alpha"), _four(doc, "beta"))


def minquat_to_json(v: Minquat) -> dict:
    return ext_to_json(v.to_ext())


def minquat_from_json(doc, default_algebra=None) -> Minquat:
    try:
        return Minquat.from_ext(ext_from_json(doc, default_algebra))
    except DomainError as exc:
        raise JsonFormatError(str(exc)) from None
