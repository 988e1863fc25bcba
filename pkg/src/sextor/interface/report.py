"""Stable JSON and text rendering of command results."""

from __future__ import annotations

import json

from gmpy2 import mpq


def rat(q) -> str:
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def curve_payload(E) -> dict:
    return {
        "label": E.label,
        "ainvs": [rat(a) for a in E.ainvs],
        "j": rat(E.j),
        "discriminant": rat(E.disc),
    }


def field_payload(K) -> dict:
    return {"degree": K.degree, "poly": [rat(c) for c in K.defining_poly.coeffs]}


def _elem(a) -> list:
    return [rat(c) for c in a.coeffs]


def point_payload(P):
    if P.is_zero():
        return "O"
    return {"x": _elem(P.x), "y": _elem(P.y)}


def _flatten(value, prefix, out):
    if isinstance(value, dict):
        if not value:
            out.append(f"{prefix}: {{}}")
        for k in sorted(value):
            _flatten(value[k], f"{prefix}.{k}" if prefix else str(k), out)
    elif isinstance(value, list):
        if not value:
            out.append(f"{prefix}: []")
        for i, v in enumerate(value):
            _flatten(v, f"{prefix}[{i}]", out)
    else:
        out.append(f"{prefix}: {json.dumps(value)}")


def render(payload: dict, fmt: str = "json") -> str:
    """JSON with sorted keys, or one 'path: value' line per leaf carrying the same data."""
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = []
    _flatten(payload, "", lines)
    return "\n".join(lines) + "\n"
