"""Fan export: JSON (exact coordinates as strings) and a rank-3 SVG picture.

The SVG is a stereographic projection of the fan cut with the unit sphere of
the invariant form.  The projection pole is the antipode of the first
fundamental weight, so the dominant chamber sits near the centre.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .coxeter import CoxeterGroup
from .fans import Fan
from .scalar import format_scalar, parse_scalar, to_float

__all__ = ["fan_to_dict", "fan_from_dict", "dump_fan", "load_fan", "fan_svg"]

SVG_SIZE = 1024


def fan_to_dict(fan: Fan, G: CoxeterGroup, kind: str = "") -> dict[str, Any]:
    keys = sorted(fan.rays)
    pos = {k: i for i, k in enumerate(keys)}
    rays = []
    for k in keys:
        entry = {
            "coords": [format_scalar(x) for x in fan.rays[k]],
            "label": fan.labels.get(k, ""),
            "provenance": None,
        }
        if k in fan.provenance:
            w, J = fan.provenance[k]
            entry["provenance"] = {"w": G.word_str(w), "J": [G.labels[s] for s in J]}
        rays.append(entry)
    cones = [[pos[r] for r in cone] for cone in fan.cones]
    return {
        "kind": kind,
        "field": fan.field_name,
        "basis": "simple_roots",
        "labels": list(G.labels),
        "rays": rays,
        "cones": cones,
        "adjacency": [list(p) for p in fan.adjacency()],
    }


def fan_from_dict(data: dict[str, Any]) -> Fan:
    """Inverse of :func:`fan_to_dict`; rays are re-keyed by their position."""
    d = 5 if data["field"] == "sqrt5" else None
    rays = {i: tuple(parse_scalar(x, d) for x in r["coords"]) for i, r in enumerate(data["rays"])}
    cones = [tuple(c) for c in data["cones"]]
    dim = len(data["rays"][0]["coords"]) if data["rays"] else 0
    labels = {i: r["label"] for i, r in enumerate(data["rays"])}
    return Fan(rays=rays, cones=cones, dim=dim, labels=labels, field_name=data["field"])


def dump_fan(fan: Fan, G: CoxeterGroup, kind: str = "") -> str:
    return json.dumps(fan_to_dict(fan, G, kind), sort_keys=True, indent=1) + "\n"


def load_fan(text: str) -> Fan:
    return fan_from_dict(json.loads(text))


# ------------------------------------------------------------------- SVG
def _cholesky(B):
    """Lower-triangular ``L`` with ``B = L L^T`` (floats)."""
    n = len(B)
    L = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            s = B[i][j] - sum(L[i][k] * L[j][k] for k in range(j))
            L[i][j] = math.sqrt(s) if i == j else s / L[j][j]
    return L


def _euclid(L, v):
    """Orthonormal coordinates of ``v`` (given in simple-root coordinates)."""
    n = len(v)
    return [sum(L[i][j] * v[i] for i in range(j, n)) for j in range(n)]


def _unit(x):
    r = math.sqrt(sum(t * t for t in x))
    return [t / r for t in x]


def fan_svg(fan: Fan, G: CoxeterGroup, steps: int = 48, max_radius: float = 6.0) -> str:
    """One ``<path>`` per wall (great-circle arc between two rays) and one dot per ray."""
    if fan.dim != 3:
        raise ValueError("SVG export needs a rank-3 fan")
    B = [[to_float(x) for x in row] for row in G.form]
    L = _cholesky(B)
    pts = {k: _unit(_euclid(L, [to_float(x) for x in v])) for k, v in fan.rays.items()}
    u = _unit(_euclid(L, [to_float(x) for x in G.fundamental_weights()[0]]))
    # orthonormal basis of the plane perpendicular to u
    helper = min(([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]), key=lambda e: abs(sum(a * b for a, b in zip(e, u))))
    e1 = _unit([h - sum(a * b for a, b in zip(helper, u)) * x for h, x in zip(helper, u)])
    e2 = [u[1] * e1[2] - u[2] * e1[1], u[2] * e1[0] - u[0] * e1[2], u[0] * e1[1] - u[1] * e1[0]]

    def project(p):
        d = 1.0 + sum(a * b for a, b in zip(p, u))
        if d < 1e-9:
            return None
        q = (sum(a * b for a, b in zip(p, e1)) / d, sum(a * b for a, b in zip(p, e2)) / d)
        return q if math.hypot(*q) <= max_radius else None

    ray_q = {k: project(p) for k, p in pts.items()}
    extent = max([math.hypot(*q) for q in ray_q.values() if q] + [1.0])
    half = SVG_SIZE / 2
    scale = (half - 40) / extent

    def coords(q):
        return f"{half + scale * q[0]:.3f}", f"{half - scale * q[1]:.3f}"

    def xy(q):
        return ",".join(coords(q))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
    ]
    for face in sorted(fan.walls()):
        a, b = pts[face[0]], pts[face[1]]
        omega = math.acos(max(-1.0, min(1.0, sum(x * y for x, y in zip(a, b)))))
        pieces, cur = [], []
        for i in range(steps + 1):
            t = i / steps
            if omega < 1e-12:
                p = a
            else:
                wa, wb = math.sin((1 - t) * omega), math.sin(t * omega)
                p = _unit([wa * x + wb * y for x, y in zip(a, b)])
            q = project(p)
            if q is None:
                if len(cur) > 1:
                    pieces.append(cur)
                cur = []
            else:
                cur.append(q)
        if len(cur) > 1:
            pieces.append(cur)
        d = " ".join("M" + " L".join(xy(q) for q in piece) for piece in pieces)
        label = " / ".join(fan.labels.get(k, str(k)) for k in face)
        out.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="1.5"><title>{label}</title></path>')
    for k in sorted(fan.rays):
        q = ray_q[k]
        if q is None:
            continue
        x, y = coords(q)
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="crimson"><title>{fan.labels.get(k, str(k))}</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
