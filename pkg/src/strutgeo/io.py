"""Polygon JSON, deterministic float serialization and SVG rendering."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Iterable, Optional
from xml.sax.saxutils import escape

import numpy as np

from .geom import ConvexPolygon

SVG_UNIT = 100.0


def polygon_to_dict(P: ConvexPolygon) -> dict:
    return {"vertices": [[float(x), float(y)] for x, y in P.vertices]}


def polygon_from_dict(doc) -> ConvexPolygon:
    """Read ``{"vertices": [[x, y], ...]}``; the vertex list must describe a convex polygon."""
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ValueError('polygon JSON needs a "vertices" key')
    verts = doc["vertices"]
    if not isinstance(verts, list) or not verts:
        raise ValueError('"vertices" must be a non-empty list of [x, y] pairs')
    pts = []
    for v in verts:
        if (not isinstance(v, (list, tuple)) or len(v) != 2
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)):
            raise ValueError(f"bad vertex {v!r}; expected [x, y]")
        pts.append((float(v[0]), float(v[1])))
    return ConvexPolygon(pts)


def read_polygon(path) -> ConvexPolygon:
    with open(path) as fh:
        return polygon_from_dict(json.load(fh))


def write_polygon(P: ConvexPolygon, path) -> None:
    Path(path).write_text(dumps(polygon_to_dict(P)) + "\n")


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def _emit(obj, indent: Optional[int], level: int) -> str:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return format(obj, ".17g")
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end = "" if indent is None else "\n" + " " * (indent * level)
    sep = ", " if indent is None else ","
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_emit(v, indent, level + 1)}" for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_emit(v, None, 0) for v in obj) + "]"
        return "[" + sep.join(f"{pad}{_emit(v, indent, level + 1)}" for v in obj) + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: Optional[int] = 2) -> str:
    """JSON with every float written at 17 significant digits (non-finite as null)."""
    return _emit(_plain(obj), indent, 0)


def polygon_svg(P: ConvexPolygon, struts: Iterable = (), margin: float = 0.2) -> str:
    """Standalone SVG: 1 length unit = 100 px, 1 px stroke, struts as dashed chords.

    ``struts`` holds ``(A, B, apex)`` triples; each is drawn as two dashed
    segments from the side endpoints to the apex.
    """
    struts = list(struts)
    pts = [tuple(p) for p in P.vertices]
    extra = [tuple(s[2]) for s in struts]
    allp = np.array(pts + extra, dtype=float)
    lo = allp.min(axis=0) - margin
    hi = allp.max(axis=0) + margin
    w, h = (hi - lo) * SVG_UNIT

    def px(p):
        # y axis flipped so the picture keeps its mathematical orientation
        return (p[0] - lo[0]) * SVG_UNIT, (hi[1] - p[1]) * SVG_UNIT

    coords = " ".join(f"{x:.4f},{y:.4f}" for x, y in map(px, pts))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.4f}" height="{h:.4f}" '
        f'viewBox="0 0 {w:.4f} {h:.4f}">',
        f'<title>{escape(f"convex polygon, {len(pts)} vertices")}</title>',
    ]
    if len(pts) >= 2:
        lines.append(f'<polygon points="{coords}" fill="none" stroke="black" stroke-width="1"/>')
    else:
        x, y = px(pts[0])
        lines.append(f'<circle cx="{x:.4f}" cy="{y:.4f}" r="1" fill="black"/>')
    for A, B, C in struts:
        cx, cy = px(C)
        for E in (A, B):
            ex, ey = px(E)
            lines.append(f'<line x1="{ex:.4f}" y1="{ey:.4f}" x2="{cx:.4f}" y2="{cy:.4f}" '
                         'stroke="gray" stroke-width="1" stroke-dasharray="4 3"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(P: ConvexPolygon, path, struts: Iterable = ()) -> None:
    Path(path).write_text(polygon_svg(P, struts))
