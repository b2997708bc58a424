"""Curve-set emitters: CSV, JSON and a dependency-free SVG line plot.

Output is byte-identical for identical input: fixed float formatting, fixed
curve order, fixed SVG template with no external assets.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .figures import ConfigError, CurveSet

_FMT = "{:.12g}"

_WIDTH, _HEIGHT = 800, 600
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 70, 170, 30, 50
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#17becf", "#7f7f7f")


def _shared_x(curves) -> np.ndarray:
    x0 = curves[0].x
    for c in curves[1:]:
        if c.x.size != x0.size or np.max(np.abs(c.x - x0)) > 0:
            raise ConfigError("emitters require curves on a shared x grid")
    return x0


def to_csv(curves: CurveSet) -> str:
    x = _shared_x(curves.curves)
    header = ",".join(["x"] + [c.label for c in curves.curves])
    lines = [header]
    for i in range(x.size):
        row = [_FMT.format(x[i])] + [_FMT.format(c.y[i]) for c in curves.curves]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def to_json(curves: CurveSet) -> str:
    payload = {
        "x_label": curves.x_label,
        "y_label": curves.y_label,
        "curves": [
            {"label": c.label,
             "points": [[float(_FMT.format(xv)), float(_FMT.format(yv))]
                        for xv, yv in zip(c.x, c.y)]}
            for c in curves.curves
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _ticks(lo: float, hi: float, log: bool):
    if log:
        first = math.ceil(math.log10(lo) - 1e-12)
        last = math.floor(math.log10(hi) + 1e-12)
        return [10.0**k for k in range(first, last + 1)]
    span = hi - lo
    if span <= 0:
        return [lo]
    step = 10.0 ** math.floor(math.log10(span / 4))
    for mult in (1, 2, 5, 10):
        if span / (step * mult) <= 6:
            step *= mult
            break
    first = math.ceil(lo / step)
    return [k * step for k in range(first, math.floor(hi / step) + 1)]


def to_svg(curves: CurveSet) -> str:
    x = _shared_x(curves.curves)
    log_x = bool(np.all(x > 0) and x[-1] / x[0] >= 50)
    xv = np.log10(x) if log_x else x
    ys = np.concatenate([c.y for c in curves.curves])
    y_lo, y_hi = float(np.min(ys)), float(np.max(ys))
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo -= pad
    y_hi += pad
    x_lo, x_hi = float(xv[0]), float(xv[-1])
    if x_hi == x_lo:
        x_hi = x_lo + 1.0

    plot_w = _WIDTH - _MARGIN_L - _MARGIN_R
    plot_h = _HEIGHT - _MARGIN_T - _MARGIN_B

    def px(v: float) -> float:
        return _MARGIN_L + (v - x_lo) / (x_hi - x_lo) * plot_w

    def py(v: float) -> float:
        return _MARGIN_T + (y_hi - v) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<rect x="{_MARGIN_L}" y="{_MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="black"/>',
    ]
    for tick in _ticks(x[0], x[-1], log_x):
        tv = math.log10(tick) if log_x else tick
        if tv < x_lo - 1e-9 or tv > x_hi + 1e-9:
            continue
        xp = px(tv)
        parts.append(f'<line x1="{xp:.2f}" y1="{_MARGIN_T + plot_h}" '
                     f'x2="{xp:.2f}" y2="{_MARGIN_T + plot_h + 5}" stroke="black"/>')
        parts.append(f'<text x="{xp:.2f}" y="{_MARGIN_T + plot_h + 18}" '
                     f'font-size="11" text-anchor="middle">{tick:g}</text>')
    for tick in _ticks(y_lo, y_hi, False):
        yp = py(tick)
        parts.append(f'<line x1="{_MARGIN_L - 5}" y1="{yp:.2f}" '
                     f'x2="{_MARGIN_L}" y2="{yp:.2f}" stroke="black"/>')
        parts.append(f'<text x="{_MARGIN_L - 8}" y="{yp + 4:.2f}" '
                     f'font-size="11" text-anchor="end">{tick:g}</text>')
    parts.append(f'<text x="{_MARGIN_L + plot_w / 2:.1f}" y="{_HEIGHT - 10}" '
                 f'font-size="13" text-anchor="middle">{curves.x_label}</text>')
    parts.append(f'<text x="18" y="{_MARGIN_T + plot_h / 2:.1f}" font-size="13" '
                 f'text-anchor="middle" transform="rotate(-90 18 '
                 f'{_MARGIN_T + plot_h / 2:.1f})">{curves.y_label}</text>')
    for k, c in enumerate(curves.curves):
        color = _PALETTE[k % len(_PALETTE)]
        pts = " ".join(f"{px(vx):.2f},{py(vy):.2f}" for vx, vy in zip(xv, c.y))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                     'stroke-width="1.5"/>')
        ly = _MARGIN_T + 18 + 18 * k
        lx = _MARGIN_L + plot_w + 12
        parts.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 22}" y2="{ly - 4}" '
                     f'stroke="{color}" stroke-width="1.5"/>')
        parts.append(f'<text x="{lx + 28}" y="{ly}" font-size="11">{c.label}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


_RENDERERS = {"csv": to_csv, "json": to_json, "svg": to_svg}


def emit(curves: CurveSet, fmt: str, path: str) -> None:
    """Render a curve set to ``path``; nothing is written on invalid input."""
    if fmt not in _RENDERERS:
        raise ConfigError(f"unknown format {fmt!r}; expected csv, json or svg")
    text = _RENDERERS[fmt](curves)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
