"""Histogram CSV, length dumps and a dependency-free SVG histogram."""
from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Iterable
from xml.sax.saxutils import escape

import numpy as np

from .errors import ReportError
from .stats import Histogram

WIDTH, HEIGHT = 800, 500
_LEFT, _RIGHT, _TOP, _BOTTOM = 70, 20, 50, 60


def fmt(v: float) -> str:
    """Fixed decimal with 12 digits after the point (the output format everywhere)."""
    return f"{v:.12f}"


def histogram_csv(h: Histogram) -> str:
    out = io.StringIO()
    out.write("bin_lo,bin_hi,count\n")
    edges = h.edges
    for i, c in enumerate(h.counts):
        out.write(f"{fmt(edges[i])},{fmt(edges[i + 1])},{int(c)}\n")
    return out.getvalue()


def write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as exc:
        raise ReportError(f"cannot write {path}: {exc}") from exc


def read_histogram_csv(path) -> Histogram:
    """Inverse of :func:`histogram_csv`. Bins must be contiguous and equally wide."""
    try:
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.DictReader(f))
    except OSError as exc:
        raise ReportError(f"cannot read {path}: {exc}") from exc
    except csv.Error as exc:
        raise ValueError(f"{path}: malformed CSV: {exc}") from exc
    if not rows:
        raise ValueError(f"{path}: no histogram rows")
    if set(rows[0]) != {"bin_lo", "bin_hi", "count"}:
        raise ValueError(f"{path}: header must be bin_lo,bin_hi,count")
    lo = np.array([float(r["bin_lo"]) for r in rows])
    hi = np.array([float(r["bin_hi"]) for r in rows])
    counts = np.array([int(r["count"]) for r in rows])
    width = hi[0] - lo[0]
    if not width > 0 or not np.allclose(hi - lo, width, rtol=1e-9, atol=1e-9):
        raise ValueError(f"{path}: bins are not equally wide")
    if not np.allclose(lo[1:], hi[:-1], rtol=1e-12, atol=1e-9):
        raise ValueError(f"{path}: bins are not contiguous")
    if np.any(counts < 0):
        raise ValueError(f"{path}: negative count")
    # recover the exact width printed with 12 decimals
    width = float(fmt(width))
    return Histogram(width, float(lo[0]), counts)


def lengths_csv(values: Iterable[float]) -> str:
    return "length\n" + "".join(fmt(v) + "\n" for v in values)


def nice_step(span: float, target: int = 8) -> float:
    """A 1/2/5 x 10^k step giving roughly ``target`` ticks over ``span``."""
    if not span > 0:
        return 1.0
    raw = span / target
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if m * mag >= raw:
            return m * mag
    return 10 * mag  # pragma: no cover


def _ticks(lo: float, hi: float, target: int = 8) -> list[float]:
    step = nice_step(hi - lo, target)
    start = math.ceil(lo / step - 1e-9)
    stop = math.floor(hi / step + 1e-9)
    return [k * step for k in range(start, stop + 1)]


def _label(v: float) -> str:
    return f"{v:.6g}"


def render_svg(h: Histogram, title: str = "") -> str:
    """SVG document for ``h``: 800x500 viewBox, one rect per non-empty bin."""
    if h.counts.size == 0 or h.total == 0:
        raise ReportError("refusing to draw an empty histogram")
    pw = WIDTH - _LEFT - _RIGHT
    ph = HEIGHT - _TOP - _BOTTOM
    x0 = h.origin
    x1 = h.origin + h.bin_width * h.counts.size
    ymax = int(h.counts.max())

    def sx(v):
        return _LEFT + (v - x0) / (x1 - x0) * pw

    def sy(c):
        return _TOP + ph - c / ymax * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="28" text-anchor="middle" font-size="16">{escape(title)}</text>',
        '<g fill="steelblue" stroke="none">',
    ]
    edges = h.edges
    for i, c in enumerate(h.counts):
        if c == 0:
            continue
        xa, xb = sx(edges[i]), sx(edges[i + 1])
        out.append(
            f'<rect x="{xa:.2f}" y="{sy(c):.2f}" width="{xb - xa:.2f}" height="{ph - (sy(c) - _TOP):.2f}"/>'
        )
    out.append("</g>")

    base = _TOP + ph
    out.append('<g stroke="black" fill="none">')
    out.append(f'<line x1="{_LEFT}" y1="{base}" x2="{_LEFT + pw}" y2="{base}"/>')
    out.append(f'<line x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{base}"/>')
    xt = _ticks(x0, x1)
    yt = [t for t in _ticks(0, ymax, 5) if t == int(t)]
    for t in xt:
        out.append(f'<line x1="{sx(t):.2f}" y1="{base}" x2="{sx(t):.2f}" y2="{base + 5}"/>')
    for t in yt:
        out.append(f'<line x1="{_LEFT - 5}" y1="{sy(t):.2f}" x2="{_LEFT}" y2="{sy(t):.2f}"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for t in xt:
        out.append(f'<text x="{sx(t):.2f}" y="{base + 20}" text-anchor="middle">{_label(t)}</text>')
    for t in yt:
        out.append(f'<text x="{_LEFT - 8}" y="{sy(t) + 4:.2f}" text-anchor="end">{int(t)}</text>')
    out.append(
        f'<text x="{_LEFT + pw / 2:.2f}" y="{HEIGHT - 15}" text-anchor="middle">geodesic length</text>'
    )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(h: Histogram, path, title: str = "") -> None:
    """Write :func:`render_svg` output to ``path``; nothing is written on error."""
    write_text(Path(path), render_svg(h, title))


def svg_title(metric, L: int, mode: str) -> str:
    return f"(A,B,C) = ({metric.A:g}, {metric.B:g}, {metric.C:g}), L = {L}, {mode}"
