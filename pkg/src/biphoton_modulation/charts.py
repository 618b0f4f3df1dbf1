"""Minimal deterministic SVG charts (no plotting library).

Continuous curves are drawn as polylines, combs as stems, mirroring the
usual presentation of spectra versus sideband weights.  Output is a plain
SVG string with fixed geometry so repeated runs are byte-identical.
"""

from __future__ import annotations

import numpy as np

_WIDTH = 720
_HEIGHT = 480
_MARGIN = 64


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _scale(values, lo, hi, out_lo, out_hi):
    values = np.asarray(values, dtype=float)
    span = hi - lo if hi > lo else 1.0
    return out_lo + (values - lo) * (out_hi - out_lo) / span


def _frame(title: str, xlabel: str, ylabel: str,
           xlo: float, xhi: float, ylo: float, yhi: float) -> list[str]:
    left, right = _MARGIN, _WIDTH - _MARGIN
    top, bottom = _MARGIN, _HEIGHT - _MARGIN
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH // 2}" y="28" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" '
        'stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" '
        'stroke="black"/>',
        f'<text x="{_WIDTH // 2}" y="{_HEIGHT - 16}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{xlabel}</text>',
        f'<text x="20" y="{_HEIGHT // 2}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 20 {_HEIGHT // 2})">{ylabel}</text>',
        f'<text x="{left}" y="{bottom + 18}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11">{_fmt(xlo)}</text>',
        f'<text x="{right}" y="{bottom + 18}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="11">{_fmt(xhi)}</text>',
        f'<text x="{left - 6}" y="{bottom}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{_fmt(ylo)}</text>',
        f'<text x="{left - 6}" y="{top + 4}" text-anchor="end" '
        f'font-family="sans-serif" font-size="11">{_fmt(yhi)}</text>',
    ]


def _limits(values):
    lo = float(np.min(values))
    hi = float(np.max(values))
    if lo == hi:
        lo -= 0.5
        hi += 0.5
    return lo, hi


def line_chart(x, y, title: str, xlabel: str, ylabel: str) -> str:
    """Polyline chart of a continuous curve."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xlo, xhi = _limits(x)
    ylo, yhi = _limits(y)
    parts = _frame(title, xlabel, ylabel, xlo, xhi, ylo, yhi)
    px = _scale(x, xlo, xhi, _MARGIN, _WIDTH - _MARGIN)
    py = _scale(y, ylo, yhi, _HEIGHT - _MARGIN, _MARGIN)
    points = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in zip(px, py))
    parts.append(f'<polyline points="{points}" fill="none" '
                 'stroke="#1f5fbf" stroke-width="1.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def stem_chart(x, y, title: str, xlabel: str, ylabel: str) -> str:
    """Stem chart for discrete comb weights."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    xlo, xhi = _limits(x)
    ylo = min(0.0, float(np.min(y)))
    yhi = max(float(np.max(y)), ylo + 1e-30)
    parts = _frame(title, xlabel, ylabel, xlo, xhi, ylo, yhi)
    px = _scale(x, xlo, xhi, _MARGIN, _WIDTH - _MARGIN)
    py = _scale(y, ylo, yhi, _HEIGHT - _MARGIN, _MARGIN)
    base = _scale(np.array([0.0]), ylo, yhi, _HEIGHT - _MARGIN, _MARGIN)[0]
    for a, b in zip(px, py):
        parts.append(f'<line x1="{_fmt(a)}" y1="{_fmt(base)}" '
                     f'x2="{_fmt(a)}" y2="{_fmt(b)}" stroke="#1f5fbf" '
                     'stroke-width="2"/>')
        parts.append(f'<circle cx="{_fmt(a)}" cy="{_fmt(b)}" r="3" '
                     'fill="#1f5fbf"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
