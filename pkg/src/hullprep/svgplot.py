"""Minimal hand-rolled SVG scatter plot with an optional fitted line.

Just enough markup for the scaling report: axes with end-tick labels, data
points, a straight line in data coordinates.  Output is deterministic for
identical inputs (fixed float formatting, no timestamps).
"""

from __future__ import annotations

__all__ = ["scatter_svg"]

_WIDTH = 640
_HEIGHT = 440
_MARGIN = 60


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def scatter_svg(
    xs,
    ys,
    line=None,
    x_label: str = "x",
    y_label: str = "y",
    title: str = "",
) -> str:
    """Render points (and a line y = a + b*x if given as (a, b)) to SVG text."""
    xs = [float(v) for v in xs]
    ys = [float(v) for v in ys]
    if len(xs) != len(ys) or not xs:
        raise ValueError("need equally many xs and ys, at least one point")
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0
    plot_w = _WIDTH - 2 * _MARGIN
    plot_h = _HEIGHT - 2 * _MARGIN

    def px(x: float) -> float:
        return _MARGIN + (x - x_lo) / x_span * plot_w

    def py(y: float) -> float:
        return _HEIGHT - _MARGIN - (y - y_lo) / y_span * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        # axes
        f'<line x1="{_MARGIN}" y1="{_HEIGHT - _MARGIN}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" y2="{_HEIGHT - _MARGIN}" '
        f'stroke="black"/>',
        # end-tick labels
        f'<text x="{_MARGIN}" y="{_HEIGHT - _MARGIN + 20}" font-size="12" '
        f'text-anchor="middle">{_fmt(x_lo)}</text>',
        f'<text x="{_WIDTH - _MARGIN}" y="{_HEIGHT - _MARGIN + 20}" font-size="12" '
        f'text-anchor="middle">{_fmt(x_hi)}</text>',
        f'<text x="{_MARGIN - 8}" y="{_HEIGHT - _MARGIN + 4}" font-size="12" '
        f'text-anchor="end">{_fmt(y_lo)}</text>',
        f'<text x="{_MARGIN - 8}" y="{_MARGIN + 4}" font-size="12" '
        f'text-anchor="end">{_fmt(y_hi)}</text>',
        f'<text x="{_WIDTH // 2}" y="{_HEIGHT - 16}" font-size="13" '
        f'text-anchor="middle">{x_label}</text>',
        f'<text x="16" y="{_HEIGHT // 2}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 16 {_HEIGHT // 2})">{y_label}</text>',
    ]
    if title:
        parts.append(
            f'<text x="{_WIDTH // 2}" y="{_MARGIN - 20}" font-size="14" '
            f'text-anchor="middle">{title}</text>'
        )
    if line is not None:
        a, b = float(line[0]), float(line[1])
        parts.append(
            f'<line x1="{_fmt(px(x_lo))}" y1="{_fmt(py(a + b * x_lo))}" '
            f'x2="{_fmt(px(x_hi))}" y2="{_fmt(py(a + b * x_hi))}" '
            f'stroke="crimson" stroke-width="1.5"/>'
        )
    for x, y in zip(xs, ys):
        parts.append(
            f'<circle cx="{_fmt(px(x))}" cy="{_fmt(py(y))}" r="3.5" '
            f'fill="steelblue" fill-opacity="0.8"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
