"""Emit the beta_d(pi/2) curve as CSV data and a dependency-free SVG plot."""

from __future__ import annotations

import math
from typing import IO, Sequence

from .beta import beta_half_theta
from .errors import DomainError
from .report import format_number

CSV_HEADER = "x,beta"


def beta_curve(x_max: float, points: int) -> list[tuple[float, float]]:
    """(x, beta) rows on the uniform grid x_i = x_max * i / points, i = 1..points."""
    if not x_max > 0.0 or math.isnan(x_max):
        raise DomainError(f"x_max must be positive (got {x_max!r})")
    if points < 16:
        raise DomainError(f"points must be >= 16 (got {points})")
    rows = []
    for i in range(1, points + 1):
        x = x_max * i / points
        rows.append((x, beta_half_theta(x)))
    return rows


def write_curve_csv(rows: Sequence[tuple[float, float]], stream: IO[str]) -> None:
    stream.write(CSV_HEADER + "\n")
    for x, beta in rows:
        stream.write(f"{format_number(x)},{format_number(beta)}\n")


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def write_curve_svg(
    rows: Sequence[tuple[float, float]],
    stream: IO[str],
    width: int = 720,
    height: int = 480,
) -> None:
    """Self-contained SVG line plot: polyline, two axes, tick labels."""
    margin_left, margin_right, margin_top, margin_bottom = 64, 16, 16, 44
    plot_w = width - margin_left - margin_right
    plot_h = height - margin_top - margin_bottom
    xs = [r[0] for r in rows]
    ys = [r[1] for r in rows]
    x_lo, x_hi = 0.0, max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if y_hi - y_lo < 1e-12:
        pad = max(1e-12, abs(y_hi) * 1e-6)
        y_lo, y_hi = y_lo - pad, y_hi + pad

    def px(x: float) -> float:
        return margin_left + plot_w * (x - x_lo) / (x_hi - x_lo)

    def py(y: float) -> float:
        return margin_top + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo))

    points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in rows)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin_left}" y1="{margin_top + plot_h}" x2="{margin_left + plot_w}" '
        f'y2="{margin_top + plot_h}" stroke="black" stroke-width="1"/>',
        f'<line x1="{margin_left}" y1="{margin_top}" x2="{margin_left}" '
        f'y2="{margin_top + plot_h}" stroke="black" stroke-width="1"/>',
    ]
    for tx in _ticks(x_lo, x_hi):
        parts.append(
            f'<line x1="{px(tx):.2f}" y1="{margin_top + plot_h}" x2="{px(tx):.2f}" '
            f'y2="{margin_top + plot_h + 5}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{px(tx):.2f}" y="{margin_top + plot_h + 20}" font-size="12" '
            f'font-family="sans-serif" text-anchor="middle">{tx:.4g}</text>'
        )
    for ty in _ticks(y_lo, y_hi):
        parts.append(
            f'<line x1="{margin_left - 5}" y1="{py(ty):.2f}" x2="{margin_left}" '
            f'y2="{py(ty):.2f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{margin_left - 8}" y="{py(ty):.2f}" font-size="12" '
            f'font-family="sans-serif" text-anchor="end" dominant-baseline="middle">'
            f"{ty:.6g}</text>"
        )
    parts.append(
        f'<text x="{margin_left + plot_w / 2:.0f}" y="{height - 8}" font-size="13" '
        f'font-family="sans-serif" text-anchor="middle">x</text>'
    )
    parts.append(
        f'<polyline points="{points}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>'
    )
    parts.append("</svg>")
    stream.write("\n".join(parts) + "\n")
