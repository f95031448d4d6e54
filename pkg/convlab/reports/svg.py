"""
Plain SVG line charts.

Output is a pure function of the rows: series are drawn in sorted order
and every coordinate is formatted to two decimal places.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

Point = Tuple[float, float]

WIDTH = 640
HEIGHT = 400
MARGIN = 50
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f")


def _scale(value: float, low: float, high: float, start: float, end: float) -> float:
    if high == low:
        return (start + end) / 2
    return start + (value - low) * (end - start) / (high - low)


def line_chart(
    series: Dict[str, Sequence[Point]],
    title: str,
    x_label: str,
    y_label: str,
) -> str:
    """One polyline per series; the y axis spans [0, 1]."""
    xs = [x for points in series.values() for x, _ in points]
    x_low, x_high = (min(xs), max(xs)) if xs else (0.0, 1.0)
    left, right = MARGIN, WIDTH - MARGIN
    top, bottom = MARGIN, HEIGHT - MARGIN

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.2f}" y="{MARGIN / 2:.2f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{escape(title)}</text>',
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="black"/>',
        f'<text x="{WIDTH / 2:.2f}" y="{HEIGHT - 10}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12">{escape(x_label)}</text>',
        f'<text x="15" y="{HEIGHT / 2:.2f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12" transform="rotate(-90 15 {HEIGHT / 2:.2f})">{escape(y_label)}</text>',
        f'<text x="{left - 5}" y="{bottom}" text-anchor="end" font-family="sans-serif" font-size="10">0</text>',
        f'<text x="{left - 5}" y="{top}" text-anchor="end" font-family="sans-serif" font-size="10">1</text>',
        f'<text x="{left}" y="{bottom + 15}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="10">{x_low:g}</text>',
        f'<text x="{right}" y="{bottom + 15}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="10">{x_high:g}</text>',
    ]
    for index, name in enumerate(sorted(series)):
        color = COLORS[index % len(COLORS)]
        coords = " ".join(
            f"{_scale(x, x_low, x_high, left, right):.2f},{_scale(y, 0.0, 1.0, bottom, top):.2f}"
            for x, y in series[name]
        )
        lines.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}">'
            f'<title>{escape(name)}</title></polyline>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _number(value) -> float:
    return float(Fraction(str(value)))


def _group(rows: List[dict], key, x_field: str, y_field: str) -> Dict[str, List[Point]]:
    series: Dict[str, List[Point]] = {}
    for row in rows:
        series.setdefault(key(row), []).append((_number(row[x_field]), _number(row[y_field])))
    return {name: sorted(points) for name, points in series.items()}


def chart_for(kind: str, rows: List[dict]) -> Optional[str]:
    """The chart for a report kind, or None for kinds without one."""
    if kind == "consistency":
        return line_chart(
            _group(rows, lambda row: f"{row.get('source', 'run')} n={row['n']}", "p", "coverage"),
            "Coverage of the estimate", "p", "P(|estimate - p| < epsilon)",
        )
    if kind == "progressiveness":
        return line_chart(
            _group(rows, lambda row: f"{row['test']} p={row['p']}", "n", "chance"),
            "Chance of outputting the truth", "n", "chance",
        )
    if kind == "bayes":
        return line_chart(
            _group(
                rows,
                lambda row: " ".join(filter(None, [row.get("source"), row["world"]])),
                "length",
                "mass",
            ),
            "Posterior on the truth", "evidence length", "posterior",
        )
    return None
