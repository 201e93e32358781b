"""Barcode rendering: fixed-width text and matplotlib figures.

Layout is deterministic: bars sorted by (birth, death), one row per unit of
multiplicity, immortal bars drawn to a right margin with an arrowhead.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .diagram import PersistenceDiagram, to_barcode

TEXT_WIDTH = 60


def _bar_rows(diagram: PersistenceDiagram) -> list[tuple[Fraction, Fraction | None]]:
    rows: list[tuple[Fraction, Fraction | None]] = []
    for birth, death, multiplicity in to_barcode(diagram):
        rows.extend([(birth, death)] * multiplicity)
    return rows


def _axis_range(rows: list[tuple[Fraction, Fraction | None]]) -> tuple[Fraction, Fraction]:
    finite = [b for b, _ in rows] + [d for _, d in rows if d is not None]
    if not finite:
        return Fraction(0), Fraction(1)
    lo, hi = min(finite), max(finite)
    if lo == hi:
        hi = lo + 1
    # right margin so immortal bars visibly overshoot the last event
    return lo, hi + (hi - lo) / 4


def render_text(diagram: PersistenceDiagram, width: int = TEXT_WIDTH) -> str:
    """Fixed-width text barcode; one row per bar, ``>`` marks immortality."""
    rows = _bar_rows(diagram)
    lo, hi = _axis_range(rows)
    span = hi - lo

    def column(value: Fraction) -> int:
        return int((value - lo) * (width - 1) / span)

    lines = [f"dim {diagram.dimension}  range [{lo}, {hi}]"]
    for birth, death in rows:
        start = column(birth)
        if death is None:
            end, arrow = width - 1, ">"
        else:
            end, arrow = max(column(death), start + 1), "|"
        body = " " * start + "#" * (end - start) + arrow
        label = f"[{birth}, {'inf' if death is None else death})"
        lines.append(f"{body:<{width + 1}} {label}")
    axis = "-" * width
    lines.append(axis)
    return "\n".join(lines) + "\n"


def render_figure(diagram: PersistenceDiagram, title: str | None = None):
    """Matplotlib barcode figure (empty diagrams still get an axis)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = _bar_rows(diagram)
    lo, hi = _axis_range(rows)
    fig, ax = plt.subplots(figsize=(6, max(1.5, 0.3 * len(rows) + 0.8)))
    for height, (birth, death) in enumerate(rows):
        if death is None:
            ax.annotate(
                "",
                xy=(float(hi), height),
                xytext=(float(birth), height),
                arrowprops={"arrowstyle": "->", "color": "C0", "linewidth": 2},
            )
        else:
            ax.hlines(height, float(birth), float(death), colors="C0", linewidth=2)
    ax.set_xlim(float(lo) - 0.05 * float(hi - lo), float(hi))
    ax.set_ylim(-1, max(1, len(rows)))
    ax.set_yticks([])
    ax.set_xlabel("scale")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return fig


def save_figure(diagram: PersistenceDiagram, path: str | Path, title: str | None = None) -> None:
    import matplotlib

    matplotlib.use("Agg")
    with matplotlib.rc_context({"svg.hashsalt": "dirph"}):
        fig = render_figure(diagram, title=title)
        # strip the creation date so identical diagrams give identical files
        metadata = {"Date": None} if str(path).endswith(".svg") else None
        fig.savefig(str(path), metadata=metadata)
        import matplotlib.pyplot as plt

        plt.close(fig)


def render_barcode(diagram: PersistenceDiagram, format: str, path: str | Path | None = None,
                   title: str | None = None) -> str | None:
    """Render one diagram: returns text, or writes an svg/png file."""
    if format == "text":
        return render_text(diagram)
    if format in ("svg", "png"):
        if path is None:
            raise ValueError("file path required for figure output")
        save_figure(diagram, path, title=title)
        return None
    raise ValueError(f"unknown render format {format!r}")
