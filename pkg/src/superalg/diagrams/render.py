"""Text and SVG rendering of weight and cup diagrams."""

import io
from dataclasses import dataclass

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Arc

from superalg.definitions import SVG_SPACING
from superalg.diagrams.cups import CupDiagram, WeightDiagram

POINTS_PER_INCH = 72


@dataclass
class SvgStyle:
    """Presentation parameters for `render_svg`.

    Attributes:
        spacing: Horizontal distance between consecutive integer positions
        margin: Blank border around the drawing
        font_size: Font size of the diagram symbols
        stroke: Colour of the number line and arcs
        stroke_width: Line width of the number line and arcs
        show_positions: Whether to label integer positions above the symbols
    """

    spacing: int = SVG_SPACING
    margin: int = 24
    font_size: int = 16
    stroke: str = "black"
    stroke_width: float = 1.5
    show_positions: bool = True

    def __post_init__(self):
        """Validate dimensions and normalize the colour name."""
        if self.spacing <= 0 or self.font_size <= 0 or self.margin < 0:
            raise ValueError(
                f"spacing and font_size must be positive and margin non-negative, got {self}"
            )
        self.stroke = self.stroke.strip().lower()


def _default_window(diagram: WeightDiagram | CupDiagram) -> tuple[int, int] | None:
    bounds = diagram.window
    if bounds is None:
        return None
    return (bounds[0] - 1, bounds[1] + 1)


def _arcs_of(diagram: WeightDiagram | CupDiagram) -> tuple[tuple[int, int], ...]:
    return diagram.arcs if isinstance(diagram, CupDiagram) else ()


def arc_heights(arcs: tuple[tuple[int, int], ...]) -> dict[tuple[int, int], int]:
    """Nesting depth of each arc: 1 plus the largest depth of the arcs it encloses."""
    heights: dict[tuple[int, int], int] = {}
    for arc in sorted(arcs, key=lambda a: a[1] - a[0]):
        inner = [heights[b] for b in heights if arc[0] < b[0] and b[1] < arc[1]]
        heights[arc] = 1 + max(inner, default=0)
    return heights


def render_text(
    diagram: WeightDiagram | CupDiagram, window: tuple[int, int] | None = None
) -> str:
    """Render the symbol line followed by one row per arc level.

    Position p occupies column 2·(p - lo). Row k draws `└─┘` under arcs of height k and `│` at
    the endpoints of taller arcs.

    Args:
        diagram: Weight or cup diagram
        window: Inclusive (lo, hi) range of positions; defaults to the support widened by one

    Returns:
        The rendering, or an empty string for an empty window
    """
    bounds = window if window is not None else _default_window(diagram)
    if bounds is None or bounds[0] > bounds[1]:
        return ""
    lo, hi = bounds
    lines = [" ".join(str(diagram[p]) for p in range(lo, hi + 1))]

    width = 2 * (hi - lo) + 1
    visible = {
        arc: h for arc, h in arc_heights(_arcs_of(diagram)).items() if arc[0] <= hi and arc[1] >= lo
    }
    for level in range(1, max(visible.values(), default=0) + 1):
        row = [" "] * width

        def put(column: int, char: str):
            if 0 <= column < width:
                row[column] = char

        for (left, right), h in visible.items():
            start, end = 2 * (left - lo), 2 * (right - lo)
            if h == level:
                for column in range(max(start, 0), min(end, width - 1) + 1):
                    row[column] = "─"
                put(start, "└")
                put(end, "┘")
            elif h > level:
                put(start, "│")
                put(end, "│")
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


def draw_diagram(
    diagram: WeightDiagram | CupDiagram,
    style: SvgStyle | None = None,
    window: tuple[int, int] | None = None,
) -> Figure:
    """Draw the diagram on a matplotlib figure in position units.

    Position p sits at x = p on the number line y = 0. A cup (a, b) is the lower half of an
    `Arc` centred at ((a + b) / 2, 0) whose width and height are both b - a. Symbol texts carry
    the artist label "symbol" and position numbers the label "position".

    Args:
        diagram: Weight or cup diagram
        style: Presentation parameters
        window: Inclusive (lo, hi) range of positions; defaults to the support widened by one

    Returns:
        A figure sized so that neighbouring positions are `style.spacing` points apart
    """
    style = style or SvgStyle()
    bounds = window if window is not None else _default_window(diagram)
    lo, hi = bounds if bounds is not None else (0, -1)
    count = max(hi - lo + 1, 0)
    arcs = [(a, b) for a, b in _arcs_of(diagram) if lo <= a and b <= hi]

    unit = style.spacing / POINTS_PER_INCH
    label_band = 1.0 if style.show_positions else 0.0
    depth = max(((b - a) / 2 for a, b in arcs), default=0.0)
    pad = style.margin / style.spacing
    x_range = (lo - 0.5 - pad, max(hi, lo) + 0.5 + pad)
    y_range = (-0.5 - depth - pad, 0.5 + label_band + pad)

    figure = Figure(
        figsize=(
            unit * (x_range[1] - x_range[0]),
            unit * (y_range[1] - y_range[0]),
        )
    )
    ax = figure.add_axes((0, 0, 1, 1))
    ax.set_xlim(*x_range)
    ax.set_ylim(*y_range)
    ax.set_axis_off()

    if count:
        ax.plot([lo, hi], [0, 0], color=style.stroke, lw=style.stroke_width / 2, zorder=1)
    for position in range(lo, hi + 1):
        if style.show_positions:
            ax.text(
                position,
                0.5 + label_band / 2,
                str(position),
                fontsize=style.font_size * 0.6,
                ha="center",
                va="center",
                label="position",
            )
        ax.text(
            position,
            0,
            str(diagram[position]),
            fontsize=style.font_size,
            ha="center",
            va="center",
            label="symbol",
            bbox={"facecolor": "white", "edgecolor": "none", "pad": 0.5},
            zorder=2,
        )
    for left, right in arcs:
        ax.add_patch(
            Arc(
                ((left + right) / 2, 0),
                right - left,
                right - left,
                theta1=180,
                theta2=360,
                color=style.stroke,
                lw=style.stroke_width,
            )
        )
    return figure


def render_svg(
    diagram: WeightDiagram | CupDiagram,
    style: SvgStyle | None = None,
    window: tuple[int, int] | None = None,
) -> str:
    """Render a standalone SVG document with arcs hanging below the number line."""
    figure = draw_diagram(diagram, style, window)
    buffer = io.StringIO()
    with matplotlib.rc_context({"svg.fonttype": "none", "svg.hashsalt": "superalg"}):
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
