"""Weight diagrams, cup diagrams and their renderings."""

from superalg.diagrams.cups import CupDiagram, Symbol, WeightDiagram, cup_diagram, weight_diagram
from superalg.diagrams.render import (
    SvgStyle,
    arc_heights,
    draw_diagram,
    render_svg,
    render_text,
)

__all__ = [
    "CupDiagram",
    "Symbol",
    "SvgStyle",
    "WeightDiagram",
    "arc_heights",
    "cup_diagram",
    "draw_diagram",
    "render_svg",
    "render_text",
    "weight_diagram",
]
