"""Unit tests for text and SVG rendering of diagrams."""

import xml.etree.ElementTree as ET

import pytest
from matplotlib.patches import Arc

from superalg.diagrams import (
    SvgStyle,
    arc_heights,
    cup_diagram,
    draw_diagram,
    render_svg,
    render_text,
)
from superalg.diagrams.cups import CupDiagram, WeightDiagram, weight_diagram
from superalg.weights import Weight

SVG = "{http://www.w3.org/2000/svg}"


class TestArcHeights:
    """Test nesting depth of arcs."""

    def test_nested_arcs(self):
        """Test that an enclosing arc sits one level above its deepest child."""
        heights = arc_heights(((8, 10), (11, 13), (14, 17), (4, 18)))
        assert heights == {(8, 10): 1, (11, 13): 1, (14, 17): 1, (4, 18): 2}


class TestRenderText:
    """Test the box-drawing text rendering."""

    def test_session_golden(self, gl98_weight, load_session):
        """Test the gl(9|8) cup diagram against the recorded rendering."""
        expected = load_session("cup_diagram_gl9_8.txt").rstrip("\n")
        assert render_text(cup_diagram(gl98_weight)) == expected

    def test_weight_diagram_has_single_line(self, gl98_weight):
        """Test that weight diagrams render only the symbol line."""
        text = render_text(weight_diagram(gl98_weight))
        assert "\n" not in text
        assert text == "∅ • × ∅ ▼ • × • ▼ × ∅ ▼ • ∅ ▼ × • ∅"

    def test_explicit_window(self):
        """Test that a window override clips the symbol line."""
        c = cup_diagram(Weight((0,), (0,)))
        assert render_text(c, window=(1, 2)) == "▼ ▲\n└─┘"

    def test_empty_window(self):
        """Test that an empty window renders nothing."""
        assert render_text(WeightDiagram()) == ""
        assert render_text(cup_diagram(Weight((0,), (0,))), window=(3, 2)) == ""


class TestSvgStyle:
    """Test style validation."""

    def test_defaults(self):
        """Test the default spacing and stroke."""
        style = SvgStyle()
        assert style.spacing == 24
        assert style.stroke == "black"

    def test_stroke_normalized(self):
        """Test that colour names are lowercased and stripped."""
        assert SvgStyle(stroke=" Navy ").stroke == "navy"

    @pytest.mark.parametrize("kwargs", [{"spacing": 0}, {"font_size": -1}, {"margin": -2}])
    def test_invalid(self, kwargs):
        """Test that non-positive dimensions raise ValueError."""
        with pytest.raises(ValueError):
            SvgStyle(**kwargs)


def _texts(figure, label):
    (ax,) = figure.axes
    return [t for t in ax.texts if t.get_label() == label]


class TestDrawDiagram:
    """Test the matplotlib figure behind the SVG rendering."""

    def test_artists(self, gl98_weight):
        """Test one Arc patch per cup and one symbol text per position."""
        figure = draw_diagram(cup_diagram(gl98_weight))
        (ax,) = figure.axes
        arcs = [p for p in ax.patches if isinstance(p, Arc)]
        assert len(arcs) == 4
        assert all((a.theta1, a.theta2) == (180, 360) for a in arcs)
        assert len(_texts(figure, "symbol")) == 20
        assert len(_texts(figure, "position")) == 20

    def test_arc_geometry(self):
        """Test that a cup spans its endpoints and hangs below the line."""
        figure = draw_diagram(cup_diagram(Weight((0,), (0,))), window=(1, 2))
        (arc,) = figure.axes[0].patches
        assert tuple(arc.center) == (1.5, 0)
        assert arc.width == arc.height == 1

    def test_symbols(self):
        """Test the symbol texts in window order."""
        figure = draw_diagram(cup_diagram(Weight((0,), (0,))), window=(0, 3))
        assert [t.get_text() for t in _texts(figure, "symbol")] == ["∅", "▼", "▲", "∅"]

    def test_spacing_sets_figure_width(self):
        """Test that the width is the window plus margins in units of spacing."""
        style = SvgStyle(spacing=36, margin=0)
        figure = draw_diagram(cup_diagram(Weight((0,), (0,))), style=style, window=(1, 4))
        assert figure.get_size_inches()[0] == pytest.approx(4 * 36 / 72)

    def test_positions_can_be_hidden(self):
        """Test show_positions=False drops the labels."""
        figure = draw_diagram(cup_diagram(Weight((0,), (0,))), style=SvgStyle(show_positions=False))
        assert _texts(figure, "position") == []
        assert len(_texts(figure, "symbol")) == 4


class TestRenderSvg:
    """Test the SVG document."""

    def test_document(self, gl98_weight):
        """Test the XML declaration, the svg root and the symbols kept as text."""
        svg = render_svg(cup_diagram(gl98_weight))
        assert svg.startswith("<?xml")
        root = ET.fromstring(svg.split("?>", 1)[1])
        assert root.tag == f"{SVG}svg"
        assert "▼" in svg
        assert "∅" in svg

    def test_deterministic(self, gl98_weight):
        """Test that rendering the same diagram twice gives identical documents."""
        diagram = cup_diagram(gl98_weight)
        assert render_svg(diagram) == render_svg(diagram)

    def test_empty_diagram(self):
        """Test that an empty diagram still renders a document."""
        svg = render_svg(CupDiagram(WeightDiagram()))
        assert "<svg" in svg
