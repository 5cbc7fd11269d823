"""Unit tests for gl(m|n) weights.

Tests construction, indexing, arithmetic, dominance and the text/JSON forms.
"""

import pytest

from superalg.errors import DimensionError, ParseError
from superalg.weights import Weight, new_weight, one, rho, rho_translate, zero


class TestConstruction:
    """Test building weights and the distinguished weights."""

    def test_new_weight_normalizes_to_tuples(self):
        """Test that lists become integer tuples."""
        w = new_weight([2, 1], [0, 3, 4])
        assert w.L == (2, 1)
        assert w.R == (0, 3, 4)
        assert w.shape == (2, 3)

    def test_empty_part_rejected(self):
        """Test that gl(m|n) needs m, n >= 1."""
        with pytest.raises(DimensionError):
            Weight((), (1,))
        with pytest.raises(DimensionError):
            Weight((1,), ())

    def test_non_integer_entries_rejected(self):
        """Test that floats and strings are not accepted as entries."""
        with pytest.raises(ParseError):
            Weight((1.5,), (0,))
        with pytest.raises(ParseError):
            Weight(("1",), (0,))

    def test_rho(self):
        """Test ρ = (m..1 | 1..n)."""
        assert rho(3, 2) == Weight((3, 2, 1), (1, 2))

    def test_one_and_zero(self):
        """Test the constant weights."""
        assert one(2, 1) == Weight((1, 1), (1,))
        assert zero(1, 2) == Weight((0,), (0, 0))

    @pytest.mark.parametrize("factory", [rho, one, zero])
    def test_distinguished_weights_reject_bad_shape(self, factory):
        """Test that m = 0 or n = 0 raises DimensionError."""
        with pytest.raises(DimensionError):
            factory(0, 2)


class TestIndexing:
    """Test 1-based global and per-part indexing."""

    def test_entry_global_index(self, gl98_weight):
        """Test that indices 1..m address L and m+1..m+n address R."""
        assert gl98_weight.entry(1) == 7
        assert gl98_weight.entry(9) == 0
        assert gl98_weight.entry(10) == 1
        assert gl98_weight.entry(17) == 7

    def test_entry_part(self, gl98_weight):
        """Test λ^p_i access and the tuple form of __getitem__."""
        assert gl98_weight.entry_part(0, 3) == 5
        assert gl98_weight.entry_part(1, 5) == 4
        assert gl98_weight[1, 5] == 4
        assert gl98_weight[4] == 5

    @pytest.mark.parametrize("j", [0, 18, -1])
    def test_entry_out_of_range(self, gl98_weight, j):
        """Test that global indices outside 1..m+n raise IndexError."""
        with pytest.raises(IndexError):
            gl98_weight.entry(j)

    def test_entry_part_bad_part(self, gl98_weight):
        """Test that parts other than 0 and 1 raise IndexError."""
        with pytest.raises(IndexError):
            gl98_weight.entry_part(2, 1)
        with pytest.raises(IndexError):
            gl98_weight.entry_part(1, 9)


class TestArithmetic:
    """Test componentwise arithmetic and coefficients."""

    def test_add_sub_neg(self):
        """Test the group operations."""
        a = Weight((1, 0), (2,))
        b = Weight((3, -1), (-2,))
        assert a + b == Weight((4, -1), (0,))
        assert a - b == Weight((-2, 1), (4,))
        assert -a == Weight((-1, 0), (-2,))
        assert a + b - b == a

    def test_shape_mismatch(self):
        """Test that adding weights of different shapes raises DimensionError."""
        with pytest.raises(DimensionError, match="Shape mismatch"):
            Weight((1,), (1,)) + Weight((1, 1), (1,))

    def test_coefficients(self):
        """Test that coeff_R negates the odd part and level sums L."""
        w = Weight((3, 1), (-1, 2))
        assert w.coeff_L == (3, 1)
        assert w.coeff_R == (1, -2)
        assert w.level == 4

    def test_rho_translate(self, gl98_weight):
        """Test λ + ρ on the gl(9|8) weight."""
        expected = Weight((16, 14, 12, 11, 8, 7, 5, 4, 1), (2, 4, 6, 8, 9, 11, 14, 15))
        assert rho_translate(gl98_weight) == expected
        assert gl98_weight.rho() == expected


class TestDominance:
    """Test the dominance check."""

    def test_dominant(self, gl98_weight):
        """Test that the session weight is dominant."""
        assert gl98_weight.is_dominant()

    @pytest.mark.parametrize(
        "weight",
        [Weight((0, 1), (0, 0)), Weight((1, 0), (1, 0)), Weight((2, 3), (1, 0))],
    )
    def test_not_dominant(self, weight):
        """Test increasing L or decreasing R is not dominant."""
        assert not weight.is_dominant()

    def test_rho_translate_strictly_monotone(self, gl98_weight):
        """Test that the ρ-translate of a dominant weight is strictly monotone on both sides."""
        t = gl98_weight.rho()
        assert all(a > b for a, b in zip(t.L, t.L[1:]))
        assert all(a < b for a, b in zip(t.R, t.R[1:]))


class TestTextForms:
    """Test string, LaTeX and canonical forms."""

    def test_str(self, gl98_weight):
        """Test the human readable form."""
        expected = "gl(9|8) weight (7, 6, 5, 5, 3, 3, 2, 2, 0 | 1, 2, 3, 4, 4, 5, 7, 7)"
        assert str(gl98_weight) == expected

    def test_format_padded(self):
        """Test right-aligned entries."""
        w = Weight((2, 1, -2), (0, 13))
        assert w.format_padded(2) == "( 2,  1, -2 |  0, 13)"

    def test_to_latex(self):
        """Test the LaTeX rendering."""
        assert Weight((2, 1), (0, 3)).to_latex() == r"\left(2, 1 \mid 0, 3\right)"

    def test_canonical_string(self, gl98_weight):
        """Test the whitespace-free form used for cache keys."""
        assert gl98_weight.to_canonical_string() == "7,6,5,5,3,3,2,2,0|1,2,3,4,4,5,7,7"

    def test_parse_tolerates_whitespace(self, gl98_weight):
        """Test that parse accepts spaces around entries."""
        assert Weight.parse(" 7, 6,5,5,3,3,2,2,0 | 1,2,3,4,4,5,7,7\n") == gl98_weight

    def test_parse_negative_entries(self):
        """Test negative integers in the inline form."""
        assert Weight.parse("0,-1|-1,0") == Weight((0, -1), (-1, 0))

    @pytest.mark.parametrize("text", ["1,2", "1|2|3", "1,a|2", "|1", "1,,2|3"])
    def test_parse_errors(self, text):
        """Test malformed strings raise ParseError."""
        with pytest.raises((ParseError, DimensionError)):
            Weight.parse(text)


class TestJson:
    """Test the WeightJson interchange form."""

    def test_to_dict(self):
        """Test the plain dict form."""
        assert Weight((1, 0), (0, 2)).to_dict() == {"L": [1, 0], "R": [0, 2]}

    def test_from_json_text(self):
        """Test parsing JSON text."""
        assert Weight.from_json('{"L": [1, 0], "R": [0, 2]}') == Weight((1, 0), (0, 2))

    def test_from_json_model(self):
        """Test that a WeightJson model converts back."""
        w = Weight((4, 4), (-1,))
        assert Weight.from_json(w.to_json()) == w

    @pytest.mark.parametrize(
        "data",
        [
            {"L": [1], "R": [0], "extra": 1},
            {"L": ["1"], "R": [0]},
            {"L": [1]},
            "not json",
        ],
    )
    def test_from_json_errors(self, data):
        """Test that malformed documents raise ParseError."""
        with pytest.raises(ParseError):
            Weight.from_json(data)
