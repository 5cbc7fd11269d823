"""Tests for the superalg command line."""

import json

import pytest
from typer.testing import CliRunner

from superalg.workflows.cli import app

GL98 = "7,6,5,5,3,3,2,2,0|1,2,3,4,4,5,7,7"
GL98_LOWER = "7,4,4,4,2,1,1,1,0|1,1,1,2,4,4,4,7"
GL11_KAC_MODULE = json.dumps(
    [
        {"weight": {"L": [0], "R": [0]}, "mult": 1},
        {"weight": {"L": [-1], "R": [-1]}, "mult": 1},
    ]
)
GL11_TYPICAL_MODULE = '[{"weight": {"L": [1], "R": [0]}, "mult": 1}]'


@pytest.fixture
def runner():
    return CliRunner()


class TestInvariants:
    """Test the invariants command."""

    def test_json_matches_session(self, runner, load_session):
        """Test the JSON payload against the recorded gl(9|8) invariants."""
        expected = load_session("invariants_gl9_8.json")
        result = runner.invoke(app, ["invariants", GL98])
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert {key: payload[key] for key in expected} == expected
        assert payload["shape"] == [9, 8]
        assert payload["scr"] == {"1": [2, 3, 4], "2": [], "3": [], "4": []}

    def test_stdin_and_file_agree(self, runner, tmp_path):
        """Test that `-`, `@path` and inline arguments give identical output."""
        path = tmp_path / "weight.txt"
        path.write_text(GL98 + "\n", encoding="utf-8")
        inline = runner.invoke(app, ["invariants", GL98])
        piped = runner.invoke(app, ["invariants", "-"], input=GL98 + "\n")
        from_file = runner.invoke(app, ["invariants", f"@{path}"])
        assert inline.stdout == piped.stdout == from_file.stdout

    def test_weight_json_argument(self, runner):
        """Test a weight given in its JSON form."""
        result = runner.invoke(app, ["invariants", '{"L": [0, 0], "R": [0, 0]}'])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["atyp"] == [1, 2]

    def test_pretty(self, runner):
        """Test the table rendering."""
        result = runner.invoke(app, ["invariants", GL98, "-f", "pretty"])
        assert result.exit_code == 0
        assert "Atypicality matrix:" in result.stdout
        assert "(1, 1, 2, 3)" in result.stdout

    def test_latex(self, runner):
        """Test the LaTeX weight."""
        result = runner.invoke(app, ["invariants", "0,0|0,0", "-f", "latex"])
        assert result.stdout.strip() == r"\left(0, 0 \mid 0, 0\right)"

    def test_unsupported_format(self, runner):
        """Test that svg is rejected with a usage error."""
        result = runner.invoke(app, ["invariants", GL98, "-f", "svg"])
        assert result.exit_code == 2

    def test_non_dominant(self, runner):
        """Test that a non-dominant weight exits with the library error code."""
        result = runner.invoke(app, ["invariants", "0,1|0,0"])
        assert result.exit_code == 3
        assert "not dominant" in result.output

    @pytest.mark.parametrize("text", ["1,2", "1|x", "@/nonexistent/weight.txt"])
    def test_malformed(self, runner, text):
        """Test that malformed input exits with code 2."""
        result = runner.invoke(app, ["invariants", text])
        assert result.exit_code == 2
        assert "Error" in result.output

    def test_output_file(self, runner, tmp_path):
        """Test writing the result to a file."""
        out = tmp_path / "out" / "inv.json"
        result = runner.invoke(app, ["invariants", GL98, "-o", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text(encoding="utf-8"))["adeg"] == 4


class TestDiagram:
    """Test the diagram command."""

    def test_cup_diagram_golden(self, runner, load_session):
        """Test the recorded gl(9|8) cup diagram."""
        result = runner.invoke(app, ["diagram", GL98])
        assert result.exit_code == 0
        assert result.stdout == load_session("cup_diagram_gl9_8.txt")

    def test_weight_diagram_window(self, runner):
        """Test a windowed weight diagram is a single line."""
        result = runner.invoke(app, ["diagram", GL98, "--no-cups", "--window", "0:5"])
        assert result.exit_code == 0
        assert len(result.stdout.strip("\n").splitlines()) == 1

    def test_svg(self, runner):
        """Test the SVG document."""
        result = runner.invoke(app, ["diagram", "0,0|0,0", "-f", "svg"])
        assert result.exit_code == 0
        assert result.stdout.startswith("<?xml")
        assert "<svg" in result.stdout

    def test_json(self, runner):
        """Test the JSON diagram with its arcs; the window covers both cups."""
        result = runner.invoke(app, ["diagram", "0,0|0,0", "-f", "json"])
        payload = json.loads(result.stdout)
        assert payload["window"] == [1, 4]
        assert payload["arcs"] == [[2, 3], [1, 4]]
        assert payload["symbols"] == {"1": "▼", "2": "▼", "3": "▲", "4": "▲"}

    def test_json_typical(self, runner):
        """Test a typical weight: no arcs, window spanning its • and × symbols."""
        result = runner.invoke(app, ["diagram", "3,0|1,1", "-f", "json"])
        payload = json.loads(result.stdout)
        assert payload["window"] == [1, 5]
        assert payload["arcs"] == []
        assert payload["symbols"] == {"1": "•", "2": "×", "3": "×", "5": "•"}

    def test_bad_window(self, runner):
        """Test that a reversed window is a parse error."""
        result = runner.invoke(app, ["diagram", GL98, "--window", "5:0"])
        assert result.exit_code == 2


class TestKL:
    """Test the kl and mult commands."""

    def test_pretty_session(self, runner):
        """Test the recorded gl(9|8) polynomial."""
        result = runner.invoke(app, ["kl", GL98, GL98_LOWER])
        assert result.exit_code == 0
        assert result.stdout == "K(q) = q^3 + q^5\nK(-1) = -2\n"

    def test_permutations(self, runner):
        """Test listing the contributing permutations."""
        result = runner.invoke(app, ["kl", GL98, GL98_LOWER, "-p"])
        assert "[1, 2, 4, 3]  length 1" in result.stdout

    def test_json(self, runner):
        """Test the JSON payload."""
        result = runner.invoke(app, ["kl", GL98, GL98_LOWER, "-f", "json"])
        payload = json.loads(result.stdout)
        assert payload["value_at_minus_one"] == -2
        assert sorted(payload["s_set"]) == [[1, 2, 3, 4], [1, 2, 4, 3]]

    def test_latex(self, runner):
        """Test the sympy LaTeX rendering."""
        result = runner.invoke(app, ["kl", GL98, GL98_LOWER, "-f", "latex"])
        assert "q^{3}" in result.stdout
        assert "q^{5}" in result.stdout

    def test_mult(self, runner):
        """Test b and a for the gl(1|1) Kac module K(0|0)."""
        result = runner.invoke(app, ["mult", "-f", "json", "--", "0|0", "-1|-1"])
        assert result.exit_code == 0
        assert json.loads(result.stdout) == {"a": 1, "b": -1}
        pretty = runner.invoke(app, ["mult", "--", "0|0", "-1|-1"])
        assert pretty.stdout == "b = K(-1) = -1\na = [K(λ) : L(μ)] = 1\n"


class TestFactors:
    """Test the factors command."""

    def test_json(self, runner):
        """Test the composition factors of the gl(2|2) zero Kac module."""
        result = runner.invoke(app, ["factors", "0,0|0,0"])
        assert result.exit_code == 0
        assert json.loads(result.stdout) == [
            {"L": [0, 0], "R": [0, 0]},
            {"L": [0, -1], "R": [-1, 0]},
            {"L": [-2, -2], "R": [-2, -2]},
        ]

    def test_pretty_layout(self, runner):
        """Test numbered rows with right-aligned entries."""
        result = runner.invoke(app, ["factors", "0,0|0,0", "-f", "pretty"])
        assert result.stdout == (
            " 1: ( 0,  0 |  0,  0)\n 2: ( 0, -1 | -1,  0)\n 3: (-2, -2 | -2, -2)\n"
        )

    def test_rho(self, runner):
        """Test showing ρ-translates."""
        result = runner.invoke(app, ["factors", "0,0|0,0", "--rho"])
        assert json.loads(result.stdout)[0] == {"L": [2, 1], "R": [1, 2]}

    def test_negative_slack(self, runner):
        """Test that slack is validated by the option parser."""
        result = runner.invoke(app, ["factors", "0,0|0,0", "--slack", "-1"])
        assert result.exit_code == 2


class TestDecompose:
    """Test the decompose and cache-info commands."""

    def test_kac_module(self, runner):
        """Test that ch K(0|0) splits into two irreducible characters."""
        result = runner.invoke(app, ["decompose", GL11_KAC_MODULE])
        assert result.exit_code == 0
        assert json.loads(result.stdout) == json.loads(GL11_KAC_MODULE)

    def test_pretty(self, runner):
        """Test the signed listing."""
        result = runner.invoke(app, ["decompose", GL11_KAC_MODULE, "-f", "pretty"])
        assert result.stdout == "+1 L(0 | 0)\n+1 L(-1 | -1)\n"

    def test_empty_module(self, runner):
        """Test that the zero character decomposes to an empty list."""
        result = runner.invoke(app, ["decompose", "[]"])
        assert result.exit_code == 0
        assert json.loads(result.stdout) == []

    def test_max_iterations(self, runner):
        """Test the resource cap exit code on a module outside the span."""
        result = runner.invoke(app, ["decompose", GL11_TYPICAL_MODULE, "--max-iterations", "5"])
        assert result.exit_code == 4
        assert "did not terminate" in result.output

    def test_cache_round_trip(self, runner, tmp_path):
        """Test that --cache writes a file that cache-info can read."""
        cache = tmp_path / "cache.json"
        first = runner.invoke(app, ["decompose", GL11_KAC_MODULE, "--cache", str(cache)])
        assert first.exit_code == 0
        assert cache.is_file()

        info = runner.invoke(app, ["cache-info", "--cache", str(cache), "-f", "json"])
        assert info.exit_code == 0
        summary = json.loads(info.stdout)
        assert summary["entries"] == 3
        assert summary["bounded"] == 3
        assert summary["unbounded"] == 0

        second = runner.invoke(
            app, ["decompose", GL11_KAC_MODULE], env={"SUPERALG_CACHE": str(cache)}
        )
        assert second.stdout == first.stdout

    def test_cache_info_missing(self, runner, tmp_path):
        """Test cache-info on a missing file."""
        result = runner.invoke(app, ["cache-info", "--cache", str(tmp_path / "absent.json")])
        assert result.exit_code == 2
        assert "not found" in result.output
