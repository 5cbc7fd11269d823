"""Integration test fixtures for end-to-end sessions."""

import pytest
from typer.testing import CliRunner

from superalg.grothendieck import G0Character
from superalg.weights import Weight


@pytest.fixture
def cli_runner():
    """Typer test runner for invoking the superalg app in-process."""
    return CliRunner()


@pytest.fixture
def gl66_module(load_session):
    """The 11-term gl(6|6) g₀-character recorded for the decomposition session.

    Returns a G0Character whose decomposition is a single irreducible character.
    """
    return G0Character.from_json(load_session("module_gl6_6.json"))


@pytest.fixture
def gl66_expected():
    return Weight((1, -2, -2, -2, -2, -2), (-2, -2, -2, -2, -2, -1))


@pytest.fixture
def random_shape(rng):
    """Draw (m, n) with 1 <= m, n <= limit."""

    def draw(limit: int) -> tuple[int, int]:
        return rng.randint(1, limit), rng.randint(1, limit)

    return draw
