"""Root conftest.py for shared test fixtures across all tests."""

import json
import random
from pathlib import Path

import pytest

from superalg.weights import Weight

# Fixtures directory for loading test data
FIXTURES_DIR = Path(__file__).parent / "fixtures"
SESSIONS_DIR = FIXTURES_DIR / "expected" / "sessions"


def _load_session(name: str):
    path = SESSIONS_DIR / name
    if path.suffix == ".json":
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    return path.read_text(encoding="utf-8")


def _random_dominant_weight(rng: random.Random, m: int, n: int, low: int = -5, high: int = 5):
    left = sorted((rng.randint(low, high) for _ in range(m)), reverse=True)
    right = sorted(rng.randint(low, high) for _ in range(n))
    return Weight(left, right)


@pytest.fixture
def load_session():
    """Load a recorded session file from tests/fixtures/expected/sessions/."""
    return _load_session


@pytest.fixture
def random_weight(rng):
    """Draw dominant gl(m|n) weights: random_weight(m, n, low=-5, high=5)."""

    def draw(m: int, n: int, low: int = -5, high: int = 5) -> Weight:
        return _random_dominant_weight(rng, m, n, low, high)

    return draw


@pytest.fixture
def gl98_weight():
    """The 4-fold atypical gl(9|8) weight used throughout the recorded sessions."""
    return Weight((7, 6, 5, 5, 3, 3, 2, 2, 0), (1, 2, 3, 4, 4, 5, 7, 7))


@pytest.fixture
def gl98_lower_weight():
    """A weight below gl98_weight in its block with K(q) = q^3 + q^5."""
    return Weight((7, 4, 4, 4, 2, 1, 1, 1, 0), (1, 1, 1, 2, 4, 4, 4, 7))


@pytest.fixture
def gl22_zero():
    return Weight((0, 0), (0, 0))


@pytest.fixture
def rng():
    """Seeded random generator so property tests are reproducible."""
    return random.Random(20240615)
