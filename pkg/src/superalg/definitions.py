"""Definitions for common constants."""

from pathlib import Path

ROOT_DIR = Path(__file__).absolute().parent.parent.parent

# Support cache configuration
CACHE_ENV_VAR = "SUPERALG_CACHE"
DEFAULT_CACHE_PATH = ROOT_DIR / "data" / "support_cache.json"
CACHE_FORMAT_VERSION = 1

# Resource guards
MAX_PERMUTATION_RANK = 12
HEIGHT_SCAN_RADIUS_FACTOR = 4
DEFAULT_MAX_ITERATIONS = 10_000
MAX_FACTOR_SLACK = 64

# Rendering
SVG_SPACING = 24
