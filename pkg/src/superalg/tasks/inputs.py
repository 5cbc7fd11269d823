"""Input handling for the command line: weights, modules and windows from args, files or stdin."""

import json
import sys
from pathlib import Path

from loguru import logger

from superalg.errors import ParseError
from superalg.grothendieck.characters import G0Character, WeightMultiplicities
from superalg.weights import Weight


def read_source(source: str) -> str:
    """Resolve an input argument to text.

    Args:
        source: `-` for stdin, `@path` for a file, an existing file path, or the text itself

    Returns:
        The text behind the argument

    Raises:
        ParseError: If an `@path` argument names a missing file
    """
    if source == "-":
        logger.debug("Reading input from stdin")
        return sys.stdin.read()
    if source.startswith("@"):
        path = Path(source[1:])
        if not path.is_file():
            raise ParseError(f"Input file not found: {path}")
        logger.debug(f"Reading input from {path}")
        return path.read_text(encoding="utf-8")
    path = Path(source)
    try:
        is_file = path.is_file()
    except (OSError, ValueError):
        # inline JSON can exceed the filename length limit
        is_file = False
    if is_file:
        logger.debug(f"Reading input from {path}")
        return path.read_text(encoding="utf-8")
    return source


def parse_weight_argument(source: str) -> Weight:
    """Parse a weight given inline (`a,b|c,d`) or as WeightJson, from any input source."""
    text = read_source(source).strip()
    if text.startswith("{"):
        return Weight.from_json(text)
    return Weight.parse(text)


def load_module(source: str) -> G0Character:
    """Parse a module character: a JSON array of `{"weight": ..., "mult": ...}` terms.

    Raises:
        ParseError: If the input is empty or malformed
    """
    text = read_source(source).strip()
    if not text:
        raise ParseError("Empty module input")
    return G0Character.from_json(text)


def dump_module(mults: WeightMultiplicities) -> str:
    return json.dumps(mults.to_json(), sort_keys=True, ensure_ascii=False)


def parse_window(text: str) -> tuple[int, int]:
    """Parse `A:B` into an inclusive window.

    Raises:
        ParseError: If the text is not two integers with A <= B
    """
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            raise ValueError
        window = (int(lo), int(hi))
    except ValueError as e:
        raise ParseError(f"Window must look like A:B with integers, got '{text}'") from e
    if window[0] > window[1]:
        raise ParseError(f"Window start {window[0]} is after its end {window[1]}")
    return window
