"""Exception hierarchy shared by the library and the command line."""

from pathlib import Path


class SuperalgError(Exception):
    """Base class for every error raised by superalg.

    Attributes:
        exit_code: Process exit code the CLI uses when this error escapes a command.
    """

    exit_code = 3


class DimensionError(SuperalgError, ValueError):
    """Raised for empty weights or operations on weights of different shapes."""

    def __init__(
        self,
        expected: tuple[int, int] | None,
        got: tuple[int, int],
        message: str | None = None,
    ):
        self.expected = expected
        self.got = got
        if message is None:
            if expected is None:
                message = f"gl(m|n) requires m, n >= 1, got m={got[0]}, n={got[1]}"
            else:
                message = (
                    f"Shape mismatch: expected gl({expected[0]}|{expected[1]}), "
                    f"got gl({got[0]}|{got[1]})"
                )
        super().__init__(message)


class DominanceError(SuperalgError, ValueError):
    """Raised when a block-level operation receives a non-dominant weight."""

    def __init__(self, weight: object, operation: str | None = None):
        self.weight = weight
        where = f" in {operation}" if operation else ""
        super().__init__(f"Weight {weight} is not dominant{where}")


class InvalidBlockError(SuperalgError, ValueError):
    """Raised when typical and atypical tuples overlap or repeat values."""


class InconsistentHeightError(SuperalgError, ValueError):
    """Raised when no atypical tuple realizes a height vector."""

    def __init__(self, height: tuple[int, ...], s: int, message: str | None = None):
        self.height = height
        self.s = s
        if message is None:
            message = (
                f"No atypical value realizes height {height[s - 1]} "
                f"at position {s} of {height}"
            )
        super().__init__(message)


class AtypicalIndexError(SuperalgError, IndexError):
    """Raised for atypical root indices outside 1..r or out of order."""

    def __init__(self, s: int, t: int, r: int):
        self.s, self.t, self.r = s, t, r
        super().__init__(f"Atypical indices must satisfy 1 <= s < t <= {r}, got s={s}, t={t}")


class IncomparableWeightsError(SuperalgError, ValueError):
    """Raised when an operation needs mu <= lambda in the block order and they are incomparable."""

    def __init__(self, mu: object, lam: object):
        self.mu = mu
        self.lam = lam
        super().__init__(f"{mu} is not below {lam} in the block order")


class InvalidPermutationError(SuperalgError, ValueError):
    """Raised when a sequence is not a permutation of 1..r or has the wrong rank."""


class PartitionError(SuperalgError, ValueError):
    """Raised for sequences that are not partitions or do not fit the requested rows."""


class MultiplicityError(SuperalgError, ArithmeticError):
    """Raised when a composition factor multiplicity leaves {0, 1}."""

    def __init__(self, lam: object, mu: object, value: int):
        self.lam = lam
        self.mu = mu
        self.value = value
        super().__init__(f"[K({lam}) : L({mu})] = {value}, expected 0 or 1")


class ParseError(SuperalgError, ValueError):
    """Raised for malformed weight strings, JSON documents or CLI inputs."""

    exit_code = 2


class ResourceCapError(SuperalgError, RuntimeError):
    """Raised when a computation exceeds one of the configured resource caps."""

    exit_code = 4


class NotInSpanError(ResourceCapError):
    """Raised when decompose does not terminate within its iteration cap."""

    def __init__(self, max_iterations: int, remaining: int):
        self.max_iterations = max_iterations
        self.remaining = remaining
        super().__init__(
            f"Decomposition did not terminate after {max_iterations} steps "
            f"({remaining} terms remaining); the input is not a finite integral "
            "combination of irreducible characters"
        )


class CacheFileNotFoundError(SuperalgError, FileNotFoundError):
    """Raised when a support cache file is requested but does not exist."""

    exit_code = 2

    def __init__(self, cache_path: Path, message: str | None = None):
        self.cache_path = cache_path
        if message is None:
            message = (
                f"Support cache not found at {cache_path}. "
                "Run 'superalg decompose --cache PATH' to create it."
            )
        super().__init__(message)
