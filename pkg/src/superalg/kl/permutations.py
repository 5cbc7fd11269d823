"""Permutations of the atypical roots, 1-based."""

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from superalg.errors import InvalidPermutationError


@dataclass(frozen=True)
class Permutation:
    """A bijection σ of {1..r}, stored as its images (σ(1), ..., σ(r))."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutationError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def transposition(cls, r: int, a: int, b: int) -> "Permutation":
        if not (1 <= a <= r and 1 <= b <= r):
            raise InvalidPermutationError(f"Transposition ({a} {b}) outside 1..{r}")
        images = list(range(1, r + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def all(cls, r: int) -> Iterator["Permutation"]:
        for images in itertools.permutations(range(1, r + 1)):
            yield cls(images)

    def __call__(self, s: int) -> int:
        return self.images[s - 1]

    def __len__(self) -> int:
        return len(self.images)

    @property
    def rank(self) -> int:
        return len(self.images)

    def inverse(self) -> "Permutation":
        inverse = [0] * len(self.images)
        for s, image in enumerate(self.images, start=1):
            inverse[image - 1] = s
        return Permutation(tuple(inverse))

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self ∘ other."""
        if len(other) != len(self):
            raise InvalidPermutationError(f"Cannot compose ranks {len(self)} and {len(other)}")
        return Permutation(tuple(self(other(s)) for s in range(1, len(self) + 1)))

    @property
    def length(self) -> int:
        """Bruhat length, i.e. the number of inversions."""
        return sum(1 for a, b in itertools.combinations(self.images, 2) if a > b)

    def permute(self, values: Sequence[int]) -> tuple[int, ...]:
        """Move the entry at position s to position σ(s)."""
        if len(values) != len(self.images):
            raise InvalidPermutationError(
                f"Permutation of rank {len(self)} applied to {len(values)} values"
            )
        result = [0] * len(values)
        for s, value in enumerate(values, start=1):
            result[self(s) - 1] = value
        return tuple(result)

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.images)) + "]"
