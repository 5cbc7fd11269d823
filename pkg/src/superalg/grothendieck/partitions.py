"""Integer partitions and the partitions fitting in a rectangular box."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from superalg.errors import PartitionError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of nonnegative integers, trailing zeros trimmed."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"{parts} is not a partition")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, row: int) -> int:
        """Row length for a 0-based row index, zero beyond the last row."""
        return self.parts[row] if row < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p > column) for column in range(self.parts[0]))
        )

    def contains(self, other: "Partition") -> bool:
        """Whether the diagram of `other` fits inside this one."""
        return len(other) <= len(self) and all(self[i] >= other[i] for i in range(len(other)))

    def padded(self, rows: int) -> tuple[int, ...]:
        if len(self.parts) > rows:
            raise PartitionError(f"{self} has more than {rows} rows")
        return self.parts + (0,) * (rows - len(self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


def as_partition(parts: "Partition | Iterable[int]") -> Partition:
    return parts if isinstance(parts, Partition) else Partition(tuple(parts))


def partitions_in_box(rows: int, columns: int) -> Iterator[Partition]:
    """Partitions with at most `rows` parts, each at most `columns`, by increasing size."""

    def fill(remaining_rows: int, cap: int, size: int) -> Iterator[tuple[int, ...]]:
        if size == 0:
            yield ()
            return
        if remaining_rows == 0:
            return
        for first in range(min(cap, size), 0, -1):
            for rest in fill(remaining_rows - 1, first, size - first):
                yield (first,) + rest

    for size in range(rows * columns + 1):
        for parts in fill(rows, columns, size):
            yield Partition(parts)
