"""Littlewood-Richardson rule, gl(k) tensor products and the Cauchy expansion of ⋀(V₀* ⊗ V₁).

An LR tableau of shape outer/inner is grown one letter at a time: letter i adds a horizontal strip
whose cumulative row counts satisfy the lattice condition

    #i in rows <= k  <=  #(i-1) in rows <= k-1.

The number of strip sequences with content ν from inner to outer is c^{outer}_{inner,ν}. The
same walk either follows a fixed content or records every content it passes through.
"""

from collections import Counter
from collections.abc import Iterable, Iterator, Sequence

from superalg.errors import DominanceError, PartitionError
from superalg.grothendieck.partitions import Partition, as_partition, partitions_in_box

Shape = tuple[int, ...]


def _strips(
    old: Shape,
    prev_prefix: Shape | None,
    ceiling: Shape | None,
    exact: int | None,
    cap: int,
) -> Iterator[tuple[Shape, Shape]]:
    """Nonempty horizontal strips on `old` for the next letter.

    Yields:
        (new shape, cumulative count of the new letter in rows 0..k for every k)
    """
    rows = len(old)
    new = list(old)
    prefix = [0] * rows
    total = exact if exact is not None else cap

    def extend(k: int, placed: int) -> Iterator[tuple[Shape, Shape]]:
        if k == rows:
            if placed and (exact is None or placed == exact):
                yield tuple(new), tuple(prefix)
            return
        limit = total - placed
        if k > 0:
            limit = min(limit, old[k - 1] - old[k])
        if ceiling is not None:
            limit = min(limit, ceiling[k] - old[k])
        if prev_prefix is not None:
            limit = min(limit, (prev_prefix[k - 1] if k > 0 else 0) - placed)
        for extra in range(max(limit, -1) + 1):
            new[k] = old[k] + extra
            prefix[k] = placed + extra
            yield from extend(k + 1, placed + extra)
        new[k] = old[k]

    yield from extend(0, 0)


def _fillings(
    inner: Shape,
    ceiling: Shape | None,
    content: Shape | None,
    max_count: int,
    max_letters: int,
) -> Iterator[tuple[Shape, Shape]]:
    """Walk LR tableaux on `inner`; yields (outer, content) once per tableau."""
    letters: list[int] = []

    def walk(shape: Shape, prev_prefix: Shape | None) -> Iterator[tuple[Shape, Shape]]:
        if content is None:
            yield shape, tuple(letters)
            if len(letters) >= max_letters:
                return
            exact = None
        else:
            if len(letters) == len(content):
                yield shape, tuple(letters)
                return
            exact = content[len(letters)]
        for new_shape, prefix in _strips(shape, prev_prefix, ceiling, exact, max_count):
            letters.append(prefix[-1])
            yield from walk(new_shape, prefix)
            letters.pop()

    yield from walk(inner, None)


def _padded_ceiling(ceiling: Sequence[int] | None, rows: int) -> Shape | None:
    if ceiling is None:
        return None
    ceiling = tuple(ceiling)
    if len(ceiling) != rows:
        raise PartitionError(f"Ceiling {ceiling} must have {rows} entries")
    return ceiling


def lr_expand(
    inner: Partition | Iterable[int],
    content: Partition | Iterable[int],
    max_rows: int,
    ceiling: Sequence[int] | None = None,
) -> Counter[Shape]:
    """Expand s_inner · s_content in at most `max_rows` rows.

    Args:
        inner: Starting partition
        content: Partition whose Schur function multiplies s_inner
        max_rows: Number of rows available (the rank k of gl(k))
        ceiling: Optional componentwise upper bound on the resulting shapes

    Returns:
        Counter mapping outer shapes (padded to max_rows) to LR coefficients
    """
    inner, content = as_partition(inner), as_partition(content)
    start = inner.padded(max_rows)
    ceiling = _padded_ceiling(ceiling, max_rows)
    if len(content) > max_rows or (
        ceiling is not None and any(a > b for a, b in zip(start, ceiling))
    ):
        return Counter()
    fillings = _fillings(start, ceiling, content.parts, max(content.parts, default=0), len(content))
    return Counter(outer for outer, _ in fillings)


def lr_coefficient(
    outer: Partition | Iterable[int],
    inner: Partition | Iterable[int],
    other: Partition | Iterable[int],
) -> int:
    """c^{outer}_{inner,other}, counted as LR tableaux of shape outer/inner with content other."""
    outer, inner, other = as_partition(outer), as_partition(inner), as_partition(other)
    if outer.size != inner.size + other.size or not outer.contains(inner):
        return 0
    rows = len(outer)
    if rows == 0:
        return 1
    return lr_expand(inner, other, rows, ceiling=outer.padded(rows))[outer.padded(rows)]


def lr_skew_expansion(
    inner: Partition | Iterable[int],
    max_rows: int,
    max_count: int,
    ceiling: Sequence[int] | None = None,
    max_letters: int | None = None,
) -> Counter[tuple[Shape, Partition]]:
    """Count LR tableaux on `inner` for every content at once.

    Args:
        inner: Starting partition
        max_rows: Number of rows available
        max_count: Largest number of copies of any single letter (the first content part)
        ceiling: Optional componentwise upper bound on the outer shapes
        max_letters: Largest number of distinct letters (content length), default max_rows

    Returns:
        Counter mapping (outer padded to max_rows, content) to c^{outer}_{inner,content}
    """
    start = as_partition(inner).padded(max_rows)
    ceiling = _padded_ceiling(ceiling, max_rows)
    if ceiling is not None and any(a > b for a, b in zip(start, ceiling)):
        return Counter()
    letters = max_rows if max_letters is None else max_letters
    return Counter(
        (outer, Partition(content))
        for outer, content in _fillings(start, ceiling, None, max_count, letters)
    )


def dual_weight(values: Sequence[int]) -> Shape:
    """Highest weight of the dual gl(k)-module: (x_1..x_k) -> (-x_k..-x_1)."""
    return tuple(-x for x in reversed(values))


def _require_dominant(hw: Shape):
    if not hw:
        raise PartitionError("gl(k) highest weight must have at least one entry")
    if any(a < b for a, b in zip(hw, hw[1:])):
        raise DominanceError(hw, "tensor_expand")


def tensor_expand(
    hw: Sequence[int],
    p: Partition | Iterable[int],
    dual: bool = False,
    bound: Sequence[int] | None = None,
) -> dict[Shape, int]:
    """Decompose L(hw) ⊗ S_p(C^k), or L(hw) ⊗ S_p(C^k)* when `dual`.

    The highest weight is shifted by its last entry into partition coordinates, expanded with
    the LR rule in k rows and shifted back. The dual case conjugates by x -> (-x_k..-x_1).

    Args:
        hw: Weakly decreasing gl(k) highest weight
        p: Partition with at most k rows
        dual: Tensor with the dual Schur functor
        bound: Componentwise ceiling on results (floor when `dual`), used for pruning

    Returns:
        Mapping from dominant gl(k) weights to multiplicities, sorted descending

    Raises:
        DominanceError: If hw is not weakly decreasing
        PartitionError: If p has more than k rows
    """
    hw = tuple(hw)
    _require_dominant(hw)
    p = as_partition(p)
    if len(p) > len(hw):
        raise PartitionError(f"{p} does not fit in {len(hw)} rows")
    if dual:
        ceiling = dual_weight(bound) if bound is not None else None
        expanded = tensor_expand(dual_weight(hw), p, dual=False, bound=ceiling)
        return dict(sorted(((dual_weight(w), c) for w, c in expanded.items()), reverse=True))
    base = hw[-1]
    ceiling = tuple(b - base for b in bound) if bound is not None else None
    counts = lr_expand(tuple(a - base for a in hw), p, len(hw), ceiling)
    return dict(
        sorted(((tuple(x + base for x in outer), c) for outer, c in counts.items()), reverse=True)
    )


def cauchy_summands(m: int, n: int) -> tuple[tuple[Partition, Partition], ...]:
    """Pairs (γ, γ') with γ in the m x n box: ⋀(V₀* ⊗ V₁) = ⊕ S_γ(V₀)* ⊗ S_γ'(V₁)."""
    return tuple((gamma, gamma.conjugate()) for gamma in partitions_in_box(m, n))
