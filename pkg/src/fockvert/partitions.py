"""Integer partitions, hooks, and shifted index ("maya") sets.

A partition is a tuple of weakly decreasing positive integers; the empty
partition is ``()``.  Cells are 1-indexed pairs (i, j) with 1 <= j <= mu_i.
"""

from __future__ import annotations

import functools
from typing import Iterator


Partition = tuple


def is_partition(mu) -> bool:
    if not isinstance(mu, tuple):
        return False
    return all(
        isinstance(p, int) and p > 0 for p in mu
    ) and all(a >= b for a, b in zip(mu, mu[1:]))


def check_partition(mu) -> Partition:
    if not is_partition(mu):
        raise ValueError(f"not a partition: {mu!r}")
    return mu


def size(mu: Partition) -> int:
    return sum(mu)


def length(mu: Partition) -> int:
    return len(mu)


def part(mu: Partition, i: int) -> int:
    """mu_i with the convention mu_i = 0 beyond the last row (i >= 1)."""
    return mu[i - 1] if 1 <= i <= len(mu) else 0


def cells(mu: Partition) -> Iterator[tuple]:
    for i, row in enumerate(mu, start=1):
        for j in range(1, row + 1):
            yield (i, j)


@functools.lru_cache(maxsize=None)
def conjugate(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(
        sum(1 for row in mu if row >= j) for j in range(1, mu[0] + 1)
    )


def arm(mu: Partition, i: int, j: int) -> int:
    """Number of cells strictly right of (i, j) in row i; may be negative
    for cells outside mu."""
    return part(mu, i) - j


def leg(mu: Partition, i: int, j: int) -> int:
    """Number of cells strictly below (i, j) in column j; may be negative
    for cells outside mu."""
    return part(conjugate(mu), j) - i


def hook(mu: Partition, i: int, j: int) -> int:
    return arm(mu, i, j) + leg(mu, i, j) + 1


def hooks(mu: Partition) -> list:
    return [hook(mu, i, j) for i, j in cells(mu)]


@functools.lru_cache(maxsize=None)
def hook_product(mu: Partition) -> int:
    out = 1
    for h in hooks(mu):
        out *= h
    return out


def contains(mu: Partition, nu: Partition) -> bool:
    """Whether the diagram of nu fits inside the diagram of mu."""
    return all(part(mu, i + 1) >= row for i, row in enumerate(nu))


def fits_in_box(mu: Partition, rows: int, cols: int) -> bool:
    return len(mu) <= rows and (not mu or mu[0] <= cols)


@functools.lru_cache(maxsize=None)
def _partitions_cached(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_cached(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n, largest part first, in reverse-lex order."""
    if n < 0:
        return ()
    return _partitions_cached(n, n if max_part is None else min(max_part, n))


def partitions_up_to(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of every size 0..n."""
    for k in range(n + 1):
        yield from partitions(k, max_part)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most `rows` rows and parts at most `cols`."""
    if rows < 0 or cols < 0:
        return
    def gen(remaining_rows: int, cap: int):
        yield ()
        if remaining_rows == 0:
            return
        for first in range(1, cap + 1):
            for rest in gen(remaining_rows - 1, first):
                yield (first,) + rest
    yield from gen(rows, cols)


def shifted_indices(mu: Partition, m: int, count: int) -> list:
    """The first `count` elements of {m + mu_i - i + 1 : i >= 1}, decreasing.

    This is the set of occupied index positions of the charge-m vacuum
    excited by mu; its first elements determine (mu, m) whenever
    count >= len(mu).
    """
    return [m + part(mu, i) - i + 1 for i in range(1, count + 1)]


def from_shifted_indices(indices, m: int) -> Partition:
    """Recover mu from a decreasing prefix of its shifted index set."""
    indices = sorted(indices, reverse=True)
    mu = []
    for i, s in enumerate(indices, start=1):
        mu.append(s - m + i - 1)
    while mu and mu[-1] == 0:
        mu.pop()
    return check_partition(tuple(mu))
