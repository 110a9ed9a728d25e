"""Set partitions as restricted growth strings.

A restricted growth string ``a`` of length ``n`` has ``a[0] = 0`` and
``a[i] <= 1 + max(a[:i])``; it names the partition of ``0..n-1`` in which
``i`` and ``j`` share a block iff ``a[i] == a[j]``.  Each partition has
exactly one such string, with blocks numbered by first occurrence.
"""

from __future__ import annotations

from typing import Iterator


def set_partitions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every partition of ``n`` items into exactly ``k`` blocks.

    Strings come out in lexicographic order.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if n == 0:
        if k == 0:
            yield ()
        return
    if k == 0 or k > n:
        return
    a = [0] * n

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(a)
            return
        left = n - i - 1
        for c in range(min(used + 1, k)):
            now = used + 1 if c == used else used
            # every still-missing block needs a position of its own
            if k - now > left:
                continue
            a[i] = c
            yield from extend(i + 1, now)

    yield from extend(1, 1)


def all_set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    for k in range(1, n + 1):
        yield from set_partitions(n, k)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind by the standard recurrence."""
    row = [1] + [0] * k
    for i in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(i, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def blocks(rgs: tuple[int, ...]) -> list[list[int]]:
    out: list[list[int]] = []
    for i, c in enumerate(rgs):
        if c == len(out):
            out.append([])
        out[c].append(i)
    return out
