"""Partitions as weakly decreasing tuples of positive integers.

Boxes are addressed English-style as ``(row, column)``, both starting at 1.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import AffineCoresError, BoxOutOfRangeError

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple, dropping trailing zeros."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 1 for p in parts):
        raise AffineCoresError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise AffineCoresError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def conjugate(parts: Partition) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def size(parts: Partition) -> int:
    return sum(parts)


def boxes(parts: Partition) -> Iterator[tuple[int, int]]:
    for i, p in enumerate(parts, start=1):
        for j in range(1, p + 1):
            yield i, j


def hook_length(parts: Partition, i: int, j: int, conj: Partition | None = None) -> int:
    if not (1 <= i <= len(parts) and 1 <= j <= parts[i - 1]):
        raise BoxOutOfRangeError(f"box ({i}, {j}) is not in {parts}")
    if conj is None:
        conj = conjugate(parts)
    return (parts[i - 1] - j) + (conj[j - 1] - i) + 1


def hook_lengths(parts: Partition) -> dict[tuple[int, int], int]:
    conj = conjugate(parts)
    return {(i, j): hook_length(parts, i, j, conj) for i, j in boxes(parts)}


def is_core(parts: Partition, m: int) -> bool:
    """True iff no hook length of ``parts`` is divisible by ``m``."""
    if m < 2:
        raise AffineCoresError(f"core modulus must be at least 2, got {m}")
    conj = conjugate(parts)
    return all(hook_length(parts, i, j, conj) % m for i, j in boxes(parts))


def is_symmetric(parts: Partition) -> bool:
    return tuple(parts) == conjugate(parts)


def diag_label(i: int, j: int, n: int) -> int:
    """Label of box (i, j) in Z/2nZ, constant along diagonals."""
    return (j - i) % (2 * n)


def residue(i: int, j: int, n: int) -> int:
    """Type-C residue of box (i, j): the diagonal label folded into 0..n."""
    d = diag_label(i, j, n)
    return d if d <= n else 2 * n - d


def addable_boxes(parts: Partition) -> list[tuple[int, int]]:
    out = []
    for r in range(1, len(parts) + 2):
        here = parts[r - 1] if r <= len(parts) else 0
        above = parts[r - 2] if r >= 2 else None
        if above is None or above > here:
            out.append((r, here + 1))
    return out


def removable_boxes(parts: Partition) -> list[tuple[int, int]]:
    out = []
    for r, p in enumerate(parts, start=1):
        below = parts[r] if r < len(parts) else 0
        if p > below:
            out.append((r, p))
    return out


def add_boxes(parts: Partition, cells: Iterable[tuple[int, int]]) -> Partition:
    rows = list(parts)
    for r, c in sorted(cells):
        if r == len(rows) + 1:
            rows.append(0)
        assert rows[r - 1] == c - 1, (parts, r, c)
        rows[r - 1] = c
    return as_partition(rows)


def remove_boxes(parts: Partition, cells: Iterable[tuple[int, int]]) -> Partition:
    rows = list(parts)
    for r, c in cells:
        assert rows[r - 1] == c, (parts, r, c)
        rows[r - 1] = c - 1
    return as_partition(rows)


def iter_partitions(max_size: int, max_part: int | None = None,
                    first_part: int | None = None) -> Iterator[Partition]:
    """All partitions of size at most ``max_size``, optionally with bounded or
    fixed first part. Ordered by size, then reverse lexicographically."""
    if max_part is None:
        max_part = max_size

    def rec(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, cap), 0, -1):
            for tail in rec(remaining - p, p):
                yield (p,) + tail

    for total in range(max_size + 1):
        if first_part is None:
            yield from rec(total, max_part)
        elif first_part == 0:
            if total == 0:
                yield ()
        elif first_part <= min(total, max_part):
            for tail in rec(total - first_part, first_part):
                yield (first_part,) + tail
