"""Type-A models: n-cores, balanced abaci on n runners, zero-sum lattice
points, and the runner-deleting projection.

Entries are labelled ``m*n + i`` on runner ``i`` (1..n); runner ``i`` holds a
bead at every label up to ``levels[i-1]*n + i``. The empty core has beads
exactly at the labels ``<= n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .errors import AffineCoresError, IdentityAbacusError, NotACoreError
from .partitions import Partition, as_partition, hook_length, is_core, iter_partitions


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class AbacusA:
    n: int
    levels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(int(a) for a in self.levels))
        if len(self.levels) != self.n:
            raise AffineCoresError(f"expected {self.n} levels, got {len(self.levels)}")
        if sum(self.levels):
            raise AffineCoresError(f"levels must sum to zero: {self.levels}")

    @classmethod
    def identity(cls, n: int) -> "AbacusA":
        return cls(n, (0,) * n)

    def is_identity(self) -> bool:
        return not any(self.levels)

    def largest_runner(self) -> int:
        top = max(self.levels)
        return max(i for i, a in enumerate(self.levels, start=1) if a == top)

    def to_json(self) -> dict:
        return {"type": "A", "n": self.n, "levels": list(self.levels)}

    @classmethod
    def from_json(cls, obj: dict) -> "AbacusA":
        return cls(int(obj["n"]), tuple(obj["levels"]))


@dataclass(frozen=True)
class RootLatticePointA:
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if sum(self.coords):
            raise AffineCoresError(f"coordinates must sum to zero: {self.coords}")

    def to_json(self) -> dict:
        return {"type": "A", "coords": list(self.coords)}


def _top_beads(levels: Iterable[int], n: int) -> list[int]:
    return [a * n + i for i, a in enumerate(levels, start=1)]


def core_from_abacus_a(a: AbacusA) -> Partition:
    """Row j counts the gaps below the j-th highest bead."""
    n = a.n
    tops = _top_beads(a.levels, n)
    lo, hi = min(tops) - n, max(tops)
    beads = {x for t in tops for x in range(t, lo, -n)}
    rows, gaps = [], 0
    for x in range(lo + 1, hi + 1):
        if x in beads:
            if gaps:
                rows.append(gaps)
        else:
            gaps += 1
    return as_partition(reversed(rows))


def abacus_from_core_a(parts: Iterable[int], n: int) -> AbacusA:
    parts = as_partition(parts)
    if not is_core(parts, n):
        raise NotACoreError(f"{parts} is not a {n}-core")
    r = len(parts)
    beads = {p - j + n + 1 for j, p in enumerate(parts, start=1)}
    beads |= set(range(n - r - n + 1, n - r + 1))
    levels = []
    for i in range(1, n + 1):
        levels.append(max((x - i) // n for x in beads if (x - i) % n == 0))
    return AbacusA(n, tuple(levels))


def first_part_a(a: AbacusA) -> int:
    if a.is_identity():
        return 0
    i = a.largest_runner()
    return a.n * (a.levels[i - 1] - 1) + i


def phi_a_core(parts: Iterable[int], n: int) -> Partition:
    """Delete every row whose first-column hook is congruent to the corner
    hook modulo n."""
    parts = as_partition(parts)
    if not parts:
        return ()
    if not is_core(parts, n):
        raise NotACoreError(f"{parts} is not a {n}-core")
    h11 = hook_length(parts, 1, 1)
    return tuple(p for i, p in enumerate(parts, start=1)
                 if (hook_length(parts, i, 1) - h11) % n)


def _shift(levels: tuple[int, ...], s: int) -> tuple[int, ...]:
    """Levels after moving every bead up by ``s`` labels."""
    for _ in range(s):
        levels = (levels[-1] + 1,) + levels[:-1]
    return levels


def phi_a_abacus(a: AbacusA) -> AbacusA:
    """Delete the runner with the largest bead and rebalance by shifting
    labels, which leaves the core unchanged."""
    if a.is_identity():
        raise IdentityAbacusError("the identity abacus has no largest runner")
    if a.n < 2:
        raise AffineCoresError("projection needs at least two runners")
    r = a.largest_runner()
    rest = a.levels[:r - 1] + a.levels[r:]
    return AbacusA(a.n - 1, _shift(rest, a.levels[r - 1]))


@dataclass(frozen=True)
class HyperplaneA:
    n: int
    k: int
    axis: int
    level: int

    def contains(self, p: RootLatticePointA) -> bool:
        return p.coords[self.axis - 1] == self.level

    def to_json(self) -> dict:
        return {"type": "A", "n": self.n, "k": self.k, "axis": self.axis, "level": self.level}


def hyperplane_a(n: int, k: int) -> HyperplaneA:
    if k < 0:
        raise AffineCoresError(f"k must be nonnegative, got {k}")
    return HyperplaneA(n, k, (k - 1) % n + 1, ceil_div(k, n))


def point_of_core_a(parts: Iterable[int], n: int) -> RootLatticePointA:
    return RootLatticePointA(abacus_from_core_a(parts, n).levels)


def cores_a_by_size(n: int, max_boxes: int) -> Iterator[Partition]:
    """n-cores with at most ``max_boxes`` boxes, by size."""
    return (p for p in iter_partitions(max_boxes) if is_core(p, n))


def cores_a_with_first_part(n: int, k: int) -> list[Partition]:
    """All n-cores with first part exactly ``k``, via their abaci: the largest
    level is ceil(k/n), so every level lies in [-(n-1)*ceil(k/n), ceil(k/n)]."""
    if k == 0:
        return [()]
    top = ceil_div(k, n)
    out = []
    for levels in product(range(-(n - 1) * top, top + 1), repeat=n - 1):
        last = -sum(levels)
        if not -(n - 1) * top <= last <= top:
            continue
        a = AbacusA(n, levels + (last,))
        if first_part_a(a) == k:
            out.append(core_from_abacus_a(a))
    return sorted(out, key=lambda p: (sum(p), tuple(-x for x in p)))
