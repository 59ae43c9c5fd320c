"""Type-C models of the quotient: balanced flush abaci, coroot points,
mirrored-permutation windows and symmetric (2n)-cores.

An abacus on 2n runners carries the entries ``m*N + i`` (level ``m``, runner
``i``), ``N = 2n + 1``. A balanced flush abacus is determined by the level of
the lowest bead on runners ``1..n``; runner ``N - i`` sits at the negated
level.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import AffineCoresError, InvalidWindowError, NotASymmetricCoreError
from .partitions import Partition, as_partition, is_core, is_symmetric


@dataclass(frozen=True)
class AbacusC:
    n: int
    levels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(int(a) for a in self.levels))
        if self.n < 1:
            raise AffineCoresError(f"rank must be at least 1, got {self.n}")
        if len(self.levels) != self.n:
            raise AffineCoresError(
                f"expected {self.n} levels, got {len(self.levels)}")

    @classmethod
    def identity(cls, n: int) -> "AbacusC":
        return cls(n, (0,) * n)

    @classmethod
    def from_full(cls, full: Sequence[int]) -> "AbacusC":
        if len(full) % 2:
            raise AffineCoresError("a full level vector has even length")
        n = len(full) // 2
        for i in range(n):
            if full[i] + full[2 * n - 1 - i] != 0:
                raise AffineCoresError(f"unbalanced level vector {tuple(full)}")
        return cls(n, tuple(full[:n]))

    @property
    def N(self) -> int:
        return 2 * self.n + 1

    @property
    def full(self) -> tuple[int, ...]:
        """Levels of runners 1..2n."""
        return self.levels + tuple(-a for a in reversed(self.levels))

    def is_identity(self) -> bool:
        return not any(self.levels)

    def lowest_bead(self, runner: int) -> int:
        """Label of the lowest bead on ``runner`` (1-based)."""
        return self.full[runner - 1] * self.N + runner

    def is_bead(self, label: int) -> bool:
        runner = label % self.N
        if runner == 0:
            return False
        return label <= self.lowest_bead(runner)

    def largest_runner(self) -> int:
        """Right-most runner (1..2n) whose lowest bead is at the largest level."""
        full = self.full
        top = max(full)
        return max(i for i, a in enumerate(full, start=1) if a == top)

    def to_json(self) -> dict:
        return {"n": self.n, "levels": list(self.levels)}

    @classmethod
    def from_json(cls, obj: dict) -> "AbacusC":
        return cls(int(obj["n"]), tuple(obj["levels"]))


@dataclass(frozen=True)
class CorootPoint:
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def n(self) -> int:
        return len(self.coords)

    def to_json(self) -> dict:
        return {"coords": list(self.coords)}

    @classmethod
    def from_json(cls, obj: dict) -> "CorootPoint":
        return cls(tuple(obj["coords"]))


@dataclass(frozen=True)
class Window:
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def to_json(self) -> dict:
        return {"n": self.n, "values": list(self.values)}

    @classmethod
    def from_json(cls, obj: dict) -> "Window":
        return cls(int(obj["n"]), tuple(obj["values"]))


def coroot_from_abacus(a: AbacusC) -> CorootPoint:
    return CorootPoint(a.levels)


def abacus_from_coroot(v: CorootPoint) -> AbacusC:
    return AbacusC(v.n, v.coords)


def window_from_abacus(a: AbacusC) -> Window:
    """Window of the minimal-length coset representative: the lowest beads of
    all 2n runners in increasing order."""
    return Window(a.n, tuple(sorted(a.lowest_bead(i) for i in range(1, 2 * a.n + 1))))


def validate_window(w: Window) -> None:
    n, N, values = w.n, 2 * w.n + 1, w.values
    if len(values) != 2 * n:
        raise InvalidWindowError(f"window for rank {n} needs {2 * n} values, got {len(values)}")
    residues = [v % N for v in values]
    if 0 in residues:
        raise InvalidWindowError(f"window value divisible by N={N}: {values}")
    if sorted(residues) != list(range(1, 2 * n + 1)):
        raise InvalidWindowError(f"window residues mod {N} are not distinct: {values}")
    for i in range(n):
        if values[i] + values[2 * n - 1 - i] != N:
            raise InvalidWindowError(
                f"mirror symmetry w(i) + w(2n+1-i) = N fails at i={i + 1}: {values}")


def abacus_from_window(w: Window) -> AbacusC:
    validate_window(w)
    N = 2 * w.n + 1
    full = [0] * (2 * w.n)
    for v in w.values:
        full[v % N - 1] = (v - v % N) // N
    return AbacusC.from_full(full)


def first_part(a: AbacusC) -> int:
    """First part of the core of ``a``, read off the position of its largest bead."""
    if a.is_identity():
        return 0
    runner = a.largest_runner()
    level = a.full[runner - 1]
    return 2 * a.n * (level - 1) + runner


def reading_order(a: AbacusC) -> list[tuple[int, bool]]:
    """``(label, is_bead)`` for every entry in ``[-(L+1)N, (L+1)N]``, where L is
    the largest absolute level; every entry below is a bead and every entry
    above is a gap."""
    N = a.N
    bound = (max((abs(x) for x in a.levels), default=0) + 1) * N
    return [(x, a.is_bead(x)) for x in range(-bound, bound + 1) if x % N]


def core_from_abacus(a: AbacusC) -> Partition:
    """Row i of the core counts the gaps read before the (M - i + 1)-th of the
    M active beads."""
    gaps = 0
    active = []
    for _, bead in reading_order(a):
        if not bead:
            gaps += 1
        elif gaps:
            active.append(gaps)
    return as_partition(reversed(active))


def _runner_of_index(idx: int, n: int) -> tuple[int, int]:
    # compressed reading index 2n*m + (i-1) <-> entry m*N + i
    m, r = divmod(idx, 2 * n)
    return r + 1, m


def abacus_from_core(parts: Iterable[int], n: int) -> AbacusC:
    """Inverse of :func:`core_from_abacus` on symmetric (2n)-cores."""
    parts = as_partition(parts)
    if not is_symmetric(parts):
        raise NotASymmetricCoreError(f"{parts} is not self-conjugate")
    if not is_core(parts, 2 * n):
        raise NotASymmetricCoreError(f"{parts} is not a {2 * n}-core")
    r = len(parts)
    beads = {p - j + 2 * n for j, p in enumerate(parts, start=1)}
    floor = 2 * n - r - 1  # every index <= floor is a bead
    top = {}
    for idx in list(beads) + list(range(floor - 2 * n + 1, floor + 1)):
        runner, m = _runner_of_index(idx, n)
        top[runner] = max(top.get(runner, m), m)
    full = [top[i] for i in range(1, 2 * n + 1)]
    for idx in range(floor - 2 * n + 1, max(beads, default=floor) + 1):
        runner, m = _runner_of_index(idx, n)
        if (idx in beads or idx <= floor) != (m <= full[runner - 1]):
            raise NotASymmetricCoreError(f"abacus of {parts} is not flush")
    try:
        return AbacusC.from_full(full)
    except AffineCoresError as exc:
        raise NotASymmetricCoreError(str(exc)) from None


def symmetric_core(parts: Iterable[int], n: int) -> Partition:
    """Validate that ``parts`` is a symmetric (2n)-core and return it."""
    parts = as_partition(parts)
    if not (is_symmetric(parts) and is_core(parts, 2 * n)):
        raise NotASymmetricCoreError(f"{parts} is not a symmetric {2 * n}-core")
    return parts


def abaci_in_box(n: int, bound: int) -> list[AbacusC]:
    """All rank-n abaci with every level in ``[-bound, bound]``, lexicographic."""
    return [AbacusC(n, lv) for lv in product(range(-bound, bound + 1), repeat=n)]
