"""Action of the affine Weyl group of type C on abaci and symmetric cores."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import AffineCoresError, GeneratorIndexError, MixedAddableRemovableError
from .lattice import AbacusC, abacus_from_core, core_from_abacus
from .partitions import (
    Partition, add_boxes, addable_boxes, remove_boxes, removable_boxes, residue,
)


@dataclass(frozen=True)
class Word:
    """A word in the generators s_0..s_n; ``letters[0]`` is the leftmost."""
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(i) for i in self.letters))
        for i in self.letters:
            _check_index(i, self.n)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(f"s{i}" for i in self.letters) or "1"

    def to_json(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, obj: dict, n: int | None = None) -> "Word":
        return cls(int(obj.get("n", n)), tuple(obj["letters"]))


def _check_index(i: int, n: int) -> None:
    if not 0 <= i <= n:
        raise GeneratorIndexError(f"generator s{i} does not exist in rank {n}")


def apply_generator_full(i: int, full: tuple[int, ...]) -> tuple[int, ...]:
    """s_i on a full level vector of length 2n."""
    n = len(full) // 2
    _check_index(i, n)
    f = list(full)
    if i == 0:
        f[0], f[-1] = full[-1] + 1, full[0] - 1
    elif i == n:
        f[n - 1], f[n] = full[n], full[n - 1]
    else:
        f[i - 1], f[i] = full[i], full[i - 1]
        f[2 * n - i - 1], f[2 * n - i] = full[2 * n - i], full[2 * n - i - 1]
    return tuple(f)


def apply_generator_abacus(i: int, a: AbacusC) -> AbacusC:
    return AbacusC.from_full(apply_generator_full(i, a.full))


def apply_generator_core(i: int, parts: Partition, n: int) -> Partition:
    """Add every addable i-box, or else remove every removable i-box."""
    _check_index(i, n)
    add = [b for b in addable_boxes(parts) if residue(*b, n) == i]
    rem = [b for b in removable_boxes(parts) if residue(*b, n) == i]
    if add and rem:
        raise MixedAddableRemovableError(
            f"{parts} has addable {add} and removable {rem} boxes of residue {i}")
    if add:
        return add_boxes(parts, add)
    if rem:
        return remove_boxes(parts, rem)
    return parts


def apply_word_abacus(letters: Iterable[int], a: AbacusC) -> AbacusC:
    """Apply the letters right-to-left to ``a``."""
    full = a.full
    for i in reversed(tuple(letters)):
        full = apply_generator_full(i, full)
    return AbacusC.from_full(full)


def evaluate_word(w: Word) -> AbacusC:
    return apply_word_abacus(w.letters, AbacusC.identity(w.n))


def peel_core(parts: Partition, n: int) -> list[int]:
    """Residues removed while peeling ``parts`` down to the empty partition,
    always choosing the smallest residue that has a removable box."""
    out = []
    while parts:
        rem = {residue(r, c, n) for r, c in removable_boxes(parts)}
        i = min(rem)
        nxt = apply_generator_core(i, parts, n)
        if sum(nxt) >= sum(parts):
            raise AffineCoresError(f"peeling {parts} with s{i} did not shrink it")
        out.append(i)
        parts = nxt
    return out


@lru_cache(maxsize=None)
def _canonical_letters(a: AbacusC) -> tuple[int, ...]:
    return tuple(peel_core(core_from_abacus(a), a.n))


def canonical_reduced_word(a: AbacusC) -> Word:
    """Peeling order of the core of ``a``; the first letter peeled is the
    leftmost letter, so ``evaluate_word`` of the result is ``a``."""
    return Word(a.n, _canonical_letters(a))


def length(a: AbacusC) -> int:
    return len(_canonical_letters(a))


def core_of_word(w: Word) -> Partition:
    """The core reached by acting with ``w`` on the empty core."""
    parts: Partition = ()
    for i in reversed(w.letters):
        parts = apply_generator_core(i, parts, w.n)
    return parts


def abacus_of_core_word(w: Word) -> AbacusC:
    return abacus_from_core(core_of_word(w), w.n)
