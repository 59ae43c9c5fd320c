"""Strong Bruhat order on the minimal coset representatives."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import apply_generator_full, canonical_reduced_word, length
from .errors import BoundExceededError, RankMismatchError
from .lattice import AbacusC, abacus_from_coroot
from .partitions import Partition
from .projection import enumerate_domain, phi_abacus


def core_contains(x: Partition, y: Partition) -> bool:
    """True iff the diagram of ``y`` sits inside the diagram of ``x``."""
    if len(y) > len(x):
        return False
    return all(b <= a for a, b in zip(x, y))


def bead_sequence(a: AbacusC, floor: int) -> list[int]:
    """Bead labels above ``floor``, highest first."""
    top = max(a.lowest_bead(i) for i in range(1, 2 * a.n + 1))
    return [x for x in range(top, floor, -1) if a.is_bead(x)]


def _floor(x: AbacusC, y: AbacusC) -> int:
    # every label at or below this is a bead of both abaci
    L = max(abs(v) for v in x.levels + y.levels + (0,))
    return -(L + 1) * x.N


def bruhat_leq_beads(x: AbacusC, y: AbacusC) -> bool:
    """True iff y <= x: the j-th highest bead of x is at least the j-th
    highest bead of y for every j."""
    if x.n != y.n:
        raise RankMismatchError(f"ranks {x.n} and {y.n} differ")
    floor = _floor(x, y)
    bx, by = bead_sequence(x, floor), bead_sequence(y, floor)
    # balanced abaci carry the same number of beads above a common floor
    assert len(bx) == len(by)
    return all(a >= b for a, b in zip(bx, by))


def bruhat_oracle_subword(x: AbacusC, y: AbacusC, bound: int = 8) -> bool:
    """True iff y <= x, by the subword property: y is the value of some
    subword of a reduced word for x."""
    if x.n != y.n:
        raise RankMismatchError(f"ranks {x.n} and {y.n} differ")
    for a in (x, y):
        if length(a) > bound:
            raise BoundExceededError(f"length {length(a)} of {a.levels} exceeds {bound}")
    # values of all subwords, built letter by letter from the right
    reached = {AbacusC.identity(x.n).full}
    for i in reversed(canonical_reduced_word(x).letters):
        reached |= {apply_generator_full(i, f) for f in reached}
    return y.full in reached


@dataclass
class PreservationReport:
    n: int
    k: int
    pairs: int = 0
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"pairs": self.pairs, "violations": self.violations,
                "n": self.n, "k": self.k}


def check_preservation(n: int, k: int) -> PreservationReport:
    """Compare the order on the domain for k with the order on its image."""
    report = PreservationReport(n, k)
    elems = [abacus_from_coroot(v) for v in enumerate_domain(n, k)]
    images = [phi_abacus(a) for a in elems]
    for x, px in zip(elems, images):
        for y, py in zip(elems, images):
            report.pairs += 1
            before, after = bruhat_leq_beads(x, y), bruhat_leq_beads(px, py)
            if before != after:
                report.violations.append({"x": list(x.levels), "y": list(y.levels),
                                          "before": before, "after": after})
    return report
