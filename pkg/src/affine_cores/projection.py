"""The projection from rank n to rank n-1 on cores, abaci, coroot points and
reduced words, together with its domains and codomains."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .coxeter import Word, apply_generator_full, canonical_reduced_word, length
from .errors import (
    AffineCoresError, IdentityAbacusError, NotInDomainError, NotReducedError,
)
from .lattice import AbacusC, CorootPoint, first_part, symmetric_core
from .partitions import Partition, as_partition, conjugate, diag_label


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class DomainParams:
    """Where the coroot points of the symmetric (2n)-cores with first part k
    live: the hyperplane ``coords[axis] = level`` (axis is 1-based)."""
    n: int
    k: int
    l1: int
    l2: int
    axis: int
    level: int

    @property
    def height(self) -> int:
        """ceil(k / 2n), the absolute value of ``level``."""
        return abs(self.level)

    @property
    def positive(self) -> bool:
        return self.level > 0

    @property
    def image_bound(self) -> int:
        """Largest first part in the image: k - ceil(k/n)."""
        return self.k - ceil_div(self.k, self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "l1": self.l1, "l2": self.l2,
                "axis": self.axis, "level": self.level}


def domain_params(n: int, k: int) -> DomainParams:
    if n < 2:
        raise AffineCoresError(f"projection needs rank n >= 2, got {n}")
    if k < 1:
        raise AffineCoresError(f"projection parameters need k >= 1, got {k}")
    l1 = (k - 1) % n + 1
    l2 = (k - 1) % (2 * n) + 1
    height = ceil_div(k, 2 * n)
    if l2 <= n:
        return DomainParams(n, k, l1, l2, l1, height)
    return DomainParams(n, k, l1, l2, n - l1 + 1, -height)


# --- cores -----------------------------------------------------------------

def phi_core(parts: Iterable[int], n: int) -> Partition:
    """Delete the rows ending on the same diagonal label as row 1, and the
    columns ending on the same label as column 1."""
    parts = symmetric_core(parts, n)
    if not parts:
        return ()
    conj = conjugate(parts)
    row_label = diag_label(1, parts[0], n)
    col_label = diag_label(conj[0], 1, n)
    keep_rows = [i for i in range(1, len(parts) + 1)
                 if diag_label(i, parts[i - 1], n) != row_label]
    keep_cols = {j for j in range(1, len(conj) + 1)
                 if diag_label(conj[j - 1], j, n) != col_label}
    rows = [sum(1 for j in range(1, parts[i - 1] + 1) if j in keep_cols)
            for i in keep_rows]
    return as_partition(sorted(rows, reverse=True))


# --- abaci -----------------------------------------------------------------

def delete_runner_pair(full: tuple[int, ...], runner: int) -> tuple[int, ...]:
    """Drop ``runner`` (1-based) and its mirror from a full level vector."""
    mirror = len(full) + 1 - runner
    return tuple(x for i, x in enumerate(full, start=1) if i not in (runner, mirror))


def phi_abacus(a: AbacusC) -> AbacusC:
    """Delete the right-most largest runner and its mirror."""
    if a.n < 2:
        raise AffineCoresError("projection needs rank n >= 2")
    if a.is_identity():
        raise IdentityAbacusError("the identity abacus has no largest runner")
    return AbacusC.from_full(delete_runner_pair(a.full, a.largest_runner()))


def params_of(a: AbacusC) -> DomainParams:
    return domain_params(a.n, first_part(a))


# --- coroot points ---------------------------------------------------------

def _bounds(params: DomainParams, i: int, codomain: bool) -> tuple[int, int]:
    """Inclusive bounds on coordinate i (1-based) of a domain point, or of a
    codomain point when ``codomain`` is set."""
    L, l1, n = params.height, params.l1, params.n
    if params.positive:
        upper_ok = i <= l1 - 1
        return -L + 1, (L if upper_ok else L - 1)
    if codomain:
        lower_ok = i >= n - l1 + 1
    else:
        lower_ok = i >= n - l1 + 2
    return (-L if lower_ok else -L + 1), L


def in_domain(v: CorootPoint, k: int) -> bool:
    params = domain_params(v.n, k)
    for i, x in enumerate(v.coords, start=1):
        if i == params.axis:
            if x != params.level:
                return False
            continue
        lo, hi = _bounds(params, i, codomain=False)
        if not lo <= x <= hi:
            return False
    return True


def in_codomain(u: CorootPoint, n: int, k: int) -> bool:
    params = domain_params(n, k)
    if u.n != n - 1:
        return False
    for i, x in enumerate(u.coords, start=1):
        lo, hi = _bounds(params, i, codomain=True)
        if not lo <= x <= hi:
            return False
    return True


def enumerate_domain(n: int, k: int) -> list[CorootPoint]:
    params = domain_params(n, k)
    ranges = []
    for i in range(1, n + 1):
        if i == params.axis:
            ranges.append([params.level])
        else:
            lo, hi = _bounds(params, i, codomain=False)
            ranges.append(range(lo, hi + 1))
    return [CorootPoint(c) for c in product(*ranges)]


def enumerate_codomain(n: int, k: int) -> list[CorootPoint]:
    params = domain_params(n, k)
    ranges = []
    for i in range(1, n):
        lo, hi = _bounds(params, i, codomain=True)
        ranges.append(range(lo, hi + 1))
    return [CorootPoint(c) for c in product(*ranges)]


def phi_coroot(v: CorootPoint, k: int) -> CorootPoint:
    if not in_domain(v, k):
        raise NotInDomainError(f"{v.coords} is not in the domain for k={k}")
    axis = domain_params(v.n, k).axis
    return CorootPoint(v.coords[:axis - 1] + v.coords[axis:])


def phi_coroot_inverse(u: CorootPoint, n: int, k: int) -> CorootPoint:
    if not in_codomain(u, n, k):
        raise NotInDomainError(f"{u.coords} is not in the codomain for n={n}, k={k}")
    p = domain_params(n, k)
    return CorootPoint(u.coords[:p.axis - 1] + (p.level,) + u.coords[p.axis - 1:])


# --- reduced words ---------------------------------------------------------

def _reduced_index(pos: int, tracked: int, n: int) -> int:
    """Position (1-based) in the rank n-1 full vector of rank-n position
    ``pos``, once ``tracked`` and its mirror are deleted."""
    gone = (tracked, 2 * n + 1 - tracked)
    assert pos not in gone
    return pos - sum(1 for g in gone if g < pos)


def _moved_positions(i: int, n: int) -> set[int]:
    if i == 0:
        return {1, 2 * n}
    if i == n:
        return {n, n + 1}
    return {i, i + 1, 2 * n - i, 2 * n - i + 1}


def _track(i: int, tracked: int, n: int) -> int:
    """Where the runner at position ``tracked`` sits after s_i."""
    if i == 0:
        return {1: 2 * n, 2 * n: 1}.get(tracked, tracked)
    if i == n:
        return {n: n + 1, n + 1: n}.get(tracked, tracked)
    swap = {i: i + 1, i + 1: i, 2 * n - i: 2 * n - i + 1, 2 * n - i + 1: 2 * n - i}
    return swap.get(tracked, tracked)


def _reduced_generator(i: int, tracked: int, n: int) -> int:
    """The rank n-1 generator that mimics s_i once the tracked pair is gone."""
    if i == 0:
        return 0
    if i == n:
        return n - 1
    return _reduced_index(i, tracked, n)


@dataclass(frozen=True)
class TraceStep:
    letter: int
    emitted: int | None
    abacus_after: tuple[int, ...]

    def to_json(self) -> dict:
        return {"letter": self.letter, "emitted": self.emitted,
                "abacus_after": list(self.abacus_after)}


def phi_word_trace(w: Word, a: AbacusC) -> tuple[Word, list[TraceStep]]:
    """Run the letters of a reduced word for ``a`` left to right over ``a``,
    skipping those that move the largest runner and translating the others
    into rank n-1 generators."""
    n = a.n
    k = first_part(a)
    if k < 1:
        raise IdentityAbacusError("the identity abacus is outside every domain")
    if w.n != n:
        raise AffineCoresError(f"word of rank {w.n} for abacus of rank {n}")
    if len(w) != length(a):
        raise NotReducedError(f"{w} has length {len(w)}, but length({a.levels}) = {length(a)}")
    full = a.full
    tracked = a.largest_runner()
    image = delete_runner_pair(full, tracked)
    emitted, trace = [], []
    for i in w.letters:
        after = apply_generator_full(i, full)
        if tracked in _moved_positions(i, n):
            out = None
            tracked = _track(i, tracked, n)
            assert delete_runner_pair(after, tracked) == image
        else:
            out = _reduced_generator(i, tracked, n)
            image = apply_generator_full(out, image)
            assert delete_runner_pair(after, tracked) == image, (i, out, after, image)
            emitted.append(out)
        full = after
        trace.append(TraceStep(i, out, after))
    if any(full):
        raise NotReducedError(f"{w} does not evaluate to {a.levels}")
    if len(w) - len(emitted) != k:
        raise NotReducedError(
            f"{w} moved the largest runner {len(w) - len(emitted)} times, expected {k}")
    # the emitted letters peel phi(a) to the identity in the same order
    return Word(n - 1, tuple(emitted)), trace


def phi_word(w: Word, a: AbacusC) -> Word:
    return phi_word_trace(w, a)[0]


def _lift_step(i: int, full: tuple[int, ...], tracked: int) -> tuple[tuple[int, ...], int]:
    """Shortest run of rank-n letters, each lowering the length by one, that
    acts on ``full`` as the rank n-1 generator s_i acts on what is left after
    deleting the tracked pair. Returns the letters in the order applied and
    the new tracked position."""
    n = len(full) // 2
    target = apply_generator_full(i, delete_runner_pair(full, tracked))
    frontier = [((), full, tracked)]
    for _ in range(3):
        nxt = []
        for letters, cur, t in frontier:
            here = length(AbacusC.from_full(cur))
            for j in range(n + 1):
                after = apply_generator_full(j, cur)
                if length(AbacusC.from_full(after)) != here - 1:
                    continue
                t2 = _track(j, t, n)
                if delete_runner_pair(after, t2) == target:
                    return letters + (j,), t2
                nxt.append((letters + (j,), after, t2))
        frontier = nxt
    raise NotReducedError(f"no lift of s{i} at {full}")


def lift_word(wp: Word, a: AbacusC) -> Word:
    """Build a word for ``a`` of length ``len(wp) + first_part(a)`` from a
    reduced word ``wp`` for ``phi_abacus(a)``."""
    n = a.n
    if wp.n != n - 1:
        raise AffineCoresError(f"expected a rank {n - 1} word, got rank {wp.n}")
    image = phi_abacus(a)
    if len(wp) != length(image):
        raise NotReducedError(f"{wp} is not a reduced word for {image.levels}")
    full = a.full
    tracked = a.largest_runner()
    reduced = image.full
    letters: list[int] = []
    for i in wp.letters:
        steps, tracked = _lift_step(i, full, tracked)
        for j in steps:
            full = apply_generator_full(j, full)
        reduced = apply_generator_full(i, reduced)
        letters.extend(steps)
    if any(reduced):
        raise NotReducedError(f"{wp} does not evaluate to {image.levels}")
    letters.extend(canonical_reduced_word(AbacusC.from_full(full)).letters)
    return Word(n, tuple(letters))
