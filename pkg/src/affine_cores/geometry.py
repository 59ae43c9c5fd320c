"""Exact alcove model for the affine Weyl group of type C.

Points are tuples of ``Fraction``. The fundamental alcove is
``1/2 > x_1 > ... > x_n > 0``; s_0 is the reflection in ``(x, 2e_1) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import floor

from .coxeter import Word
from .errors import AffineCoresError, NotInDomainError, RankMismatchError
from .lattice import CorootPoint
from .projection import DomainParams, in_domain

Point = tuple[Fraction, ...]
Root = tuple[int, ...]


def unit(n: int, i: int, scale: int = 1) -> Root:
    return tuple(scale if j == i else 0 for j in range(1, n + 1))


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class RootSystemC:
    n: int

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return _positive_roots(self.n)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.n
        out = [tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(1, n + 1))
               for i in range(1, n)]
        return tuple(out) + (unit(n, n, 2),)

    @property
    def highest_root(self) -> Root:
        return unit(self.n, 1, 2)


@lru_cache(maxsize=None)
def _positive_roots(n: int) -> tuple[Root, ...]:
    roots = [unit(n, i, 2) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for sign in (-1, 1):
                roots.append(tuple(1 if t == i else sign if t == j else 0
                                   for t in range(1, n + 1)))
    return tuple(roots)


def coroot(alpha: Root) -> tuple[Fraction, ...]:
    norm = dot(alpha, alpha)
    return tuple(Fraction(2 * a, norm) for a in alpha)


@dataclass(frozen=True)
class AffineHyperplane:
    """H_{root, offset} = {x : (x, root) = offset}, with ``root`` positive."""
    root: Root
    offset: int

    def __post_init__(self):
        root = tuple(int(a) for a in self.root)
        offset = int(self.offset)
        first = next((a for a in root if a), 0)
        if first < 0:
            root, offset = tuple(-a for a in root), -offset
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "offset", offset)

    def reflect(self, p: Point) -> Point:
        c = coroot(self.root)
        t = dot(p, self.root) - self.offset
        return tuple(x - t * y for x, y in zip(p, c))

    def to_json(self) -> dict:
        return {"root": list(self.root), "offset": self.offset}


def reflect_generator(i: int, p: Point) -> Point:
    """Affine action of s_i on a point."""
    n = len(p)
    if i == 0:
        return (1 - p[0],) + tuple(p[1:])
    if i == n:
        return tuple(p[:-1]) + (-p[-1],)
    if not 0 < i < n:
        raise AffineCoresError(f"generator s{i} does not exist in rank {n}")
    q = list(p)
    q[i - 1], q[i] = p[i], p[i - 1]
    return tuple(q)


def apply_letters(letters, p: Point) -> Point:
    for i in reversed(tuple(letters)):
        p = reflect_generator(i, p)
    return p


def fundamental_vertices(n: int) -> list[Point]:
    half = Fraction(1, 2)
    return [tuple(half if i < j else Fraction(0) for i in range(n)) for j in range(n + 1)]


def fundamental_centroid(n: int) -> Point:
    return tuple(Fraction(n - i + 1, 2 * (n + 1)) for i in range(1, n + 1))


def signature(p: Point) -> tuple[int, ...]:
    return tuple(floor(dot(p, a)) for a in _positive_roots(len(p)))


def is_interior(p: Point) -> bool:
    """True iff ``p`` lies on no affine hyperplane."""
    return all(dot(p, a).denominator != 1 for a in _positive_roots(len(p)))


@dataclass(frozen=True)
class Alcove:
    """An alcove, identified by its signature (the floors of (c, alpha) over the
    positive roots at any interior point c)."""
    word: Word = field(compare=False)
    centroid: Point = field(compare=False)
    signature: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.centroid)

    def vertices(self) -> list[Point]:
        return [apply_letters(self.word.letters, v) for v in fundamental_vertices(self.n)]

    def coroot_point(self) -> CorootPoint:
        """The unique vertex in the coroot lattice."""
        for v in self.vertices():
            if all(x.denominator == 1 for x in v):
                return CorootPoint(tuple(int(x) for x in v))
        raise AssertionError("alcove without an integral vertex")

    def to_json(self) -> dict:
        return {"word": list(self.word.letters),
                "centroid": [str(x) for x in self.centroid],
                "signature": list(self.signature)}


def alcove_from_word(w: Word) -> Alcove:
    c = apply_letters(w.letters, fundamental_centroid(w.n))
    return Alcove(w, c, signature(c))


def fundamental_alcove(n: int) -> Alcove:
    return alcove_from_word(Word(n, ()))


def descent_word(p: Point) -> Word:
    """Reduced word of the alcove containing the interior point ``p``: reflect
    in violated walls of the fundamental alcove until ``p`` lands inside."""
    if not is_interior(p):
        raise AffineCoresError(f"{p} lies on a hyperplane")
    n = len(p)
    letters = []
    while True:
        if 2 * p[0] > 1:
            i = 0
        elif p[-1] < 0:
            i = n
        else:
            i = next((j for j in range(1, n) if p[j - 1] < p[j]), None)
            if i is None:
                return Word(n, tuple(letters))
        letters.append(i)
        p = reflect_generator(i, p)


def alcove_from_point(p) -> Alcove:
    p = tuple(Fraction(x) for x in p)
    return alcove_from_word(descent_word(p))


def geometric_length(A: Alcove) -> int:
    """Number of affine hyperplanes separating A from the fundamental alcove."""
    return sum(k if k >= 0 else -k for k in A.signature)


def crossing(A: Alcove, B: Alcove) -> AffineHyperplane:
    """The wall between two adjacent alcoves."""
    roots = _positive_roots(A.n)
    diff = [(r, a, b) for r, a, b in zip(roots, A.signature, B.signature) if a != b]
    if len(diff) != 1 or abs(diff[0][1] - diff[0][2]) != 1:
        raise AffineCoresError("alcoves are not adjacent")
    r, a, b = diff[0]
    return AffineHyperplane(r, max(a, b))


@dataclass(frozen=True)
class AlcoveWalk:
    alcoves: tuple[Alcove, ...]
    crossings: tuple[AffineHyperplane, ...]

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def end(self) -> Alcove:
        return self.alcoves[-1]

    @classmethod
    def through(cls, alcoves) -> "AlcoveWalk":
        alcoves = tuple(alcoves)
        return cls(alcoves, tuple(crossing(a, b) for a, b in zip(alcoves, alcoves[1:])))

    def to_json(self) -> dict:
        return {"alcoves": [a.to_json() for a in self.alcoves],
                "crossings": [h.to_json() for h in self.crossings]}


def walk_from_word(w: Word) -> AlcoveWalk:
    return AlcoveWalk.through(
        alcove_from_word(Word(w.n, w.letters[:j])) for j in range(len(w) + 1))


def classify_step(h: AffineHyperplane, params: DomainParams) -> str:
    return "perpendicular" if h.root[params.axis - 1] != 0 else "parallel"


def count_perpendicular(walk: AlcoveWalk, params: DomainParams) -> int:
    return sum(classify_step(h, params) == "perpendicular" for h in walk.crossings)


def project_point(p, params: DomainParams) -> Point:
    """Move ``p`` onto the hyperplane x_axis = level, then forget that
    coordinate."""
    return tuple(x for i, x in enumerate(p, start=1) if i != params.axis)


def project_alcove(A: Alcove, params: DomainParams) -> Alcove:
    if A.n < 2:
        raise RankMismatchError("projection needs rank n >= 2")
    if A.n != params.n:
        raise RankMismatchError(f"alcove of rank {A.n}, parameters of rank {params.n}")
    return alcove_from_point(project_point(A.centroid, params))


def project_walk(walk: AlcoveWalk, params: DomainParams) -> AlcoveWalk:
    """Project every alcove and drop consecutive repeats."""
    if not in_domain(walk.end.coroot_point(), params.k):
        raise NotInDomainError(
            f"walk ends at {walk.end.coroot_point().coords}, outside the domain for k={params.k}")
    out = []
    for A in walk.alcoves:
        B = project_alcove(A, params)
        if not out or out[-1] != B:
            out.append(B)
    return AlcoveWalk.through(out)


def t_level(params: DomainParams) -> Fraction:
    """Coordinate of T, the translate of the hyperplane x_axis = level by 1/2
    toward the origin."""
    half = Fraction(1, 2)
    return params.level - half if params.positive else params.level + half


def is_good_alcove(A: Alcove, params: DomainParams) -> bool:
    """True iff A has a facet (n of its n+1 vertices) on T."""
    t = t_level(params)
    return sum(v[params.axis - 1] == t for v in A.vertices()) == A.n


@lru_cache(maxsize=None)
def _finite_images(n: int) -> tuple[Point, ...]:
    """The fundamental centroid under every signed permutation."""
    c = fundamental_centroid(n)
    out = []
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            out.append(tuple(s * c[j] for s, j in zip(signs, perm)))
    return tuple(out)


def coset_alcoves(v: CorootPoint) -> list[Alcove]:
    """The |W| alcoves with coroot point ``v``."""
    return [alcove_from_point(tuple(x + t for x, t in zip(c, v.coords)))
            for c in _finite_images(v.n)]


def _coset_min_length(v: CorootPoint) -> int:
    return min(sum(abs(k) for k in signature(tuple(x + t for x, t in zip(c, v.coords))))
               for c in _finite_images(v.n))


def is_distinguished(A: Alcove) -> bool:
    return geometric_length(A) <= _coset_min_length(A.coroot_point())


def distinguished_alcove(v: CorootPoint) -> Alcove:
    """The alcove of minimal length among those with coroot point ``v``."""
    points = [tuple(x + t for x, t in zip(c, v.coords)) for c in _finite_images(v.n)]
    best = min(points, key=lambda p: sum(abs(k) for k in signature(p)))
    return alcove_from_point(best)


def start_alcove(params: DomainParams) -> Alcove:
    """The distinguished alcove at level * e_axis."""
    coords = tuple(params.level if i == params.axis else 0 for i in range(1, params.n + 1))
    return distinguished_alcove(CorootPoint(coords))
