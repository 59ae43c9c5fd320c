"""Invariant suites run over enumerated domains; each returns a JSON-ready
report whose ``violations`` list is empty when everything holds."""

from __future__ import annotations

import os

from .bruhat import bruhat_leq_beads, bruhat_oracle_subword, check_preservation, core_contains
from .coxeter import canonical_reduced_word, evaluate_word, length
from .errors import BoundExceededError
from .geometry import (
    alcove_from_word, count_perpendicular, geometric_length, is_distinguished,
    is_good_alcove, project_walk, walk_from_word,
)
from .lattice import (
    AbacusC, abaci_in_box, abacus_from_core, abacus_from_coroot, core_from_abacus,
    coroot_from_abacus, first_part,
)
from .projection import (
    domain_params, enumerate_codomain, enumerate_domain, lift_word, phi_abacus,
    phi_core, phi_coroot, phi_coroot_inverse, phi_word,
)

SUITES = ("bijection", "length-drop", "bruhat", "walks")
DEFAULT_MAX = 20000


def max_elements() -> int:
    return int(os.environ.get("AFFINE_CORES_MAX_CELLS", DEFAULT_MAX))


def _domain(n: int, k: int) -> list[AbacusC]:
    points = enumerate_domain(n, k)
    if len(points) > max_elements():
        raise BoundExceededError(
            f"domain for n={n}, k={k} has {len(points)} elements, over the cap {max_elements()}")
    return [abacus_from_coroot(v) for v in points]


def suite_bijection(n: int, kmax: int) -> tuple[int, list]:
    checked, bad = 0, []
    for k in range(1, kmax + 1):
        params = domain_params(n, k)
        dom, cod = enumerate_domain(n, k), enumerate_codomain(n, k)
        images = [phi_coroot(v, k) for v in dom]
        if len(set(images)) != len(dom) or sorted(images, key=lambda u: u.coords) != cod:
            bad.append({"k": k, "check": "image", "domain": len(dom), "codomain": len(cod)})
        for u in cod:
            if phi_coroot(phi_coroot_inverse(u, n, k), k) != u:
                bad.append({"k": k, "check": "inverse", "point": list(u.coords)})
        # brute force over a box that holds every level of a domain element
        box = [a for a in abaci_in_box(n, params.height) if first_part(a) == k]
        if [coroot_from_abacus(a) for a in box] != dom:
            bad.append({"k": k, "check": "brute-force domain"})
        for a in _domain(n, k):
            checked += 1
            b = phi_abacus(a)
            if abacus_from_core(phi_core(core_from_abacus(a), n), n - 1) != b:
                bad.append({"k": k, "check": "core square", "abacus": list(a.levels)})
            if first_part(b) > params.image_bound:
                bad.append({"k": k, "check": "image bound", "abacus": list(a.levels)})
            if a.largest_runner() != params.l2 or max(a.full) != params.height:
                bad.append({"k": k, "check": "largest bead", "abacus": list(a.levels)})
    return checked, bad


def suite_length_drop(n: int, kmax: int) -> tuple[int, list]:
    checked, bad = 0, []
    for k in range(1, kmax + 1):
        for a in _domain(n, k):
            checked += 1
            b = phi_abacus(a)
            w = canonical_reduced_word(a)
            lengths = (length(a), geometric_length(alcove_from_word(w)),
                       length(b), geometric_length(alcove_from_word(canonical_reduced_word(b))))
            if lengths[0] != lengths[1] or lengths[2] != lengths[3] or lengths[2] != lengths[0] - k:
                bad.append({"k": k, "check": "length", "abacus": list(a.levels),
                            "lengths": list(lengths)})
            wp = phi_word(w, a)
            if evaluate_word(wp) != b or len(wp) != len(w) - k:
                bad.append({"k": k, "check": "phi_word", "abacus": list(a.levels)})
            lifted = lift_word(canonical_reduced_word(b), a)
            if evaluate_word(lifted) != a or len(lifted) != len(w):
                bad.append({"k": k, "check": "lift_word", "abacus": list(a.levels)})
    return checked, bad


def suite_bruhat(n: int, kmax: int, bound: int = 8) -> tuple[int, list]:
    checked, bad = 0, []
    for k in range(1, kmax + 1):
        report = check_preservation(n, k)
        checked += report.pairs
        bad.extend(dict(v, k=k, check="preservation") for v in report.violations)
        elems = _domain(n, k)
        elems += [phi_abacus(a) for a in elems]
        for x in elems:
            for y in elems:
                if x.n != y.n:
                    continue
                beads = bruhat_leq_beads(x, y)
                if beads != core_contains(core_from_abacus(x), core_from_abacus(y)):
                    bad.append({"k": k, "check": "containment",
                                "x": list(x.levels), "y": list(y.levels)})
                if length(x) <= bound and length(y) <= bound:
                    if beads != bruhat_oracle_subword(x, y, bound):
                        bad.append({"k": k, "check": "subword",
                                    "x": list(x.levels), "y": list(y.levels)})
    return checked, bad


def suite_walks(n: int, kmax: int) -> tuple[int, list]:
    checked, bad = 0, []
    for k in range(1, kmax + 1):
        params = domain_params(n, k)
        for a in _domain(n, k):
            checked += 1
            w = canonical_reduced_word(a)
            walk = walk_from_word(w)
            target = alcove_from_word(canonical_reduced_word(phi_abacus(a)))
            projected = project_walk(walk, params)
            ok = (count_perpendicular(walk, params) == k
                  and len(projected) == len(w) - k
                  and projected.end == target
                  and is_good_alcove(walk.end, params)
                  and is_distinguished(walk.end))
            if not ok:
                bad.append({"k": k, "check": "walk", "abacus": list(a.levels)})
    return checked, bad


RUNNERS = {"bijection": suite_bijection, "length-drop": suite_length_drop,
           "bruhat": suite_bruhat, "walks": suite_walks}


def run_suite(suite: str, n: int, kmax: int) -> dict:
    names = SUITES if suite == "all" else (suite,)
    report = {"suite": suite, "n": n, "kmax": kmax, "checked": 0, "violations": []}
    for name in names:
        checked, bad = RUNNERS[name](n, kmax)
        report["checked"] += checked
        report["violations"].extend(dict(v, suite=name) for v in bad)
    return report
