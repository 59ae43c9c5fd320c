import pytest

from affine_cores.errors import AffineCoresError, IdentityAbacusError, NotACoreError
from affine_cores.partitions import is_core, iter_partitions
from affine_cores.type_a import (
    AbacusA, RootLatticePointA, abacus_from_core_a, core_from_abacus_a, cores_a_by_size,
    cores_a_with_first_part, first_part_a, hyperplane_a, phi_a_abacus, phi_a_core,
    point_of_core_a,
)


def brute_cores(n, k, max_boxes):
    return sorted((p for p in iter_partitions(max_boxes, first_part=k) if is_core(p, n)),
                  key=lambda p: (sum(p), tuple(-x for x in p)))


def test_levels_sum_to_zero():
    with pytest.raises(AffineCoresError):
        AbacusA(3, (1, 0, 0))
    with pytest.raises(AffineCoresError):
        RootLatticePointA((1, 1))


def test_phi_a_core_examples():
    assert phi_a_core((), 3) == ()
    assert phi_a_core((2, 1), 2) == ()
    with pytest.raises(NotACoreError):
        phi_a_core((2, 2), 3)


def test_round_trips():
    for n in (2, 3, 4):
        for p in cores_a_by_size(n, 16):
            a = abacus_from_core_a(p, n)
            assert core_from_abacus_a(a) == p
            assert first_part_a(a) == (p[0] if p else 0)


def test_first_part_enumeration_matches_brute_force():
    for n in (3, 4):
        for k in range(1, 6):
            bound = max(sum(p) for p in cores_a_with_first_part(n, k)) + 6
            assert cores_a_with_first_part(n, k) == brute_cores(n, k, bound)


def test_commutes_with_core_map():
    for n in (2, 3, 4):
        for p in cores_a_by_size(n, 8):
            if p:
                a = abacus_from_core_a(p, n)
                assert core_from_abacus_a(phi_a_abacus(a)) == phi_a_core(p, n)


def test_identity_abacus():
    with pytest.raises(IdentityAbacusError):
        phi_a_abacus(AbacusA.identity(3))


def test_two_cores_are_staircases():
    for k in range(1, 6):
        (p,) = cores_a_with_first_part(2, k)
        assert p == tuple(range(k, 0, -1))
        assert phi_a_core(p, 2) == ()


def test_hyperplane_examples():
    h = hyperplane_a(3, 2)
    assert (h.axis, h.level) == (2, 1)
    h0 = hyperplane_a(3, 0)
    assert (h0.axis, h0.level) == (3, 0)
    assert h0.contains(point_of_core_a((), 3))
    assert cores_a_with_first_part(3, 0) == [()]
    # the plane itself also holds nonempty cores such as (1, 1)
    assert h0.contains(point_of_core_a((1, 1), 3))


def test_cores_lie_on_hyperplane():
    for p in brute_cores(3, 2, 12):
        assert hyperplane_a(3, 2).contains(point_of_core_a(p, 3))


def test_bijection():
    for n in (3, 4):
        for k in range(1, 6):
            image = sorted(phi_a_core(p, n) for p in cores_a_with_first_part(n, k))
            target = sorted(q for j in range(k + 1) for q in cores_a_with_first_part(n - 1, j))
            assert image == target
