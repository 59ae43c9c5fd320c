import pytest

from affine_cores.coxeter import Word, canonical_reduced_word, evaluate_word, length
from affine_cores.errors import (
    AffineCoresError, IdentityAbacusError, NotInDomainError, NotReducedError,
)
from affine_cores.lattice import (
    AbacusC, CorootPoint, abaci_in_box, abacus_from_core, abacus_from_coroot,
    core_from_abacus, first_part,
)
from affine_cores.projection import (
    domain_params, enumerate_codomain, enumerate_domain, in_codomain, in_domain,
    lift_word, phi_abacus, phi_core, phi_coroot, phi_coroot_inverse, phi_word,
    phi_word_trace,
)
from oracles import reduced_words, symmetric_cores

W11 = Word(3, (0, 1, 3, 2, 3, 0, 1, 2, 0, 1, 0))


def brute_domain(n, k):
    h = -(-k // (2 * n))
    return [CorootPoint(a.levels) for a in abaci_in_box(n, h) if first_part(a) == k]


@pytest.mark.parametrize("n,k,expected", [
    (2, 1, (1, 1, 1, 1)),
    (3, 10, (1, 4, 3, -2)),
    (3, 7, (1, 1, 1, 2)),
])
def test_domain_params(n, k, expected):
    p = domain_params(n, k)
    assert (p.l1, p.l2, p.axis, p.level) == expected


def test_domain_params_rejects_zero():
    with pytest.raises(AffineCoresError):
        domain_params(2, 0)


def test_phi_abacus_examples():
    assert phi_abacus(AbacusC(3, (1, 2, -2))).full == (1, 2, -2, -1)
    assert phi_abacus(AbacusC(3, (2, 1, -1))).levels == (1, -1)
    assert phi_abacus(AbacusC(2, (1, 0))) == AbacusC(1, (0,))


def test_phi_abacus_identity():
    with pytest.raises(IdentityAbacusError):
        phi_abacus(AbacusC.identity(3))


def test_phi_core_examples():
    assert phi_core((), 2) == ()
    a = AbacusC(3, (1, 2, -2))
    assert phi_core(core_from_abacus(a), 3) == core_from_abacus(AbacusC(2, (1, 2)))


def test_phi_core_commutes_with_phi_abacus():
    for a in abaci_in_box(3, 2):
        if a.is_identity():
            continue
        assert abacus_from_core(phi_core(core_from_abacus(a), 3), 2) == phi_abacus(a)


def test_phi_coroot_examples():
    assert phi_coroot(CorootPoint((1, 2, -2)), 10).coords == (1, 2)
    assert phi_coroot(CorootPoint((2, 1, -1)), 7).coords == (1, -1)
    assert phi_coroot_inverse(CorootPoint((1, 2)), 3, 10).coords == (1, 2, -2)


def test_phi_coroot_outside_domain():
    with pytest.raises(NotInDomainError):
        phi_coroot(CorootPoint((1, 1)), 1)
    with pytest.raises(NotInDomainError):
        phi_coroot_inverse(CorootPoint((5, 0)), 3, 1)


def test_membership_examples():
    assert in_domain(CorootPoint((1, 0)), 1)
    assert not in_domain(CorootPoint((1, 1)), 1)
    assert in_domain(CorootPoint((0, 1)), 2)


def test_enumerate_domain_examples():
    assert enumerate_domain(2, 1) == [CorootPoint((1, 0))]
    assert enumerate_domain(2, 2) == [CorootPoint((0, 1)), CorootPoint((1, 1))]


def test_domain_is_brute_force_domain():
    for n in (2, 3):
        for k in range(1, 13):
            assert enumerate_domain(n, k) == brute_domain(n, k)


def test_domain_from_core_enumeration():
    # symmetric 4-cores with first part k, found without abaci
    cores = symmetric_cores(2, 40)
    for k in range(1, 6):
        from_cores = sorted(abacus_from_core(c, 2).levels for c in cores if c and c[0] == k)
        assert from_cores == [v.coords for v in enumerate_domain(2, k)]


def test_codomain_sizes_match():
    for k in range(1, 11):
        assert len(enumerate_domain(2, k)) == len(enumerate_codomain(2, k))


def test_codomain_is_image_of_bounded_cores():
    # the codomain is every rank n-1 element with first part at most k - ceil(k/n)
    for n in (2, 3):
        for k in range(1, 9):
            p = domain_params(n, k)
            box = [b for b in abaci_in_box(n - 1, p.height) if first_part(b) <= p.image_bound]
            assert sorted(b.levels for b in box) == [u.coords for u in enumerate_codomain(n, k)]
            assert all(in_codomain(u, n, k) for u in enumerate_codomain(n, k))


def test_phi_word_eleven_letter_example():
    assert str(phi_word(W11, AbacusC(3, (2, 1, -1)))) == "s2s0s1s0"


def test_phi_word_trace_marks_skips():
    _, trace = phi_word_trace(W11, AbacusC(3, (2, 1, -1)))
    emitted = [t.emitted for t in trace]
    assert emitted == [None, None, 2, None, None, 0, 1, None, 0, None, None]
    assert trace[0].to_json() == {"letter": 0, "emitted": None,
                                  "abacus_after": [-1, 1, -1, 1, -1, 1]}
    assert trace[-1].abacus_after == (0,) * 6


def test_phi_word_start_alcove_gives_empty_word():
    for k in range(1, 7):
        p = domain_params(2, k)
        coords = tuple(p.level if i == p.axis else 0 for i in (1, 2))
        a = abacus_from_coroot(CorootPoint(coords))
        w = canonical_reduced_word(a)
        assert len(w) == k
        assert phi_word(w, a).letters == ()


def test_phi_word_not_reduced():
    with pytest.raises(NotReducedError):
        phi_word(Word(3, (0, 0) + W11.letters), AbacusC(3, (2, 1, -1)))


def test_phi_word_on_every_reduced_word():
    # every reduced word of a few elements, not just the canonical one
    for levels in [(2, 1, -1), (1, 2, -2), (0, 1, -1)]:
        a = AbacusC(3, levels)
        target = phi_abacus(a)
        for letters in reduced_words(a.full, 3, length(a))[:60]:
            wp = phi_word(Word(3, letters), a)
            assert evaluate_word(wp) == target
            assert len(wp) == length(a) - first_part(a)


def test_phi_word_lengths_on_domains():
    for k in range(1, 7):
        for v in enumerate_domain(2, k):
            a = abacus_from_coroot(v)
            wp = phi_word(canonical_reduced_word(a), a)
            assert evaluate_word(wp) == phi_abacus(a)
            assert len(wp) == length(a) - k == length(phi_abacus(a))


def test_lift_word_examples():
    p = domain_params(2, 3)
    a = abacus_from_coroot(CorootPoint((0, p.level)))
    assert len(lift_word(Word(1), a)) == 3
    big = AbacusC(3, (2, 1, -1))
    w = lift_word(Word(2, (2, 0, 1, 0)), big)
    assert len(w) == 11
    assert evaluate_word(w) == big


def test_lift_word_round_trip_lengths():
    for n in (2, 3):
        for k in range(1, 6):
            for v in enumerate_domain(n, k):
                a = abacus_from_coroot(v)
                wp = canonical_reduced_word(phi_abacus(a))
                w = lift_word(wp, a)
                assert evaluate_word(w) == a
                assert len(w) == len(wp) + k == length(a)


def test_lift_word_rejects_wrong_word():
    with pytest.raises(NotReducedError):
        lift_word(Word(2, (0,)), AbacusC(3, (2, 1, -1)))
