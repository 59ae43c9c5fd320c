from fractions import Fraction

from hypothesis import given, settings, strategies as st

from affine_cores.bruhat import bruhat_leq_beads, core_contains
from affine_cores.coxeter import (
    Word, apply_generator_abacus, apply_generator_core, canonical_reduced_word,
    evaluate_word, length,
)
from affine_cores.geometry import (
    alcove_from_point, alcove_from_word, geometric_length, is_interior, signature,
)
from affine_cores.lattice import (
    AbacusC, abacus_from_core, abacus_from_window, core_from_abacus, coroot_from_abacus,
    first_part, window_from_abacus,
)
from affine_cores.partitions import is_core, is_symmetric, removable_boxes, residue
from affine_cores.projection import (
    domain_params, in_codomain, in_domain, lift_word, phi_abacus, phi_core, phi_coroot,
    phi_word,
)


@st.composite
def abaci(draw, ranks=(2, 3, 4), span=3):
    n = draw(st.sampled_from(ranks))
    return AbacusC(n, draw(st.lists(st.integers(-span, span), min_size=n, max_size=n)))


nonidentity = abaci().filter(lambda a: not a.is_identity())


@st.composite
def reduced_word_for(draw, a):
    """A random peel of the core of ``a``."""
    parts, letters = core_from_abacus(a), []
    while parts:
        i = draw(st.sampled_from(sorted({residue(r, c, a.n) for r, c in removable_boxes(parts)})))
        parts = apply_generator_core(i, parts, a.n)
        letters.append(i)
    return Word(a.n, tuple(letters))


@given(abaci())
def test_models_round_trip(a):
    parts = core_from_abacus(a)
    assert is_symmetric(parts) and is_core(parts, 2 * a.n)
    assert abacus_from_core(parts, a.n) == a
    assert abacus_from_window(window_from_abacus(a)) == a


@given(abaci(), st.integers(0, 4))
def test_generator_actions_commute(a, i):
    i %= a.n + 1
    b = apply_generator_abacus(i, a)
    assert apply_generator_abacus(i, b) == a
    assert core_from_abacus(b) == apply_generator_core(i, core_from_abacus(a), a.n)


@settings(max_examples=60)
@given(abaci(ranks=(2, 3), span=2))
def test_length_two_ways(a):
    w = canonical_reduced_word(a)
    assert evaluate_word(w) == a
    assert geometric_length(alcove_from_word(w)) == len(w) == length(a)


@settings(max_examples=60)
@given(nonidentity)
def test_projection_square(a):
    k = first_part(a)
    v = coroot_from_abacus(a)
    assert in_domain(v, k)
    image = phi_abacus(a)
    assert phi_coroot(v, k).coords == image.levels
    assert in_codomain(coroot_from_abacus(image), a.n, k)
    assert abacus_from_core(phi_core(core_from_abacus(a), a.n), a.n - 1) == image
    assert first_part(image) <= domain_params(a.n, k).image_bound


@settings(max_examples=40, deadline=None)
@given(st.data(), abaci(ranks=(2, 3), span=2).filter(lambda a: not a.is_identity()))
def test_words_project_and_lift(data, a):
    k = first_part(a)
    w = data.draw(reduced_word_for(a))
    assert evaluate_word(w) == a
    wp = phi_word(w, a)
    assert evaluate_word(wp) == phi_abacus(a)
    assert len(wp) == len(w) - k
    lifted = lift_word(wp, a)
    assert evaluate_word(lifted) == a and len(lifted) == len(w)


@settings(max_examples=80)
@given(abaci(ranks=(2, 3), span=2), abaci(ranks=(2, 3), span=2))
def test_bead_order_is_containment(x, y):
    if x.n == y.n:
        assert bruhat_leq_beads(x, y) == core_contains(core_from_abacus(x), core_from_abacus(y))


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=50),
                min_size=2, max_size=3))
def test_descent_finds_containing_alcove(coords):
    p = tuple(Fraction(c) for c in coords)
    if not is_interior(p):
        return
    A = alcove_from_point(p)
    assert A.signature == signature(p)
    assert len(A.word) == geometric_length(A)
