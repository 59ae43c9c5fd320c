"""Combinatorial models of the affine type-C quotient and the projection
from rank n to rank n-1."""

from .coxeter import (
    Word, apply_generator_abacus, apply_generator_core, canonical_reduced_word,
    evaluate_word, length,
)
from .errors import *  # noqa: F401,F403
from .lattice import (
    AbacusC, CorootPoint, Window, abacus_from_core, abacus_from_coroot, abacus_from_window,
    core_from_abacus, coroot_from_abacus, first_part, window_from_abacus,
)
from .partitions import diag_label, hook_length, is_core, is_symmetric, residue
from .projection import (
    DomainParams, domain_params, enumerate_codomain, enumerate_domain, in_codomain,
    in_domain, lift_word, phi_abacus, phi_core, phi_coroot, phi_coroot_inverse, phi_word,
)

__version__ = "0.1.0"
