"""Module categories over a Grothendieck-Verdier base category."""

from .base import ModuleCategory
from .regular import RegularModule
from .modb import ModB
from .functors import (
    GVModuleFunctor,
    action_functor_l,
    action_functor_r,
    conjugate_lax_to_oplax,
    conjugate_oplax_to_lax,
    functor_pentagons,
    identity_functor,
    ihom_functor,
    with_conjugates,
)
from .admissible import (
    bimod_projectivity_test,
    candidate_dual,
    criterion_adm,
    is_admissible_negtimes,
    is_admissible_otimes,
    rigid_dual_data,
)
from .reconstruct import (
    generates,
    ihom_lax,
    internal_hom_space,
    is_generator,
    modb_algebra_iso,
    reconstruction,
)

__all__ = [
    "ModuleCategory",
    "RegularModule",
    "ModB",
    "GVModuleFunctor",
    "action_functor_l",
    "action_functor_r",
    "conjugate_lax_to_oplax",
    "conjugate_oplax_to_lax",
    "functor_pentagons",
    "identity_functor",
    "ihom_functor",
    "with_conjugates",
    "bimod_projectivity_test",
    "candidate_dual",
    "criterion_adm",
    "is_admissible_negtimes",
    "is_admissible_otimes",
    "rigid_dual_data",
    "generates",
    "ihom_lax",
    "internal_hom_space",
    "is_generator",
    "modb_algebra_iso",
    "reconstruction",
]
