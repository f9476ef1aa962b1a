"""Toric Schubert varieties in Grassmannians: classification, fans and
exact Gorenstein/Fano checks. Thin wrapper over the C++ core."""

from ._core import (
    Fan,
    ToricSchubertError,
    anticanonical_cartier,
    bruhat_leq,
    check_bruhat_subwords,
    check_cones,
    check_lifts,
    classify,
    coset_classes,
    flag_fan,
    grassmannian_fan,
    is_complete_sampled,
    is_gorenstein,
    is_projective_space_fan,
    is_smooth,
    is_toric,
    lambda_of,
    length,
    lifts_of_v_closed_form,
    perm_from_word,
    perm_of,
    verify_ray_relations,
    wd_fan,
)

__all__ = [
    "Fan",
    "ToricSchubertError",
    "anticanonical_cartier",
    "bruhat_leq",
    "check_bruhat_subwords",
    "check_cones",
    "check_lifts",
    "classify",
    "coset_classes",
    "flag_fan",
    "grassmannian_fan",
    "is_complete_sampled",
    "is_gorenstein",
    "is_projective_space_fan",
    "is_smooth",
    "is_toric",
    "lambda_of",
    "length",
    "lifts_of_v_closed_form",
    "perm_from_word",
    "perm_of",
    "verify_ray_relations",
    "wd_fan",
]
