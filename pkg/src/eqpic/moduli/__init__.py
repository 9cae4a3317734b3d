"""Discriminant classes, relation lists and Picard groups of moduli of complete intersections."""

from .setups import FabSetup, GdmnSetup, SetupError, check_characteristic
from .fab import f_closed_form, f_closed_form_sums, f_divisor_class, f_relations, f_singular_class
from .gdmn import (
    AlphaDivisionError,
    alpha_factor,
    g_closed_form,
    g_complete_intersection_class,
    g_divisor_class,
    g_raw_pushforward,
    g_relations,
    g_singular_class,
)
from .picard import (
    NotRankOneError,
    PicardReport,
    divisor_class,
    divisor_multiple,
    genus_pipeline,
    picard_presentation,
    quadric_discriminant_class,
)

__all__ = [
    "FabSetup",
    "GdmnSetup",
    "SetupError",
    "check_characteristic",
    "f_singular_class",
    "f_divisor_class",
    "f_closed_form",
    "f_closed_form_sums",
    "f_relations",
    "AlphaDivisionError",
    "alpha_factor",
    "g_complete_intersection_class",
    "g_singular_class",
    "g_raw_pushforward",
    "g_divisor_class",
    "g_closed_form",
    "g_relations",
    "NotRankOneError",
    "PicardReport",
    "divisor_class",
    "divisor_multiple",
    "genus_pipeline",
    "picard_presentation",
    "quadric_discriminant_class",
]
