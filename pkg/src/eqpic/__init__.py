"""
Exact equivariant intersection theory for discriminants of complete
intersections and the Picard groups of M_3, M_4, M_5.

>>> from eqpic import FabSetup, f_divisor_class, genus_pipeline
>>> str(f_divisor_class(FabSetup(2, 3, 3)))
'33*u + 34*v - 42*c1'
>>> genus_pipeline(5).divisor_multiples
{'T5': 8}
"""

__version__ = "0.1.0"

from .gring import Poly, RingSpec, coeff_of_power, poly_add, poly_mul, substitute, unit_series_inverse
from .abgroup import GroupPresentation, class_coordinates, quotient_structure, smith_normal_form
from .moduli import (
    FabSetup,
    GdmnSetup,
    f_closed_form,
    f_divisor_class,
    f_relations,
    g_closed_form,
    g_divisor_class,
    g_relations,
    genus_pipeline,
    picard_presentation,
    quadric_discriminant_class,
)
