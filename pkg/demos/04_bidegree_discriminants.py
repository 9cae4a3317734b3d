"""
Discriminants of codimension-two complete intersections
=======================================================

For bidegree (a, b) complete intersections in P^n the discriminant class lives
in the span of c1, u and v.  The symbolic pipeline and a closed-form sum are
compared, together with two readings of the sum that do not match.
"""

from eqpic import FabSetup, f_closed_form, f_divisor_class, f_relations
from eqpic.moduli.fab import f_closed_form_sums

s = FabSetup(2, 3, 3)
print(s.label(), "->", f_divisor_class(s))
print("closed form:", f_closed_form(s))
print("sums:", f_closed_form_sums(s))
for variant in ("statement", "proof"):
    print(f"{variant} reading: {f_closed_form(s, variant)}")

# the full list of canonical-form coefficients, each a relation on the open part
for q, cls in zip(f_relations(s).indices, f_relations(s).coefficients):
    print(f"xi_{q} =", cls)

# pipeline and closed form across a small grid
for n in (3, 4, 5):
    for b in range(2, 5):
        for a in range(1, b):
            x = FabSetup(a, b, n)
            assert f_closed_form(x) == f_divisor_class(x)
print("closed form matches on 1 <= a < b <= 4, 3 <= n <= 5")
