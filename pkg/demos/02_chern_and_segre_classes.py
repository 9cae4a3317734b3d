"""
Chern and Segre classes
=======================

Bundles are stored by rank and total Chern class.  Twisting by a line bundle,
Segre classes and Chern classes of differences are computed exactly.
"""

from eqpic.chern import (
    KClassRep,
    chern_of_difference,
    euler_omega_twist,
    schur_delta,
    standard_ring,
    total_segre,
    twist_chern,
    twist_segre,
)
from eqpic.symcalc import omega_chern_via_roots

R = standard_ring(2)  # t, c1, c2, c3 truncated at degree 3
t = R.var("t")

# the standard rank-3 representation and its Segre class
E = KClassRep(3, R.parse("1 + c1 + c2 + c3"))
print("s(E) =", total_segre(E))

# the cotangent bundle of P^2 from the Euler sequence, twist route
omega = euler_omega_twist(2, R)
print("c(Omega) =", omega)

# the same class by writing prod(1 - l_i - t) in the Chern roots l_i
print("roots agree:", omega_chern_via_roots(2, R) == omega)

# Segre classes of a twist, with and without inverting the twisted class
L = t * 2
print("s_2(E(2t)) =", twist_segre(E, L, 2))
print("same by inversion:", total_segre(twist_chern(E, L)).homogeneous(2) == twist_segre(E, L, 2))

# a virtual class: c_2 of [Omega] - [E]
print("c_2(Omega - E) =", chern_of_difference(KClassRep(2, omega), E, 2))

# a Schur determinant in the Chern classes of E
print("det(c_{1+j-i}) 2x2 =", schur_delta(2, 1, [E.c(k) for k in range(4)]))
