"""
Graded truncated polynomials
============================

Every class in eqpic is a sparse integer polynomial in a graded ring that
forgets everything above a fixed degree.
"""

from eqpic import RingSpec, substitute, unit_series_inverse

# a ring with three degree-one generators, truncated after degree 2
R = RingSpec.of(["u", "v", "c1"], truncation=2)
x = R.parse("33*u + 34*v - 42*c1")
print("x =", x)

# substituting v = c1 - u stays inside the ring
print("x with v = c1 - u:", substitute(x, "v", R.parse("c1 - u")))

# products drop monomials of degree 3 and more
print("(1 + u)^3 =", (1 + R.var("u")) ** 3)

# a unit has an inverse power series, here cut off at degree 2
print("1 / (1 + c1) =", unit_series_inverse(R.parse("1 + c1")))

# generators may carry higher degree; c2 has degree 2
S = RingSpec.of([("c1", 1), ("c2", 2)], truncation=4)
print("1 / (1 + c1 + c2) =", unit_series_inverse(S.parse("1 + c1 + c2")))

# coefficients are Python integers, so nothing overflows
big = S.const(3 ** 100) * S.var("c2")
print("digits in a large coefficient:", len(str(big.coefficient({"c2": 1}))))
