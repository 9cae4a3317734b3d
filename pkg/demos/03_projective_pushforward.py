"""
Pushing forward along projective space
======================================

Classes on a product with P^n are polynomials in the hyperplane class t.
Reducing modulo the projective bundle relation and reading the t^n
coefficient gives the pushforward.
"""

from eqpic.chern import standard_ring
from eqpic.push import BundleRelation, pushforward_t, pushforward_top_form, t_canonicalize

n = 3
R = standard_ring(n, extra=(("u", 1),), truncation=6)
rel = BundleRelation.standard(R, n)
t = R.var("t")

print("relation:", rel.polynomial())
print("t^4 reduces to", t_canonicalize(t ** 4, rel))

# powers of t below n die, t^n is the fibre class, higher ones give Segre classes
for k in range(n + 3):
    print(f"push t^{k} =", pushforward_t(t ** k, rel))

# classes pulled back from the base factor out
x = R.parse("u^2 - c2") * t ** 4
print("push (u^2 - c2) t^4 =", pushforward_t(x, rel))

# the shortcut for classes with t-degree at most n + 1 agrees
y = R.parse("3*u") * t ** 3 + R.parse("2") * t ** 4
print("two routes:", pushforward_t(y, rel), "|", pushforward_top_form(y, rel))
